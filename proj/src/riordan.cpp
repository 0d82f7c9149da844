#include "ra/riordan.hpp"

#include <algorithm>
#include <thread>

#include "ra/roots.hpp"

namespace ra {

namespace {

std::vector<std::string> violations_of(const RiordanSpec& spec) {
    std::vector<std::string> v;
    const int m = spec.P.degree();
    if (m < 1) v.push_back("deg P >= 1 required (got deg P = " + std::to_string(m) + ")");
    if (spec.Q.is_zero()) v.push_back("Q must be nonzero");
    if (!spec.P.is_zero() && spec.Q.degree() >= m && m >= 1)
        v.push_back("deg Q < deg P required (deg Q = " + std::to_string(spec.Q.degree()) +
                    ", deg P = " + std::to_string(m) + ")");
    if (spec.d_den.is_zero()) {
        v.push_back("d_den must be nonzero");
    } else if (spec.d_num.degree() >= spec.d_den.degree()) {
        v.push_back("deg d_num < deg d_den required so d expands as a pure tail");
    }
    return v;
}

} // namespace

ValidationReport validate(const RiordanSpec& spec) {
    ValidationReport rep;
    rep.violations = violations_of(spec);

    if (rep.ok() && spec.d_den.degree() >= 1) {
        // advisory only: poles of d should sit over singularities of h
        try {
            auto droots = poly_roots(spec.d_den);
            std::vector<std::complex<double>> hs;
            if (spec.P.degree() >= 1) {
                auto pr = poly_roots(spec.P);
                hs.insert(hs.end(), pr.begin(), pr.end());
            }
            if (spec.Q.degree() >= 1) {
                auto qr = poly_roots(spec.Q);
                hs.insert(hs.end(), qr.begin(), qr.end());
            }
            for (const auto& dr : droots) {
                bool matched = false;
                for (const auto& r : hs)
                    if (roots_equal(dr, r)) { matched = true; break; }
                if (!matched)
                    rep.warnings.push_back("d_den has a pole away from the singularities of h (near |z| = " +
                                           std::to_string(std::abs(dr)) + ")");
            }
        } catch (const Error&) {
            rep.warnings.push_back("could not locate the poles of d for the holomorphy check");
        }
    }
    return rep;
}

void require_valid(const RiordanSpec& spec) {
    auto v = violations_of(spec);
    if (!v.empty()) fail("InvalidSpec", v.front());
}

bool is_proper(const RiordanSpec& spec) {
    return spec.Q.degree() + 1 == spec.P.degree();
}

Rational entry(const RiordanSpec& spec, int x, int y) {
    require_valid(spec);
    LaurentTail d = expand_at_infinity(spec.d_num, spec.d_den, x);
    if (y == 0) return res(d, x);
    LaurentTail h = expand_at_infinity(spec.Q, spec.P, x);
    return res(tail_mul(d, tail_pow(h, static_cast<unsigned>(y))), x);
}

namespace {

Grid table_impl(const LaurentTail& d, const Poly& P, const Poly& Q, int xmax, int ymax, int jobs) {
    LaurentTail h = expand_at_infinity(Q, P, xmax);

    // column y reads off d * h^y; build the power chain once
    std::vector<LaurentTail> col;
    col.reserve(static_cast<size_t>(ymax) + 1);
    col.push_back(d);
    for (int y = 1; y <= ymax; ++y) col.push_back(tail_mul(col.back(), h));

    Grid g = make_grid(xmax, ymax);
    auto fill_row = [&](int y) {
        for (int x = 0; x <= xmax; ++x)
            g[static_cast<size_t>(y)][static_cast<size_t>(x)] = col[static_cast<size_t>(y)][x];
    };
    if (jobs <= 1 || ymax == 0) {
        for (int y = 0; y <= ymax; ++y) fill_row(y);
    } else {
        const int nt = std::min(jobs, ymax + 1);
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (int y = t; y <= ymax; y += nt) fill_row(y);
            });
        for (auto& th : pool) th.join();
    }
    return g;
}

} // namespace

Grid table(const RiordanSpec& spec, int xmax, int ymax, int jobs) {
    require_valid(spec);
    LaurentTail d = expand_at_infinity(spec.d_num, spec.d_den, xmax);
    return table_impl(d, spec.P, spec.Q, xmax, ymax, jobs);
}

Grid table(const LaurentTail& d, const Poly& P, const Poly& Q, int xmax, int ymax) {
    if (d.order() < xmax)
        fail("TruncationTooShort", "tail of order " + std::to_string(d.order()) +
                                       " cannot fill a table to xmax = " + std::to_string(xmax));
    return table_impl(d, P, Q, xmax, ymax, 1);
}

} // namespace ra
