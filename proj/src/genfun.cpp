#include "ra/genfun.hpp"

#include <algorithm>
#include <sstream>

#include "ra/laurent.hpp"

namespace ra {

BivarPoly BivarPoly::from_z(const Poly& p) {
    std::vector<Poly> b;
    if (!p.is_zero()) b.push_back(p);
    return BivarPoly(std::move(b));
}

BivarPoly BivarPoly::from_w(const Poly& v) {
    std::vector<Poly> b;
    b.reserve(static_cast<size_t>(v.degree()) + 1);
    for (int j = 0; j <= v.degree(); ++j) b.push_back(Poly::constant(v.coeff(j)));
    return BivarPoly(std::move(b));
}

int BivarPoly::degz() const {
    int d = -1;
    for (const auto& p : w_) d = std::max(d, p.degree());
    return d;
}

int BivarPoly::orderw() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (!w_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

const Poly& BivarPoly::wcoeff(int beta) const {
    static const Poly kZero;
    if (beta < 0 || beta >= static_cast<int>(w_.size())) return kZero;
    return w_[static_cast<size_t>(beta)];
}

BivarPoly BivarPoly::operator-() const {
    std::vector<Poly> b(w_);
    for (auto& p : b) p = -p;
    return BivarPoly(std::move(b));
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    std::vector<Poly> r(std::max(a.w_.size(), b.w_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = a.wcoeff(static_cast<int>(i)) + b.wcoeff(static_cast<int>(i));
    return BivarPoly(std::move(r));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    std::vector<Poly> r(std::max(a.w_.size(), b.w_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = a.wcoeff(static_cast<int>(i)) - b.wcoeff(static_cast<int>(i));
    return BivarPoly(std::move(r));
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return BivarPoly();
    std::vector<Poly> r(a.w_.size() + b.w_.size() - 1);
    for (size_t i = 0; i < a.w_.size(); ++i) {
        if (a.w_[i].is_zero()) continue;
        for (size_t j = 0; j < b.w_.size(); ++j)
            if (!b.w_[j].is_zero()) r[i + j] = r[i + j] + a.w_[i] * b.w_[j];
    }
    return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::shifted_down(int k) const {
    if (k == 0 || w_.empty()) return *this;
    if (k > static_cast<int>(w_.size())) return BivarPoly();
    std::vector<Poly> b(w_.begin() + k, w_.end());
    return BivarPoly(std::move(b));
}

namespace {

// gcd over Q[z] of every block of both polynomials
Poly common_z_factor(const BivarPoly& a, const BivarPoly& b) {
    Poly g;
    for (int j = 0; j <= a.degw(); ++j) g = poly_gcd(g, a.wcoeff(j));
    for (int j = 0; j <= b.degw(); ++j) g = poly_gcd(g, b.wcoeff(j));
    return g;
}

BivarPoly divide_blocks(const BivarPoly& a, const Poly& g) {
    std::vector<Poly> b;
    b.reserve(static_cast<size_t>(a.degw()) + 1);
    for (int j = 0; j <= a.degw(); ++j) b.push_back(divexact(a.wcoeff(j), g));
    return BivarPoly(std::move(b));
}

// the z-rows of F as polynomials in w
std::vector<Poly> w_rows(const BivarPoly& a) {
    std::vector<Poly> rows(static_cast<size_t>(a.degz()) + 1);
    for (int alpha = 0; alpha <= a.degz(); ++alpha) {
        std::vector<Rational> c;
        c.reserve(static_cast<size_t>(a.degw()) + 1);
        for (int beta = 0; beta <= a.degw(); ++beta) c.push_back(a.coeff(alpha, beta));
        rows[static_cast<size_t>(alpha)] = Poly(std::move(c));
    }
    return rows;
}

Poly common_w_factor(const BivarPoly& a, const BivarPoly& b) {
    Poly g;
    for (const auto& row : w_rows(a)) g = poly_gcd(g, row);
    for (const auto& row : w_rows(b)) g = poly_gcd(g, row);
    return g;
}

BivarPoly divide_w(const BivarPoly& a, const Poly& g) {
    auto rows = w_rows(a);
    for (auto& row : rows) row = divexact(row, g);
    int dw = -1;
    for (const auto& row : rows) dw = std::max(dw, row.degree());
    std::vector<Poly> blocks(static_cast<size_t>(dw) + 1);
    for (int beta = 0; beta <= dw; ++beta) {
        std::vector<Rational> c(rows.size(), Rational(0));
        for (size_t alpha = 0; alpha < rows.size(); ++alpha) c[alpha] = rows[alpha].coeff(beta);
        blocks[static_cast<size_t>(beta)] = Poly(std::move(c));
    }
    return BivarPoly(std::move(blocks));
}

void integer_scale(BivarPoly& num, BivarPoly& den) {
    BigInt den_lcm(1), num_gcd(0);
    auto visit = [&](const BivarPoly& p) {
        for (int j = 0; j <= p.degw(); ++j)
            for (const auto& c : p.wcoeff(j).coeffs())
                if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
    };
    visit(num);
    visit(den);
    auto visit2 = [&](const BivarPoly& p) {
        for (int j = 0; j <= p.degw(); ++j)
            for (const auto& c : p.wcoeff(j).coeffs())
                if (c != 0) num_gcd = gcd(num_gcd, BigInt(numerator(c) * (den_lcm / denominator(c))));
    };
    visit2(num);
    visit2(den);
    if (num_gcd == 0) num_gcd = 1;
    const Rational scale(den_lcm, num_gcd);
    auto rescale = [&](BivarPoly& p) {
        std::vector<Poly> blocks;
        for (int j = 0; j <= p.degw(); ++j) blocks.push_back(scale * p.wcoeff(j));
        p = BivarPoly(std::move(blocks));
    };
    rescale(num);
    rescale(den);
}

} // namespace

BivariateRational::BivariateRational(BivarPoly n, BivarPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) fail("ZeroDenominator", "bivariate rational with denominator 0");

    // common w^k
    const int kd = den.orderw();
    const int k = num.is_zero() ? kd : std::min(num.orderw(), kd);
    if (k > 0) {
        num = num.shifted_down(k);
        den = den.shifted_down(k);
    }
    if (!num.is_zero()) {
        Poly gz = common_z_factor(num, den);
        if (gz.degree() >= 1) {
            num = divide_blocks(num, gz);
            den = divide_blocks(den, gz);
        }
        Poly gw = common_w_factor(num, den);
        if (gw.degree() >= 1) {
            num = divide_w(num, gw);
            den = divide_w(den, gw);
        }
    }
    integer_scale(num, den);
    // fix the sign on the denominator's top block
    if (den.wcoeff(den.degw()).leading() < 0) {
        num = -num;
        den = -den;
    }
}

ColumnGF::ColumnGF(int k_, Poly U_, Poly V_) : k(k_), U(std::move(U_)), V(std::move(V_)) {
    if (V.is_zero()) fail("ZeroDenominator", "column generating function with V = 0");
    if (!U.is_zero() && U.degree() >= V.degree())
        fail("DegreeViolation", "column series must be a pure tail in w (deg U < deg V)");
    if (res(expand_at_infinity(U, V, 0), 0) != 0)
        fail("InvalidColumnSeries",
             "column " + std::to_string(k) + " has a w^-1 term; column sums start at y = 1");
}

BivarPoly boundary_poly(const DifferenceEquation& eq, int k) {
    const int m = eq.m();
    if (k < 0 || k >= m)
        fail("IndexOutOfRange", "boundary polynomial index k = " + std::to_string(k) +
                                    " outside 0..m-1 = 0.." + std::to_string(m - 1));
    std::vector<Rational> pa, qa;
    for (int a = k + 1; a <= m; ++a) {
        pa.push_back(eq.P.coeff(a));
        qa.push_back(-eq.Q.coeff(a));
    }
    return BivarPoly({Poly(std::move(qa)), Poly(std::move(pa))});
}

std::vector<ColumnGF> riordan_columns(const RiordanSpec& spec) {
    const int m = spec.P.degree();
    InitialData init = riordan_initial_data(spec, std::max(m - 1, 0), std::max(m - 1, 0));
    std::vector<ColumnGF> cols;
    cols.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        // phi(k,y) = 0 for y > k, so the column sum is finite
        std::vector<Rational> u(static_cast<size_t>(k), Rational(0));
        for (int y = 1; y <= k; ++y) u[static_cast<size_t>(k - y)] = init.phi(k, y);
        cols.emplace_back(k, Poly(std::move(u)), Poly::monomial(k + 1, Rational(1)));
    }
    return cols;
}

namespace {

// correction-term polynomial C(z) = sum_{a} sum_{x<a} c_{a,0} phi(x,0) z^{a-x-1}
Poly correction_row0(const DifferenceEquation& eq, const std::vector<Rational>& row0) {
    const int m = eq.m();
    Poly c;
    for (int a = 0; a <= m; ++a) {
        const Rational& q = eq.Q.coeff(a);
        if (q == 0) continue;
        for (int x = 0; x <= a - 1; ++x) {
            if (x >= static_cast<int>(row0.size()))
                fail("InsufficientInitialData",
                     "correction term needs phi(" + std::to_string(x) + ",0)");
            c = c + Poly::monomial(a - x - 1, q * row0[static_cast<size_t>(x)]);
        }
    }
    return c;
}

} // namespace

BivariateRational assemble(const DifferenceEquation& eq, const Poly& d_num, const Poly& d_den,
                           const std::vector<ColumnGF>& cols, const std::vector<Rational>& row0) {
    const int m = eq.m();
    if (!well_posed(eq).ok) fail("IllPosedEquation", "assemble needs a well-posed equation");
    if (d_den.is_zero()) fail("ZeroDenominator", "d(z) with zero denominator");
    if (static_cast<int>(cols.size()) != m)
        fail("ColumnCountMismatch", "need exactly m = " + std::to_string(m) + " column series, got " +
                                        std::to_string(cols.size()));

    Poly L = Poly::constant(Rational(1));
    for (const auto& c : cols) L = poly_lcm(L, c.V);
    const Poly Lw = L * Poly::monomial(1, Rational(1));

    const BivarPoly pwq({-eq.Q, eq.P});
    BivarPoly den = BivarPoly::from_z(d_den) * BivarPoly::from_w(Lw) * pwq;

    BivarPoly num = BivarPoly::from_z(eq.P * d_num) * BivarPoly::from_w(Lw);
    for (const auto& c : cols) {
        const Poly ratio = divexact(L, c.V);
        num = num + boundary_poly(eq, c.k) * BivarPoly::from_z(d_den) *
                        BivarPoly::from_w(c.U * ratio * Poly::monomial(1, Rational(1)));
    }
    const Poly corr = correction_row0(eq, row0);
    if (!corr.is_zero()) num = num - BivarPoly::from_z(corr * d_den) * BivarPoly::from_w(L);

    return BivariateRational(std::move(num), std::move(den));
}

BivariateRational assemble(const DifferenceEquation&, const Poly&, const Poly&, const InitialData&) {
    fail("NonRationalInput",
         "finite-table column series carry no tail information; rational reconstruction is not "
         "attempted -- supply each Phi_k as U(w)/V(w), or use the truncated correction probe");
}

bool correction_is_zero(const DifferenceEquation& eq, const InitialData& init, int Ymax) {
    const int m = eq.m();
    std::vector<Poly> corr(static_cast<size_t>(Ymax) + 2); // corr[v] multiplies w^{-v}
    for (int k = 0; k < m; ++k) {
        const BivarPoly R = boundary_poly(eq, k);
        const Poly& A = R.wcoeff(1);
        const Poly& B = R.wcoeff(0);
        for (int y = 1; y <= Ymax; ++y) {
            const Rational& f = init.phi(k, y);
            if (f == 0) continue;
            corr[static_cast<size_t>(y)] = corr[static_cast<size_t>(y)] + f * A;
            corr[static_cast<size_t>(y) + 1] = corr[static_cast<size_t>(y) + 1] + f * B;
        }
    }
    std::vector<Rational> row0(init.row0.begin(), init.row0.end());
    corr[1] = corr[1] - correction_row0(eq, row0);
    for (int v = 1; v <= Ymax; ++v)
        if (!corr[static_cast<size_t>(v)].is_zero()) return false;
    return true;
}

bool correction_is_zero(const DifferenceEquation& eq, const RiordanSpec& spec, int Ymax) {
    const int m = eq.m();
    InitialData init = riordan_initial_data(spec, std::max(m - 1, 0), Ymax);
    return correction_is_zero(eq, init, Ymax);
}

Grid series_of(const BivariateRational& gf, int xmax, int ymax) {
    const BivarPoly& den = gf.den;
    const int k0 = den.orderw();
    if (den.degw() != k0 + 1)
        fail("UnsupportedDenominator",
             "denominator must be B(z) * w^k * (P1(z)w + P0(z)); got w-degree " +
                 std::to_string(den.degw()) + " with lowest w-power " + std::to_string(k0));
    const Poly D1 = den.wcoeff(k0 + 1);
    const Poly Qhat = -den.wcoeff(k0);

    const int js = ymax + std::max(gf.num.degw() - k0, 0);
    std::vector<Poly> qpow, dpow;
    qpow.push_back(Poly::constant(Rational(1)));
    dpow.push_back(D1);
    for (int j = 1; j <= js; ++j) {
        qpow.push_back(qpow.back() * Qhat);
        dpow.push_back(dpow.back() * D1);
    }

    Grid g = make_grid(xmax, ymax);
    for (int s = 0; s <= gf.num.degw(); ++s) {
        const Poly& Ns = gf.num.wcoeff(s);
        if (Ns.is_zero()) continue;
        for (int y = 0; y <= ymax; ++y) {
            const int j = y + s - k0;
            if (j < 0) continue;
            LaurentTail t = expand_at_infinity(Ns * qpow[static_cast<size_t>(j)],
                                               dpow[static_cast<size_t>(j)], xmax);
            auto& row = g[static_cast<size_t>(y)];
            for (int x = 0; x <= xmax; ++x) row[static_cast<size_t>(x)] += t[x];
        }
    }
    return g;
}

std::string to_string(const BivarPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int beta = p.degw(); beta >= 0; --beta) {
        const Poly& block = p.wcoeff(beta);
        for (int alpha = block.degree(); alpha >= 0; --alpha) {
            const Rational& c = block.coeff(alpha);
            if (c == 0) continue;
            Rational mag = rational_abs(c);
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            const bool unit = (mag == 1);
            const bool has_var = alpha > 0 || beta > 0;
            if (!unit || !has_var) out << to_string(mag);
            bool sep = !unit;
            if (alpha > 0) {
                if (sep) out << "*";
                out << "z";
                if (alpha > 1) out << "^" << alpha;
                sep = true;
            }
            if (beta > 0) {
                if (sep) out << "*";
                out << "w";
                if (beta > 1) out << "^" << beta;
            }
        }
    }
    return out.str();
}

std::string to_string(const BivariateRational& gf) {
    std::string n = to_string(gf.num);
    const bool paren = n.find(' ') != std::string::npos;
    return (paren ? "(" + n + ")" : n) + "/(" + to_string(gf.den) + ")";
}

} // namespace ra
