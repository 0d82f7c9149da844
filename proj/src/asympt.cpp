#include "ra/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ra/roots.hpp"

namespace ra {

Direction::Direction(long p_, long q_) {
    if (p_ < 1 || q_ < 1) fail("InvalidArgument", "directions need p, q >= 1");
    const long g = std::gcd(p_, q_);
    p = p_ / g;
    q = q_ / g;
    was_reduced = g > 1;
}

namespace {

// z (P'/P - Q'/Q) - p/q, the saddle equation, and one Newton step on it
std::complex<double> saddle_residual(const DifferenceEquation& eq, std::complex<double> z, double mu) {
    const auto P = eval(eq.P, z), Q = eval(eq.Q, z);
    const auto dP = eval(derivative(eq.P), z), dQ = eval(derivative(eq.Q), z);
    return z * (dP / P - dQ / Q) - mu;
}

void polish_saddle(const DifferenceEquation& eq, std::complex<double>& z, double mu) {
    const Poly Pd = derivative(eq.P), Qd = derivative(eq.Q);
    const Poly Pdd = derivative(Pd), Qdd = derivative(Qd);
    for (int it = 0; it < 8; ++it) {
        const auto P = eval(eq.P, z), Q = eval(eq.Q, z);
        if (std::abs(P) == 0.0 || std::abs(Q) == 0.0) return;
        const auto lp = eval(Pd, z) / P, lq = eval(Qd, z) / Q;
        const auto g = z * (lp - lq) - mu;
        if (std::abs(g) < 1e-15 * (1.0 + std::abs(mu))) return;
        // g'(z) = (P'/P - Q'/Q) + z (P''/P - (P'/P)^2 - Q''/Q + (Q'/Q)^2)
        const auto gp = (lp - lq) + z * (eval(Pdd, z) / P - lp * lp - eval(Qdd, z) / Q + lq * lq);
        if (std::abs(gp) == 0.0) return;
        z -= g / gp;
    }
}

} // namespace

std::vector<SaddleCandidate> saddle_candidates(const DifferenceEquation& eq, const Direction& dir) {
    if (eq.P.is_zero() || eq.Q.is_zero())
        fail("ZeroPolynomial", "the saddle system needs nonzero P and Q");
    const Poly S = Rational(dir.q) * (Poly{0, 1} * (derivative(eq.P) * eq.Q - derivative(eq.Q) * eq.P)) -
                   Rational(dir.p) * (eq.P * eq.Q);
    if (S.is_zero()) fail("EmptyCandidateSet", "the cleared saddle polynomial is identically zero");
    if (S.degree() < 1) fail("EmptyCandidateSet", "the saddle system has no finite solutions");

    const double mu = static_cast<double>(dir.p) / static_cast<double>(dir.q);
    std::vector<SaddleCandidate> out;
    for (auto z : poly_roots(S)) {
        polish_saddle(eq, z, mu);
        const auto P = eval(eq.P, z), Q = eval(eq.Q, z);
        const double scale = 1e-12 * (1.0 + std::abs(z));
        if (std::abs(P) <= scale || std::abs(Q) <= scale) continue; // spurious cleared-denominator root
        out.push_back({z, Q / P});
    }
    if (out.empty()) fail("EmptyCandidateSet", "all saddle candidates sat on roots of P or Q");
    return out;
}

SaddleResult select_dominant(const DifferenceEquation& eq, const std::vector<SaddleCandidate>& cands,
                             const Direction& dir) {
    if (cands.empty()) fail("EmptyCandidateSet", "no saddle candidates to select from");
    const AmoebaContext ctx = AmoebaContext::make(eq);
    const double mu = static_cast<double>(dir.p) / static_cast<double>(dir.q);

    struct Scored {
        SaddleCandidate c;
        bool passes = false;
        bool real_positive = false;
        double log_growth = 0.0;
    };
    std::vector<Scored> scored;
    for (const auto& c : cands) {
        Scored s{c, false, false, 0.0};
        const double xi = std::log(std::abs(c.z0));
        const double eta = std::log(std::abs(c.w0));
        if (xi > ctx.log_max_b) {
            const AmoebaSection sec = section(ctx, xi);
            s.passes = std::abs(eta - sec.hi) <= 1e-6;
        }
        s.real_positive = std::abs(c.z0.imag()) <= 1e-9 * (1.0 + std::abs(c.z0.real())) && c.z0.real() > 0;
        s.log_growth = dir.p * std::log(std::abs(c.z0)) + dir.q * std::log(std::abs(c.w0));
        scored.push_back(s);
    }

    int passes = 0;
    for (const auto& s : scored) passes += s.passes ? 1 : 0;

    const Scored* best = nullptr;
    if (cands.size() == 1) {
        best = &scored.front(); // single candidate: returned unconditionally
    } else {
        for (const auto& s : scored) {
            if (!s.passes) continue;
            if (!best) { best = &s; continue; }
            if (s.real_positive != best->real_positive) {
                if (s.real_positive) best = &s;
                continue;
            }
            if (s.log_growth > best->log_growth) best = &s;
        }
        if (!best) {
            std::string detail = "no candidate lands on the boundary of E_(m,1);";
            for (const auto& s : scored) {
                const double xi = std::log(std::abs(s.c.z0));
                detail += " z0=(" + std::to_string(s.c.z0.real()) + "," + std::to_string(s.c.z0.imag()) +
                          ") xi=" + std::to_string(xi);
            }
            fail("NoBoundaryCandidate", detail);
        }
    }

    SaddleResult res;
    res.z0 = best->c.z0;
    res.w0 = best->c.w0;
    res.on_boundary = best->passes;
    res.H = hessian_H(eq, res.z0, dir);
    res.diag.in_cone = true; // checked by the callers that gate on the cone
    res.diag.boundary_passes = passes;
    res.diag.char_residual = std::abs(eval(eq.P, res.z0) * res.w0 - eval(eq.Q, res.z0));
    res.diag.saddle_residual = std::abs(saddle_residual(eq, res.z0, mu));
    if (res.diag.char_residual > 1e-10 || res.diag.saddle_residual > 1e-10)
        fail("NonConvergence", "saddle residuals above 1e-10 after polishing");

    const ComponentCensus census = component_census(eq);
    res.diag.roots_simple = census.roots_simple;
    res.diag.moduli_distinct = census.moduli_distinct;
    if (!census.roots_simple) res.diag.notes.push_back("P or Q has a repeated root");
    if (!census.moduli_distinct) res.diag.notes.push_back("P or Q has roots sharing a modulus");
    if (passes > 1) res.diag.notes.push_back("several candidates pass the boundary test");
    return res;
}

std::complex<double> hessian_H(const DifferenceEquation& eq, std::complex<double> z0, const Direction& dir) {
    const double scale = 1e-12 * (1.0 + std::abs(z0));
    const auto P = eval(eq.P, z0), Q = eval(eq.Q, z0);
    if (std::abs(z0) <= 1e-12 || std::abs(P) <= scale || std::abs(Q) <= scale)
        fail("PoleAtSaddle", "H(z) has a pole at the requested point");
    const double mu = static_cast<double>(dir.p) / static_cast<double>(dir.q);
    const auto Pd = eval(derivative(eq.P), z0);
    const auto Qdd = eval(derivative(derivative(eq.Q)), z0);
    const auto Pdd = eval(derivative(derivative(eq.P)), z0);
    return Qdd / Q - Pdd / P + 2.0 * mu / z0 * (Pd / P) - mu * (1.0 + mu) / (z0 * z0);
}

SaddleResult dominant_saddle(const DifferenceEquation& eq, const Direction& dir) {
    const Cone cone = cone_omega(newton_polygon(eq));
    if (!cone.contains_interior(dir.p, dir.q))
        fail("DirectionOutsideCone",
             "direction (" + std::to_string(dir.p) + "," + std::to_string(dir.q) +
                 ") is not in the interior of Omega_(m,1)");
    return select_dominant(eq, saddle_candidates(eq, dir), dir);
}

Estimate estimate_at(const RiordanSpec& spec, const SaddleResult& saddle, const Direction& dir, long lambda) {
    if (lambda < 1) fail("InvalidArgument", "lambda >= 1 required");
    if (!saddle.on_boundary)
        fail("NoBoundaryCandidate", "the selected saddle is not on the boundary of E_(m,1)");

    const std::complex<double> qh = static_cast<double>(lambda * dir.q) * saddle.H;
    if (qh.real() <= 0.0)
        fail("NegativeHessian", "Re(lambda q H(z0)) <= 0: the square-root branch is undefined");

    const auto dden = eval(spec.d_den, saddle.z0);
    if (std::abs(dden) <= 1e-12 * (1.0 + std::abs(saddle.z0)))
        fail("PoleAtSaddle", "d(z) has a pole at z0");
    const std::complex<double> dval = eval(spec.d_num, saddle.z0) / dden;

    const std::complex<double> amp = dval / std::sqrt(2.0 * 3.14159265358979323846 * qh);
    const double log_growth =
        lambda * (dir.p * std::log(std::abs(saddle.z0)) + dir.q * std::log(std::abs(saddle.w0)));
    const double phase =
        lambda * (dir.p * std::arg(saddle.z0) + dir.q * std::arg(saddle.w0)) + std::arg(amp);

    Estimate e;
    e.log_abs = std::log(std::abs(amp)) + log_growth;
    e.value = e.log_abs < 700.0 ? std::exp(e.log_abs) * std::cos(phase)
                                : std::numeric_limits<double>::infinity() * std::cos(phase);
    return e;
}

Estimate estimate(const RiordanSpec& spec, const Direction& dir, long lambda) {
    require_valid(spec);
    const SaddleResult saddle = dominant_saddle(equation_of(spec), dir);
    return estimate_at(spec, saddle, dir, lambda);
}

std::vector<ProbeRow> convergence_probe(const RiordanSpec& spec, const Direction& dir,
                                        const std::vector<long>& lambdas) {
    require_valid(spec);
    if (lambdas.empty()) return {};
    const SaddleResult saddle = dominant_saddle(equation_of(spec), dir);

    const long lmax = *std::max_element(lambdas.begin(), lambdas.end());
    const int xmax = static_cast<int>(lmax * dir.p);
    const int ymax = static_cast<int>(lmax * dir.q);

    // one shared exact table for every lambda, filled by the recursion
    const DifferenceEquation eq = equation_of(spec);
    const Grid exact = solve(eq, riordan_initial_data(spec, xmax, ymax), xmax, ymax);

    std::vector<ProbeRow> rows;
    rows.reserve(lambdas.size());
    for (long l : lambdas) {
        ProbeRow row;
        row.lambda = l;
        row.exact = exact[static_cast<size_t>(l * dir.q)][static_cast<size_t>(l * dir.p)];
        const Estimate e = estimate_at(spec, saddle, dir, l);
        row.estimate = e.value;
        // exact/estimate, the direction whose expansion is 1 - 1/(8 lambda) + ...
        row.ratio = e.value != 0.0 ? to_double(row.exact) / e.value
                                   : std::numeric_limits<double>::infinity();
        rows.push_back(row);
    }
    return rows;
}

} // namespace ra
