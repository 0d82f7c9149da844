#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ra/amoeba.hpp"
#include "ra/riordan.hpp"

namespace ra {

/// A diagonal direction (p,q), reduced to gcd(p,q) = 1 on construction;
/// lambda absorbs the scale.
struct Direction {
    Direction(long p_, long q_);
    long p;
    long q;
    bool was_reduced; // true when the input had gcd > 1
};

struct SaddleCandidate {
    std::complex<double> z0;
    std::complex<double> w0;
};

/// Roots of q*z*(P'Q - Q'P) - p*P*Q paired with w0 = Q(z0)/P(z0); candidates
/// sitting on a root of P or Q are discarded.
std::vector<SaddleCandidate> saddle_candidates(const DifferenceEquation& eq, const Direction& dir);

struct SaddleDiagnostics {
    bool roots_simple = true;
    bool moduli_distinct = true;
    bool in_cone = false;
    int boundary_passes = 0; // how many candidates passed the boundary test
    double char_residual = 0.0;   // |P(z0)w0 - Q(z0)|
    double saddle_residual = 0.0; // |z0 (P'/P - Q'/Q)(z0) - p/q|
    std::vector<std::string> notes;
};

struct SaddleResult {
    std::complex<double> z0;
    std::complex<double> w0;
    std::complex<double> H;
    bool on_boundary = false;
    SaddleDiagnostics diag;
};

/// Picks the candidate whose Log-image lies on the boundary of E_{m,1}
/// (xi0 past every upward tentacle and eta0 on the section maximum).
/// Several passes: real positive z0 first, then largest |z0^p w0^q|.
/// A single candidate is returned unconditionally with the flag recording
/// the test outcome; otherwise NoBoundaryCandidate if none passes.
SaddleResult select_dominant(const DifferenceEquation& eq, const std::vector<SaddleCandidate>& cands,
                             const Direction& dir);

/// H(z) = Q''/Q - P''/P + 2 (p/q)(1/z)(P'/P) - (p/q)(1 + p/q)/z^2.
std::complex<double> hessian_H(const DifferenceEquation& eq, std::complex<double> z0, const Direction& dir);

/// Candidates + selection + Hessian + residual polish in one step.
/// Requires dir in Int Omega_{m,1} (DirectionOutsideCone).
SaddleResult dominant_saddle(const DifferenceEquation& eq, const Direction& dir);

struct Estimate {
    double value = 0.0;   // d(z0)/sqrt(2 pi lambda q H) * (z0^p w0^q)^lambda
    double log_abs = 0.0; // natural log of |value|, safe against overflow
};

/// Eq-(5) estimate of r(lambda p, lambda q); the growth power is accumulated
/// in log space.  NegativeHessian when Re(lambda q H) <= 0.
Estimate estimate(const RiordanSpec& spec, const Direction& dir, long lambda);
Estimate estimate_at(const RiordanSpec& spec, const SaddleResult& saddle, const Direction& dir, long lambda);

struct ProbeRow {
    long lambda = 0;
    Rational exact;
    double estimate = 0.0;
    double ratio = 0.0; // exact/estimate; tends to 1 like 1 - c/lambda
};

/// Exact values via one shared Cauchy-solver table (the recursion route),
/// estimates via Eq (5); the trend of the ratios is reported, not asserted.
std::vector<ProbeRow> convergence_probe(const RiordanSpec& spec, const Direction& dir,
                                        const std::vector<long>& lambdas);

} // namespace ra
