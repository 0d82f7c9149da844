#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "ra/cauchy.hpp"

namespace ra {

using LatticePoint = std::pair<long, long>; // (alpha, beta)

struct NewtonPolygon {
    std::vector<LatticePoint> points;   // support of R(z,w) = P(z)w - Q(z)
    std::vector<LatticePoint> vertices; // convex hull, counterclockwise
    LatticePoint corner;                // (m, 1)
};

NewtonPolygon newton_polygon(const DifferenceEquation& eq);

/// Cone Omega_{m,1} spanned by {(m,1) - tau : tau in N_R}; generators are the
/// two extreme rays, reduced to primitive integer vectors.
struct Cone {
    std::array<LatticePoint, 2> generators;
    /// strict interior membership for an integer direction
    bool contains_interior(long p, long q) const;
};

/// Throws DegenerateHull when the polygon is a segment.
Cone cone_omega(const NewtonPolygon& np);

/// Everything the numeric amoeba work needs, computed once per equation.
struct AmoebaContext {
    std::vector<std::complex<double>> a_roots; // roots of Q (with multiplicity)
    std::vector<std::complex<double>> b_roots; // roots of P
    double log_lc_ratio = 0.0;                 // log|lc Q| - log|lc P|
    double log_max_b = 0.0;                    // log of the largest |b_j|, -inf if none nonzero

    static AmoebaContext make(const DifferenceEquation& eq);
    /// eta on the zero set over |z| = e^t at angle phi: log|Q(z)/P(z)|.
    double f(double t, double phi) const;
};

struct AmoebaSection {
    double t = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::pair<double, double>> samples; // (phi, f(t,phi))
    bool near_tentacle = false;                     // |t - log|root|| < 1e-8 for some root
    bool root_on_circle = false;                    // a sample came within 1e-12 of a root
};

/// Dense sampling at nphi uniform angles plus golden-section refinement of
/// both extrema.
AmoebaSection section(const AmoebaContext& ctx, double t, int nphi = 1024);

enum class Membership { inside_amoeba, in_E_m1, other_component };

/// E_{m,1} is the component above the sheet and to the right of every upward
/// tentacle (recession cone = the normal cone at vertex (m,1)).
Membership membership(const AmoebaContext& ctx, double xi, double eta);

struct ComponentCensus {
    int N1 = 0;            // distinct-modulus nonzero roots of Q
    int N2 = 0;            // distinct-modulus nonzero roots of P
    int kappa = 0;         // 1 iff P or Q has a zero root
    long lower_bound = 0;  // N1 + N2 + 2 - kappa
    long lattice_points = 0;
    bool maximal = false;  // lower_bound == lattice_points
    bool roots_simple = true;
    bool moduli_distinct = true;
};

ComponentCensus component_census(const DifferenceEquation& eq);

/// Rows (t, eta_lo, eta_hi) for nt values of t in [tmin, tmax].
std::vector<std::array<double, 3>> boundary_cloud(const AmoebaContext& ctx, double tmin, double tmax,
                                                  int nt, int nphi, int jobs = 1);

/// Heuristic smoothness diagnostic for the upper boundary: the largest
/// slope jump of hi(t) across adjacent grid cells, with tentacle
/// neighborhoods excluded.  Reported only, never used as a gate (no
/// computable smoothness criterion exists here).
struct SmoothnessProbe {
    double max_slope_jump = 0.0;
    int tentacle_cells = 0;
    bool smooth_hint = false; // slope jumps at sampling-noise scale only
};

SmoothnessProbe smoothness_probe(const AmoebaContext& ctx, double tmin, double tmax, int nt,
                                 int nphi = 512);

} // namespace ra
