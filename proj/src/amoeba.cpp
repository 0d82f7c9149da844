#include "ra/amoeba.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "ra/roots.hpp"

namespace ra {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// monotone chain; collinear input collapses to the two endpoints
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) { // upper
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool segment_contains(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
}

bool hull_contains(const std::vector<LatticePoint>& hull, const LatticePoint& p) {
    if (hull.empty()) return false;
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) return segment_contains(hull[0], hull[1], p);
    for (size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0) return false; // ccw hull: inside means left of every edge
    }
    return true;
}

} // namespace

NewtonPolygon newton_polygon(const DifferenceEquation& eq) {
    NewtonPolygon np;
    for (int a = 0; a <= eq.P.degree(); ++a)
        if (eq.P.coeff(a) != 0) np.points.emplace_back(a, 1);
    for (int a = 0; a <= eq.Q.degree(); ++a)
        if (eq.Q.coeff(a) != 0) np.points.emplace_back(a, 0);
    std::sort(np.points.begin(), np.points.end());
    np.vertices = convex_hull(np.points);
    np.corner = {eq.m(), 1};
    return np;
}

bool Cone::contains_interior(long p, long q) const {
    const auto& g1 = generators[0];
    const auto& g2 = generators[1];
    // generators ordered by increasing angle; interior = strictly between
    return (g1.first * q - g1.second * p) > 0 && (p * g2.second - q * g2.first) > 0;
}

Cone cone_omega(const NewtonPolygon& np) {
    if (np.vertices.size() < 3)
        fail("DegenerateHull", "Newton polygon is a segment; the cone Omega_(m,1) is degenerate");
    if (std::find(np.vertices.begin(), np.vertices.end(), np.corner) == np.vertices.end())
        fail("DegenerateHull", "(m,1) is not a vertex of the Newton polygon");

    std::vector<LatticePoint> dirs;
    for (const auto& v : np.vertices) {
        if (v == np.corner) continue;
        LatticePoint g{np.corner.first - v.first, np.corner.second - v.second};
        const long d = std::gcd(std::abs(g.first), std::abs(g.second));
        if (d > 0) g = {g.first / d, g.second / d};
        dirs.push_back(g);
    }
    // all directions lie in the first quadrant; extremes by angle via cross product
    auto angle_less = [](const LatticePoint& a, const LatticePoint& b) {
        return a.first * b.second - a.second * b.first > 0;
    };
    LatticePoint lo = dirs.front(), hi = dirs.front();
    for (const auto& g : dirs) {
        if (angle_less(g, lo)) lo = g;
        if (angle_less(hi, g)) hi = g;
    }
    if (lo == hi) fail("DegenerateHull", "cone generators are collinear");
    return Cone{{lo, hi}};
}

AmoebaContext AmoebaContext::make(const DifferenceEquation& eq) {
    AmoebaContext ctx;
    if (eq.P.is_zero() || eq.Q.is_zero())
        fail("ZeroPolynomial", "the amoeba of R = Pw - Q needs nonzero P and Q");
    if (eq.P.degree() >= 1) ctx.b_roots = poly_roots(eq.P);
    if (eq.Q.degree() >= 1) ctx.a_roots = poly_roots(eq.Q);
    ctx.log_lc_ratio = std::log(std::abs(to_double(eq.Q.leading()))) -
                       std::log(std::abs(to_double(eq.P.leading())));
    ctx.log_max_b = -std::numeric_limits<double>::infinity();
    for (const auto& b : ctx.b_roots)
        if (std::abs(b) > 0) ctx.log_max_b = std::max(ctx.log_max_b, std::log(std::abs(b)));
    return ctx;
}

double AmoebaContext::f(double t, double phi) const {
    const std::complex<double> z = std::exp(t) * std::complex<double>(std::cos(phi), std::sin(phi));
    double acc = log_lc_ratio;
    for (const auto& a : a_roots) acc += std::log(std::abs(z - a));
    for (const auto& b : b_roots) acc -= std::log(std::abs(z - b));
    return acc;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// golden-section refinement of f around phi0 (+/- one grid step)
double refine(const AmoebaContext& ctx, double t, double phi0, double step, bool maximize) {
    const double gr = 0.6180339887498949;
    double a = phi0 - step, b = phi0 + step;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    auto val = [&](double phi) { return maximize ? ctx.f(t, phi) : -ctx.f(t, phi); };
    double fc = val(c), fd = val(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = val(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = val(d);
        }
    }
    return ctx.f(t, 0.5 * (a + b));
}

} // namespace

AmoebaSection section(const AmoebaContext& ctx, double t, int nphi) {
    if (nphi < 2) fail("InvalidArgument", "section needs nphi >= 2");
    AmoebaSection sec;
    sec.t = t;
    sec.samples.reserve(static_cast<size_t>(nphi));

    for (const auto& r : ctx.a_roots)
        if (std::abs(r) > 0 && std::abs(t - std::log(std::abs(r))) < 1e-8) sec.near_tentacle = true;
    for (const auto& r : ctx.b_roots)
        if (std::abs(r) > 0 && std::abs(t - std::log(std::abs(r))) < 1e-8) sec.near_tentacle = true;

    const double et = std::exp(t);
    const double step = kTwoPi / nphi;
    int ilo = 0, ihi = 0;
    for (int i = 0; i < nphi; ++i) {
        const double phi = i * step;
        const std::complex<double> z = et * std::complex<double>(std::cos(phi), std::sin(phi));
        for (const auto& r : ctx.a_roots)
            if (std::abs(z - r) < 1e-12) sec.root_on_circle = true;
        for (const auto& r : ctx.b_roots)
            if (std::abs(z - r) < 1e-12) sec.root_on_circle = true;
        const double v = ctx.f(t, phi);
        sec.samples.emplace_back(phi, v);
        if (v < sec.samples[static_cast<size_t>(ilo)].second) ilo = i;
        if (v > sec.samples[static_cast<size_t>(ihi)].second) ihi = i;
    }
    sec.lo = refine(ctx, t, ilo * step, step, /*maximize=*/false);
    sec.hi = refine(ctx, t, ihi * step, step, /*maximize=*/true);
    sec.lo = std::min(sec.lo, sec.samples[static_cast<size_t>(ilo)].second);
    sec.hi = std::max(sec.hi, sec.samples[static_cast<size_t>(ihi)].second);
    return sec;
}

Membership membership(const AmoebaContext& ctx, double xi, double eta) {
    const AmoebaSection sec = section(ctx, xi);
    const double tol = 1e-9;
    if (eta >= sec.lo - tol && eta <= sec.hi + tol) return Membership::inside_amoeba;
    if (eta > sec.hi && xi > ctx.log_max_b) return Membership::in_E_m1;
    return Membership::other_component;
}

namespace {

int distinct_moduli(const std::vector<std::complex<double>>& roots) {
    std::vector<double> mods;
    for (const auto& r : roots) mods.push_back(std::abs(r));
    std::sort(mods.begin(), mods.end());
    int n = 0;
    double last = -1.0;
    for (double m : mods) {
        if (n == 0 || m - last > 1e-9 * (1.0 + m)) ++n;
        last = m;
    }
    return n;
}

// exact square-free test; the coefficients are rational, so no proxy needed
bool all_simple(const Poly& p) {
    if (p.degree() < 2) return true;
    return poly_gcd(p, derivative(p)).degree() < 1;
}

} // namespace

ComponentCensus component_census(const DifferenceEquation& eq) {
    if (eq.P.is_zero() || eq.Q.is_zero())
        fail("ZeroPolynomial", "census needs nonzero P and Q");
    ComponentCensus c;

    // zero roots are read off the coefficient layout exactly
    const int ordP = eq.P.order();
    const int ordQ = eq.Q.order();
    c.kappa = (ordP > 0 || ordQ > 0) ? 1 : 0;

    auto nonzero_roots = [](const Poly& p, int ord) {
        std::vector<Rational> shifted(p.coeffs().begin() + ord, p.coeffs().end());
        Poly deflated{std::vector<Rational>(shifted)};
        return deflated.degree() >= 1 ? poly_roots(deflated) : std::vector<std::complex<double>>{};
    };
    const auto qroots = nonzero_roots(eq.Q, ordQ);
    const auto proots = nonzero_roots(eq.P, ordP);
    c.N1 = distinct_moduli(qroots);
    c.N2 = distinct_moduli(proots);
    c.roots_simple = all_simple(eq.Q) && all_simple(eq.P);
    c.moduli_distinct = c.N1 == static_cast<int>(qroots.size()) && c.N2 == static_cast<int>(proots.size());

    c.lower_bound = c.N1 + c.N2 + 2 - c.kappa;

    const NewtonPolygon np = newton_polygon(eq);
    long lat = 0;
    long amin = np.points.front().first, amax = amin;
    for (const auto& p : np.points) {
        amin = std::min(amin, p.first);
        amax = std::max(amax, p.first);
    }
    for (long a = amin; a <= amax; ++a)
        for (long b = 0; b <= 1; ++b)
            if (hull_contains(np.vertices, {a, b})) ++lat;
    c.lattice_points = lat;
    c.maximal = (c.lower_bound == c.lattice_points);
    return c;
}

SmoothnessProbe smoothness_probe(const AmoebaContext& ctx, double tmin, double tmax, int nt, int nphi) {
    if (nt < 4) fail("InvalidArgument", "smoothness probe needs nt >= 4");
    SmoothnessProbe probe;
    const double dt = (tmax - tmin) / (nt - 1);
    std::vector<double> hi(static_cast<size_t>(nt));
    std::vector<bool> near(static_cast<size_t>(nt));
    double scale = 1.0;
    for (int i = 0; i < nt; ++i) {
        const AmoebaSection sec = section(ctx, tmin + i * dt, nphi);
        hi[static_cast<size_t>(i)] = sec.hi;
        near[static_cast<size_t>(i)] = sec.near_tentacle;
        if (sec.near_tentacle) ++probe.tentacle_cells;
        scale = std::max(scale, std::abs(sec.hi));
    }
    for (int i = 1; i + 1 < nt; ++i) {
        // a tentacle crossing is a genuine spike, not a boundary kink
        bool excluded = false;
        for (int j = std::max(0, i - 1); j <= std::min(nt - 1, i + 1) && !excluded; ++j) {
            excluded = near[static_cast<size_t>(j)];
            const double t = tmin + j * dt;
            for (const auto& r : ctx.a_roots)
                if (std::abs(r) > 0 && std::abs(t - std::log(std::abs(r))) < dt) excluded = true;
            for (const auto& r : ctx.b_roots)
                if (std::abs(r) > 0 && std::abs(t - std::log(std::abs(r))) < dt) excluded = true;
        }
        if (excluded) continue;
        const double sl = (hi[static_cast<size_t>(i)] - hi[static_cast<size_t>(i - 1)]) / dt;
        const double sr = (hi[static_cast<size_t>(i + 1)] - hi[static_cast<size_t>(i)]) / dt;
        probe.max_slope_jump = std::max(probe.max_slope_jump, std::abs(sr - sl));
    }
    // second differences of a smooth curve shrink with dt; a corner keeps
    // max_slope_jump pinned at the slope discontinuity
    probe.smooth_hint = probe.max_slope_jump * dt < 0.02 * scale;
    return probe;
}

std::vector<std::array<double, 3>> boundary_cloud(const AmoebaContext& ctx, double tmin, double tmax,
                                                  int nt, int nphi, int jobs) {
    if (nt < 2 || nphi < 2) fail("InvalidArgument", "boundary cloud needs nt >= 2 and nphi >= 2");
    std::vector<std::array<double, 3>> rows(static_cast<size_t>(nt));
    auto work = [&](int i) {
        const double t = tmin + (tmax - tmin) * i / (nt - 1);
        const AmoebaSection sec = section(ctx, t, nphi);
        rows[static_cast<size_t>(i)] = {t, sec.lo, sec.hi};
    };
    if (jobs <= 1) {
        for (int i = 0; i < nt; ++i) work(i);
    } else {
        const int nthreads = std::min(jobs, nt);
        std::vector<std::thread> pool;
        for (int th = 0; th < nthreads; ++th)
            pool.emplace_back([&, th] {
                for (int i = th; i < nt; i += nthreads) work(i);
            });
        for (auto& t : pool) t.join();
    }
    return rows;
}

} // namespace ra
