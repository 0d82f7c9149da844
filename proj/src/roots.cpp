#include "ra/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ra {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

} // namespace

std::vector<std::complex<double>> poly_roots(const Poly& a) {
    if (a.is_zero()) fail("ZeroPolynomial", "root finding on the zero polynomial");
    if (a.degree() == 0) return {};

    // z=0 roots are known exactly from the coefficient layout
    const int ord = a.order();
    std::vector<std::complex<double>> roots(static_cast<size_t>(ord), {0.0, 0.0});

    std::vector<double> c = double_coeffs(a);
    c.erase(c.begin(), c.begin() + ord);
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    double maxc = 0.0;
    for (double x : c) maxc = std::max(maxc, std::abs(x));
    const double target = 1e-12 * (1.0 + maxc);

    // monic copy for the sweeps
    std::vector<double> mc(c);
    for (double& x : mc) x /= c.back();

    std::vector<std::complex<double>> r(static_cast<size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> g(1.0, 0.0);
    for (auto& x : r) {
        g *= seed;
        x = g;
    }

    bool converged = false;
    for (int sweep = 0; sweep < 1000 && !converged; ++sweep) {
        double step = 0.0, mag = 1.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= r[i] - r[j];
            if (den == 0.0) { // coincident iterates, nudge apart
                r[i] += std::complex<double>(1e-8, 1e-8);
                continue;
            }
            const std::complex<double> d = horner(mc, r[i]) / den;
            r[i] -= d;
            step += std::abs(d);
            mag += std::abs(r[i]);
        }
        converged = step < 1e-13 * mag;
    }

    // Newton polish against the original (non-monic) coefficients
    std::vector<double> dc(static_cast<size_t>(n), 0.0);
    for (int k = 1; k <= n; ++k) dc[static_cast<size_t>(k - 1)] = c[static_cast<size_t>(k)] * k;
    for (auto& x : r) {
        for (int it = 0; it < 16; ++it) {
            const std::complex<double> f = horner(c, x);
            if (std::abs(f) <= target * 0.01) break;
            const std::complex<double> df = horner(dc, x);
            if (std::abs(df) == 0.0) break;
            x -= f / df;
        }
    }

    for (const auto& x : r)
        if (!(std::abs(horner(c, x)) <= target))
            fail("NonConvergence", "root residual above tolerance after 1000 sweeps");

    roots.insert(roots.end(), r.begin(), r.end());
    return roots;
}

} // namespace ra
