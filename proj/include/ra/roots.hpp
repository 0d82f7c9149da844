#pragma once

#include <complex>
#include <vector>

#include "ra/poly.hpp"

namespace ra {

/// Shared tolerance for deciding whether two computed roots coincide.
inline bool roots_equal(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a));
}

/// All complex roots with multiplicity, Durand-Kerner sweeps followed by a
/// Newton polish of each root.  Exact zero roots are deflated first so they
/// come back as exactly 0.  Residual contract: |a(r)| <= 1e-12*(1+max|coeff|).
/// Throws ZeroPolynomial for a = 0, NonConvergence after 1000 sweeps.
/// A nonzero constant has no roots and yields an empty list.
std::vector<std::complex<double>> poly_roots(const Poly& a);

} // namespace ra
