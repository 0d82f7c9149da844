#pragma once

#include <string>
#include <vector>

#include "ra/grid.hpp"
#include "ra/laurent.hpp"
#include "ra/poly.hpp"

namespace ra {

/// A rational Riordan array: d(z) = d_num/d_den expanded at infinity,
/// h(z) = Q/P with deg Q < deg P = m >= 1.
struct RiordanSpec {
    Poly d_num;
    Poly d_den;
    Poly P;
    Poly Q;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

/// Checks every RiordanSpec invariant; violations are data, not exceptions.
/// Also warns (never rejects) when d_den has a root that is not a root of
/// P or Q, since the asymptotic theory wants d holomorphic away from the
/// singularities of h.
ValidationReport validate(const RiordanSpec& spec);

/// Throws InvalidSpec carrying the first violation.
void require_valid(const RiordanSpec& spec);

/// deg Q + 1 == deg P, equivalently h_0 != 0.
bool is_proper(const RiordanSpec& spec);

/// r(x,y) = Res{ d(z) h(z)^y z^x }, exact.
Rational entry(const RiordanSpec& spec, int x, int y);

/// Full window from one shared expansion of d and h at order xmax.
/// jobs > 1 distributes rows; the result is identical regardless.
Grid table(const RiordanSpec& spec, int xmax, int ymax, int jobs = 1);

/// Formal-series variant: d supplied as a raw tail (possibly non-rational),
/// h still Q/P.  The tail must have order >= xmax.
Grid table(const LaurentTail& d, const Poly& P, const Poly& Q, int xmax, int ymax);

} // namespace ra
