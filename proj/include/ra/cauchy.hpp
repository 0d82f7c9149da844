#pragma once

#include <string>
#include <vector>

#include "ra/grid.hpp"
#include "ra/riordan.hpp"

namespace ra {

/// The difference equation [P(d1) d2 - Q(d1)] r = 0 with characteristic
/// polynomial R(z,w) = P(z) w - Q(z); m = deg P is the order in x.
struct DifferenceEquation {
    Poly P;
    Poly Q;
    int m() const { return P.degree(); }
};

inline DifferenceEquation equation_of(const RiordanSpec& spec) { return {spec.P, spec.Q}; }

struct WellPosedness {
    bool ok = false;
    std::vector<std::string> report;
};

/// Newton polygon of R inside the box Pi_{(m,1)} with (m,1) a vertex:
/// every support point has alpha <= m, beta <= 1 and c_{m,1} != 0.
WellPosedness well_posed(const DifferenceEquation& eq);

/// Initial data on X_{(m,1)} clipped to a window: the full row y = 0 and the
/// columns x = 0..m-1 for y >= 1.  Explicit finite tables so problems
/// round-trip through JSON.
struct InitialData {
    std::vector<Rational> row0;              // phi(x,0), x = 0..Xmax
    std::vector<std::vector<Rational>> cols; // cols[k][y-1] = phi(k,y), y = 1..Ymax

    int xmax() const { return static_cast<int>(row0.size()) - 1; }
    int ymax() const;
    const Rational& phi(int x, int y) const; // throws InsufficientInitialData outside the tables
};

/// phi from the residue formula: row0[x] = entry(spec,x,0), cols[k][y-1] = entry(spec,k,y).
InitialData riordan_initial_data(const RiordanSpec& spec, int Xmax, int Ymax);

/// Row-major sweep (y ascending, then x): for x >= m, y >= 1
///   r(x,y) = ( sum_a c_{a,0} r(x-m+a, y-1) - sum_{a<m} c_{a,1} r(x-m+a, y) ) / c_{m,1},
/// everything else copied from the initial data.  Exact arithmetic.
Grid solve(const DifferenceEquation& eq, const InitialData& init, int xmax, int ymax);

/// Max |[P(d1) d2 - Q(d1)] r| over the interior window; 0 for true solutions.
Rational residual(const DifferenceEquation& eq, const Grid& r);

} // namespace ra
