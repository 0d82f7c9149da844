#pragma once

#include "ra/cauchy.hpp"
#include "ra/riordan.hpp"

namespace ra::examples {

/// Binomial coefficients: d = h = 1/(z-1), recurrence f(x+1,y+1) = f(x,y+1) + f(x,y).
RiordanSpec binomial();

/// Chessboard placements r_m: h = (z + m - 1)/(z^2 - z), d = 1/(z-1).
RiordanSpec chessboard(int m);

/// Binary strings with a_1 = 0 counted by isolated elements:
/// d = h = (z-1)/(z^2 - z - 1).
RiordanSpec isolated_strings();

/// Initial data of the combinatorial chessboard count (phi(1,1) = m: one
/// row offers m choices).  Differs from the Riordan residue data of
/// chessboard(m), which has phi(1,1) = h_0 = 1.
InitialData chessboard_combinatorial_data(int m, int Xmax, int Ymax);

} // namespace ra::examples
