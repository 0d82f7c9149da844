#include "ra/examples.hpp"

namespace ra::examples {

RiordanSpec binomial() {
    return RiordanSpec{Poly{1}, Poly{-1, 1}, Poly{-1, 1}, Poly{1}};
}

RiordanSpec chessboard(int m) {
    if (m < 2) fail("InvalidArgument", "chessboard placements need m >= 2");
    return RiordanSpec{Poly{1}, Poly{-1, 1}, Poly{0, -1, 1}, Poly{m - 1, 1}};
}

RiordanSpec isolated_strings() {
    return RiordanSpec{Poly{-1, 1}, Poly{-1, -1, 1}, Poly{-1, -1, 1}, Poly{-1, 1}};
}

InitialData chessboard_combinatorial_data(int m, int Xmax, int Ymax) {
    InitialData init;
    init.row0.assign(static_cast<size_t>(Xmax) + 1, Rational(1));
    init.cols.assign(2, std::vector<Rational>(static_cast<size_t>(Ymax), Rational(0)));
    if (Ymax >= 1) init.cols[1][0] = Rational(m);
    return init;
}

} // namespace ra::examples
