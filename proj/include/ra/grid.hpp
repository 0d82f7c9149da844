#pragma once

#include <vector>

#include "ra/rational.hpp"

namespace ra {

/// Table of exact values indexed [y][x], 0 <= x <= xmax, 0 <= y <= ymax.
using Grid = std::vector<std::vector<Rational>>;

inline Grid make_grid(int xmax, int ymax) {
    return Grid(static_cast<size_t>(ymax) + 1,
                std::vector<Rational>(static_cast<size_t>(xmax) + 1, Rational(0)));
}

} // namespace ra
