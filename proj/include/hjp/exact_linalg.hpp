#pragma once

#include "hjp/rational.hpp"

#include <vector>

namespace hjp {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact determinant by rational Gaussian elimination with row pivoting.
Rational det_rational(RationalMatrix a);

}  // namespace hjp
