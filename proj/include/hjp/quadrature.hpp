#pragma once

#include "hjp/jacobi_poly.hpp"

#include <vector>

namespace hjp {

struct QuadratureRule {
  std::vector<double> nodes;  // in (0, 1)
  std::vector<double> weights;
};

// Gauss rule for integrals against u^r (1-u)^s on [0,1]; exact for
// polynomial integrands of degree <= 2n - 1. Golub-Welsch on the
// three-term recurrence of the shifted Jacobi weight.
QuadratureRule gauss_jacobi_rule(int n, const JacobiParams& jp);

}  // namespace hjp
