#pragma once

#include "hjp/partitions.hpp"
#include "hjp/polynomial.hpp"

#include <span>
#include <utility>
#include <vector>

namespace hjp {

struct JacobiParams {
  long r = 0;
  long s = 0;

  JacobiParams(long r_, long s_);

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

// Orthogonal (not orthonormal) Jacobi polynomial of degree k on [0,1] for
// the weight u^r (1-u)^s; leading coefficient (-1)^k (k+r+s+1)_k / k!.
Poly jacobi_poly(long k, const JacobiParams& jp);

// Squared L2 norm of jacobi_poly(k) against the weight:
// Gamma(r+k+1) Gamma(s+k+1) / [(2k+r+s+1) Gamma(k+r+s+1) k!].
Rational jacobi_norm_sq(long k, const JacobiParams& jp);

// Coefficients c_0..c_j such that u^j = sum_l c_l jacobi_poly(l).
std::vector<Rational> monomial_in_jacobi_basis(long j, const JacobiParams& jp);

// Symmetric Jacobi polynomial det(P_{tau_i - i + m}(x_j)) / V(x) with
// V(x) = prod_{i<j} (x_i - x_j) and tau zero-padded to length m.
// Coordinates closer than coincidence_tolerance() are handled by exact
// confluent divided differences instead of the plain determinant ratio.
double sym_jacobi_eval(const OptHook& tau, const JacobiParams& jp, long m,
                       std::span<const double> x);

// Exact value at x = (1, ..., 1): signed double product over index pairs
// times a Gamma-ratio product over rows.
Rational sym_jacobi_at_ones(const OptHook& tau, const JacobiParams& jp, long m);

// Schur polynomial det(x_j^{alpha_i - i + m}) / V(x). Coordinates must be
// separated by more than coincidence_tolerance().
double schur_eval(const Hook& alpha, std::span<const double> x);

// Hook expansion of the Newton power sum: p_n = sum sign * s_alpha over
// hooks of weight n and length <= m, sign = (-1)^{n - alpha_1}.
std::vector<std::pair<Hook, int>> power_sum_hooks(long n, long m);

double coincidence_tolerance();

}  // namespace hjp
