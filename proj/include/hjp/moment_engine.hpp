#pragma once

#include "hjp/exact_linalg.hpp"
#include "hjp/partitions.hpp"
#include "hjp/rational.hpp"

#include <vector>

namespace hjp {

// Exact n-th spectral moment of the process: a stationary part plus
// finitely many exponentially decaying modes grouped by decay rate.
// At t = 0 the expansion sums to m exactly.
struct MomentExpansion {
  ModelParams params{1, 1, 2};
  long order = 1;
  Rational stationary;
  std::vector<ExpTerm> terms;  // strictly increasing rates, merged coefficients

  Rational value_at_zero() const;  // stationary + sum of coefficients
  double eval(double t) const;

  friend bool operator==(const MomentExpansion&, const MomentExpansion&) = default;
};

// Head-dependent factor of the moment coefficient attached to the pair
// (alpha_1, tau_1), in both equivalent parameterizations. Requires
// 1 <= tau1 <= alpha1.
Rational head_factor(long alpha1, long tau1, const ModelParams& params);
Rational head_factor_dpq(long alpha1, long tau1, const ModelParams& params);

// Length-dependent factor attached to (l(alpha), l(tau)). Requires
// 1 <= len_tau <= len_alpha <= m.
Rational length_factor(long len_alpha, long len_tau, const ModelParams& params);
Rational length_factor_dpq(long len_alpha, long len_tau, const ModelParams& params);

// Signed closed-form summand of moment_expansion for one contained pair
// tau <= alpha; the (r,s,m) and (d,p,q) factor forms are cross-checked on
// every call.
Rational expansion_summand(const Hook& alpha, const Hook& tau, const ModelParams& params);

// Production expansion: double loop over hooks of weight n and their
// nonempty subhooks, coefficients merged by decay rate (exact zeros are
// dropped).
MomentExpansion moment_expansion(long n, const ModelParams& params);

// Exact stationary moment, from the empty-partition branch of the
// expansion (all column shifts equal m - j).
Rational stationary_moment(long n, const ModelParams& params);

// Independent oracle: change of basis from Schur to symmetric Jacobi
// polynomials, with full m x m exact determinants and the special value
// at (1,...,1). Meant for small m and n.
MomentExpansion moment_by_basis_change(long n, const ModelParams& params);

// Pairing matrix between the index shifts of alpha and tau,
// b(i,j) = (-(alpha_i - i + m))_{tau_j - j + m} / Gamma(r+s+n_i+m_j+2).
// Vanishes strictly below the first subdiagonal (upper Hessenberg).
struct HessenbergMatrix {
  Hook alpha;
  Hook tau;
  ModelParams params;
  RationalMatrix entries;  // m x m, zero-indexed
};
HessenbergMatrix basis_change_matrix(const Hook& alpha, const Hook& tau,
                                     const ModelParams& params);

// Determinant of the middle Hessenberg block for len_tau < len_alpha:
// closed product form and independent exact elimination.
Rational hessenberg_block_det_product(long len_alpha, long len_tau,
                                      const ModelParams& params);
Rational hessenberg_block_det_eliminate(long len_alpha, long len_tau,
                                        const ModelParams& params);

// Tensor-product Gauss-Jacobi quadrature of the stationary moment
// (normalized Selberg-weight integral); m <= 3.
double stationary_moment_quadrature(long n, const ModelParams& params);

}  // namespace hjp
