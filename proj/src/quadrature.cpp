#include "hjp/quadrature.hpp"

#include "hjp/rational.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace hjp {

QuadratureRule gauss_jacobi_rule(int n, const JacobiParams& jp) {
  if (n < 1) throw std::domain_error("gauss_jacobi_rule: need at least one node");

  // Three-term recurrence of the monic Jacobi polynomials on [-1,1] with
  // weight (1-x)^a (1+x)^b, where a = s and b = r under x = 2u - 1.
  const double a = static_cast<double>(jp.s);
  const double b = static_cast<double>(jp.r);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  diag[0] = (b - a) / (a + b + 2.0);
  for (int k = 1; k < n; ++k) {
    const double ab2k = 2.0 * k + a + b;
    diag[k] = (b * b - a * a) / (ab2k * (ab2k + 2.0));
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                        (ab2k * ab2k * (ab2k + 1.0) * (ab2k - 1.0));
    sub[k - 1] = std::sqrt(beta);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi_rule: eigensolver failed");

  // Total mass of u^r (1-u)^s on [0,1] is B(r+1, s+1).
  const double mass = to_double(gamma_ratio({jp.r + 1, jp.s + 1}, {jp.r + jp.s + 2}));

  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 + solver.eigenvalues()[i]);
    const double first = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mass * first * first;
  }
  return rule;
}

}  // namespace hjp
