#include "hjp/jacobi_poly.hpp"

#include "hjp/exact_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hjp {

namespace {

constexpr double kCoincidenceTol = 1e-6;

// Below this Vandermonde magnitude the plain determinant ratio loses all
// precision to cancellation, so such configurations also take the exact
// confluent route even when every pairwise separation clears the
// coincidence tolerance.
constexpr double kVandermondeFloor = 1e-9;

// Row degrees tau_i - i + m for tau zero-padded to length m; strictly
// decreasing and nonnegative.
std::vector<long> row_degrees(const OptHook& tau, long m) {
  std::vector<long> degrees(static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i)
    degrees[static_cast<std::size_t>(i - 1)] = hook_part(tau, i) + m - i;
  return degrees;
}

double vandermonde(std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  return v;
}

double min_separation(std::span<const double> x) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      sep = std::min(sep, std::abs(x[i] - x[j]));
  return sep;
}

// det(f_i(x_j)) / V(x) through the plain floating determinant; valid for
// well-separated coordinates.
double determinant_ratio(const std::vector<Poly>& rows, std::span<const double> x) {
  const auto m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      a(i, j) = rows[static_cast<std::size_t>(i)].eval(x[static_cast<std::size_t>(j)]);
  const double det = m == 1 ? a(0, 0) : a.partialPivLu().determinant();
  return det / vandermonde(x);
}

// Confluent route: det(f_i(x_j)) / V(x) equals
// (-1)^{m(m-1)/2} det(f_i[x_1..x_j]) for sorted coordinates, where the
// divided differences fall back to derivatives on repeated points. The
// whole table is exact rational arithmetic, so arbitrarily close points
// cost no precision.
double confluent_ratio(const std::vector<Poly>& rows, std::span<const double> x) {
  const std::size_t m = x.size();
  std::vector<Rational> pts(m);
  for (std::size_t j = 0; j < m; ++j) pts[j] = Rational(x[j]);
  std::sort(pts.begin(), pts.end());

  RationalMatrix table(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Poly> derivs(m);
    derivs[0] = rows[i];
    for (std::size_t level = 1; level < m; ++level)
      derivs[level] = derivs[level - 1].derivative();

    std::vector<Rational>& col = table[i];
    for (std::size_t j = 0; j < m; ++j) col[j] = rows[i].eval(pts[j]);
    for (std::size_t level = 1; level < m; ++level) {
      for (std::size_t j = m - 1; j >= level; --j) {
        if (pts[j] != pts[j - level]) {
          col[j] = (col[j] - col[j - 1]) / (pts[j] - pts[j - level]);
        } else {
          col[j] = derivs[level].eval(pts[j]) / Rational(factorial(static_cast<long>(level)));
        }
        if (j == level) break;
      }
    }
  }

  Rational det = det_rational(std::move(table));
  const long half_pairs = static_cast<long>(m) * (static_cast<long>(m) - 1) / 2;
  if (half_pairs % 2 != 0) det = -det;
  return to_double(det);
}

}  // namespace

JacobiParams::JacobiParams(long r_, long s_) : r(r_), s(s_) {
  if (r < 0 || s < 0) throw std::domain_error("JacobiParams: r and s must be >= 0");
}

Poly jacobi_poly(long k, const JacobiParams& jp) {
  if (k < 0) throw std::domain_error("jacobi_poly: negative degree");
  const long r = jp.r;
  const long s = jp.s;
  std::vector<Rational> coeffs(static_cast<std::size_t>(k + 1));
  Rational term = pochhammer(r + 1, k) / Rational(factorial(k));
  coeffs[0] = term;
  for (long i = 0; i < k; ++i) {
    term *= Rational(BigInt(-k + i) * BigInt(k + r + s + 1 + i),
                     BigInt(r + 1 + i) * BigInt(i + 1));
    coeffs[static_cast<std::size_t>(i + 1)] = term;
  }
  return Poly(std::move(coeffs));
}

Rational jacobi_norm_sq(long k, const JacobiParams& jp) {
  if (k < 0) throw std::domain_error("jacobi_norm_sq: negative degree");
  const long r = jp.r;
  const long s = jp.s;
  return gamma_ratio({r + k + 1, s + k + 1}, {k + r + s + 1, k + 1}) /
         Rational(2 * k + r + s + 1);
}

std::vector<Rational> monomial_in_jacobi_basis(long j, const JacobiParams& jp) {
  if (j < 0) throw std::domain_error("monomial_in_jacobi_basis: negative degree");
  const long r = jp.r;
  const long s = jp.s;
  std::vector<Rational> coeffs(static_cast<std::size_t>(j + 1));
  for (long l = 0; l <= j; ++l) {
    coeffs[static_cast<std::size_t>(l)] =
        pochhammer(-j, l) * Rational(r + s + 2 * l + 1) *
        gamma_ratio({r + j + 1, r + s + l + 1}, {r + l + 1, r + s + l + j + 2});
  }
  return coeffs;
}

double sym_jacobi_eval(const OptHook& tau, const JacobiParams& jp, long m,
                       std::span<const double> x) {
  if (m < 1) throw std::domain_error("sym_jacobi_eval: m must be >= 1");
  if (hook_length(tau) > m)
    throw std::domain_error("sym_jacobi_eval: partition longer than m");
  if (static_cast<long>(x.size()) != m)
    throw std::domain_error("sym_jacobi_eval: coordinate count differs from m");

  const std::vector<long> degrees = row_degrees(tau, m);
  std::vector<Poly> rows(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) rows[i] = jacobi_poly(degrees[i], jp);

  if (m == 1) return rows[0].eval(x[0]);
  if (min_separation(x) >= kCoincidenceTol &&
      std::abs(vandermonde(x)) >= kVandermondeFloor)
    return determinant_ratio(rows, x);
  return confluent_ratio(rows, x);
}

Rational sym_jacobi_at_ones(const OptHook& tau, const JacobiParams& jp, long m) {
  if (m < 1) throw std::domain_error("sym_jacobi_at_ones: m must be >= 1");
  if (hook_length(tau) > m)
    throw std::domain_error("sym_jacobi_at_ones: partition longer than m");
  const long r = jp.r;
  const long s = jp.s;

  Rational value = ((hook_weight(tau) + m * (m - 1) / 2) % 2 != 0) ? -1 : 1;
  for (long i = 1; i <= m; ++i) {
    const long ti = hook_part(tau, i);
    for (long j = i + 1; j <= m; ++j) {
      const long tj = hook_part(tau, j);
      value *= Rational(BigInt(ti + tj + 2 * m - i - j + r + s + 1) *
                        BigInt(ti - tj + j - i));
    }
  }
  for (long j = 1; j <= m; ++j) {
    const long tj = hook_part(tau, j);
    value *= gamma_ratio({tj + m - j + s + 1}, {tj + m - j + 1, m - j + s + 1, m - j + 1});
  }
  return value;
}

double schur_eval(const Hook& alpha, std::span<const double> x) {
  const long m = static_cast<long>(x.size());
  if (m < 1) throw std::domain_error("schur_eval: empty coordinate list");
  if (alpha.length() > m)
    throw std::domain_error("schur_eval: partition longer than the coordinate count");
  if (min_separation(x) < kCoincidenceTol)
    throw std::domain_error(
        "schur_eval: near-coincident coordinates; perturb them beyond the "
        "coincidence tolerance");

  // Doubles are exact dyadic rationals, so the generalized Vandermonde
  // ratio can be formed exactly and rounded once at the end; the plain
  // floating determinant would lose digits to its conditioning already
  // for moderate degrees.
  std::vector<Rational> points(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) points[j] = Rational(x[j]);

  RationalMatrix a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
  for (long i = 1; i <= m; ++i) {
    const long degree = alpha.part(i) + m - i;
    for (long j = 0; j < m; ++j) {
      Rational power = 1;
      for (long e = 0; e < degree; ++e) power *= points[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = power;
    }
  }
  Rational v = 1;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) v *= points[i] - points[j];
  return to_double(det_rational(std::move(a)) / v);
}

std::vector<std::pair<Hook, int>> power_sum_hooks(long n, long m) {
  std::vector<std::pair<Hook, int>> expansion;
  for (const Hook& alpha : hooks_of_weight(n, m))
    expansion.emplace_back(alpha, alpha.leg % 2 != 0 ? -1 : 1);
  return expansion;
}

double coincidence_tolerance() { return kCoincidenceTol; }

}  // namespace hjp
