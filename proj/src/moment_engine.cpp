#include "hjp/moment_engine.hpp"

#include "hjp/jacobi_poly.hpp"
#include "hjp/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace hjp {

namespace {

std::vector<ExpTerm> collect_terms(std::map<long, Rational>& by_rate) {
  std::vector<ExpTerm> terms;
  terms.reserve(by_rate.size());
  for (auto& [rate, coeff] : by_rate) {
    if (coeff != 0) terms.push_back({rate, std::move(coeff)});
  }
  return terms;
}

Rational checked_head_factor(long alpha1, long tau1, const ModelParams& params) {
  Rational value = head_factor(alpha1, tau1, params);
  if (value != head_factor_dpq(alpha1, tau1, params))
    throw std::logic_error("head_factor: parameterizations disagree");
  return value;
}

Rational checked_length_factor(long len_alpha, long len_tau, const ModelParams& params) {
  Rational value = length_factor(len_alpha, len_tau, params);
  if (value != length_factor_dpq(len_alpha, len_tau, params))
    throw std::logic_error("length_factor: parameterizations disagree");
  return value;
}

// Index shifts part(i) + m - i for a partition zero-padded to length m.
std::vector<long> shifts(const OptHook& partition, long m) {
  std::vector<long> out(static_cast<std::size_t>(m));
  for (long i = 1; i <= m; ++i)
    out[static_cast<std::size_t>(i - 1)] = hook_part(partition, i) + m - i;
  return out;
}

}  // namespace

Rational MomentExpansion::value_at_zero() const {
  Rational total = stationary;
  for (const ExpTerm& term : terms) total += term.coeff;
  return total;
}

double MomentExpansion::eval(double t) const {
  if (t < 0) throw std::domain_error("MomentExpansion::eval: negative time");
  if (t == 0.0) return to_double(value_at_zero());
  return to_double(stationary) + eval_exp_sum(terms, t);
}

Rational head_factor(long alpha1, long tau1, const ModelParams& params) {
  if (tau1 < 1 || tau1 > alpha1)
    throw std::domain_error("head_factor: requires 1 <= tau1 <= alpha1");
  const long m = params.m;
  const long r = params.r();
  const long s = params.s();
  return Rational(r + s + 2 * tau1 + 2 * m - 1) *
         gamma_ratio({tau1 + 2 * m + r + s, alpha1 + m, r + alpha1 + m, tau1 + m + s},
                     {alpha1 - tau1 + 1, tau1, r + s + alpha1 + tau1 + 2 * m, r + tau1 + m});
}

Rational head_factor_dpq(long alpha1, long tau1, const ModelParams& params) {
  if (tau1 < 1 || tau1 > alpha1)
    throw std::domain_error("head_factor_dpq: requires 1 <= tau1 <= alpha1");
  const long m = params.m;
  const long p = params.p;
  const long q = params.q();
  const long d = params.d;
  return Rational(d + 2 * tau1 - 1) *
         gamma_ratio({d + tau1, alpha1 + m, p + alpha1, q + tau1},
                     {alpha1 - tau1 + 1, d + alpha1 + tau1, p + tau1, tau1});
}

Rational length_factor(long len_alpha, long len_tau, const ModelParams& params) {
  const long m = params.m;
  if (len_tau < 1 || len_tau > len_alpha || len_alpha > m)
    throw std::domain_error("length_factor: requires 1 <= len_tau <= len_alpha <= m");
  const long r = params.r();
  const long s = params.s();
  return Rational(2 * m + r + s + 1 - 2 * len_tau) *
         gamma_ratio({r + m - len_tau + 1, r + s + 2 * m - len_alpha - len_tau + 1},
                     {len_alpha - len_tau + 1, len_tau, m - len_alpha + 1,
                      r + m - len_alpha + 1, m + s - len_tau + 1,
                      2 * m + r + s - len_tau + 1});
}

Rational length_factor_dpq(long len_alpha, long len_tau, const ModelParams& params) {
  const long m = params.m;
  if (len_tau < 1 || len_tau > len_alpha || len_alpha > m)
    throw std::domain_error("length_factor_dpq: requires 1 <= len_tau <= len_alpha <= m");
  const long p = params.p;
  const long q = params.q();
  const long d = params.d;
  return Rational(d + 1 - 2 * len_tau) *
         gamma_ratio({d - len_alpha - len_tau + 1, p - len_tau + 1},
                     {len_alpha - len_tau + 1, len_tau, m - len_alpha + 1,
                      p - len_alpha + 1, q - len_tau + 1, d - len_tau + 1});
}

Rational expansion_summand(const Hook& alpha, const Hook& tau, const ModelParams& params) {
  if (!alpha.contains(tau))
    throw std::domain_error("expansion_summand: tau not contained in alpha");
  const long m = params.m;
  const long r = params.r();
  const long s = params.s();
  const Rational value = checked_head_factor(alpha.head, tau.head, params) *
                         checked_length_factor(alpha.length(), tau.length(), params) /
                         Rational(BigInt(r + s + tau.head + 2 * m - tau.length()) *
                                  BigInt(tau.head + tau.length() - 1));
  return alpha.leg % 2 != 0 ? -value : value;
}

MomentExpansion moment_expansion(long n, const ModelParams& params) {
  if (n < 1) throw std::domain_error("moment_expansion: order must be >= 1");
  std::map<long, Rational> by_rate;
  for (const Hook& alpha : hooks_of_weight(n, params.m)) {
    for (const Hook& tau : subhooks(alpha)) {
      by_rate[decay_rate(tau, params)] += expansion_summand(alpha, tau, params);
    }
  }
  return MomentExpansion{params, n, stationary_moment(n, params), collect_terms(by_rate)};
}

Rational stationary_moment(long n, const ModelParams& params) {
  if (n < 1) throw std::domain_error("stationary_moment: order must be >= 1");
  const long m = params.m;
  const long r = params.r();
  const long s = params.s();

  Rational total = 0;
  for (const Hook& alpha : hooks_of_weight(n, m)) {
    const long la = alpha.length();
    const std::vector<long> nshift = shifts(alpha, m);
    // Column shifts of the empty partition are m - j throughout.

    Rational term = alpha.leg % 2 != 0 ? -1 : 1;
    for (long i = 1; i <= m; ++i)
      for (long j = i + 1; j <= m; ++j)
        term *= Rational(BigInt(2 * m - i - j + r + s + 1) * BigInt(j - i));

    // Leading la x la block: almost upper-triangular factorial ratios.
    RationalMatrix block(static_cast<std::size_t>(la),
                         std::vector<Rational>(static_cast<std::size_t>(la)));
    for (long i = 1; i <= la; ++i) {
      const long ni = nshift[static_cast<std::size_t>(i - 1)];
      for (long j = 1; j <= la; ++j) {
        const long mj = m - j;
        if (ni < mj) continue;  // stays zero
        block[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
            Rational(factorial(ni),
                     factorial(ni - mj) * gamma_int(r + s + ni + mj + 2));
      }
    }
    term *= det_rational(std::move(block));

    for (long j = la + 1; j <= m; ++j)
      term *= Rational(factorial(m - j), gamma_int(r + s + 2 * (m - j) + 2));

    for (long j = 1; j <= m; ++j) {
      const long nj = nshift[static_cast<std::size_t>(j - 1)];
      const long mj = m - j;
      term *= Rational(r + s + 2 * mj + 1) *
              gamma_ratio({r + nj + 1, mj + s + 1, r + s + mj + 1},
                          {r + mj + 1, mj + 1, m - j + s + 1, m - j + 1});
    }
    total += term;
  }
  return total;
}

MomentExpansion moment_by_basis_change(long n, const ModelParams& params) {
  if (n < 1) throw std::domain_error("moment_by_basis_change: order must be >= 1");
  const long m = params.m;
  const long r = params.r();
  const long s = params.s();
  const JacobiParams jp{r, s};

  Rational stationary = 0;
  std::map<long, Rational> by_rate;
  for (const Hook& alpha : hooks_of_weight(n, m)) {
    const int sign = alpha.leg % 2 != 0 ? -1 : 1;
    const std::vector<long> nshift = shifts(alpha, m);

    auto accumulate = [&](const OptHook& tau) {
      const std::vector<long> mshift = shifts(tau, m);
      RationalMatrix pairing(static_cast<std::size_t>(m),
                             std::vector<Rational>(static_cast<std::size_t>(m)));
      for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
          pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              pochhammer(-nshift[static_cast<std::size_t>(i)],
                         mshift[static_cast<std::size_t>(j)]) /
              Rational(gamma_int(r + s + nshift[static_cast<std::size_t>(i)] +
                                 mshift[static_cast<std::size_t>(j)] + 2));

      Rational term = Rational(sign) * sym_jacobi_at_ones(tau, jp, m) *
                      det_rational(std::move(pairing));
      for (long j = 0; j < m; ++j) {
        const long nj = nshift[static_cast<std::size_t>(j)];
        const long mj = mshift[static_cast<std::size_t>(j)];
        term *= Rational(r + s + 2 * mj + 1) *
                gamma_ratio({r + nj + 1, r + s + mj + 1}, {r + mj + 1});
      }
      if (!tau) {
        stationary += term;
      } else {
        by_rate[decay_rate(tau, params)] += term;
      }
    };

    accumulate(std::nullopt);
    for (const Hook& tau : subhooks(alpha)) accumulate(tau);
  }
  return MomentExpansion{params, n, std::move(stationary), collect_terms(by_rate)};
}

HessenbergMatrix basis_change_matrix(const Hook& alpha, const Hook& tau,
                                     const ModelParams& params) {
  if (!alpha.contains(tau))
    throw std::domain_error("basis_change_matrix: tau not contained in alpha");
  if (alpha.length() > params.m)
    throw std::domain_error("basis_change_matrix: alpha longer than m");
  const long m = params.m;
  const long r = params.r();
  const long s = params.s();
  const std::vector<long> nshift = shifts(alpha, m);
  const std::vector<long> mshift = shifts(tau, m);

  RationalMatrix entries(static_cast<std::size_t>(m),
                         std::vector<Rational>(static_cast<std::size_t>(m)));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pochhammer(-nshift[static_cast<std::size_t>(i)],
                     mshift[static_cast<std::size_t>(j)]) /
          Rational(gamma_int(r + s + nshift[static_cast<std::size_t>(i)] +
                             mshift[static_cast<std::size_t>(j)] + 2));
  return HessenbergMatrix{alpha, tau, params, std::move(entries)};
}

Rational hessenberg_block_det_product(long len_alpha, long len_tau,
                                      const ModelParams& params) {
  const long m = params.m;
  if (len_tau < 1 || len_tau >= len_alpha || len_alpha > m)
    throw std::domain_error(
        "hessenberg_block_det_product: requires 1 <= len_tau < len_alpha <= m");
  const long r = params.r();
  const long s = params.s();
  Rational value = Rational(1, factorial(len_alpha - len_tau));
  for (long j = len_tau + 1; j <= len_alpha; ++j)
    value /= Rational(r + s + 2 * m - len_tau + 1 - j);
  return value;
}

Rational hessenberg_block_det_eliminate(long len_alpha, long len_tau,
                                        const ModelParams& params) {
  const long m = params.m;
  if (len_tau < 1 || len_tau >= len_alpha || len_alpha > m)
    throw std::domain_error(
        "hessenberg_block_det_eliminate: requires 1 <= len_tau < len_alpha <= m");
  const long big_n = params.r() + params.s() + 2 * m + 2;
  const long size = len_alpha - len_tau;

  RationalMatrix block(static_cast<std::size_t>(size),
                       std::vector<Rational>(static_cast<std::size_t>(size)));
  for (long k = 1; k <= size; ++k) {
    const long i = k + len_tau;
    for (long l = 1; l <= size; ++l) {
      if (k > l + 1) continue;
      const long j = l + len_tau;
      block[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
          Rational(gamma_int(big_n - 2 * j),
                   factorial(l - k + 1) * gamma_int(big_n - i - j + 1));
    }
  }
  return det_rational(std::move(block));
}

double stationary_moment_quadrature(long n, const ModelParams& params) {
  if (n < 1) throw std::domain_error("stationary_moment_quadrature: order must be >= 1");
  if (params.m > 3)
    throw std::domain_error("stationary_moment_quadrature: unsupported for m > 3");
  const long m = params.m;
  const int points = static_cast<int>(n + 2 * m + 2);
  const QuadratureRule rule = gauss_jacobi_rule(points, {params.r(), params.s()});

  std::vector<std::size_t> index(static_cast<std::size_t>(m), 0);
  double numerator = 0;
  double denominator = 0;
  while (true) {
    double weight = 1;
    double squared_vandermonde = 1;
    double power_sum = 0;
    for (long i = 0; i < m; ++i) {
      const double u = rule.nodes[index[static_cast<std::size_t>(i)]];
      weight *= rule.weights[index[static_cast<std::size_t>(i)]];
      power_sum += std::pow(u, static_cast<double>(n));
      for (long j = i + 1; j < m; ++j) {
        const double diff = u - rule.nodes[index[static_cast<std::size_t>(j)]];
        squared_vandermonde *= diff * diff;
      }
    }
    numerator += weight * squared_vandermonde * power_sum;
    denominator += weight * squared_vandermonde;

    long axis = m - 1;
    while (axis >= 0) {
      if (++index[static_cast<std::size_t>(axis)] < rule.nodes.size()) break;
      index[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return numerator / denominator;
}

}  // namespace hjp
