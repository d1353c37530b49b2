#include "hjp/hyp_series.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace hjp {

namespace {

void validate_inner_sum_args(long n, long h, long j, const ModelParams& params) {
  if (n < 1) throw std::domain_error("inner_sum: order must be >= 1");
  if (params.m < n)
    throw std::domain_error("inner_sum: requires m >= n for positive Gamma arguments");
  if (h < 1 || h > n) throw std::domain_error("inner_sum: requires 1 <= h <= n");
  if (j < 0 || j > h - 1) throw std::domain_error("inner_sum: requires 0 <= j <= h - 1");
}

// One term of the direct alternating sum, k in [j, j + n - h].
Rational direct_summand(long n, long h, long j, long k, const ModelParams& params) {
  const long m = params.m;
  const long p = params.p;
  const long d = params.d;
  const Rational value =
      gamma_ratio({n - k + m, p + n - k, d - k - j - 1},
                  {n - h + j - k + 1, k - j + 1, m - k, p - k, d + n - k + h - j});
  return k % 2 != 0 ? -value : value;
}

std::vector<ExpTerm> collect_terms(std::map<long, Rational>& by_rate) {
  std::vector<ExpTerm> terms;
  terms.reserve(by_rate.size());
  for (auto& [rate, coeff] : by_rate)
    if (coeff != 0) terms.push_back({rate, std::move(coeff)});
  return terms;
}

}  // namespace

HypParams4F3::HypParams4F3(const std::array<long, 4>& upper_,
                           const std::array<long, 3>& lower_)
    : upper(upper_), lower(lower_) {
  if (upper[0] > 0)
    throw std::domain_error("HypParams4F3: upper[0] must be nonpositive (terminating)");
  long balance = 1;
  for (long a : upper) balance += a;
  long lower_sum = 0;
  for (long b : lower) lower_sum += b;
  if (balance != lower_sum)
    throw std::domain_error("HypParams4F3: series is not balanced");
  for (long b : lower)
    if (b <= 0 && b >= upper[0])
      throw std::domain_error("HypParams4F3: lower parameter pole inside the terminating range");
}

Rational terminating_4f3(const HypParams4F3& hp) {
  const long kmax = -hp.upper[0];
  Rational sum = 0;
  Rational term = 1;
  for (long k = 0;; ++k) {
    sum += term;
    if (k == kmax) break;
    BigInt num = 1;
    for (long a : hp.upper) num *= BigInt(a + k);
    BigInt den = BigInt(k + 1);
    for (long b : hp.lower) den *= BigInt(b + k);
    term *= Rational(num, den);
  }
  return sum;
}

Rational inner_sum_direct(long n, long h, long j, const ModelParams& params) {
  validate_inner_sum_args(n, h, j, params);
  Rational sum = 0;
  for (long k = j; k <= j + n - h; ++k) sum += direct_summand(n, h, j, k, params);
  return sum;
}

Rational inner_sum_4f3(long n, long h, long j, const ModelParams& params) {
  validate_inner_sum_args(n, h, j, params);
  const long m = params.m;
  const long p = params.p;
  const long d = params.d;

  const Rational prefactor =
      gamma_ratio({h - j + m, p + h - j, d - n + h - 2 * j - 1},
                  {n - h + 1, d + 2 * h - 2 * j, m + h - n - j, p + h - n - j});
  const HypParams4F3 series({-(n - h), m + h - j, p + h - j, d - n + h - 2 * j - 1},
                            {m - n + h - j, p - n + h - j, d + 2 * h - 2 * j});
  Rational value = prefactor * terminating_4f3(series);
  if ((n - h + j) % 2 != 0) value = -value;

  // Same quantity written as the reindexed alternating sum; any sign
  // convention slip between the two displays fails loudly here.
  Rational reindexed = 0;
  for (long k = 0; k <= n - h; ++k) {
    const Rational piece = gamma_ratio(
        {h - j + m + k, p + h - j + k, d - n + h - 2 * j - 1 + k},
        {k + 1, n - h - k + 1, m + h - n - j + k, p + h - n - j + k, d + k + 2 * h - 2 * j});
    reindexed += (k % 2 != 0) ? -piece : piece;
  }
  if ((n - h + j) % 2 != 0) reindexed = -reindexed;
  if (value != reindexed)
    throw std::logic_error("inner_sum_4f3: prefactored series and reindexed sum disagree");
  return value;
}

MomentExpansion moment_via_4f3(long n, const ModelParams& params) {
  if (n < 1) throw std::domain_error("moment_via_4f3: order must be >= 1");
  if (params.m < n) throw std::domain_error("moment_via_4f3: requires m >= n");

  std::map<long, Rational> by_rate;
  for (long h = 1; h <= n; ++h) {
    for (long j = 0; j <= h - 1; ++j) {
      const Hook tau{h - j, j};
      // The factor carried by tau alone is the full summand divided by the
      // alpha-dependent part, taken at the first admissible alpha.
      const Hook alpha_ref{n - j, j};
      const Rational outer = expansion_summand(alpha_ref, tau, params) /
                             direct_summand(n, h, j, /*k=*/j, params);
      by_rate[decay_rate(tau, params)] += outer * inner_sum_4f3(n, h, j, params);
    }
  }
  return MomentExpansion{params, n, stationary_moment(n, params), collect_terms(by_rate)};
}

}  // namespace hjp
