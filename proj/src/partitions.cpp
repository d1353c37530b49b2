#include "hjp/partitions.hpp"

#include <stdexcept>

namespace hjp {

Hook::Hook(long head_, long leg_) : head(head_), leg(leg_) {
  if (head < 1) throw std::domain_error("Hook: head must be >= 1");
  if (leg < 0) throw std::domain_error("Hook: leg must be >= 0");
}

ModelParams::ModelParams(long m_, long p_, long d_) : m(m_), p(p_), d(d_) {
  if (m < 1 || p < 1) throw std::domain_error("ModelParams: m and p must be >= 1");
  if (d < 2) throw std::domain_error("ModelParams: d must be >= 2");
  if (m > p) throw std::domain_error("ModelParams: requires m <= p");
  if (m > d - p) throw std::domain_error("ModelParams: requires m <= q = d - p");
}

std::vector<Hook> hooks_of_weight(long n, long max_length) {
  if (n < 1) throw std::domain_error("hooks_of_weight: weight must be >= 1");
  if (max_length < 1) throw std::domain_error("hooks_of_weight: max_length must be >= 1");
  std::vector<Hook> hooks;
  const long top_leg = std::min(n - 1, max_length - 1);
  hooks.reserve(static_cast<std::size_t>(top_leg + 1));
  for (long leg = 0; leg <= top_leg; ++leg) hooks.emplace_back(n - leg, leg);
  return hooks;
}

std::vector<Hook> subhooks(const Hook& alpha) {
  std::vector<Hook> result;
  result.reserve(static_cast<std::size_t>(alpha.head * (alpha.leg + 1)));
  for (long leg = 0; leg <= alpha.leg; ++leg)
    for (long head = 1; head <= alpha.head; ++head) result.emplace_back(head, leg);
  return result;
}

long decay_rate(const OptHook& tau, const ModelParams& params) {
  if (!tau) return 0;
  if (tau->length() > params.m)
    throw std::domain_error("decay_rate: partition longer than the matrix size");
  const long r = params.r();
  const long s = params.s();
  const long m = params.m;
  long rate = 0;
  for (long i = 1; i <= tau->length(); ++i) {
    const long part = tau->part(i);
    rate += part * (part + r + s + 1 + 2 * (m - i));
  }
  return rate;
}

}  // namespace hjp
