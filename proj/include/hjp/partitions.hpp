#pragma once

#include <optional>
#include <vector>

namespace hjp {

// Hook-shaped partition (head, 1^leg): head boxes in the first row and
// leg further rows of one box each.
struct Hook {
  long head = 1;
  long leg = 0;

  Hook(long head_, long leg_);

  long weight() const { return head + leg; }
  long length() const { return leg + 1; }

  // 1-based row length; zero past length().
  long part(long i) const { return i == 1 ? head : (i <= leg + 1 ? 1 : 0); }

  bool contains(const Hook& other) const {
    return other.head <= head && other.leg <= leg;
  }

  friend bool operator==(const Hook&, const Hook&) = default;
};

// nullopt stands for the empty partition, which several formulas treat
// as a separate branch rather than a degenerate hook.
using OptHook = std::optional<Hook>;

inline long hook_part(const OptHook& tau, long i) { return tau ? tau->part(i) : 0; }
inline long hook_length(const OptHook& tau) { return tau ? tau->length() : 0; }
inline long hook_weight(const OptHook& tau) { return tau ? tau->weight() : 0; }

// Integer parameters (m, p, d) of the process. r = p-m and s = d-p-m must
// be nonnegative so that the eigenvalue law has a density; note
// r + s + 2m = d.
struct ModelParams {
  long m = 1;
  long p = 1;
  long d = 2;

  ModelParams(long m_, long p_, long d_);

  long q() const { return d - p; }
  long r() const { return p - m; }
  long s() const { return d - p - m; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// All hooks (n-k, 1^k) of weight n with length <= max_length, ordered by
// increasing leg.
std::vector<Hook> hooks_of_weight(long n, long max_length);

// All nonempty hooks contained in alpha, ordered by (leg, head).
// Exactly alpha.head * (alpha.leg + 1) of them.
std::vector<Hook> subhooks(const Hook& alpha);

// Spectral exponent sum_i tau_i (tau_i + r + s + 1 + 2(m - i)).
// Zero for the empty partition; equals d for the single box.
long decay_rate(const OptHook& tau, const ModelParams& params);

}  // namespace hjp
