#pragma once

#include "hjp/moment_engine.hpp"

#include <array>

namespace hjp {

// Terminating balanced 4F3 at unit argument with integer parameters.
// upper[0] <= 0 terminates the series after 1 - upper[0] terms.
struct HypParams4F3 {
  std::array<long, 4> upper;
  std::array<long, 3> lower;

  HypParams4F3(const std::array<long, 4>& upper_, const std::array<long, 3>& lower_);
};

Rational terminating_4f3(const HypParams4F3& hp);

// Sum over weight-n hooks containing the fixed hook (h-j, 1^j) of the
// alpha-dependent part of the moment summand; requires m >= n so every
// Gamma argument stays positive. Two routes: the direct alternating sum
// and the prefactored 4F3 form; they agree exactly.
Rational inner_sum_direct(long n, long h, long j, const ModelParams& params);
Rational inner_sum_4f3(long n, long h, long j, const ModelParams& params);

// Moment expansion assembled with the summation order reversed (tau
// outer, alpha inner through inner_sum_4f3). Identical to
// moment_expansion whenever m >= n.
MomentExpansion moment_via_4f3(long n, const ModelParams& params);

}  // namespace hjp
