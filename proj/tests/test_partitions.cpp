#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hjp/partitions.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace hjp;

namespace {

// Brute-force oracle: all nonempty partitions contained in the given part
// list, as decreasing part lists.
void enumerate_contained(const std::vector<long>& bound, std::size_t index, long cap,
                         std::vector<long>& current,
                         std::set<std::vector<long>>& out) {
  if (!current.empty()) out.insert(current);
  if (index >= bound.size()) return;
  for (long part = 1; part <= std::min(cap, bound[index]); ++part) {
    current.push_back(part);
    enumerate_contained(bound, index + 1, part, current, out);
    current.pop_back();
  }
}

std::set<std::vector<long>> contained_partitions(const Hook& alpha) {
  std::vector<long> bound(static_cast<std::size_t>(alpha.length()));
  for (long i = 1; i <= alpha.length(); ++i)
    bound[static_cast<std::size_t>(i - 1)] = alpha.part(i);
  std::set<std::vector<long>> out;
  std::vector<long> current;
  enumerate_contained(bound, 0, bound[0], current, out);
  return out;
}

std::vector<long> parts_of(const Hook& hook) {
  std::vector<long> parts(static_cast<std::size_t>(hook.length()));
  for (long i = 1; i <= hook.length(); ++i)
    parts[static_cast<std::size_t>(i - 1)] = hook.part(i);
  return parts;
}

bool is_hook_shape(const std::vector<long>& parts) {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] != 1) return false;
  return !parts.empty();
}

}  // namespace

TEST_CASE("hook construction and accessors") {
  const Hook hook(3, 2);
  CHECK(hook.weight() == 5);
  CHECK(hook.length() == 3);
  CHECK(hook.part(1) == 3);
  CHECK(hook.part(2) == 1);
  CHECK(hook.part(3) == 1);
  CHECK(hook.part(4) == 0);
  CHECK_THROWS_AS(Hook(0, 1), std::domain_error);
  CHECK_THROWS_AS(Hook(2, -1), std::domain_error);
}

TEST_CASE("hooks_of_weight worked examples") {
  CHECK(hooks_of_weight(3, 3) ==
        std::vector<Hook>{Hook(3, 0), Hook(2, 1), Hook(1, 2)});
  CHECK(hooks_of_weight(3, 2) == std::vector<Hook>{Hook(3, 0), Hook(2, 1)});
  CHECK(hooks_of_weight(1, 5) == std::vector<Hook>{Hook(1, 0)});
}

TEST_CASE("subhooks worked examples and count") {
  CHECK(subhooks(Hook(2, 1)) ==
        std::vector<Hook>{Hook(1, 0), Hook(2, 0), Hook(1, 1), Hook(2, 1)});
  CHECK(subhooks(Hook(1, 0)) == std::vector<Hook>{Hook(1, 0)});
  CHECK(subhooks(Hook(3, 0)) ==
        std::vector<Hook>{Hook(1, 0), Hook(2, 0), Hook(3, 0)});
  for (long head = 1; head <= 6; ++head)
    for (long leg = 0; leg <= 5; ++leg)
      CHECK(subhooks(Hook(head, leg)).size() ==
            static_cast<std::size_t>(head * (leg + 1)));
}

TEST_CASE("every contained partition of a hook is a hook") {
  for (long weight = 1; weight <= 8; ++weight) {
    for (const Hook& alpha : hooks_of_weight(weight, weight)) {
      const auto contained = contained_partitions(alpha);
      std::set<std::vector<long>> from_subhooks;
      for (const Hook& tau : subhooks(alpha)) from_subhooks.insert(parts_of(tau));
      CHECK(from_subhooks == contained);
      for (const auto& parts : contained) CHECK(is_hook_shape(parts));
    }
  }
}

TEST_CASE("model params validation") {
  CHECK_NOTHROW(ModelParams(2, 3, 6));
  CHECK_THROWS_AS(ModelParams(3, 2, 5), std::domain_error);   // m > p
  CHECK_THROWS_AS(ModelParams(2, 3, 4), std::domain_error);   // m > q
  CHECK_THROWS_AS(ModelParams(1, 1, 1), std::domain_error);   // d < 2
  const ModelParams params(2, 3, 7);
  CHECK(params.r() == 1);
  CHECK(params.s() == 2);
  CHECK(params.q() == 4);
  CHECK(params.r() + params.s() + 2 * params.m == params.d);
}

TEST_CASE("decay rate worked examples") {
  CHECK(decay_rate(Hook(1, 0), ModelParams(2, 3, 7)) == 7);
  CHECK(decay_rate(std::nullopt, ModelParams(3, 5, 11)) == 0);
  CHECK(decay_rate(Hook(2, 1), ModelParams(2, 2, 4)) == 12);
  CHECK_THROWS_AS(decay_rate(Hook(1, 2), ModelParams(2, 3, 6)), std::domain_error);
}

TEST_CASE("decay rate is positive and monotone under containment") {
  for (long m = 1; m <= 8; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        const ModelParams params(m, m + r, 2 * m + r + s);
        long minimum = -1;
        for (long weight = 1; weight <= 8; ++weight)
          for (const Hook& alpha : hooks_of_weight(weight, m)) {
            const long rate = decay_rate(alpha, params);
            CHECK(rate > 0);
            if (minimum < 0 || rate < minimum) minimum = rate;
            for (const Hook& tau : subhooks(alpha))
              CHECK(decay_rate(tau, params) <= rate);
          }
        // Slowest mode is the single box, with rate d.
        CHECK(minimum == params.d);
      }
}
