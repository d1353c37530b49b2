#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hjp/hyp_series.hpp"

#include <array>

using namespace hjp;

TEST_CASE("terminating series base cases") {
  // upper[0] = 0: only the k = 0 term.
  CHECK(terminating_4f3(HypParams4F3({0, 3, 4, 5}, {2, 5, 6})) == Rational(1));
  // upper[0] = -1: two-term sum 1 - abc/(efg).
  const HypParams4F3 two_terms({-1, 4, 5, 7}, {2, 3, 11});
  CHECK(terminating_4f3(two_terms) ==
        Rational(1) - Rational(4 * 5 * 7, 2 * 3 * 11));
  CHECK(terminating_4f3(two_terms) == Rational(-37, 33));
}

TEST_CASE("series construction validates its invariants") {
  // Not terminating.
  CHECK_THROWS_AS(HypParams4F3({1, 2, 3, 4}, {5, 3, 3}), std::domain_error);
  // Unbalanced: 1 + sum(upper) != sum(lower).
  CHECK_THROWS_AS(HypParams4F3({-1, 4, 5, 7}, {2, 3, 12}), std::domain_error);
  // Lower-parameter pole inside the terminating range.
  CHECK_THROWS_AS(HypParams4F3({-3, 4, 5, 6}, {-1, 6, 8}), std::domain_error);
}

TEST_CASE("inner sum direct worked values") {
  // n = h = 1, j = 0 has the single term k = 0:
  // Gamma(1+m)Gamma(p+1)Gamma(d-1) / [Gamma(m)Gamma(p)Gamma(d+2)]
  //   = m p / ((d-1) d (d+1)).
  for (long m = 1; m <= 5; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        const ModelParams params(m, m + r, 2 * m + r + s);
        const long d = params.d;
        CHECK(inner_sum_direct(1, 1, 0, params) ==
              Rational(params.m * params.p, (d - 1) * d * (d + 1)));
        CHECK(inner_sum_direct(1, 1, 0, params) ==
              gamma_ratio({1 + params.m, params.p + 1, d - 1},
                          {params.m, params.p, d + 2}));
      }
  // n = h = 2: the k range is the single point k = j.
  const ModelParams params(3, 4, 9);
  CHECK_NOTHROW(inner_sum_direct(2, 2, 0, params));
  CHECK_NOTHROW(inner_sum_direct(2, 2, 1, params));
  // Two-term alternating sum, fixed by hand evaluation of the direct form:
  // Gamma(5)Gamma(6)Gamma(8)/[Gamma(3)Gamma(4)Gamma(12)]
  //   - Gamma(4)Gamma(5)Gamma(7)/[Gamma(2)Gamma(3)Gamma(11)] = 1/33 - 1/70.
  CHECK(inner_sum_direct(2, 1, 0, params) == Rational(37, 2310));
}

TEST_CASE("inner sum validates its domain") {
  const ModelParams small(2, 3, 6);
  CHECK_THROWS_AS(inner_sum_direct(3, 1, 0, small), std::domain_error);  // m < n
  const ModelParams params(3, 4, 9);
  CHECK_THROWS_AS(inner_sum_direct(2, 3, 0, params), std::domain_error);  // h > n
  CHECK_THROWS_AS(inner_sum_direct(2, 1, 1, params), std::domain_error);  // j > h-1
}

TEST_CASE("prefactored 4F3 equals the direct sum") {
  const ModelParams params(3, 4, 9);
  CHECK(inner_sum_4f3(2, 1, 0, params) == inner_sum_direct(2, 1, 0, params));
  CHECK(inner_sum_4f3(2, 1, 0, params) == Rational(37, 2310));
  for (long n = 1; n <= 5; ++n)
    for (long m = n; m <= 6; ++m)
      for (long r = 0; r <= 2; ++r)
        for (long s = 0; s <= 2; ++s) {
          const ModelParams grid_params(m, m + r, 2 * m + r + s);
          for (long h = 1; h <= n; ++h)
            for (long j = 0; j <= h - 1; ++j)
              CHECK(inner_sum_4f3(n, h, j, grid_params) ==
                    inner_sum_direct(n, h, j, grid_params));
        }
}

TEST_CASE("reversed summation reproduces the expansion exactly") {
  CHECK(moment_via_4f3(1, ModelParams(2, 3, 6)) ==
        moment_expansion(1, ModelParams(2, 3, 6)));
  CHECK(moment_via_4f3(2, ModelParams(3, 4, 9)) ==
        moment_expansion(2, ModelParams(3, 4, 9)));
  CHECK(moment_via_4f3(3, ModelParams(3, 4, 9)) ==
        moment_expansion(3, ModelParams(3, 4, 9)));
  for (long n = 1; n <= 4; ++n)
    for (long m = n; m <= 6; ++m) {
      const ModelParams params(m, m + 1, 2 * m + 3);
      CHECK(moment_via_4f3(n, params) == moment_expansion(n, params));
    }
  CHECK_THROWS_AS(moment_via_4f3(3, ModelParams(2, 3, 6)), std::domain_error);
}
