#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hjp/jacobi_poly.hpp"
#include "hjp/moment_engine.hpp"
#include "hjp/quadrature.hpp"
#include "hjp/serialize.hpp"

#include <cmath>
#include <functional>
#include <vector>

using namespace hjp;

namespace {

ModelParams from_rs(long m, long r, long s) { return ModelParams(m, m + r, 2 * m + r + s); }

// Tensor Gauss-Jacobi integral of a symmetric integrand against
// V(y)^2 prod y^r (1-y)^s over the cube, divided by m!.
double selberg_integral(long m, const JacobiParams& jp, int points,
                        const std::function<double(const std::vector<double>&)>& f) {
  const QuadratureRule rule = gauss_jacobi_rule(points, jp);
  std::vector<std::size_t> index(static_cast<std::size_t>(m), 0);
  std::vector<double> y(static_cast<std::size_t>(m));
  double total = 0;
  while (true) {
    double weight = 1;
    for (long i = 0; i < m; ++i) {
      y[static_cast<std::size_t>(i)] = rule.nodes[index[static_cast<std::size_t>(i)]];
      weight *= rule.weights[index[static_cast<std::size_t>(i)]];
    }
    double v2 = 1;
    for (long i = 0; i < m; ++i)
      for (long j = i + 1; j < m; ++j) {
        const double diff = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
        v2 *= diff * diff;
      }
    if (v2 != 0) total += weight * v2 * f(y);

    long axis = m - 1;
    while (axis >= 0) {
      if (++index[static_cast<std::size_t>(axis)] < rule.nodes.size()) break;
      index[static_cast<std::size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  double m_factorial = 1;
  for (long i = 2; i <= m; ++i) m_factorial *= static_cast<double>(i);
  return total / m_factorial;
}

// Independent route through the semigroup density: integrate the power
// sum against each symmetric-polynomial mode and weight by the special
// value over the squared norms. Exercises the decay rates, the special
// value, the one-variable norms, and the determinantal evaluator jointly.
double moment_via_density(long n, const ModelParams& params, double t) {
  const long m = params.m;
  const JacobiParams jp{params.r(), params.s()};
  const int points = static_cast<int>(2 * n + 3 * m + 2);

  std::vector<OptHook> modes{std::nullopt};
  for (long weight = 1; weight <= n; ++weight)
    for (const Hook& tau : hooks_of_weight(weight, m)) modes.emplace_back(tau);

  double total = 0;
  for (const OptHook& tau : modes) {
    Rational norms = 1;
    for (long j = 1; j <= m; ++j)
      norms *= jacobi_norm_sq(hook_part(tau, j) + m - j, jp);
    const double mode_weight = to_double(sym_jacobi_at_ones(tau, jp, m) / norms);
    const double overlap =
        selberg_integral(m, jp, points, [&](const std::vector<double>& y) {
          double power_sum = 0;
          for (double v : y) power_sum += std::pow(v, static_cast<double>(n));
          return power_sum * sym_jacobi_eval(tau, jp, m, y);
        });
    total += std::exp(-static_cast<double>(decay_rate(tau, params)) * t) *
             mode_weight * overlap;
  }
  return total;
}

}  // namespace

TEST_CASE("head factor worked values") {
  CHECK(head_factor(1, 1, from_rs(1, 1, 2)) == Rational(6));
  CHECK(head_factor(1, 1, from_rs(1, 0, 0)) == Rational(1));
  CHECK_THROWS_AS(head_factor(1, 2, from_rs(2, 0, 0)), std::domain_error);
}

TEST_CASE("length factor worked values") {
  CHECK(length_factor(1, 1, from_rs(1, 1, 2)) == Rational(1, 2));
  CHECK(length_factor(1, 1, from_rs(1, 0, 0)) == Rational(1));
  CHECK_THROWS_AS(length_factor(3, 1, from_rs(2, 1, 1)), std::domain_error);  // len_alpha > m
  CHECK_THROWS_AS(length_factor(1, 2, from_rs(3, 0, 0)), std::domain_error);  // len_tau > len_alpha
}

TEST_CASE("both coefficient parameterizations agree") {
  for (long m = 1; m <= 4; ++m)
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s) {
        const ModelParams params = from_rs(m, r, s);
        for (long tau1 = 1; tau1 <= 5; ++tau1)
          for (long alpha1 = tau1; alpha1 <= 6; ++alpha1)
            CHECK(head_factor(alpha1, tau1, params) ==
                  head_factor_dpq(alpha1, tau1, params));
        for (long lt = 1; lt <= m; ++lt)
          for (long la = lt; la <= m; ++la)
            CHECK(length_factor(la, lt, params) == length_factor_dpq(la, lt, params));
      }
}

TEST_CASE("first moment of the (1,2,5) model") {
  const MomentExpansion expansion = moment_expansion(1, ModelParams(1, 2, 5));
  CHECK(expansion.stationary == Rational(2, 5));
  REQUIRE(expansion.terms.size() == 1);
  CHECK(expansion.terms[0].rate == 5);
  CHECK(expansion.terms[0].coeff == Rational(3, 5));
  CHECK(expansion.value_at_zero() == Rational(1));
  CHECK(expansion.eval(0.0) == 1.0);
  CHECK(expansion.eval(0.5) ==
        doctest::Approx(0.4 + 0.6 * std::exp(-2.5)).epsilon(1e-15));
}

TEST_CASE("uniform second moment") {
  const MomentExpansion expansion = moment_expansion(2, ModelParams(1, 1, 2));
  CHECK(expansion.stationary == Rational(1, 3));
  CHECK(expansion.value_at_zero() == Rational(1));
}

TEST_CASE("m=1 closed form across parameters") {
  for (long r = 0; r <= 5; ++r)
    for (long s = 0; s <= 5; ++s) {
      const MomentExpansion expansion = moment_expansion(1, from_rs(1, r, s));
      CHECK(expansion.stationary == Rational(r + 1, r + s + 2));
      REQUIRE(expansion.terms.size() == 1);
      CHECK(expansion.terms[0].rate == r + s + 2);
      CHECK(expansion.terms[0].coeff == Rational(s + 1, r + s + 2));
    }
}

TEST_CASE("value at zero is m across a parameter grid") {
  for (long m = 1; m <= 4; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long n = 1; n <= 5; ++n)
          CHECK(moment_expansion(n, from_rs(m, r, s)).value_at_zero() == Rational(m));
}

TEST_CASE("expansion structure invariants") {
  for (long m = 1; m <= 4; ++m)
    for (long n = 1; n <= 5; ++n) {
      const ModelParams params = from_rs(m, 1, 2);
      const MomentExpansion expansion = moment_expansion(n, params);
      CHECK(expansion.stationary > 0);
      CHECK(expansion.stationary < Rational(m));
      long previous_rate = 0;
      for (const ExpTerm& term : expansion.terms) {
        CHECK(term.rate >= params.d);  // slowest mode is the single box
        CHECK(term.rate > previous_rate);
        CHECK(term.coeff != 0);
        previous_rate = term.rate;
      }
    }
}

TEST_CASE("evaluated moments stay inside (0, m] on a time grid") {
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long n = 1; n <= 4; ++n) {
          const MomentExpansion expansion = moment_expansion(n, from_rs(m, r, s));
          for (int step = 0; step <= 50; ++step) {
            const double value = expansion.eval(0.1 * step);
            CHECK(value > 0.0);
            CHECK(value <= static_cast<double>(m) * (1.0 + 1e-12));
          }
        }
}

TEST_CASE("basis-change oracle equals the closed form") {
  // Frozen oracle-equivalence cases, then a small grid.
  CHECK(moment_by_basis_change(1, ModelParams(1, 2, 5)) ==
        moment_expansion(1, ModelParams(1, 2, 5)));
  CHECK(moment_by_basis_change(1, ModelParams(2, 3, 6)) ==
        moment_expansion(1, ModelParams(2, 3, 6)));
  CHECK(moment_by_basis_change(3, ModelParams(2, 3, 6)) ==
        moment_expansion(3, ModelParams(2, 3, 6)));
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r <= 1; ++r)
      for (long s = 0; s <= 1; ++s)
        for (long n = 1; n <= 4; ++n)
          CHECK(moment_by_basis_change(n, from_rs(m, r, s)) ==
                moment_expansion(n, from_rs(m, r, s)));
}

TEST_CASE("pairing matrix vanishes below the first subdiagonal") {
  for (long m = 2; m <= 5; ++m)
    for (long n = 1; n <= 5; ++n)
      for (const Hook& alpha : hooks_of_weight(n, m))
        for (const Hook& tau : subhooks(alpha)) {
          const ModelParams params = from_rs(m, 1, 1);
          const HessenbergMatrix matrix = basis_change_matrix(alpha, tau, params);
          for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j)
              if (i >= j + 2)
                CHECK(matrix.entries[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(j)] == 0);
        }
}

TEST_CASE("pairing matrix subdiagonal structure") {
  // Equal lengths: strictly upper triangular.
  {
    const HessenbergMatrix matrix =
        basis_change_matrix(Hook(2, 1), Hook(2, 1), from_rs(2, 0, 0));
    for (long j = 1; j <= 1; ++j)
      CHECK(matrix.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(j - 1)] ==
            0);
  }
  // alpha = (1,1), tau = (1), m = 2 falls in the upper-triangular branch
  // (len_alpha < len_tau + 2), so the subdiagonal vanishes; the direct
  // definition agrees since (-1)_2 = 0.
  {
    const HessenbergMatrix matrix =
        basis_change_matrix(Hook(1, 1), Hook(1, 0), from_rs(2, 0, 0));
    CHECK(matrix.entries[1][0] == 0);
  }
  // Smallest case where the subdiagonal display applies: alpha = (1,1,1),
  // tau = (1), m = 3, j = 2 gives -1/Gamma(4) = -1/6.
  {
    const HessenbergMatrix matrix =
        basis_change_matrix(Hook(1, 2), Hook(1, 0), from_rs(3, 0, 0));
    CHECK(matrix.entries[2][1] == Rational(-1, 6));
  }
  // General subdiagonal law over a grid.
  for (long m = 2; m <= 5; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long n = 2; n <= 5; ++n)
          for (const Hook& alpha : hooks_of_weight(n, m))
            for (const Hook& tau : subhooks(alpha)) {
              const ModelParams params = from_rs(m, r, s);
              const HessenbergMatrix matrix = basis_change_matrix(alpha, tau, params);
              for (long j = 1; j <= m - 1; ++j) {
                const Rational entry =
                    matrix.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(j - 1)];
                if (j >= alpha.length() || j <= tau.length()) {
                  CHECK(entry == 0);
                } else {
                  Rational expected =
                      Rational(factorial(m - j), gamma_int(r + s + 2 * m - 2 * j + 2));
                  if ((m - j) % 2 != 0) expected = -expected;
                  CHECK(entry == expected);
                }
              }
            }
}

TEST_CASE("Hessenberg block determinants") {
  // L = 1 reduces to the single diagonal entry.
  CHECK(hessenberg_block_det_product(2, 1, from_rs(2, 1, 1)) == Rational(1, 4));
  for (long m = 2; m <= 5; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        CHECK(hessenberg_block_det_product(2, 1, from_rs(m, r, s)) ==
              Rational(1, r + s + 2 * m - 2));
  // Worked 2x2 value.
  CHECK(hessenberg_block_det_product(3, 1, from_rs(3, 0, 0)) == Rational(1, 24));
  CHECK(hessenberg_block_det_eliminate(3, 1, from_rs(3, 0, 0)) == Rational(1, 24));
  // Product form equals elimination on a grid.
  for (long m = 1; m <= 6; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long lt = 1; lt < m; ++lt)
          for (long la = lt + 1; la <= m; ++la)
            CHECK(hessenberg_block_det_product(la, lt, from_rs(m, r, s)) ==
                  hessenberg_block_det_eliminate(la, lt, from_rs(m, r, s)));
  CHECK_THROWS_AS(hessenberg_block_det_product(2, 2, from_rs(3, 0, 0)),
                  std::domain_error);
}

TEST_CASE("stationary moments") {
  CHECK(stationary_moment(1, from_rs(1, 1, 2)) == Rational(2, 5));
  for (long n = 1; n <= 6; ++n)
    CHECK(stationary_moment(n, from_rs(1, 0, 0)) == Rational(1, n + 1));
  // Value fixed by the tensor quadrature oracle.
  CHECK(stationary_moment(1, from_rs(2, 0, 0)) == Rational(1));
  // First stationary moment is p*m/d (trace of the projected identity).
  for (long m = 1; m <= 4; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s) {
        const ModelParams params = from_rs(m, r, s);
        CHECK(stationary_moment(1, params) == Rational(params.p * params.m, params.d));
      }
}

TEST_CASE("stationary quadrature oracle") {
  CHECK(stationary_moment_quadrature(1, from_rs(1, 1, 2)) ==
        doctest::Approx(0.4).epsilon(1e-12));
  CHECK(stationary_moment_quadrature(2, from_rs(1, 0, 0)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const double exact = to_double(stationary_moment(1, from_rs(2, 0, 0)));
  CHECK(stationary_moment_quadrature(1, from_rs(2, 0, 0)) ==
        doctest::Approx(exact).epsilon(1e-8));
  CHECK_THROWS_AS(stationary_moment_quadrature(1, from_rs(4, 0, 0)), std::domain_error);
}

TEST_CASE("semigroup-density route reproduces the expansion") {
  for (long m = 1; m <= 2; ++m)
    for (long r = 0; r <= 1; ++r)
      for (long s = 0; s <= 1; ++s)
        for (long n = 1; n <= 3; ++n) {
          const ModelParams params = from_rs(m, r, s);
          const MomentExpansion expansion = moment_expansion(n, params);
          for (const double t : {0.0, 0.3, 1.0}) {
            const double reference = moment_via_density(n, params, t);
            CHECK(expansion.eval(t) ==
                  doctest::Approx(reference).epsilon(1e-9));
          }
        }
}

TEST_CASE("expansion serializes to the documented JSON shape") {
  const MomentExpansion expansion = moment_expansion(1, ModelParams(1, 2, 5));
  const nlohmann::json j = expansion_json(expansion);
  CHECK(j["params"]["m"] == 1);
  CHECK(j["params"]["p"] == 2);
  CHECK(j["params"]["d"] == 5);
  CHECK(j["n"] == 1);
  CHECK(j["stationary"] == "2/5");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["rate"] == 5);
  CHECK(j["terms"][0]["coeff"] == "3/5");
  CHECK(expansion_from_json(j) == expansion);
}
