#include "hjp/verify.hpp"

#include "hjp/capacity.hpp"
#include "hjp/hyp_series.hpp"
#include "hjp/jacobi_poly.hpp"
#include "hjp/moment_engine.hpp"
#include "hjp/montecarlo.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hjp {

namespace {

ModelParams params_from_rs(long m, long r, long s) {
  return ModelParams(m, m + r, 2 * m + r + s);
}

// Polynomial extrapolation to zero through Neville's scheme.
double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys) {
  std::vector<double> table(ys.begin(), ys.end());
  const std::size_t count = xs.size();
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t i = 0; i + level < count; ++i)
      table[i] = (xs[i + level] * table[i] - xs[i] * table[i + 1]) /
                 (xs[i + level] - xs[i]);
  return table[0];
}

// Criterion: at t = 0 the expansion sums to m exactly.
CheckResult check_identity_t0() {
  long sets = 0;
  for (long m = 1; m <= 5; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long n = 1; n <= 6; ++n) {
          const ModelParams params = params_from_rs(m, r, s);
          const MomentExpansion expansion = moment_expansion(n, params);
          if (expansion.value_at_zero() != Rational(m)) {
            std::ostringstream detail;
            detail << "value at t=0 differs from m at m=" << m << " r=" << r
                   << " s=" << s << " n=" << n;
            return {"identity at t=0", false, detail.str()};
          }
          ++sets;
        }
  std::ostringstream detail;
  detail << "stationary + sum of coefficients = m exactly on " << sets
         << " parameter sets";
  return {"identity at t=0", true, detail.str()};
}

// Criterion: closed-form expansion equals the basis-change oracle exactly.
CheckResult check_oracle_equivalence() {
  long sets = 0;
  for (long m = 1; m <= 4; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long n = 1; n <= 5; ++n) {
          const ModelParams params = params_from_rs(m, r, s);
          const MomentExpansion closed = moment_expansion(n, params);
          const MomentExpansion oracle = moment_by_basis_change(n, params);
          if (closed != oracle) {
            std::ostringstream detail;
            detail << "expansions differ at m=" << m << " r=" << r << " s=" << s
                   << " n=" << n;
            return {"basis-change oracle equivalence", false, detail.str()};
          }
          ++sets;
        }
  std::ostringstream detail;
  detail << "identical rate/coefficient maps on " << sets << " parameter sets";
  return {"basis-change oracle equivalence", true, detail.str()};
}

// Criterion: Hessenberg block determinant, product form vs elimination.
CheckResult check_determinant_lemma() {
  long cases = 0;
  for (long m = 1; m <= 8; ++m)
    for (long r = 0; r <= 3; ++r)
      for (long s = 0; s <= 3; ++s)
        for (long lt = 1; lt < m; ++lt)
          for (long la = lt + 1; la <= m; ++la) {
            const ModelParams params = params_from_rs(m, r, s);
            if (hessenberg_block_det_product(la, lt, params) !=
                hessenberg_block_det_eliminate(la, lt, params)) {
              std::ostringstream detail;
              detail << "determinants differ at m=" << m << " r=" << r << " s=" << s
                     << " len_tau=" << lt << " len_alpha=" << la;
              return {"Hessenberg determinant", false, detail.str()};
            }
            ++cases;
          }
  const ModelParams worked = params_from_rs(3, 0, 0);
  if (hessenberg_block_det_product(3, 1, worked) != Rational(1, 24))
    return {"Hessenberg determinant", false, "worked value at m=3 is not 1/24"};
  std::ostringstream detail;
  detail << "product form equals elimination on " << cases
         << " cases; worked value 1/24 confirmed";
  return {"Hessenberg determinant", true, detail.str()};
}

// Criterion: m = 1 closed form of the first moment.
CheckResult check_m1_closed_form() {
  for (long r = 0; r <= 5; ++r)
    for (long s = 0; s <= 5; ++s) {
      const ModelParams params = params_from_rs(1, r, s);
      const MomentExpansion expansion = moment_expansion(1, params);
      const Rational stationary_expected(r + 1, r + s + 2);
      const Rational coeff_expected(s + 1, r + s + 2);
      const bool ok = expansion.stationary == stationary_expected &&
                      expansion.terms.size() == 1 &&
                      expansion.terms[0].rate == r + s + 2 &&
                      expansion.terms[0].coeff == coeff_expected;
      if (!ok) {
        std::ostringstream detail;
        detail << "m=1 expansion differs from the closed form at r=" << r << " s=" << s;
        return {"m=1 closed form", false, detail.str()};
      }
    }
  const MomentExpansion concrete = moment_expansion(1, ModelParams(1, 2, 5));
  if (concrete.stationary != Rational(2, 5) || concrete.terms.size() != 1 ||
      concrete.terms[0].rate != 5 || concrete.terms[0].coeff != Rational(3, 5))
    return {"m=1 closed form", false, "(m=1,p=2,d=5) is not 2/5 + (3/5)e^{-5t}"};
  return {"m=1 closed form", true,
          "expansion equals [(r+1)/(r+s+2); (r+s+2, (s+1)/(r+s+2))] for r,s <= 5"};
}

// Criterion: reversed-summation route equals the direct expansion, and
// every constructed series is balanced.
CheckResult check_4f3_route() {
  long sets = 0;
  long series_count = 0;
  for (long n = 1; n <= 4; ++n)
    for (long m = n; m <= 6; ++m)
      for (long r = 0; r <= 2; ++r)
        for (long s = 0; s <= 2; ++s) {
          const ModelParams params = params_from_rs(m, r, s);
          if (moment_via_4f3(n, params) != moment_expansion(n, params)) {
            std::ostringstream detail;
            detail << "routes differ at n=" << n << " m=" << m << " r=" << r
                   << " s=" << s;
            return {"4F3 route equivalence", false, detail.str()};
          }
          for (long h = 1; h <= n; ++h)
            for (long j = 0; j <= h - 1; ++j) {
              const long d = params.d;
              const long p = params.p;
              const std::array<long, 4> upper{-(n - h), m + h - j, p + h - j,
                                              d - n + h - 2 * j - 1};
              const std::array<long, 3> lower{m - n + h - j, p - n + h - j,
                                              d + 2 * h - 2 * j};
              long balance = 1;
              for (long a : upper) balance += a;
              long lower_sum = 0;
              for (long b : lower) lower_sum += b;
              if (balance != lower_sum) {
                std::ostringstream detail;
                detail << "unbalanced series at n=" << n << " m=" << m << " h=" << h
                       << " j=" << j;
                return {"4F3 route equivalence", false, detail.str()};
              }
              ++series_count;
            }
          ++sets;
        }
  std::ostringstream detail;
  detail << "exact route equality on " << sets << " parameter sets; " << series_count
         << " series balanced";
  return {"4F3 route equivalence", true, detail.str()};
}

// Criterion: stationary moments against tensor Gauss-Jacobi quadrature;
// m = 1 values are Beta moments exactly.
CheckResult check_stationary_quadrature() {
  constexpr double kRelTol = 1e-8;
  long cases = 0;
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long n = 1; n <= 4; ++n) {
          const ModelParams params = params_from_rs(m, r, s);
          const double exact = to_double(stationary_moment(n, params));
          const double quad = stationary_moment_quadrature(n, params);
          if (std::abs(exact - quad) > kRelTol * std::abs(exact)) {
            std::ostringstream detail;
            detail << "quadrature mismatch at m=" << m << " r=" << r << " s=" << s
                   << " n=" << n << " (exact " << exact << ", quadrature " << quad
                   << ")";
            return {"stationary quadrature", false, detail.str()};
          }
          if (m == 1) {
            const Rational beta_moment =
                pochhammer(r + 1, n) / pochhammer(r + s + 2, n);
            if (stationary_moment(n, params) != beta_moment) {
              std::ostringstream detail;
              detail << "m=1 stationary moment is not the Beta moment at r=" << r
                     << " s=" << s << " n=" << n;
              return {"stationary quadrature", false, detail.str()};
            }
          }
          ++cases;
        }
  std::ostringstream detail;
  detail << "relative agreement within 1e-8 on " << cases
         << " cases; m=1 Beta moments exact";
  return {"stationary quadrature", true, detail.str()};
}

// Criterion: special value at (1,...,1) against the extrapolated
// determinantal evaluation along x_i = 1 - i*eps.
CheckResult check_special_value() {
  constexpr double kRelTol = 1e-6;
  const std::vector<double> eps_grid{0.04, 0.032, 0.024, 0.016, 0.012, 0.008};
  long cases = 0;
  for (long m = 1; m <= 3; ++m)
    for (long r = 0; r <= 2; ++r)
      for (long s = 0; s <= 2; ++s)
        for (long weight = 1; weight <= 4; ++weight)
          for (const Hook& tau : hooks_of_weight(weight, m)) {
            const JacobiParams jp{r, s};
            const double exact = to_double(sym_jacobi_at_ones(tau, jp, m));
            std::vector<double> values(eps_grid.size());
            for (std::size_t e = 0; e < eps_grid.size(); ++e) {
              std::vector<double> x(static_cast<std::size_t>(m));
              for (long i = 0; i < m; ++i)
                x[static_cast<std::size_t>(i)] =
                    1.0 - static_cast<double>(i + 1) * eps_grid[e];
              values[e] = sym_jacobi_eval(tau, jp, m, x);
            }
            const double extrapolated = extrapolate_to_zero(eps_grid, values);
            if (std::abs(extrapolated - exact) > kRelTol * std::abs(exact)) {
              std::ostringstream detail;
              detail << "special value mismatch at m=" << m << " r=" << r
                     << " s=" << s << " tau=(" << tau.head << ",1^" << tau.leg
                     << "): exact " << exact << ", extrapolated " << extrapolated;
              return {"special value consistency", false, detail.str()};
            }
            ++cases;
          }
  std::ostringstream detail;
  detail << "extrapolated determinantal evaluation within 1e-6 on " << cases
         << " hook/parameter cases";
  return {"special value consistency", true, detail.str()};
}

// Criteria: Monte Carlo moment agreement after clock calibration, and the
// capacity cross-checks. One shared simulation drives both.
std::pair<CheckResult, CheckResult> check_monte_carlo(std::ostream* log) {
  const ModelParams params(2, 3, 6);
  constexpr double kDt = 1e-3;
  constexpr long kPaths = 20000;
  constexpr long kCalibrationPaths = 8000;
  constexpr double kRho = 0.5;
  constexpr long kOrder = 40;

  const std::vector<double> calibration_grid{0.1, 0.2, 0.3, 0.4, 0.5};
  const double clock =
      calibrate_clock(params, calibration_grid, kCalibrationPaths, kDt, 20240805u);
  if (log)
    *log << "  calibrated clock " << clock << " (" << kCalibrationPaths
         << " paths, dt " << kDt << ")\n";

  ObservableRequest request;
  request.times = {0.25, 1.0};
  request.moment_orders = {1, 2};
  request.rhos = {kRho};
  const ObservableEstimates estimates =
      simulate_observables(params, request, kDt, kPaths, 987654321u, clock);

  bool moments_pass = true;
  std::ostringstream moment_detail;
  moment_detail.precision(3);
  for (std::size_t ti = 0; ti < request.times.size(); ++ti) {
    for (std::size_t oi = 0; oi < request.moment_orders.size(); ++oi) {
      const long n = request.moment_orders[oi];
      const double t = request.times[ti];
      const double exact = moment_expansion(n, params).eval(t);
      const MCEstimate& mc = estimates.moments[ti][oi];
      const double tolerance = 3.0 * mc.std_error + 10.0 * kDt;
      const double gap = std::abs(exact - mc.mean);
      if (gap > tolerance) moments_pass = false;
      moment_detail << " n=" << n << ",t=" << t << ": |gap| " << gap << " vs tol "
                    << tolerance << ";";
    }
  }
  CheckResult moments{"Monte Carlo moments", moments_pass,
                      "20000 paths, dt 1e-3, (m,p,d)=(2,3,6):" + moment_detail.str()};

  bool capacity_pass = true;
  std::ostringstream capacity_detail;
  capacity_detail.precision(3);

  const CapacityResult series = capacity_series(params, 1.0, kRho, kOrder);
  const MCEstimate& mc_capacity = estimates.capacities[1][0];
  const double capacity_tol = 3.0 * mc_capacity.std_error + series.bound + 10.0 * kDt;
  const double capacity_gap = std::abs(series.value - mc_capacity.mean);
  if (capacity_gap > capacity_tol) capacity_pass = false;
  capacity_detail << " MC vs series at t=1: |gap| " << capacity_gap << " vs tol "
                  << capacity_tol << ";";

  const CapacityResult at_zero = capacity_series(params, 0.0, kRho, kOrder);
  const double log_gap =
      std::abs(at_zero.value - static_cast<double>(params.m) * std::log1p(kRho));
  if (log_gap > at_zero.bound) capacity_pass = false;
  capacity_detail << " t=0 vs m log(1+rho): |gap| " << log_gap << " vs bound "
                  << at_zero.bound << ";";

  const CapacityResult uniform =
      capacity_stationary(ModelParams(1, 1, 2), kRho, kOrder);
  const double uniform_exact = 3.0 * std::log(1.5) - 1.0;
  const double uniform_gap = std::abs(uniform.value - uniform_exact);
  if (uniform_gap > uniform.bound) capacity_pass = false;
  capacity_detail << " m=1 uniform stationary: |gap| " << uniform_gap << " vs bound "
                  << uniform.bound;

  CheckResult capacity{"capacity cross-check", capacity_pass, capacity_detail.str()};
  return {std::move(moments), std::move(capacity)};
}

void append(std::vector<CheckResult>& results, CheckResult result, std::ostream* log) {
  if (log)
    *log << (result.pass ? "PASS" : "FAIL") << " " << result.name << ": "
         << result.detail << "\n";
  results.push_back(std::move(result));
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::ostream* log) {
  std::vector<CheckResult> results;
  const bool all = suite == "all";
  if (!all && suite != "identity" && suite != "oracle" && suite != "determinant" &&
      suite != "hyp" && suite != "quadrature" && suite != "mc")
    throw std::domain_error("run_suite: unknown suite '" + suite + "'");

  if (all || suite == "identity") {
    append(results, check_identity_t0(), log);
    append(results, check_m1_closed_form(), log);
  }
  if (all || suite == "oracle") {
    append(results, check_oracle_equivalence(), log);
    append(results, check_special_value(), log);
  }
  if (all || suite == "determinant") append(results, check_determinant_lemma(), log);
  if (all || suite == "hyp") append(results, check_4f3_route(), log);
  if (all || suite == "quadrature") append(results, check_stationary_quadrature(), log);
  if (all || suite == "mc") {
    auto [moments, capacity] = check_monte_carlo(log);
    append(results, std::move(moments), log);
    append(results, std::move(capacity), log);
  }
  return results;
}

}  // namespace hjp
