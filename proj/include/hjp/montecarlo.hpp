#pragma once

#include "hjp/partitions.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace hjp {

// Counter-based stream: output i of stream s is a bijective mix of
// (seed, s, i), so paths can be generated independently and in any order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_unit();    // uniform in (0, 1]
  double next_normal();  // standard normal (Box-Muller)

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double cached_ = 0;
  bool has_cached_ = false;
};

struct SimConfig {
  ModelParams params{1, 1, 2};
  double t = 1.0;
  double dt = 1e-3;
  long paths = 2;
  std::uint64_t seed = 0;
  double clock = 1.0;  // calibration factor scaling simulated time

  SimConfig(const ModelParams& params_, double t_, double dt_, long paths_,
            std::uint64_t seed_, double clock_ = 1.0);
};

struct MCEstimate {
  double mean = 0;
  double std_error = 0;
  long paths = 0;
  double dt = 0;
};

// Hermitian matrix with independent entries: real N(0,1) diagonal,
// complex off-diagonal with E|G_jk|^2 = 1.
Eigen::MatrixXcd gue_hermitian(int d, CounterRng& rng);

// y <- y * exp(i sigma g) through the eigendecomposition of g; the step
// is unitary up to rounding.
void apply_unitary_increment(Eigen::MatrixXcd& y, const Eigen::MatrixXcd& g,
                             double sigma);

// Brownian motion on U(d) started at the identity, approximated by a
// product of round(t/dt) exact exponential increments of size
// sqrt(clock * dt).
Eigen::MatrixXcd sample_unitary_bm(int d, double t, double dt, double clock,
                                   CounterRng& rng);

// Mean and standard error of tr(J_t^n) over paths, where J = X X* and X is
// the top-left m x p corner of the sampled unitary path. Eigenvalues
// outside [-1e-10, 1 + 1e-10] raise a simulation fault; small excursions
// are clipped to [0, 1].
MCEstimate simulate_moment(long n, const SimConfig& config);

// Mean and standard error of log det(Id + rho J_t); any rho > 0.
MCEstimate simulate_capacity(const SimConfig& config, double rho);

// One pass over shared paths evaluating several observables at several
// times; all public estimators are thin wrappers over this.
struct ObservableRequest {
  std::vector<double> times;        // ascending, >= 0
  std::vector<long> moment_orders;  // each >= 1
  std::vector<double> rhos;         // each > 0
};
struct ObservableEstimates {
  std::vector<std::vector<MCEstimate>> moments;     // [time][order index]
  std::vector<std::vector<MCEstimate>> capacities;  // [time][rho index]
};
ObservableEstimates simulate_observables(const ModelParams& params,
                                         const ObservableRequest& request,
                                         double dt, long paths, std::uint64_t seed,
                                         double clock);

// Least-squares fit of log(M1_hat(t) - M1_inf) against -d * clock * t.
// Fails if any difference is nonpositive (noise-dominated data).
double fit_clock(std::span<const double> t_grid,
                 std::span<const double> m1_estimates, double m1_stationary,
                 long d);

// Runs the simulation on the grid and fits the clock; t_grid needs at
// least three points.
double calibrate_clock(const ModelParams& params, std::span<const double> t_grid,
                       long paths, double dt, std::uint64_t seed);

double pairwise_sum(std::span<const double> values);

}  // namespace hjp
