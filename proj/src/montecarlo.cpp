#include "hjp/montecarlo.hpp"

#include "hjp/moment_engine.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace hjp {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr double kEigenvalueTol = 1e-10;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

long steps_for(double t, double dt) { return std::llround(t / dt); }

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) {
  key_ = mix64(seed + kGolden * (mix64(stream + kGolden) | 1));
}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double CounterRng::next_unit() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double radius = std::sqrt(-2.0 * std::log(next_unit()));
  const double angle = 2.0 * std::numbers::pi * next_unit();
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

SimConfig::SimConfig(const ModelParams& params_, double t_, double dt_, long paths_,
                     std::uint64_t seed_, double clock_)
    : params(params_), t(t_), dt(dt_), paths(paths_), seed(seed_), clock(clock_) {
  if (!(t > 0)) throw std::domain_error("SimConfig: t must be positive");
  if (!(dt > 0) || dt > t) throw std::domain_error("SimConfig: requires 0 < dt <= t");
  if (paths < 2) throw std::domain_error("SimConfig: need at least two paths");
  if (!(clock > 0)) throw std::domain_error("SimConfig: clock must be positive");
}

Eigen::MatrixXcd gue_hermitian(int d, CounterRng& rng) {
  Eigen::MatrixXcd g(d, d);
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (int i = 0; i < d; ++i) {
    g(i, i) = rng.next_normal();
    for (int j = i + 1; j < d; ++j) {
      const double re = rng.next_normal() * inv_sqrt2;
      const double im = rng.next_normal() * inv_sqrt2;
      g(i, j) = std::complex<double>(re, im);
      g(j, i) = std::complex<double>(re, -im);
    }
  }
  return g;
}

void apply_unitary_increment(Eigen::MatrixXcd& y, const Eigen::MatrixXcd& g,
                             double sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g);
  const Eigen::MatrixXcd& basis = solver.eigenvectors();
  Eigen::VectorXcd phases(g.rows());
  for (Eigen::Index k = 0; k < g.rows(); ++k) {
    const double theta = sigma * solver.eigenvalues()[k];
    phases[k] = std::complex<double>(std::cos(theta), std::sin(theta));
  }
  y *= basis * phases.asDiagonal() * basis.adjoint();
}

Eigen::MatrixXcd sample_unitary_bm(int d, double t, double dt, double clock,
                                   CounterRng& rng) {
  if (d < 2) throw std::domain_error("sample_unitary_bm: d must be >= 2");
  if (t < 0) throw std::domain_error("sample_unitary_bm: negative time");
  if (!(dt > 0)) throw std::domain_error("sample_unitary_bm: dt must be positive");
  if (!(clock > 0)) throw std::domain_error("sample_unitary_bm: clock must be positive");

  Eigen::MatrixXcd y = Eigen::MatrixXcd::Identity(d, d);
  const double sigma = std::sqrt(clock * dt);
  const long steps = steps_for(t, dt);
  for (long step = 0; step < steps; ++step)
    apply_unitary_increment(y, gue_hermitian(d, rng), sigma);
  return y;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double sum = 0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

ObservableEstimates simulate_observables(const ModelParams& params,
                                         const ObservableRequest& request,
                                         double dt, long paths, std::uint64_t seed,
                                         double clock) {
  if (request.times.empty())
    throw std::domain_error("simulate_observables: no observation times");
  if (!std::is_sorted(request.times.begin(), request.times.end()))
    throw std::domain_error("simulate_observables: times must be ascending");
  for (double t : request.times)
    if (t < 0) throw std::domain_error("simulate_observables: negative time");
  for (long order : request.moment_orders)
    if (order < 1) throw std::domain_error("simulate_observables: order must be >= 1");
  for (double rho : request.rhos)
    if (!(rho > 0)) throw std::domain_error("simulate_observables: rho must be positive");
  if (!(dt > 0)) throw std::domain_error("simulate_observables: dt must be positive");
  if (paths < 2) throw std::domain_error("simulate_observables: need at least two paths");
  if (!(clock > 0)) throw std::domain_error("simulate_observables: clock must be positive");

  const long m = params.m;
  const long p = params.p;
  const int d = static_cast<int>(params.d);
  const double sigma = std::sqrt(clock * dt);
  const std::size_t n_times = request.times.size();
  const std::size_t n_orders = request.moment_orders.size();
  const std::size_t n_rhos = request.rhos.size();
  const std::size_t per_time = n_orders + n_rhos;

  std::vector<long> step_targets(n_times);
  for (std::size_t i = 0; i < n_times; ++i)
    step_targets[i] = steps_for(request.times[i], dt);

  // One value per (path, observable); the reduction order is fixed, so the
  // estimates do not depend on the thread count.
  std::vector<std::vector<double>> samples(
      n_times * per_time, std::vector<double>(static_cast<std::size_t>(paths)));

  auto walk_paths = [&](long first, long last, std::exception_ptr& error) {
    try {
      for (long path = first; path < last; ++path) {
        CounterRng rng(seed, static_cast<std::uint64_t>(path));
        Eigen::MatrixXcd y = Eigen::MatrixXcd::Identity(d, d);
        long step = 0;
        for (std::size_t ti = 0; ti < n_times; ++ti) {
          for (; step < step_targets[ti]; ++step)
            apply_unitary_increment(y, gue_hermitian(d, rng), sigma);

          const Eigen::MatrixXcd corner = y.topLeftCorner(m, p);
          const Eigen::MatrixXcd j_matrix = corner * corner.adjoint();
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(j_matrix,
                                                                 Eigen::EigenvaluesOnly);
          Eigen::VectorXd eigenvalues = solver.eigenvalues();
          for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
            const double lambda = eigenvalues[k];
            if (lambda < -kEigenvalueTol || lambda > 1.0 + kEigenvalueTol)
              throw std::runtime_error(
                  "simulate_observables: simulation fault, eigenvalue outside [0,1]");
            eigenvalues[k] = std::clamp(lambda, 0.0, 1.0);
          }

          for (std::size_t oi = 0; oi < n_orders; ++oi) {
            double trace_power = 0;
            for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
              trace_power +=
                  std::pow(eigenvalues[k], static_cast<double>(request.moment_orders[oi]));
            samples[ti * per_time + oi][static_cast<std::size_t>(path)] = trace_power;
          }
          for (std::size_t ri = 0; ri < n_rhos; ++ri) {
            double log_det = 0;
            for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
              log_det += std::log1p(request.rhos[ri] * eigenvalues[k]);
            samples[ti * per_time + n_orders + ri][static_cast<std::size_t>(path)] =
                log_det;
          }
        }
      }
    } catch (...) {
      error = std::current_exception();
    }
  };

  const long worker_count = std::min<long>(
      paths, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(worker_count));
  const long chunk = (paths + worker_count - 1) / worker_count;
  for (long w = 0; w < worker_count; ++w) {
    const long first = w * chunk;
    const long last = std::min(paths, first + chunk);
    if (first >= last) break;
    workers.emplace_back(walk_paths, first, last,
                         std::ref(errors[static_cast<std::size_t>(w)]));
  }
  for (auto& worker : workers) worker.join();
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);

  auto reduce = [&](const std::vector<double>& values) {
    MCEstimate estimate;
    estimate.paths = paths;
    estimate.dt = dt;
    estimate.mean = pairwise_sum(values) / static_cast<double>(paths);
    std::vector<double> squared(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double centered = values[i] - estimate.mean;
      squared[i] = centered * centered;
    }
    const double variance = pairwise_sum(squared) / static_cast<double>(paths - 1);
    estimate.std_error = std::sqrt(variance / static_cast<double>(paths));
    return estimate;
  };

  ObservableEstimates estimates;
  estimates.moments.resize(n_times, std::vector<MCEstimate>(n_orders));
  estimates.capacities.resize(n_times, std::vector<MCEstimate>(n_rhos));
  for (std::size_t ti = 0; ti < n_times; ++ti) {
    for (std::size_t oi = 0; oi < n_orders; ++oi)
      estimates.moments[ti][oi] = reduce(samples[ti * per_time + oi]);
    for (std::size_t ri = 0; ri < n_rhos; ++ri)
      estimates.capacities[ti][ri] = reduce(samples[ti * per_time + n_orders + ri]);
  }
  return estimates;
}

MCEstimate simulate_moment(long n, const SimConfig& config) {
  if (n < 1) throw std::domain_error("simulate_moment: order must be >= 1");
  ObservableRequest request;
  request.times = {config.t};
  request.moment_orders = {n};
  return simulate_observables(config.params, request, config.dt, config.paths,
                              config.seed, config.clock)
      .moments[0][0];
}

MCEstimate simulate_capacity(const SimConfig& config, double rho) {
  if (!(rho > 0)) throw std::domain_error("simulate_capacity: rho must be positive");
  ObservableRequest request;
  request.times = {config.t};
  request.rhos = {rho};
  return simulate_observables(config.params, request, config.dt, config.paths,
                              config.seed, config.clock)
      .capacities[0][0];
}

double fit_clock(std::span<const double> t_grid,
                 std::span<const double> m1_estimates, double m1_stationary,
                 long d) {
  if (t_grid.size() < 3)
    throw std::domain_error("fit_clock: need at least three grid points");
  if (t_grid.size() != m1_estimates.size())
    throw std::domain_error("fit_clock: grid and estimate sizes differ");

  std::vector<double> logs(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double diff = m1_estimates[i] - m1_stationary;
    if (!(diff > 0))
      throw std::runtime_error(
          "fit_clock: calibration failure, estimate at or below the stationary "
          "level (noise-dominated); increase the path count");
    logs[i] = std::log(diff);
  }

  double t_mean = 0;
  double log_mean = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    t_mean += t_grid[i];
    log_mean += logs[i];
  }
  t_mean /= static_cast<double>(t_grid.size());
  log_mean /= static_cast<double>(t_grid.size());

  double cross = 0;
  double spread = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    cross += (t_grid[i] - t_mean) * (logs[i] - log_mean);
    spread += (t_grid[i] - t_mean) * (t_grid[i] - t_mean);
  }
  if (spread == 0) throw std::domain_error("fit_clock: degenerate time grid");

  const double clock = -cross / spread / static_cast<double>(d);
  if (!(clock > 0))
    throw std::runtime_error(
        "fit_clock: calibration failure, fitted clock is not positive; increase "
        "the path count");
  return clock;
}

double calibrate_clock(const ModelParams& params, std::span<const double> t_grid,
                       long paths, double dt, std::uint64_t seed) {
  if (t_grid.size() < 3)
    throw std::domain_error("calibrate_clock: need at least three grid points");
  ObservableRequest request;
  request.times.assign(t_grid.begin(), t_grid.end());
  request.moment_orders = {1};
  const ObservableEstimates estimates =
      simulate_observables(params, request, dt, paths, seed, 1.0);

  std::vector<double> means(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) means[i] = estimates.moments[i][0].mean;
  const double m1_stationary = to_double(stationary_moment(1, params));
  return fit_clock(t_grid, means, m1_stationary, params.d);
}

}  // namespace hjp
