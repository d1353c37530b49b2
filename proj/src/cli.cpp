#include "hjp/cli.hpp"

#include "hjp/capacity.hpp"
#include "hjp/moment_engine.hpp"
#include "hjp/montecarlo.hpp"
#include "hjp/serialize.hpp"
#include "hjp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hjp::cli {

namespace {

std::vector<double> parse_times(const std::string& csv) {
  std::vector<double> times;
  std::stringstream stream(csv);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    if (piece.empty()) continue;
    std::size_t used = 0;
    const double value = std::stod(piece, &used);
    if (used != piece.size())
      throw std::domain_error("malformed time value '" + piece + "'");
    if (value < 0) throw std::domain_error("times must be nonnegative");
    times.push_back(value);
  }
  if (times.empty()) throw std::domain_error("no time values given");
  return times;
}

void print_expansion_text(std::ostream& out, const MomentExpansion& expansion) {
  out << "moment order " << expansion.order << ", params m=" << expansion.params.m
      << " p=" << expansion.params.p << " d=" << expansion.params.d << "\n";
  out << "stationary: " << to_fraction(expansion.stationary) << "\n";
  for (const ExpTerm& term : expansion.terms)
    out << "rate " << term.rate << ": " << to_fraction(term.coeff) << "\n";
}

int run_moments(long m, long p, long d, long n, const std::string& times_csv,
                const std::string& format, std::ostream& out) {
  const ModelParams params(m, p, d);
  const MomentExpansion expansion = moment_expansion(n, params);
  std::vector<std::pair<double, double>> values;
  if (!times_csv.empty())
    for (double t : parse_times(times_csv)) values.emplace_back(t, expansion.eval(t));

  if (format == "json") {
    nlohmann::json j = expansion_json(expansion);
    if (!values.empty()) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [t, value] : values) rows.push_back({{"t", t}, {"value", value}});
      j["values"] = std::move(rows);
    }
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    if (values.empty()) {
      expansion_csv(out, expansion);
    } else {
      sweep_csv(out, values);
    }
  } else {
    print_expansion_text(out, expansion);
    for (const auto& [t, value] : values) out << "t=" << t << ": " << value << "\n";
  }
  return 0;
}

int run_stationary(long m, long p, long d, long n, const std::string& format,
                   std::ostream& out) {
  const ModelParams params(m, p, d);
  const Rational value = stationary_moment(n, params);
  if (format == "json") {
    nlohmann::json j{{"params", {{"m", m}, {"p", p}, {"d", d}}},
                     {"n", n},
                     {"stationary", to_fraction(value)}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "rate,coeff_num,coeff_den\n";
    out << 0 << "," << numerator(value) << "," << denominator(value) << "\n";
  } else {
    out << "stationary moment of order " << n << ": " << to_fraction(value) << " ~ "
        << to_double(value) << "\n";
  }
  return 0;
}

int run_capacity(long m, long p, long d, bool stationary, double t, double rho,
                 long terms, const std::string& format, std::ostream& out) {
  const ModelParams params(m, p, d);
  const CapacityResult result = stationary
                                    ? capacity_stationary(params, rho, terms)
                                    : capacity_series(params, t, rho, terms);
  if (format == "json") {
    out << capacity_json(result).dump(2) << "\n";
  } else if (format == "csv") {
    capacity_csv(out, result);
  } else {
    out << "capacity ";
    if (result.t) {
      out << "at t=" << *result.t;
    } else {
      out << "of the stationary channel";
    }
    out << ", rho=" << rho << ", N=" << terms << ": " << result.value << " nats"
        << " (tail bound " << result.bound
        << (result.bound_guaranteed ? "" : ", not guaranteed at rho=1") << ")\n";
  }
  return 0;
}

int run_mc(long m, long p, long d, long n, double t, long paths, double dt,
           std::uint64_t seed, double clock, const std::string& format,
           std::ostream& out) {
  const SimConfig config(ModelParams(m, p, d), t, dt, paths, seed, clock);
  const MCEstimate estimate = simulate_moment(n, config);
  if (format == "json") {
    out << estimate_json(estimate, seed, clock).dump(2) << "\n";
  } else if (format == "csv") {
    out << "estimate,stderr,paths,dt,clock,seed\n";
    out << estimate.mean << "," << estimate.std_error << "," << estimate.paths << ","
        << estimate.dt << "," << clock << "," << seed << "\n";
  } else {
    out << "MC estimate of moment " << n << " at t=" << t << ": " << estimate.mean
        << " +/- " << estimate.std_error << " (" << paths << " paths, dt " << dt
        << ", clock " << clock << ")\n";
  }
  return 0;
}

int run_calibrate(long m, long p, long d, long paths, double dt, std::uint64_t seed,
                  const std::string& times_csv, const std::string& format,
                  std::ostream& out) {
  const ModelParams params(m, p, d);
  std::vector<double> grid =
      times_csv.empty() ? std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}
                        : parse_times(times_csv);
  std::sort(grid.begin(), grid.end());
  const double clock = calibrate_clock(params, grid, paths, dt, seed);
  if (format == "json") {
    nlohmann::json j{{"clock", clock}, {"paths", paths}, {"dt", dt}, {"seed", seed}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "clock,paths,dt,seed\n";
    out << clock << "," << paths << "," << dt << "," << seed << "\n";
  } else {
    out << "calibrated clock: " << clock << " (" << paths << " paths, dt " << dt
        << ")\n";
  }
  return 0;
}

int run_verify(const std::string& suite, std::ostream& out) {
  const std::vector<CheckResult> results = run_suite(suite, &out);
  bool all_pass = true;
  for (const CheckResult& result : results) all_pass = all_pass && result.pass;
  out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"moments and MIMO capacity of the Hermitian Jacobi process"};
  app.require_subcommand(1);

  long m = 1, p = 1, d = 2, n = 1;
  std::string times_csv;
  std::string format = "text";
  double t = 0, rho = 0.5, dt = 1e-3, clock = 1.0;
  bool stationary_flag = false;
  long terms = 40, paths = 1000;
  std::uint64_t seed = 0;
  std::string suite = "all";

  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "matrix size")->required();
    cmd->add_option("--p", p, "projection rank p")->required();
    cmd->add_option("--d", d, "unitary group dimension")->required();
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* moments = app.add_subcommand("moments", "exact moment expansion");
  add_params(moments);
  moments->add_option("--n", n, "moment order")->required();
  moments->add_option("--times", times_csv, "comma-separated evaluation times");
  add_format(moments);

  CLI::App* stationary = app.add_subcommand("stationary", "exact stationary moment");
  add_params(stationary);
  stationary->add_option("--n", n, "moment order")->required();
  add_format(stationary);

  CLI::App* capacity = app.add_subcommand("capacity", "truncated capacity series");
  add_params(capacity);
  auto* t_opt = capacity->add_option("--t", t, "time");
  auto* stat_opt = capacity->add_flag("--stationary", stationary_flag,
                                      "use the stationary moments");
  t_opt->excludes(stat_opt);
  capacity->add_option("--rho", rho, "power per antenna ratio")->required();
  capacity->add_option("--terms", terms, "truncation order N");
  add_format(capacity);

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo moment estimate");
  add_params(mc);
  mc->add_option("--n", n, "moment order")->required();
  mc->add_option("--t", t, "time")->required();
  mc->add_option("--paths", paths, "path count")->required();
  mc->add_option("--dt", dt, "step size")->required();
  mc->add_option("--seed", seed, "RNG seed")->required();
  mc->add_option("--clock", clock, "calibration clock factor");
  add_format(mc);

  CLI::App* calibrate = app.add_subcommand("calibrate", "fit the simulation clock");
  add_params(calibrate);
  calibrate->add_option("--paths", paths, "path count")->required();
  calibrate->add_option("--dt", dt, "step size")->required();
  calibrate->add_option("--seed", seed, "RNG seed")->required();
  calibrate->add_option("--times", times_csv, "comma-separated calibration grid");
  add_format(calibrate);

  CLI::App* verify = app.add_subcommand("verify", "run named check suites");
  verify->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(
          {"identity", "oracle", "determinant", "hyp", "quadrature", "mc", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& error) {
    err << error.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (moments->parsed()) return run_moments(m, p, d, n, times_csv, format, out);
    if (stationary->parsed()) return run_stationary(m, p, d, n, format, out);
    if (capacity->parsed()) {
      if (!stationary_flag && t_opt->count() == 0)
        throw std::domain_error("capacity: give either --t or --stationary");
      return run_capacity(m, p, d, stationary_flag, t, rho, terms, format, out);
    }
    if (mc->parsed()) return run_mc(m, p, d, n, t, paths, dt, seed, clock, format, out);
    if (calibrate->parsed())
      return run_calibrate(m, p, d, paths, dt, seed, times_csv, format, out);
    if (verify->parsed()) return run_verify(suite, out);
  } catch (const std::domain_error& error) {
    err << "domain error: " << error.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& error) {
    err << "invalid argument: " << error.what() << "\n";
    return 2;
  } catch (const std::runtime_error& error) {
    err << "run failed: " << error.what() << "\n";
    return 1;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace hjp::cli
