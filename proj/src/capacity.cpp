#include "hjp/capacity.hpp"

#include <cmath>
#include <stdexcept>

namespace hjp {

namespace {

CapacityResult capacity_impl(const ModelParams& params, std::optional<double> t,
                             double rho, long order) {
  if (!(rho > 0.0) || rho > 1.0)
    throw std::domain_error("capacity: rho must lie in (0, 1]");
  if (order < 1) throw std::domain_error("capacity: truncation order must be >= 1");
  if (t && *t < 0) throw std::domain_error("capacity: negative time");

  // log(1 + rho lambda) = sum_{n>=1} (-1)^{n+1} rho^n lambda^n / n, so the
  // truncated capacity is the alternating series in the moments.
  double value = 0;
  double comp = 0;
  double signed_pow = -1;  // (-1)^{n+1} rho^n
  for (long n = 1; n <= order; ++n) {
    signed_pow *= -rho;
    const double moment = t ? moment_expansion(n, params).eval(*t)
                            : to_double(stationary_moment(n, params));
    const double piece = signed_pow / static_cast<double>(n) * moment;
    const double y = piece - comp;
    const double next = value + y;
    comp = (next - value) - y;
    value = next;
  }

  CapacityResult result;
  result.value = value;
  result.order = order;
  result.params = params;
  result.rho = rho;
  result.t = t;
  const double mdbl = static_cast<double>(params.m);
  if (rho < 1.0) {
    // |M_n| <= m gives the geometric-over-harmonic tail bound.
    result.bound = mdbl * std::pow(rho, static_cast<double>(order + 1)) /
                   (static_cast<double>(order + 1) * (1.0 - rho));
    result.bound_guaranteed = true;
  } else {
    result.bound = mdbl / static_cast<double>(order + 1);
    result.bound_guaranteed = false;
  }
  return result;
}

}  // namespace

CapacityResult capacity_series(const ModelParams& params, double t, double rho,
                               long order) {
  return capacity_impl(params, t, rho, order);
}

CapacityResult capacity_stationary(const ModelParams& params, double rho, long order) {
  return capacity_impl(params, std::nullopt, rho, order);
}

}  // namespace hjp
