#pragma once

#include "hjp/moment_engine.hpp"

#include <optional>

namespace hjp {

struct CapacityResult {
  double value = 0;  // nats
  long order = 0;    // truncation order N
  double bound = 0;  // bound on the absolute tail error
  bool bound_guaranteed = true;  // false only at rho == 1 (harmonic tail)
  ModelParams params{1, 1, 2};
  double rho = 0;
  std::optional<double> t;  // nullopt: stationary channel
};

// Truncated log series sum_{n=1}^{N} (-rho)^n / n * M_n(t) for
// 0 < rho <= 1. For rho < 1 the tail bound m rho^{N+1} / ((N+1)(1-rho))
// follows from |M_n(t)| <= m; at rho = 1 the reported m/(N+1) bound is
// flagged as not guaranteed.
CapacityResult capacity_series(const ModelParams& params, double t, double rho,
                               long order);

// Same series with the stationary moments.
CapacityResult capacity_stationary(const ModelParams& params, double rho, long order);

}  // namespace hjp
