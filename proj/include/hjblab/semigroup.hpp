#pragma once

#include <functional>

#include "hjblab/spectral.hpp"

namespace hjb {

struct McConfig {
  long n_samples = 10'000;
  std::uint64_t seed = 0;
  bool antithetic = false;
  int n_threads = 0;   // 0 = resolve from env/hardware
};

struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
};

// Monte Carlo average of f over N(e^{tau Lambda} x, Q_tau).
EstimateWithError semigroup_apply(const OuModel& model, const StateFunctional& f,
                                  double tau, const Vec& x, const McConfig& mc);

// Directional derivative of the semigroup along the noise operator:
// average of f(e^{tau Lambda} x + L g) <w, g> with w = L^{-1} e^{tau Lambda} M xi,
// which estimates the derivative of P_tau[f] at x in direction M xi.
EstimateWithError b_gradient_semigroup(const OuModel& model, const StateFunctional& f,
                                       double tau, const Vec& x, const Vec& xi,
                                       const McConfig& mc);

}  // namespace hjb
