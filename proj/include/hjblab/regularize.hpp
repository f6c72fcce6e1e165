#pragma once

#include "hjblab/cost.hpp"
#include "hjblab/semigroup.hpp"

namespace hjb {

struct EnvelopeOptions {
  int outer_starts = 8;
  int inner_starts = 4;
  int max_iters = 10'000;       // per optimization, total probe budget
  double step_tol = 1e-8;
};

class OptimizerNonConvergence : public std::runtime_error {
 public:
  OptimizerNonConvergence(double best, double gap_estimate, const std::string& what)
      : std::runtime_error(what), best_value(best), gap(gap_estimate) {}
  double best_value;
  double gap;
};

struct EnvelopeResult {
  double value = 0.0;
  double gap = 0.0;      // optimizer resolution estimate
};

// Two-stage envelope sup_z { inf_y [f(y) + n|z-y|^2/2] - n|x-z|^2 }.
// The inner minimizer lies within 2 lip/n of z and the outer maximizer within
// lip/n of x, so both searches run on balls of those radii.
EnvelopeResult infsup_convolve_detail(const LipschitzFn& f, int n, const Vec& x,
                                      const EnvelopeOptions& opts = {});
double infsup_convolve(const LipschitzFn& f, int n, const Vec& x,
                       const EnvelopeOptions& opts = {});

// Mollified projection onto the leading n modes: the average of
// f(sum_{i<n} y_i e_i) with y ~ N(Q_n x, (1/n)^2 I_n).
EstimateWithError smooth_project(const StateFunctional& f, int n_modes_total,
                                 int n, const Vec& x, const McConfig& mc);

// Deterministic mollified cost built from one fixed set of normal draws shared
// across evaluation points; n <= the cost's mode count.
CostSpec make_mollified_cost(const CostSpec& f, int n_modes_total, int n,
                             int n_samples, std::uint64_t seed);

}  // namespace hjb
