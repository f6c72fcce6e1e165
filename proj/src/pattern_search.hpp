#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

// Compass/pattern search: robust derivative-free local minimization for
// Lipschitz objectives. Deterministic given the start point.

namespace hjb::detail {

using Vec = Eigen::VectorXd;

struct PatternResult {
  Vec x;
  double value = 0.0;
  double last_step = 0.0;
  int probes = 0;
  bool converged = false;
};

// project must map any candidate into the feasible set.
inline PatternResult pattern_minimize(const std::function<double(const Vec&)>& f,
                                      Vec start, double step0, double step_tol,
                                      int max_probes,
                                      const std::function<void(Vec&)>& project) {
  const int d = static_cast<int>(start.size());
  PatternResult res;
  project(start);
  res.x = start;
  res.value = f(start);
  res.probes = 1;
  double step = step0;
  Vec trial = start;
  while (step > step_tol && res.probes < max_probes) {
    bool improved = false;
    for (int i = 0; i < d && res.probes < max_probes; ++i) {
      for (double sgn : {1.0, -1.0}) {
        trial = res.x;
        trial(i) += sgn * step;
        project(trial);
        const double v = f(trial);
        ++res.probes;
        if (v < res.value) {
          res.value = v;
          res.x = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  res.last_step = step;
  res.converged = step <= step_tol;
  return res;
}

// Deterministic start pattern: center, then +/- (radius/2) along coordinates.
inline std::vector<Vec> start_pattern(const Vec& center, double radius, int count) {
  std::vector<Vec> starts;
  starts.reserve(count);
  starts.push_back(center);
  const int d = static_cast<int>(center.size());
  int i = 0;
  double r = radius * 0.5;
  while (static_cast<int>(starts.size()) < count) {
    for (double sgn : {1.0, -1.0}) {
      if (static_cast<int>(starts.size()) >= count) break;
      Vec s = center;
      s(i % d) += sgn * r;
      starts.push_back(s);
    }
    ++i;
    if (i % d == 0) r *= 0.5;
    if (r < 1e-300) break;
  }
  return starts;
}

}  // namespace hjb::detail
