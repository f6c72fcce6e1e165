#include "hjblab/semigroup.hpp"

#include <atomic>
#include <cmath>

#include "hjblab/parallel.hpp"
#include "hjblab/rng.hpp"

namespace hjb {

namespace {

constexpr std::size_t kChunk = 2048;

void check_mc(const McConfig& mc) {
  if (mc.n_samples < 2) throw std::invalid_argument("McConfig: n_samples must be >= 2");
  if (mc.antithetic && mc.n_samples % 2 != 0) {
    throw std::invalid_argument("McConfig: antithetic sampling needs an even n_samples");
  }
}

// Evaluates sample_value(y_i, g_i) for each sample, where y_i = mean + L g_i and
// antithetic pairs share a stream with flipped sign. Non-finite values are
// dropped; more than 0.1% of them is an error.
EstimateWithError mc_over_gaussians(
    const OuModel& model, double tau, const Vec& x, const McConfig& mc,
    const std::function<double(const Vec&, const Vec&)>& sample_value) {
  check_mc(mc);
  const CovarianceFactor cov = covariance(model, tau);
  const Vec mean = propagate(model, tau, x);
  const int n = model.n_modes;
  const long n_samples = mc.n_samples;

  std::vector<double> values(n_samples);
  std::atomic<long> rejected{0};
  parallel_for_chunks(n_samples, kChunk, mc.n_threads,
      [&](std::size_t begin, std::size_t end, std::size_t) {
        Vec g(n), y(n);
        long local_rejected = 0;
        for (std::size_t i = begin; i < end; ++i) {
          const std::uint64_t stream = mc.antithetic ? i / 2 : i;
          GaussianStream gs(mc.seed, stream);
          gs.fill(g.data(), n);
          if (mc.antithetic && (i % 2 == 1)) g = -g;
          y = mean + cov.chol.triangularView<Eigen::Lower>() * g;
          const double v = sample_value(y, g);
          values[i] = v;   // non-finite values filtered below
          if (!std::isfinite(v)) ++local_rejected;
        }
        if (local_rejected > 0) rejected.fetch_add(local_rejected);
      });

  const long n_rejected = rejected.load();
  if (n_rejected * 1000 > n_samples) {
    throw std::runtime_error("monte carlo: more than 0.1% of samples were non-finite");
  }
  if (n_rejected > 0) {
    std::erase_if(values, [](double v) { return !std::isfinite(v); });
  }
  const MeanVar stats = mean_and_error(values);
  return EstimateWithError{stats.mean, stats.std_error,
                           static_cast<long>(values.size())};
}

}  // namespace

EstimateWithError semigroup_apply(const OuModel& model, const StateFunctional& f,
                                  double tau, const Vec& x, const McConfig& mc) {
  if (!(tau > 0.0)) throw std::invalid_argument("semigroup_apply: tau must be > 0");
  return mc_over_gaussians(model, tau, x, mc,
                           [&](const Vec& y, const Vec&) { return f(y); });
}

EstimateWithError b_gradient_semigroup(const OuModel& model, const StateFunctional& f,
                                       double tau, const Vec& x, const Vec& xi,
                                       const McConfig& mc) {
  if (!(tau > 0.0)) throw std::invalid_argument("b_gradient_semigroup: tau must be > 0");
  const CovarianceFactor cov = covariance(model, tau);
  const Vec direction = decay_factors(model, tau).cwiseProduct(model.gram_b * xi);
  const Vec w = cov.chol.triangularView<Eigen::Lower>().solve(direction);
  return mc_over_gaussians(model, tau, x, mc, [&](const Vec& y, const Vec& g) {
    return f(y) * w.dot(g);
  });
}

}  // namespace hjb
