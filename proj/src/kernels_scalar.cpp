#include <cmath>
#include <limits>

#include "kernels_table.hpp"

// Reference kernels. The 4-lane interleaved accumulators mirror the AVX2
// register layout so that both backends sum in the same order.

namespace hjb::kern {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void decay_add_scalar(const double* decay, const double* x, const double* add,
                      double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::fma(decay[i], x[i], add[i]);
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc[0] = std::fma(x[i + 0], y[i + 0], acc[0]);
    acc[1] = std::fma(x[i + 1], y[i + 1], acc[1]);
    acc[2] = std::fma(x[i + 2], y[i + 2], acc[2]);
    acc[3] = std::fma(x[i + 3], y[i + 3], acc[3]);
  }
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] = std::fma(x[i], y[i], acc[i - n4]);
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double sum_scalar(const double* x, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc[0] += x[i + 0];
    acc[1] += x[i + 1];
    acc[2] += x[i + 2];
    acc[3] += x[i + 3];
  }
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] += x[i];
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double max_scalar(const double* x, std::size_t n) {
  const double ninf = -std::numeric_limits<double>::infinity();
  double acc[4] = {ninf, ninf, ninf, ninf};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    for (int l = 0; l < 4; ++l) {
      const double v = x[i + l];
      acc[l] = (acc[l] > v) ? acc[l] : v;
    }
  }
  for (std::size_t i = n4; i < n; ++i) {
    const double v = x[i];
    acc[i - n4] = (acc[i - n4] > v) ? acc[i - n4] : v;
  }
  const double m02 = (acc[0] > acc[2]) ? acc[0] : acc[2];
  const double m13 = (acc[1] > acc[3]) ? acc[1] : acc[3];
  return (m02 > m13) ? m02 : m13;
}

}  // namespace

const OpsTable kScalarOps = {axpy_scalar, decay_add_scalar, dot_scalar,
                             sum_scalar, max_scalar};

}  // namespace hjb::kern
