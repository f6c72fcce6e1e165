#include <immintrin.h>

#include <cmath>
#include <limits>

#include "kernels_table.hpp"

namespace hjb::kern {
namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (std::size_t i = n4; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void decay_add_avx2(const double* decay, const double* x, const double* add,
                    double* out, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d v = _mm256_fmadd_pd(_mm256_loadu_pd(decay + i),
                                      _mm256_loadu_pd(x + i),
                                      _mm256_loadu_pd(add + i));
    _mm256_storeu_pd(out + i, v);
  }
  for (std::size_t i = n4; i < n; ++i) out[i] = std::fma(decay[i], x[i], add[i]);
}

// lane k of the vector accumulator holds partial sum over indices i with i%4==k,
// matching the scalar reference exactly
double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d vacc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    vacc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), vacc);
  }
  alignas(32) double acc[4];
  _mm256_store_pd(acc, vacc);
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] = std::fma(x[i], y[i], acc[i - n4]);
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d vacc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    vacc = _mm256_add_pd(vacc, _mm256_loadu_pd(x + i));
  }
  alignas(32) double acc[4];
  _mm256_store_pd(acc, vacc);
  for (std::size_t i = n4; i < n; ++i) acc[i - n4] += x[i];
  return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double max_avx2(const double* x, std::size_t n) {
  const double ninf = -std::numeric_limits<double>::infinity();
  __m256d vacc = _mm256_set1_pd(ninf);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    vacc = _mm256_max_pd(vacc, _mm256_loadu_pd(x + i));
  }
  alignas(32) double acc[4];
  _mm256_store_pd(acc, vacc);
  for (std::size_t i = n4; i < n; ++i) {
    const double v = x[i];
    acc[i - n4] = (acc[i - n4] > v) ? acc[i - n4] : v;
  }
  const double m02 = (acc[0] > acc[2]) ? acc[0] : acc[2];
  const double m13 = (acc[1] > acc[3]) ? acc[1] : acc[3];
  return (m02 > m13) ? m02 : m13;
}

}  // namespace

const OpsTable kAvx2Ops = {axpy_avx2, decay_add_avx2, dot_avx2, sum_avx2, max_avx2};

}  // namespace hjb::kern
