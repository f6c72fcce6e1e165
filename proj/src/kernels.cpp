#include "hjblab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_table.hpp"

namespace hjb::kern {
namespace {

bool detect_avx2() {
#if defined(HJBLAB_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const OpsTable* table_for(Backend b) {
#ifdef HJBLAB_HAVE_AVX2
  if (b == Backend::avx2) return &kAvx2Ops;
#endif
  (void)b;
  return &kScalarOps;
}

Backend initial_backend() {
  if (const char* env = std::getenv("HJBLAB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && detect_avx2()) return Backend::avx2;
  }
  return detect_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_state() {
  static std::atomic<Backend> state{initial_backend()};
  return state;
}

const OpsTable& ops() { return *table_for(backend_state().load(std::memory_order_relaxed)); }

}  // namespace

Backend active_backend() { return backend_state().load(std::memory_order_relaxed); }

bool cpu_supports_avx2() { return detect_avx2(); }

bool set_backend(Backend b) {
  if (b == Backend::avx2 && !detect_avx2()) return false;
  backend_state().store(b, std::memory_order_relaxed);
  return true;
}

const char* backend_name() {
  return active_backend() == Backend::avx2 ? "avx2" : "scalar";
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  ops().axpy(a, x, y, n);
}

void decay_add(const double* decay, const double* x, const double* add,
               double* out, std::size_t n) {
  ops().decay_add(decay, x, add, out, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  return ops().dot(x, y, n);
}

double sum(const double* x, std::size_t n) { return ops().sum(x, n); }

double max_value(const double* x, std::size_t n) { return ops().max_value(x, n); }

double basis_sup(const double* coeffs, std::size_t n_modes, const double* table,
                 std::size_t n_points, double* work) {
  const OpsTable& t = ops();
  for (std::size_t p = 0; p < n_points; ++p) work[p] = coeffs[0] * table[p];
  for (std::size_t k = 1; k < n_modes; ++k) {
    t.axpy(coeffs[k], table + k * n_points, work, n_points);
  }
  return t.max_value(work, n_points);
}

}  // namespace hjb::kern
