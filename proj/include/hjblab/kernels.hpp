#pragma once

#include <cstddef>

// Data-parallel inner-loop kernels with scalar reference implementations and
// an AVX2 variant selected at runtime. Both backends implement the exact same
// accumulation order (4-lane interleaved partials, fused multiply-adds), so
// results are bit-identical regardless of the backend in use.

namespace hjb::kern {

enum class Backend { scalar, avx2 };

Backend active_backend();
bool set_backend(Backend b);   // false if the CPU lacks the requested backend
const char* backend_name();
bool cpu_supports_avx2();

// y[i] = fma(a, x[i], y[i])
void axpy(double a, const double* x, double* y, std::size_t n);

// out[i] = fma(decay[i], x[i], add[i])
void decay_add(const double* decay, const double* x, const double* add,
               double* out, std::size_t n);

double dot(const double* x, const double* y, std::size_t n);

double sum(const double* x, std::size_t n);

// max over x[0..n); inputs must be finite, n >= 1
double max_value(const double* x, std::size_t n);

// work[p] = sum_k coeffs[k] * table[k*n_points + p], returns max_p work[p].
// work must hold n_points doubles.
double basis_sup(const double* coeffs, std::size_t n_modes, const double* table,
                 std::size_t n_points, double* work);

}  // namespace hjb::kern
