#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hjb {

// Thread count resolution: explicit argument > HJBLAB_THREADS env > hardware.
inline int resolve_threads(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HJBLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(begin, end, chunk_index) over fixed-size chunks of [0, n).
// The chunk layout depends only on (n, chunk_size), never on the thread count,
// so per-chunk outputs are reproducible under any parallel schedule.
inline void parallel_for_chunks(std::size_t n, std::size_t chunk_size, int n_threads,
                                const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  n_threads = resolve_threads(n_threads);
  if (n_threads <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::size_t begin = c * chunk_size;
      body(begin, std::min(begin + chunk_size, n), c);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) return;
      const std::size_t begin = c * chunk_size;
      body(begin, std::min(begin + chunk_size, n), c);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = std::min<std::size_t>(n_threads, n_chunks);
  pool.reserve(spawn - 1);
  for (int i = 1; i < spawn; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

// Summation over a fixed binary tree determined only by n.
inline double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& x) {
  return pairwise_sum(x.data(), x.size());
}

struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

// Two-pass mean/variance with pairwise accumulation in both passes.
inline MeanVar mean_and_error(const double* x, std::size_t n) {
  MeanVar out;
  out.n = n;
  if (n == 0) return out;
  out.mean = pairwise_sum(x, n) / static_cast<double>(n);
  if (n < 2) return out;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - out.mean;
    sq[i] = d * d;
  }
  out.variance = pairwise_sum(sq) / static_cast<double>(n - 1);
  out.std_error = std::sqrt(out.variance / static_cast<double>(n));
  return out;
}

inline MeanVar mean_and_error(const std::vector<double>& x) {
  return mean_and_error(x.data(), x.size());
}

}  // namespace hjb
