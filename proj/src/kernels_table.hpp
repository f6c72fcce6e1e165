#pragma once

#include <cstddef>

namespace hjb::kern {

struct OpsTable {
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*decay_add)(const double*, const double*, const double*, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*max_value)(const double*, std::size_t);
};

extern const OpsTable kScalarOps;
#ifdef HJBLAB_HAVE_AVX2
extern const OpsTable kAvx2Ops;
#endif

}  // namespace hjb::kern
