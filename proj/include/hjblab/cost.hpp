#pragma once

#include <limits>
#include <memory>
#include <string>

#include "hjblab/spectral.hpp"

namespace hjb {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Terminal cost with declared regularity metadata. The Lipschitz constant and
// sup bound are declarations used by solvers and checks, never estimated.
struct CostSpec {
  StateFunctional eval;
  double lip = 0.0;
  double bound = kInf;
  std::string name;
};

struct RunningCost {
  std::function<double(double, const Vec&)> eval;
  double lip = 0.0;
  double bound = 0.0;
  std::string name;

  static RunningCost zero() {
    return {[](double, const Vec&) { return 0.0; }, 0.0, 0.0, "zero"};
  }
};

// Serializable description of the cost functionals built by the heat problem;
// arbitrary closures cannot round-trip through files, these kinds can.
struct CostDescriptor {
  std::string kind = "zero";   // zero|constant|linear|clipped_coord|sup_state|weighted_l2
  double clamp = kInf;
  Vec params;
  double scale = 1.0;
};

CostSpec make_cost(const CostDescriptor& desc,
                   const std::shared_ptr<const BasisTable>& basis);
RunningCost make_running_cost(const CostDescriptor& desc,
                              const std::shared_ptr<const BasisTable>& basis);

// Bounded scalar-valued function on a box in R^d, the regularization input.
struct LipschitzFn {
  std::function<double(const Vec&)> eval;
  double lip = 0.0;
  double bound = 0.0;
  Vec box_lo, box_hi;

  int dim() const { return static_cast<int>(box_lo.size()); }
};

}  // namespace hjb
