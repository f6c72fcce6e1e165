#include "hjblab/cost.hpp"

#include <cmath>

namespace hjb {

namespace {

double clamp_sym(double v, double c) { return std::clamp(v, -c, c); }

}  // namespace

CostSpec make_cost(const CostDescriptor& desc,
                   const std::shared_ptr<const BasisTable>& basis) {
  CostSpec cost;
  cost.name = desc.kind;
  const double clamp = desc.clamp;
  const double scale = desc.scale;
  if (desc.kind == "zero") {
    cost.eval = [](const Vec&) { return 0.0; };
    cost.lip = 0.0;
    cost.bound = 0.0;
  } else if (desc.kind == "constant") {
    const double c = desc.params(0);
    cost.eval = [c](const Vec&) { return c; };
    cost.lip = 0.0;
    cost.bound = std::abs(c);
  } else if (desc.kind == "linear") {
    const Vec ell = desc.params;
    if (std::isfinite(clamp)) {
      cost.eval = [ell, clamp](const Vec& x) { return clamp_sym(ell.dot(x), clamp); };
      cost.bound = clamp;
    } else {
      cost.eval = [ell](const Vec& x) { return ell.dot(x); };
      cost.bound = kInf;
    }
    cost.lip = ell.norm();
  } else if (desc.kind == "clipped_coord") {
    const int idx = static_cast<int>(desc.params(0));
    cost.eval = [idx, clamp, scale](const Vec& x) {
      return clamp_sym(scale * x(idx), clamp);
    };
    cost.lip = std::abs(scale);
    cost.bound = clamp;
  } else if (desc.kind == "sup_state") {
    if (!basis) throw std::invalid_argument("make_cost: sup_state needs a basis table");
    const auto tbl = basis;
    cost.eval = [tbl, clamp, scale](const Vec& x) {
      return clamp_sym(scale * sup_on_grid(*tbl, x), clamp);
    };
    // sup over the grid is 1-Lipschitz in the sup norm; in coefficients this is
    // dominated by sqrt(sum_k ||phi_k||_inf^2) = sqrt(2N - 1)
    cost.lip = std::abs(scale) * std::sqrt(2.0 * basis->n_modes - 1.0);
    cost.bound = clamp;
  } else if (desc.kind == "weighted_l2") {
    const Vec w = desc.params;
    cost.eval = [w, clamp, scale](const Vec& x) {
      return clamp_sym(scale * 0.5 * w.cwiseProduct(x).dot(x), clamp);
    };
    const double wmax = w.maxCoeff();
    const double wmin = w.minCoeff();
    if (!(wmin > 0.0) || !std::isfinite(clamp)) {
      throw std::invalid_argument("make_cost: weighted_l2 needs positive weights and a finite clamp");
    }
    cost.lip = std::abs(scale) * wmax * std::sqrt(2.0 * clamp / (std::abs(scale) * wmin));
    cost.bound = clamp;
  } else {
    throw std::invalid_argument("make_cost: unknown cost kind '" + desc.kind + "'");
  }
  return cost;
}

RunningCost make_running_cost(const CostDescriptor& desc,
                              const std::shared_ptr<const BasisTable>& basis) {
  const CostSpec c = make_cost(desc, basis);
  RunningCost out;
  out.eval = [f = c.eval](double, const Vec& x) { return f(x); };
  out.lip = c.lip;
  out.bound = c.bound;
  out.name = c.name;
  return out;
}

}  // namespace hjb
