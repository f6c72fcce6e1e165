#include "hjblab/spectral.hpp"

#include <cmath>
#include <numbers>

#include "hjblab/kernels.hpp"

namespace hjb {

namespace {

constexpr double kPi = std::numbers::pi;

// integral_a^b phi_j phi_k via the product-to-sum antiderivative
double gram_entry(int j, int k, double a, double b) {
  auto sine_term = [&](int m) {
    return (std::sin(m * kPi * b) - std::sin(m * kPi * a)) / (m * kPi);
  };
  if (j == 0 && k == 0) return b - a;
  if (j == 0 || k == 0) return std::numbers::sqrt2 * sine_term(j + k);
  if (j == k) return (b - a) + sine_term(2 * j);
  return sine_term(j - k > 0 ? j - k : k - j) + sine_term(j + k);
}

}  // namespace

double expm1_over(double s, double t) {
  const double st = s * t;
  if (std::abs(st) < 1e-8) return t * (1.0 + 0.5 * st + st * st / 6.0);
  return std::expm1(st) / s;
}

OuModel build_model(int n_modes, double a, double b) {
  if (n_modes < 1) throw std::invalid_argument("build_model: n_modes must be >= 1");
  if (!(0.0 < a && a < b && b < 1.0)) {
    throw std::invalid_argument("build_model: subdomain requires 0 < a < b < 1");
  }
  OuModel model;
  model.n_modes = n_modes;
  model.a = a;
  model.b = b;
  model.eigenvalues.resize(n_modes);
  for (int k = 0; k < n_modes; ++k) {
    model.eigenvalues(k) = -(k * kPi) * (k * kPi);
  }
  model.gram_b.resize(n_modes, n_modes);
  for (int j = 0; j < n_modes; ++j) {
    for (int k = j; k < n_modes; ++k) {
      const double v = gram_entry(j, k, a, b);
      model.gram_b(j, k) = v;
      model.gram_b(k, j) = v;
    }
  }
  return model;
}

CovarianceFactor covariance(const OuModel& model, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("covariance: t must be > 0");
  const int n = model.n_modes;
  CovarianceFactor cov;
  cov.t = t;
  cov.q.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      const double s = model.eigenvalues(j) + model.eigenvalues(k);
      const double v = model.gram_b(j, k) * expm1_over(s, t);
      cov.q(j, k) = v;
      cov.q(k, j) = v;
    }
  }
  Eigen::LLT<Mat> llt(cov.q);
  if (llt.info() == Eigen::Success) {
    cov.chol = llt.matrixL();
    return cov;
  }
  cov.jitter = 1e-12 * cov.q.trace() / n;
  llt.compute(cov.q + cov.jitter * Mat::Identity(n, n));
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Mat> es(cov.q, Eigen::EigenvaluesOnly);
    throw DegenerateCovariance(es.eigenvalues().minCoeff(), t,
                               "covariance: Cholesky failed after jitter at t=" +
                                   std::to_string(t));
  }
  cov.chol = llt.matrixL();
  return cov;
}

Vec decay_factors(const OuModel& model, double t) {
  return (model.eigenvalues * t).array().exp();
}

Vec integrated_decay(const OuModel& model, double t) {
  Vec out(model.n_modes);
  for (int k = 0; k < model.n_modes; ++k) {
    out(k) = expm1_over(model.eigenvalues(k), t);
  }
  return out;
}

Vec propagate(const OuModel& model, double t, const Vec& x) {
  if (t < 0.0) throw std::invalid_argument("propagate: t must be >= 0");
  if (x.size() != model.n_modes) throw std::invalid_argument("propagate: size mismatch");
  return decay_factors(model, t).cwiseProduct(x);
}

double reg_constant(const OuModel& model, double t) {
  const CovarianceFactor cov = covariance(model, t);
  const Mat scaled = decay_factors(model, t).asDiagonal() * model.gram_b;
  const Mat x = cov.chol.triangularView<Eigen::Lower>().solve(scaled);
  Eigen::JacobiSVD<Mat> svd(x);
  return svd.singularValues()(0);
}

BasisTable BasisTable::neumann(int n_modes, int n_points) {
  BasisTable basis;
  basis.n_modes = n_modes;
  basis.n_points = n_points;
  basis.values.resize(static_cast<std::size_t>(n_modes) * n_points);
  for (int p = 0; p < n_points; ++p) basis.values[p] = 1.0;
  for (int k = 1; k < n_modes; ++k) {
    for (int p = 0; p < n_points; ++p) {
      basis.values[static_cast<std::size_t>(k) * n_points + p] =
          std::numbers::sqrt2 * std::cos(k * kPi * basis.point(p));
    }
  }
  return basis;
}

double BasisTable::point(int p) const {
  return n_points == 1 ? 0.0 : static_cast<double>(p) / (n_points - 1);
}

void eval_on_grid(const BasisTable& basis, const Vec& coeffs, double* out) {
  const int P = basis.n_points;
  for (int p = 0; p < P; ++p) out[p] = coeffs(0) * basis.values[p];
  for (int k = 1; k < basis.n_modes; ++k) {
    kern::axpy(coeffs(k), basis.values.data() + static_cast<std::size_t>(k) * P, out, P);
  }
}

double sup_on_grid(const BasisTable& basis, const Vec& coeffs) {
  thread_local std::vector<double> work;
  work.resize(basis.n_points);
  return kern::basis_sup(coeffs.data(), basis.n_modes, basis.values.data(),
                         basis.n_points, work.data());
}

}  // namespace hjb
