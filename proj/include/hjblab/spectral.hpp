#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <vector>

// Spectral truncation of the heat model on [0,1] with Neumann boundary
// conditions. States and noise directions are coefficient vectors in the
// orthonormal cosine basis phi_0 = 1, phi_k = sqrt(2) cos(k pi xi); the noise
// operator is multiplication by the indicator of the subdomain [a,b], whose
// matrix in this basis is the Gram matrix gram_b.

namespace hjb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct OuModel {
  int n_modes = 0;
  double a = 0.0, b = 0.0;        // noise/control subdomain, 0 < a < b < 1
  Vec eigenvalues;                // lambda_k = -(k pi)^2
  Mat gram_b;                     // M_jk = integral_a^b phi_j phi_k
  double growth_m = 1.0;          // ||e^{tA}|| <= growth_m * exp(growth_omega t)
  double growth_omega = 0.0;
};

class DegenerateCovariance : public std::runtime_error {
 public:
  DegenerateCovariance(double smallest, double t_value, const std::string& what)
      : std::runtime_error(what), smallest_eigenvalue(smallest), t(t_value) {}
  double smallest_eigenvalue;
  double t;
};

struct CovarianceFactor {
  double t = 0.0;
  Mat q;          // Q_t, symmetric positive definite (after jitter if any)
  Mat chol;       // lower triangular L with L L^T = q + jitter I
  double jitter = 0.0;
};

// (exp(s*t) - 1) / s with a series branch near s*t = 0
double expm1_over(double s, double t);

OuModel build_model(int n_modes, double a, double b);

// Q_t entries: gram_b_jk * (exp((lambda_j+lambda_k) t) - 1) / (lambda_j+lambda_k)
CovarianceFactor covariance(const OuModel& model, double t);

Vec decay_factors(const OuModel& model, double t);        // exp(lambda_k t)
Vec integrated_decay(const OuModel& model, double t);     // (exp(lambda_k t)-1)/lambda_k

Vec propagate(const OuModel& model, double t, const Vec& x);

// largest singular value of L^{-1} e^{t Lambda} M, the truncated norm of
// Q_t^{-1/2} e^{tA} B
double reg_constant(const OuModel& model, double t);

// Cosine basis sampled on n_points uniform points of [0,1] (endpoints included).
struct BasisTable {
  int n_modes = 0;
  int n_points = 0;
  std::vector<double> values;     // row-major, values[k * n_points + p]

  static BasisTable neumann(int n_modes, int n_points);
  double point(int p) const;
};

void eval_on_grid(const BasisTable& basis, const Vec& coeffs, double* out);
double sup_on_grid(const BasisTable& basis, const Vec& coeffs);

using StateFunctional = std::function<double(const Vec&)>;

}  // namespace hjb
