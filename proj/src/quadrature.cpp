#include "sphlab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace sphlab {

double log_beta(double x, double y) {
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double beta_function(double x, double y) { return std::exp(log_beta(x, y)); }

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// matrix built from the three-term recurrence of the Jacobi polynomials;
// weights come from the first components of the eigenvectors scaled by the
// zeroth moment of the weight function.
QuadRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: order must be >= 1");
  if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("gauss_jacobi: exponents must be > -1");

  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    double diag;
    if (k == 0) {
      diag = (b - a) / (ab + 2.0);
    } else {
      const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
      diag = (b * b - a * a) / den;
    }
    jac(k, k) = diag;
  }
  for (int k = 1; k < n; ++k) {
    double beta_k;
    if (k == 1) {
      beta_k = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double t = 2.0 * k + ab;
      beta_k = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    const double off = std::sqrt(beta_k);
    jac(k, k - 1) = off;
    jac(k - 1, k) = off;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigensolver failed");

  const double mu0 = std::pow(2.0, ab + 1.0) * beta_function(a + 1.0, b + 1.0);

  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace sphlab
