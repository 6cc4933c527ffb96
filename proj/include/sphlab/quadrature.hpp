#pragma once

#include <vector>

namespace sphlab {

//! Nodes and weights of a Gaussian rule on [-1, 1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

//! Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1], exact for
//! polynomials up to degree 2n-1.  Requires a, b > -1.
QuadRule gauss_jacobi(int n, double a, double b);

//! Gauss-Legendre rule (a = b = 0).
QuadRule gauss_legendre(int n);

double log_beta(double x, double y);
double beta_function(double x, double y);

}  // namespace sphlab
