#pragma once

#include <functional>

#include "sphlab/eos.hpp"
#include "sphlab/quadrature.hpp"

namespace sphlab {

struct EntropyPairValue {
  double eta = 0.0;
  double q = 0.0;
};

struct EntropyDerivatives {
  double eta_rho = 0.0;
  double eta_m = 0.0;
};

struct FluxInequalityResult {
  double lhs = 0.0;
  double bound = 0.0;
};

struct IdentityResiduals {
  double taylor_split = 0.0;    //!< residual of the Taylor-split form of the rest-flux combination
  double pressure_form = 0.0;   //!< residual of its pressure-only rearrangement
  double beta_moment = 0.0;     //!< residual of the cubic/linear half-moment relation
};

//! Quadrature-backed evaluator for weak entropy pairs of the radial
//! isentropic Euler system.
//!
//! A pair generated by a test function psi is
//!   eta(rho, m) = rho * Int psi(u + rho^theta s) (1-s^2)^ell ds,
//!   q(rho, m)   = rho * Int (u + theta rho^theta s) psi(u + rho^theta s) (1-s^2)^ell ds,
//! over s in [-1, 1].  The kernel weight (1-s^2)^ell is handled by
//! Gauss-Jacobi rules so that the endpoint singularity for gamma > 3
//! (ell < 0) costs no accuracy.  Integrands with a |u + rho^theta s| kink
//! are split at the kink; each piece keeps one singular endpoint and is
//! integrated with a one-sided Jacobi rule.
class EntropyEvaluator {
 public:
  explicit EntropyEvaluator(const GasParams& g, int quad_order = 48);

  const GasParams& gas() const { return gas_; }
  int quad_order() const { return order_; }

  //! Zeroth and second moments of (1-s^2)^ell on [-1, 1].
  double moment0() const { return a0_; }
  double moment2() const { return a2_; }
  //! Half-range moments Int_0^1 s^k (1-s^2)^ell ds for k = 1, 3.
  double half_moment1() const { return i1_; }
  double half_moment3() const { return i3_; }

  //! Entropy kernel chi(rho; s-u) = [rho^{2 theta} - (s-u)^2]_+^ell.
  double kernel_chi(double rho, double u, double s) const;

  //! Generic pair for a test function psi; exact for polynomial psi up to
  //! degree 2*quad_order - 2.
  EntropyPairValue generate_pair(const std::function<double(double)>& psi, double rho,
                                 double u) const;

  //! Pair generated by psi(s) = s|s|/2.
  double eta_sharp(double rho, double m) const;
  double q_sharp(double rho, double m) const;
  EntropyDerivatives eta_sharp_derivatives(double rho, double m) const;

  //! Pair relative to the far-field state (rho_bar, 0).
  EntropyPairValue relative_pair(double rho, double m) const;

  //! lhs = m d_rho eta# + (m^2/rho) d_m eta# - q#, together with its zero
  //! upper bound.  Exactly zero when |u| >= rho^theta; otherwise a
  //! single-signed integral over [|u|/rho^theta, 1].
  FluxInequalityResult check_flux_inequality(double rho, double m) const;

  //! The same lhs assembled from the derivative formulas (for cross-checks
  //! against the reduced integral form).
  double flux_combination_via_derivatives(double rho, double m) const;
  //! The reduced integral form: (theta/2) rho^{1+theta}
  //!   Int (u - rho^theta s) s |u + rho^theta s| (1-s^2)^ell ds.
  double flux_combination_integral(double rho, double m) const;

  //! Residuals of the two rest-state flux identities and of the
  //! half-moment relation  Int s^3 w = Int s w / (2 + ell).
  IdentityResiduals check_identities(double rho) const;

 private:
  using Poly = std::function<double(double)>;

  //! Integral of f(s) (1-s^2)^ell over the full interval.
  double full(const Poly& f) const;
  //! Integral of f(s) (1-s^2)^ell over [s0, 1] (singular right endpoint).
  double right_piece(const Poly& f, double s0) const;
  //! Integral of f(s) (1-s^2)^ell over [-1, s0] (singular left endpoint).
  double left_piece(const Poly& f, double s0) const;
  //! Integral of f(s) sgn(s - s0) (1-s^2)^ell over [-1, 1].
  double signed_full(const Poly& f, double s0) const;

  GasParams gas_;
  int order_;
  QuadRule sym_;    // weight (1-x)^ell (1+x)^ell
  QuadRule right_;  // weight (1-x)^ell
  QuadRule left_;   // weight (1+x)^ell
  double a0_ = 0.0;
  double a2_ = 0.0;
  double i1_ = 0.0;
  double i3_ = 0.0;
  double eta_m_bar0_ = 0.0;  // d_m eta# at (rho_bar, 0)
  double q_sharp_bar0_ = 0.0;
};

}  // namespace sphlab
