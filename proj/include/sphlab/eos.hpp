#pragma once

#include <cmath>
#include <stdexcept>

namespace sphlab {

//! Constants of a gamma-law gas p = kappa * rho^gamma, normalized so that
//! kappa = (gamma-1)^2 / (4 gamma).  All derived exponents used by the
//! entropy machinery are precomputed here.
struct GasParams {
  double gamma;    //!< adiabatic exponent, > 1
  double kappa;    //!< pressure constant
  double theta;    //!< (gamma-1)/2
  double ell;      //!< (3-gamma)/(2(gamma-1)), in (-1/2, inf)
  int dim;         //!< spatial dimension N >= 2
  double rho_bar;  //!< far-field density, > 0
  double omega_n;  //!< (2 pi)^{N/2} / Gamma(N/2)

  static GasParams make(double gamma, double rho_bar, int dim) {
    if (!(gamma > 1.0)) throw std::invalid_argument("GasParams: gamma must be > 1");
    if (!(rho_bar > 0.0)) throw std::invalid_argument("GasParams: rho_bar must be > 0");
    if (dim < 2) throw std::invalid_argument("GasParams: dim must be >= 2");
    GasParams g;
    g.gamma = gamma;
    g.kappa = (gamma - 1.0) * (gamma - 1.0) / (4.0 * gamma);
    g.theta = 0.5 * (gamma - 1.0);
    g.ell = (3.0 - gamma) / (2.0 * (gamma - 1.0));
    g.dim = dim;
    g.rho_bar = rho_bar;
    g.omega_n = std::pow(2.0 * M_PI, 0.5 * dim) / std::tgamma(0.5 * dim);
    return g;
  }
};

//! Viscosity scaling: mu(rho) = rho + delta rho^alpha,
//! lambda(rho) = delta (alpha-1) rho^alpha, alpha in ((N-1)/N, 1).
struct ViscosityParams {
  double epsilon;  //!< viscosity scale, in (0, 1]
  double delta;    //!< degeneracy parameter, in (0, 1]
  double alpha;    //!< exponent

  static double default_alpha(int dim) { return (2.0 * dim - 1.0) / (2.0 * dim); }

  static ViscosityParams make(double epsilon, double delta, int dim, double alpha = -1.0) {
    if (alpha < 0.0) alpha = default_alpha(dim);
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
      throw std::invalid_argument("ViscosityParams: epsilon must be in [0, 1]");
    if (!(delta >= 0.0 && delta <= 1.0))
      throw std::invalid_argument("ViscosityParams: delta must be in [0, 1]");
    const double lo = double(dim - 1) / double(dim);
    if (!(alpha > lo && alpha < 1.0))
      throw std::invalid_argument("ViscosityParams: alpha must be in ((N-1)/N, 1)");
    return ViscosityParams{epsilon, delta, alpha};
  }
};

inline double pressure(double rho, const GasParams& g) {
  if (rho < 0.0) throw std::domain_error("pressure: negative density");
  return g.kappa * std::pow(rho, g.gamma);
}

inline double sound_speed(double rho, const GasParams& g) {
  if (rho < 0.0) throw std::domain_error("sound_speed: negative density");
  if (rho == 0.0) return 0.0;
  return std::sqrt(g.gamma * g.kappa * std::pow(rho, g.gamma - 1.0));
}

//! Second-order Taylor remainder of the internal energy about rho_bar:
//! e(rho, rho_bar) = kappa/(gamma-1) (rho^g - rb^g - g rb^{g-1}(rho - rb)).
//! Nonnegative, convex, vanishes only at rho = rho_bar.
inline double relative_internal_energy(double rho, const GasParams& g) {
  if (rho < 0.0) throw std::domain_error("relative_internal_energy: negative density");
  const double rb = g.rho_bar;
  return g.kappa / (g.gamma - 1.0) *
         (std::pow(rho, g.gamma) - std::pow(rb, g.gamma) -
          g.gamma * std::pow(rb, g.gamma - 1.0) * (rho - rb));
}

struct MuLambda {
  double mu;
  double lambda;
};

inline MuLambda viscosities(double rho, const ViscosityParams& v) {
  if (rho < 0.0) throw std::domain_error("viscosities: negative density");
  const double ra = std::pow(rho, v.alpha);
  return MuLambda{rho + v.delta * ra, v.delta * (v.alpha - 1.0) * ra};
}

//! Smallest eigenvalue of the 2x2 form in (u_r, u/r) that the combined
//! viscous dissipation controls; positive for alpha in ((N-1)/N, 1).
inline double dissipation_constant(int dim, double alpha) {
  const double n1 = double(dim - 1);
  const double a = alpha;
  const double b = (alpha - 1.0) * n1;
  const double c = n1 * (1.0 + (alpha - 1.0) * n1);
  const double half_tr = 0.5 * (a + c);
  const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  return half_tr - disc;
}

}  // namespace sphlab
