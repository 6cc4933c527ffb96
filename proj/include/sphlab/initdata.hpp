#pragma once

#include "sphlab/eos.hpp"
#include "sphlab/grid.hpp"
#include "sphlab/profile.hpp"
#include "sphlab/quadrature.hpp"

namespace sphlab {

//! Band clamp of the density to [(beta eps)^{1/4}, (beta eps)^{-1/2}].
//! Identity when eps = 0.
ScalarFn clamp_density(ScalarFn rho0, double eps, double beta);

//! Replace the profile by rho_bar beyond (beta eps)^{-1/(2N)}.  Errors when
//! that radius does not clear the profile's far-field radius by 2.
ScalarFn farfield_cutoff(ScalarFn profile, double eps, double beta, double rho_bar,
                         double far_field_radius, int dim);

//! Convolution of a radial function against the normalized smooth bump
//! J_sigma in R^N, reduced to a (radius x polar angle) quadrature.  The
//! discrete kernel mass is normalized out, so constants are reproduced
//! exactly and pointwise bounds are preserved.
class RadialMollifier {
 public:
  RadialMollifier(double sigma, int dim, int radial_order = 40, int angular_order = 40);

  double sigma() const { return sigma_; }
  double apply(const ScalarFn& f, double r) const;

 private:
  double sigma_;
  int dim_;
  std::vector<double> off_t_;      // offset radii in (0, sigma)
  std::vector<double> cos_phi_;    // polar angle cosines
  std::vector<double> weight_;     // combined kernel x geometry weights (unit sum)
};

//! Smooth density: mollify the square root in R^N, then square.
ScalarFn mollify_sqrt_density(ScalarFn profile, double sigma, int dim);

//! u0_eps = (m0 / sqrt(rho0)) / sqrt(rho_eps); preserves the weighted
//! kinetic energy exactly.
ScalarFn approx_velocity(ScalarFn m0, ScalarFn rho0, ScalarFn rho_eps);

//! Velocity windowed to [4 delta, 1/delta] and mollified at width delta;
//! support lands inside {2 delta <= r <= 1 + 1/delta}.
ScalarFn windowed_velocity(ScalarFn m0, ScalarFn rho0, ScalarFn rho_eps, double delta, int dim);

//! Sample (rho, u) onto the annulus grid.  With enforce_window the outer
//! radius must leave room for the velocity window, b >= 1 + 1/delta.
RadialField restrict_annulus(const ScalarFn& rho_fn, const ScalarFn& u_fn, const RadialGrid& grid,
                             bool enforce_window = true);

struct InitialData {
  RadialField field;
  double E0 = 0.0;        //!< omega_N Int (rho u^2/2 + e) r^{N-1} dr
  double E1 = 0.0;        //!< eps^2 Int (1 + 2 a d rho^{a-1} + a^2 d^2 rho^{2a-2}) |(sqrt rho)_r|^2 r^{N-1} dr
  double E2 = 0.0;        //!< Int rho (u^{2N} + |mu_r/rho|^{2N}) r^{N-1} dr
  double E0_tilde = 0.0;  //!< Int (rho u^2/2 + e) r^{2(N-1)+theta_w} dr
};

//! Full approximation pipeline: clamp, far-field cutoff, square-root
//! mollification at width eps^{1/4}, windowed velocity, annulus restriction,
//! plus the t = 0 energy functionals (theta_w is the free weight exponent).
InitialData build_initial_data(const RadialProfile& profile, const GasParams& g,
                               const ViscosityParams& v, const RadialGrid& grid,
                               double beta = 1e-3, double theta_w = 0.5);

}  // namespace sphlab
