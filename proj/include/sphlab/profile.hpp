#pragma once

#include <functional>
#include <string>

namespace sphlab {

using ScalarFn = std::function<double(double)>;

//! A radial initial profile (rho0, m0) with the metadata the approximation
//! pipeline needs.  far_field_radius marks where rho0 has settled into
//! [rho_bar/2, 3 rho_bar/2] with m0 = 0 beyond it.
struct RadialProfile {
  ScalarFn rho0;
  ScalarFn m0;
  double far_field_radius = 0.0;
  bool momentum_zero = true;
};

//! Constant far-field state (rho_bar, 0).
RadialProfile preset_rest(double rho_bar);

//! Gaussian density bump riding on rho_bar: rho0 = rho_bar (1 + A exp(-((r-r0)/w)^2)).
RadialProfile preset_bump(double rho_bar, double amplitude = 0.5, double center = 3.0,
                          double width = 0.8);

//! Compactly supported momentum pulse on a constant density:
//! m0 = A exp(-1/(1-x^2)) on |x| < 1 with x = (r - r0)/w, zero outside.
RadialProfile preset_pulse(double rho_bar, double amplitude = 0.3, double center = 2.5,
                           double width = 1.0);

//! Slowly decaying density tail: rho0 = rho_bar (1 + A (1+r)^{-s}).
RadialProfile preset_tail(double rho_bar, double amplitude = 0.5, double exponent = 1.3);

//! Density step at r0 (inner value inside, rho_bar outside), zero momentum.
RadialProfile preset_step(double rho_bar, double inner, double r0);

//! Sampled profile from a CSV with header r,rho0,m0 and strictly increasing
//! radii; linear interpolation, edge values extended outward.  When rho_bar
//! is supplied the far-field radius is detected from the samples (the last
//! radius where the density leaves [rho_bar/2, 3 rho_bar/2] or the momentum
//! is nonzero).
RadialProfile profile_from_csv(const std::string& path);
RadialProfile profile_from_csv(const std::string& path, double rho_bar);

}  // namespace sphlab
