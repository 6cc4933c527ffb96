#pragma once

#include <cmath>
#include <vector>

#include "sphlab/eos.hpp"
#include "sphlab/grid.hpp"

namespace sphlab::fv {

inline double wave_speed(double rho, double m, const GasParams& g) {
  const double u = rho > 0.0 ? m / rho : 0.0;
  return std::abs(u) + sound_speed(rho, g);
}

struct Flux {
  double mass;
  double mom;
};

//! Physical flux (m, m^2/rho + p); the kinetic part is zero on vacuum.
inline Flux physical_flux(double rho, double m, const GasParams& g) {
  const double kin = rho > 0.0 ? m * m / rho : 0.0;
  return {m, kin + pressure(rho, g)};
}

inline Flux rusanov_flux(double rho_l, double m_l, double rho_r, double m_r,
                         const GasParams& g) {
  const Flux fl = physical_flux(rho_l, m_l, g);
  const Flux fr = physical_flux(rho_r, m_r, g);
  const double a = std::max(wave_speed(rho_l, m_l, g), wave_speed(rho_r, m_r, g));
  return {0.5 * (fl.mass + fr.mass) - 0.5 * a * (rho_r - rho_l),
          0.5 * (fl.mom + fr.mom) - 0.5 * a * (m_r - m_l)};
}

//! Explicit convective update in area-weighted flux form with reflecting
//! walls (u = 0) and a well-balanced pressure source; fluxes and the source
//! pressure come from `from`, the increment lands on `f`.  The mirrored wall
//! states make the wall mass flux vanish identically, so the discrete mass
//! Sum rho_i r_i^{N-1} dr is conserved to round-off; the source is built
//! from the same face-area differences that the flux divergence sees, so a
//! uniform rest state is a bitwise fixed point.
inline void convective_apply(RadialField& f, const RadialField& from, double dt,
                             const GasParams& g) {
  const RadialGrid& gr = f.grid;
  const int n = gr.cells;
  const int nd = g.dim;
  std::vector<double> fmass(n + 1), fmom(n + 1), area(n + 1);
  for (int j = 0; j <= n; ++j) area[j] = std::pow(gr.face(j), nd - 1);

  for (int j = 1; j < n; ++j) {
    const Flux fl = rusanov_flux(from.rho[j - 1], from.m[j - 1], from.rho[j], from.m[j], g);
    fmass[j] = fl.mass;
    fmom[j] = fl.mom;
  }
  {
    const Flux fl = rusanov_flux(from.rho[0], -from.m[0], from.rho[0], from.m[0], g);
    fmass[0] = fl.mass;
    fmom[0] = fl.mom;
    const Flux fr =
        rusanov_flux(from.rho[n - 1], from.m[n - 1], from.rho[n - 1], -from.m[n - 1], g);
    fmass[n] = fr.mass;
    fmom[n] = fr.mom;
  }

  for (int i = 0; i < n; ++i) {
    const double ai = std::pow(gr.r(i), nd - 1);
    const double lam = dt / (ai * gr.dr);
    const double p_i = pressure(from.rho[i], g);
    f.rho[i] -= lam * (area[i + 1] * fmass[i + 1] - area[i] * fmass[i]);
    f.m[i] -= lam * (area[i + 1] * fmom[i + 1] - area[i] * fmom[i]) -
              lam * p_i * (area[i + 1] - area[i]);
  }
}

inline void convective_step(RadialField& f, double dt, const GasParams& g) {
  convective_apply(f, f, dt, g);
}

//! Midpoint (two-stage) variant: fluxes of the corrector are evaluated on a
//! half-step predictor, making the convective substep second order in time.
inline void convective_step_midpoint(RadialField& f, double dt, const GasParams& g) {
  RadialField half = f;
  convective_apply(half, f, 0.5 * dt, g);
  convective_apply(f, half, dt, g);
}

//! Thomas solve of a tridiagonal system; overwrites rhs with the solution.
inline void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                              std::vector<double>& upper, std::vector<double>& rhs) {
  const int n = static_cast<int>(diag.size());
  for (int i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

}  // namespace sphlab::fv
