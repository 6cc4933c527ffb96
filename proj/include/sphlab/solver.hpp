#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphlab/eos.hpp"
#include "sphlab/grid.hpp"

namespace sphlab {

struct SolverConfig {
  double cfl = 0.4;                //!< Courant number, in (0, 1)
  double t_end = 1.0;
  double snapshot_interval = 0.1;  //!< <= 0 means only t = 0 and t_end
  bool implicit_viscous = true;
  bool strang_splitting = false;   //!< half viscous steps around the convective one
  double positivity_floor = 1e-12;
  double max_wall_seconds = 0.0;   //!< 0 disables the budget

  void validate() const {
    if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("SolverConfig: cfl must be in (0,1)");
    if (t_end < 0.0) throw std::invalid_argument("SolverConfig: t_end must be >= 0");
  }
};

//! A step drove the density to the floor (or a contract broke); carries the
//! offending cell.
struct SolverFault : std::runtime_error {
  SolverFault(const std::string& what, int cell_, double time_)
      : std::runtime_error(what), cell(cell_), time(time_) {}
  int cell;
  double time;
};

//! Extra (d rho/dt, d m/dt) contribution, used by verification runs that
//! inject a manufactured residual.
using SourceFn =
    std::function<void(double t, const RadialGrid&, std::vector<double>& rho_rate,
                       std::vector<double>& m_rate)>;

//! Time integrals accumulated inside the stepping loop (trapezoidal in t),
//! recorded at every snapshot instant.
struct AccumRow {
  double t = 0.0;
  double visc_main = 0.0;   //!< eps II (rho u_r^2 + (N-1) rho u^2/r^2) r^{N-1}
  double visc_degen = 0.0;  //!< eps delta II rho^a {a u_r^2 + ...} r^{N-1}
  double bd_cross = 0.0;    //!< eps II (p_r/rho) mu_r r^{N-1}
  std::vector<double> probe_speed;  //!< Int (|u|+|u|^3) dt at the probe radii
};

struct Trajectory {
  std::vector<RadialField> snapshots;
  std::vector<AccumRow> accum;  // parallel to snapshots
  std::vector<double> probe_radii;
};

//! Instantaneous dissipation rates of a state.
struct DissipationRates {
  double visc_main = 0.0;
  double visc_degen = 0.0;
  double bd_cross = 0.0;
};

//! Time-domain solver for the radial compressible Navier-Stokes system on
//! [delta, b] with u = 0 at both walls: explicit Rusanov convection, then an
//! implicit (tridiagonal) or explicit viscous update on the velocity.
class NavierStokesSolver {
 public:
  NavierStokesSolver(const GasParams& g, const ViscosityParams& v, const SolverConfig& cfg);

  void set_source(SourceFn src) { source_ = std::move(src); }

  //! Acoustic CFL step, capped by the explicit diffusion limit when the
  //! viscous update is explicit.
  double cfl_dt(const RadialField& f) const;

  //! One operator-split step; advances f.t by dt.
  void step(RadialField& f, double dt) const;

  //! Advance to t_end, recording snapshots and accumulators.
  Trajectory run(const RadialField& initial, const std::vector<double>& probe_radii = {}) const;

  DissipationRates rates(const RadialField& f) const;

  const GasParams& gas() const { return gas_; }
  const ViscosityParams& viscosity() const { return visc_; }
  const SolverConfig& config() const { return cfg_; }

 private:
  void viscous_update(RadialField& f, double dt) const;
  void check_positive(const RadialField& f, double t) const;

  GasParams gas_;
  ViscosityParams visc_;
  SolverConfig cfg_;
  SourceFn source_;
};

}  // namespace sphlab
