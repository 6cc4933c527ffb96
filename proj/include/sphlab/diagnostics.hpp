#pragma once

#include <vector>

#include "sphlab/eos.hpp"
#include "sphlab/grid.hpp"
#include "sphlab/solver.hpp"

namespace sphlab {

struct DiagnosticsConfig {
  double window_lo = 1.0;   //!< [d, D] for the local density integrability monitor
  double window_hi = 2.0;
  double origin_hi = 2.0;   //!< D for the up-to-the-origin monitor
  double vartheta = 0.5;    //!< free weight exponent in (0, 1)
  std::vector<double> probe_radii;
};

//! One row per snapshot instant: every monitored functional plus the
//! residuals of the two time-integral identities.
struct ReportRow {
  double t = 0.0;
  double mass = 0.0;
  double e_rel = 0.0;      //!< Int (rho u^2/2 + e) r^{N-1} dr
  double rho_min = 0.0;
  double rho_max = 0.0;
  double visc_main = 0.0;  //!< accumulated
  double visc_degen = 0.0;
  double energy_residual = 0.0;  //!< |e_rel + dissipation - e_rel(0)|
  double bd = 0.0;         //!< Int (rho |u + eps mu_r/rho|^2 / 2 + e) r^{N-1} dr
  double bd_cross = 0.0;   //!< accumulated eps II (p_r/rho) mu_r r^{N-1}
  double bd_residual = 0.0;
  double hi_local = 0.0;   //!< II_{[d,D]} rho^{gamma+1} dr dt
  double hi_origin = 0.0;  //!< II_{[delta,D]} (rho|u|^3 + rho^{gamma+theta}) r^{N-1} dr dt
  double grad_rho = 0.0;   //!< eps^2 Int (1 + d rho^{a-1} + d^2 rho^{2(a-1)}) rho_r^2/rho r^{N-1}
  double grad_rho_acc = 0.0;  //!< eps II (1 + d rho^{a-1}) rho^{gamma-2} rho_r^2 r^{N-1}
  double decay_sup = 0.0;  //!< sup_{r>=1} |rho - rho_bar| r^{3(N-1)/4 + vartheta/4}
  double decay_slope = 0.0;  //!< fitted log-log tail slope of |rho - rho_bar| (0 if no tail)
  double ur_l2 = 0.0;      //!< ||u_r||_{L^2}^2
  double log_slope = 0.0;  //!< Int (rho_r/rho)^{2N} r^{N-1} dr
  std::vector<double> probe_decay;  //!< r^{N-1+vartheta/2} Int (|u|+|u|^3) dt per probe
};

struct DiagnosticsVerdicts {
  bool mass_constant = false;
  double mass_drift = 0.0;
  bool energy_nonnegative = false;
  bool density_positive = false;
  bool energy_nonincreasing = false;  //!< checked for inviscid runs
  double final_energy_residual = 0.0;
  double final_bd_residual = 0.0;
  bool pass = false;
};

struct DiagnosticsReport {
  std::vector<ReportRow> rows;
  DiagnosticsVerdicts verdicts;
};

//! Evaluate every monitored functional on a trajectory.  Pure: feeding the
//! same snapshots and accumulators reproduces the same report.
DiagnosticsReport build_report(const Trajectory& traj, const GasParams& g,
                               const ViscosityParams& v, const DiagnosticsConfig& cfg);

//! Residual series of the basic energy identity.
std::vector<double> energy_identity_residual(const Trajectory& traj, const GasParams& g);

//! Residual series of the effective-velocity (BD) identity; needs delta > 0
//! so the density-gradient terms are meaningful.
std::vector<double> bd_identity_residual(const Trajectory& traj, const GasParams& g,
                                         const ViscosityParams& v);

//! The BD functional of a single state.
double bd_functional(const RadialField& f, const GasParams& g, const ViscosityParams& v);

}  // namespace sphlab
