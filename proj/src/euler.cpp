#include "sphlab/euler.hpp"

#include <algorithm>
#include <cmath>

#include "sphlab/fv_core.hpp"

namespace sphlab {

EulerSolver::EulerSolver(const GasParams& g, const SolverConfig& cfg) : gas_(g), cfg_(cfg) {
  cfg_.validate();
}

void EulerSolver::check_contract(const RadialField& f, double t) const {
  for (int i = 0; i < f.grid.cells; ++i) {
    if (f.rho[i] < 0.0)
      throw SolverFault("negative density at cell " + std::to_string(i), i, t);
    if (f.rho[i] == 0.0 && f.m[i] != 0.0)
      throw SolverFault("nonzero momentum on a vacuum cell " + std::to_string(i), i, t);
  }
}

double EulerSolver::cfl_dt(const RadialField& f) const {
  if (!f.finite()) throw std::invalid_argument("cfl_dt: field has nonfinite entries");
  double dt = 1e300;
  for (int i = 0; i < f.grid.cells; ++i) {
    const double a = fv::wave_speed(f.rho[i], f.m[i], gas_);
    if (a > 0.0) dt = std::min(dt, f.grid.dr / a);
  }
  return cfg_.cfl * dt;
}

void EulerSolver::step(RadialField& f, double dt) const {
  check_contract(f, f.t);
  fv::convective_step(f, dt, gas_);
  f.t += dt;
  check_contract(f, f.t);
}

double EulerSolver::relative_energy(const RadialField& f) const {
  return radial_integral(f.grid, gas_.dim, [&](int i) {
    const double kin = f.rho[i] > 0.0 ? 0.5 * f.m[i] * f.m[i] / f.rho[i] : 0.0;
    return kin + relative_internal_energy(f.rho[i], gas_);
  });
}

Trajectory EulerSolver::run(const RadialField& initial) const {
  RadialField f = initial;
  check_contract(f, f.t);

  Trajectory traj;
  AccumRow acc;
  acc.t = f.t;
  traj.snapshots.push_back(f);
  traj.accum.push_back(acc);

  const double t_end = f.t + cfg_.t_end;
  const double interval = cfg_.snapshot_interval;
  double next_snap = interval > 0.0 ? f.t + interval : t_end;
  const double tiny = 1e-12 * (1.0 + t_end);

  while (f.t < t_end - tiny) {
    double dt = cfl_dt(f);
    const double target = std::min(t_end, next_snap);
    bool hit_target = false;
    if (f.t + dt >= target - tiny) {
      dt = target - f.t;
      hit_target = true;
    }
    step(f, dt);
    if (hit_target) {
      f.t = target;
      acc.t = f.t;
      traj.snapshots.push_back(f);
      traj.accum.push_back(acc);
      if (target == next_snap) next_snap += interval;
    }
  }
  return traj;
}

}  // namespace sphlab
