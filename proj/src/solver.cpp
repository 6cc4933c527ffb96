#include "sphlab/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sphlab/fv_core.hpp"

namespace sphlab {

namespace {

double mu_plus_lambda(double rho, const ViscosityParams& v) {
  // mu + lambda = rho + alpha delta rho^alpha
  return rho + v.alpha * v.delta * std::pow(rho, v.alpha);
}

std::vector<double> velocities(const RadialField& f) {
  std::vector<double> u(f.grid.cells);
  for (int i = 0; i < f.grid.cells; ++i) u[i] = f.u(i);
  return u;
}

}  // namespace

NavierStokesSolver::NavierStokesSolver(const GasParams& g, const ViscosityParams& v,
                                       const SolverConfig& cfg)
    : gas_(g), visc_(v), cfg_(cfg) {
  cfg_.validate();
}

double NavierStokesSolver::cfl_dt(const RadialField& f) const {
  if (!f.finite()) throw std::invalid_argument("cfl_dt: field has nonfinite entries");
  const RadialGrid& g = f.grid;
  double dt = 1e300;
  for (int i = 0; i < g.cells; ++i) {
    const double a = fv::wave_speed(f.rho[i], f.m[i], gas_);
    if (a > 0.0) dt = std::min(dt, g.dr / a);
    if (!cfg_.implicit_viscous && visc_.epsilon > 0.0 && f.rho[i] > 0.0) {
      const double nu = visc_.epsilon * mu_plus_lambda(f.rho[i], visc_) / f.rho[i];
      if (nu > 0.0) dt = std::min(dt, 0.5 * g.dr * g.dr / nu);
    }
  }
  return cfg_.cfl * dt;
}

void NavierStokesSolver::check_positive(const RadialField& f, double t) const {
  for (int i = 0; i < f.grid.cells; ++i) {
    if (!(f.rho[i] > cfg_.positivity_floor))
      throw SolverFault("density reached the positivity floor at cell " + std::to_string(i) +
                            " (r = " + std::to_string(f.grid.r(i)) + ", t = " +
                            std::to_string(t) + ")",
                        i, t);
  }
}

void NavierStokesSolver::viscous_update(RadialField& f, double dt) const {
  const double eps = visc_.epsilon;
  if (eps == 0.0) return;
  const RadialGrid& gr = f.grid;
  const int n = gr.cells;
  const int nd = gas_.dim;

  std::vector<double> u = velocities(f);
  std::vector<double> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = viscosities(f.rho[i], visc_).mu;
  const std::vector<double> mu_r = radial_derivative(gr, mu);

  // face coefficients eps (mu + lambda) with arithmetic density averages;
  // walls reuse the adjacent cell density
  std::vector<double> kap(n + 1);
  kap[0] = eps * mu_plus_lambda(f.rho[0], visc_);
  kap[n] = eps * mu_plus_lambda(f.rho[n - 1], visc_);
  for (int j = 1; j < n; ++j)
    kap[j] = eps * mu_plus_lambda(0.5 * (f.rho[j - 1] + f.rho[j]), visc_);

  auto face_beta = [&](int j) { return (nd - 1) / gr.face(j); };

  // explicit application of the viscous operator with mirrored wall ghosts
  auto apply_operator = [&](const std::vector<double>& w, std::vector<double>& lw) {
    std::vector<double> phi(n + 1);
    phi[0] = kap[0] * (2.0 * w[0] / gr.dr);
    phi[n] = kap[n] * (-2.0 * w[n - 1] / gr.dr);
    for (int j = 1; j < n; ++j)
      phi[j] = kap[j] * ((w[j] - w[j - 1]) / gr.dr + face_beta(j) * 0.5 * (w[j] + w[j - 1]));
    for (int i = 0; i < n; ++i)
      lw[i] = (phi[i + 1] - phi[i]) / gr.dr - eps * (nd - 1) * mu_r[i] / gr.r(i) * w[i];
  };

  if (!cfg_.implicit_viscous) {
    std::vector<double> lw(n);
    apply_operator(u, lw);
    for (int i = 0; i < n; ++i) f.m[i] = f.rho[i] * u[i] + dt * lw[i];
    return;
  }

  // theta scheme on rho w_t = L w: backward Euler normally, Crank-Nicolson
  // under Strang splitting so the substep is second order in time.
  //   (rho - theta dt L) w = rho u + (1-theta) dt L u
  const double theta = cfg_.strang_splitting ? 0.5 : 1.0;
  const double cdt = theta * dt;
  std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double gfac = eps * (nd - 1) * mu_r[i] / gr.r(i);
    double d = f.rho[i] + cdt * gfac;
    double lo = 0.0, up = 0.0;

    if (i + 1 < n) {
      const double bp = face_beta(i + 1);
      up = -cdt / gr.dr * kap[i + 1] * (1.0 / gr.dr + 0.5 * bp);
      d -= cdt / gr.dr * kap[i + 1] * (-1.0 / gr.dr + 0.5 * bp);
    } else {
      // mirrored ghost: Phi_wall = kap (-2 w / dr)
      d += cdt / gr.dr * kap[n] * 2.0 / gr.dr;
    }

    if (i > 0) {
      const double bm = face_beta(i);
      lo = cdt / gr.dr * kap[i] * (-1.0 / gr.dr + 0.5 * bm);
      d += cdt / gr.dr * kap[i] * (1.0 / gr.dr + 0.5 * bm);
    } else {
      // mirrored ghost: Phi_wall = kap (2 w / dr)
      d += cdt / gr.dr * kap[0] * 2.0 / gr.dr;
    }

    lower[i] = lo;
    diag[i] = d;
    upper[i] = up;
    rhs[i] = f.rho[i] * u[i];
  }
  if (theta < 1.0) {
    std::vector<double> lw(n);
    apply_operator(u, lw);
    for (int i = 0; i < n; ++i) rhs[i] += (1.0 - theta) * dt * lw[i];
  }
  fv::solve_tridiagonal(lower, diag, upper, rhs);
  for (int i = 0; i < n; ++i) f.m[i] = f.rho[i] * rhs[i];
}

void NavierStokesSolver::step(RadialField& f, double dt) const {
  if (cfg_.strang_splitting) {
    viscous_update(f, 0.5 * dt);
    fv::convective_step_midpoint(f, dt, gas_);
    check_positive(f, f.t + dt);
    viscous_update(f, 0.5 * dt);
  } else {
    fv::convective_step(f, dt, gas_);
    check_positive(f, f.t + dt);
    viscous_update(f, dt);
  }
  if (source_) {
    std::vector<double> rr(f.grid.cells, 0.0), mr(f.grid.cells, 0.0);
    source_(f.t, f.grid, rr, mr);
    for (int i = 0; i < f.grid.cells; ++i) {
      f.rho[i] += dt * rr[i];
      f.m[i] += dt * mr[i];
    }
    check_positive(f, f.t + dt);
  }
  f.t += dt;
}

DissipationRates NavierStokesSolver::rates(const RadialField& f) const {
  const RadialGrid& gr = f.grid;
  const int n = gr.cells;
  const int nd = gas_.dim;
  const double eps = visc_.epsilon;
  const double a = visc_.alpha;

  const std::vector<double> u = velocities(f);
  const std::vector<double> u_r = radial_derivative(gr, u);
  std::vector<double> p(n), mu(n);
  for (int i = 0; i < n; ++i) {
    p[i] = pressure(f.rho[i], gas_);
    mu[i] = viscosities(f.rho[i], visc_).mu;
  }
  const std::vector<double> p_r = radial_derivative(gr, p);
  const std::vector<double> mu_r = radial_derivative(gr, mu);

  DissipationRates out;
  out.visc_main = eps * radial_integral(gr, nd, [&](int i) {
    const double over_r = u[i] / gr.r(i);
    return f.rho[i] * (u_r[i] * u_r[i] + (nd - 1) * over_r * over_r);
  });
  out.visc_degen = eps * visc_.delta * radial_integral(gr, nd, [&](int i) {
    const double over_r = u[i] / gr.r(i);
    return std::pow(f.rho[i], a) *
           (a * u_r[i] * u_r[i] + 2.0 * (a - 1.0) * (nd - 1) * u[i] * u_r[i] / gr.r(i) +
            (1.0 + (nd - 1) * (a - 1.0)) * (nd - 1) * over_r * over_r);
  });
  out.bd_cross = eps * radial_integral(gr, nd, [&](int i) {
    return f.rho[i] > 0.0 ? p_r[i] / f.rho[i] * mu_r[i] : 0.0;
  });
  return out;
}

Trajectory NavierStokesSolver::run(const RadialField& initial,
                                   const std::vector<double>& probe_radii) const {
  const auto wall_start = std::chrono::steady_clock::now();
  RadialField f = initial;
  check_positive(f, f.t);

  Trajectory traj;
  traj.probe_radii = probe_radii;

  std::vector<int> probe_cells;
  for (double pr : probe_radii) {
    const int i = std::clamp(int((pr - f.grid.delta) / f.grid.dr), 0, f.grid.cells - 1);
    probe_cells.push_back(i);
  }

  AccumRow acc;
  acc.t = f.t;
  acc.probe_speed.assign(probe_radii.size(), 0.0);

  auto probe_rate = [&](const RadialField& s, size_t k) {
    const double uu = std::abs(s.u(probe_cells[k]));
    return uu + uu * uu * uu;
  };

  DissipationRates rate_old = rates(f);
  std::vector<double> probe_old(probe_radii.size());
  for (size_t k = 0; k < probe_radii.size(); ++k) probe_old[k] = probe_rate(f, k);

  traj.snapshots.push_back(f);
  traj.accum.push_back(acc);

  const double t_end = f.t + cfg_.t_end;
  const double interval = cfg_.snapshot_interval;
  double next_snap = interval > 0.0 ? f.t + interval : t_end;
  const double tiny = 1e-12 * (1.0 + t_end);

  while (f.t < t_end - tiny) {
    if (cfg_.max_wall_seconds > 0.0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
      if (elapsed > cfg_.max_wall_seconds)
        throw SolverFault("wall-clock budget exceeded", -1, f.t);
    }
    double dt = cfl_dt(f);
    const double target = std::min(t_end, next_snap);
    bool hit_target = false;
    if (f.t + dt >= target - tiny) {
      dt = target - f.t;
      hit_target = true;
    }
    step(f, dt);
    if (hit_target) f.t = target;

    const DissipationRates rate_new = rates(f);
    acc.visc_main += 0.5 * dt * (rate_old.visc_main + rate_new.visc_main);
    acc.visc_degen += 0.5 * dt * (rate_old.visc_degen + rate_new.visc_degen);
    acc.bd_cross += 0.5 * dt * (rate_old.bd_cross + rate_new.bd_cross);
    rate_old = rate_new;
    for (size_t k = 0; k < probe_cells.size(); ++k) {
      const double pn = probe_rate(f, k);
      acc.probe_speed[k] += 0.5 * dt * (probe_old[k] + pn);
      probe_old[k] = pn;
    }

    if (hit_target) {
      acc.t = f.t;
      traj.snapshots.push_back(f);
      traj.accum.push_back(acc);
      if (target == next_snap) next_snap += interval;
    }
  }

  if (traj.snapshots.back().t < t_end - tiny || traj.snapshots.size() == 1) {
    if (cfg_.t_end == 0.0 && traj.snapshots.size() == 1) return traj;  // t_end = 0: initial only
    acc.t = f.t;
    traj.snapshots.push_back(f);
    traj.accum.push_back(acc);
  }
  return traj;
}

}  // namespace sphlab
