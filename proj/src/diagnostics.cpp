#include "sphlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace sphlab {

namespace {

double relative_energy(const RadialField& f, const GasParams& g) {
  return radial_integral(f.grid, g.dim, [&](int i) {
    const double kin = f.rho[i] > 0.0 ? 0.5 * f.m[i] * f.m[i] / f.rho[i] : 0.0;
    return kin + relative_internal_energy(f.rho[i], g);
  });
}

}  // namespace

double bd_functional(const RadialField& f, const GasParams& g, const ViscosityParams& v) {
  const RadialGrid& gr = f.grid;
  std::vector<double> mu(gr.cells);
  for (int i = 0; i < gr.cells; ++i) mu[i] = viscosities(f.rho[i], v).mu;
  const std::vector<double> mu_r = radial_derivative(gr, mu);
  return radial_integral(gr, g.dim, [&](int i) {
    const double eff = f.u(i) + (f.rho[i] > 0.0 ? v.epsilon * mu_r[i] / f.rho[i] : 0.0);
    return 0.5 * f.rho[i] * eff * eff + relative_internal_energy(f.rho[i], g);
  });
}

std::vector<double> energy_identity_residual(const Trajectory& traj, const GasParams& g) {
  std::vector<double> out;
  if (traj.snapshots.empty()) return out;
  const double e0 = relative_energy(traj.snapshots.front(), g);
  for (size_t k = 0; k < traj.snapshots.size(); ++k) {
    const AccumRow& acc = traj.accum[k];
    out.push_back(std::abs(relative_energy(traj.snapshots[k], g) + acc.visc_main +
                           acc.visc_degen - e0));
  }
  return out;
}

std::vector<double> bd_identity_residual(const Trajectory& traj, const GasParams& g,
                                         const ViscosityParams& v) {
  std::vector<double> out;
  if (traj.snapshots.empty()) return out;
  const double b0 = bd_functional(traj.snapshots.front(), g, v);
  for (size_t k = 0; k < traj.snapshots.size(); ++k)
    out.push_back(std::abs(bd_functional(traj.snapshots[k], g, v) + traj.accum[k].bd_cross - b0));
  return out;
}

DiagnosticsReport build_report(const Trajectory& traj, const GasParams& g,
                               const ViscosityParams& v, const DiagnosticsConfig& cfg) {
  DiagnosticsReport report;
  if (traj.snapshots.empty()) return report;

  const RadialGrid& gr = traj.snapshots.front().grid;
  const int n = gr.cells;
  const int nd = g.dim;
  const double eps = v.epsilon, dvis = v.delta, a = v.alpha;

  const double e0 = relative_energy(traj.snapshots.front(), g);
  const double b0 = bd_functional(traj.snapshots.front(), g, v);
  const double mass0 = radial_integral(gr, nd, [&](int i) {
    return traj.snapshots.front().rho[i];
  });

  double hi_local = 0.0, hi_origin = 0.0, grad_acc = 0.0;
  double prev_local = 0.0, prev_origin = 0.0, prev_grad = 0.0, prev_t = 0.0;

  double max_mass_drift = 0.0;
  bool energy_nonneg = true, density_pos = true, energy_noninc = true;
  double prev_e = e0;

  for (size_t k = 0; k < traj.snapshots.size(); ++k) {
    const RadialField& f = traj.snapshots[k];
    const AccumRow& acc = traj.accum[k];
    ReportRow row;
    row.t = f.t;

    std::vector<double> u(n), p(n), mu(n);
    for (int i = 0; i < n; ++i) {
      u[i] = f.u(i);
      p[i] = pressure(f.rho[i], g);
      mu[i] = viscosities(f.rho[i], v).mu;
    }
    const std::vector<double> u_r = radial_derivative(gr, u);
    const std::vector<double> rho_r = radial_derivative(gr, f.rho);

    row.mass = radial_integral(gr, nd, [&](int i) { return f.rho[i]; });
    row.e_rel = relative_energy(f, g);
    row.rho_min = *std::min_element(f.rho.begin(), f.rho.end());
    row.rho_max = *std::max_element(f.rho.begin(), f.rho.end());
    row.visc_main = acc.visc_main;
    row.visc_degen = acc.visc_degen;
    row.energy_residual = std::abs(row.e_rel + acc.visc_main + acc.visc_degen - e0);
    row.bd = bd_functional(f, g, v);
    row.bd_cross = acc.bd_cross;
    row.bd_residual = std::abs(row.bd + acc.bd_cross - b0);

    // instantaneous integrands of the two accumulated monitors
    double local_rate = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = gr.r(i);
      if (r >= cfg.window_lo && r <= cfg.window_hi)
        local_rate += std::pow(f.rho[i], g.gamma + 1.0) * gr.dr;
    }
    double origin_rate = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = gr.r(i);
      if (r > cfg.origin_hi) break;
      origin_rate += (f.rho[i] * std::pow(std::abs(u[i]), 3.0) +
                      std::pow(f.rho[i], g.gamma + g.theta)) *
                     std::pow(r, nd - 1) * gr.dr;
    }
    double grad_rate = 0.0;
    if (eps > 0.0) {
      grad_rate = eps * radial_integral(gr, nd, [&](int i) {
        if (!(f.rho[i] > 0.0)) return 0.0;
        const double fac = 1.0 + dvis * std::pow(f.rho[i], a - 1.0);
        return fac * std::pow(f.rho[i], g.gamma - 2.0) * rho_r[i] * rho_r[i];
      });
    }
    if (k > 0) {
      const double dt = f.t - prev_t;
      hi_local += 0.5 * dt * (prev_local + local_rate);
      hi_origin += 0.5 * dt * (prev_origin + origin_rate);
      grad_acc += 0.5 * dt * (prev_grad + grad_rate);
    }
    prev_local = local_rate;
    prev_origin = origin_rate;
    prev_grad = grad_rate;
    prev_t = f.t;
    row.hi_local = hi_local;
    row.hi_origin = hi_origin;
    row.grad_rho_acc = grad_acc;

    row.grad_rho = eps * eps * radial_integral(gr, nd, [&](int i) {
      if (!(f.rho[i] > 0.0)) return 0.0;
      const double ra = std::pow(f.rho[i], a - 1.0);
      return (1.0 + dvis * ra + dvis * dvis * ra * ra) * rho_r[i] * rho_r[i] / f.rho[i];
    });

    row.decay_sup = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = gr.r(i);
      if (r < 1.0) continue;
      const double w = std::pow(r, 0.75 * (nd - 1) + 0.25 * cfg.vartheta);
      row.decay_sup = std::max(row.decay_sup, std::abs(f.rho[i] - g.rho_bar) * w);
    }

    // least-squares slope of log|rho - rho_bar| against log r over the outer
    // half of the domain; a diagnostic for the far-field decay rate, zero
    // when the tail carries no signal
    {
      double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
      int count = 0;
      for (int i = 0; i < n; ++i) {
        const double r = gr.r(i);
        if (r < std::max(1.0, 0.5 * gr.b)) continue;
        const double dev = std::abs(f.rho[i] - g.rho_bar);
        if (dev <= 1e-13 * g.rho_bar) continue;
        const double x = std::log(r), y = std::log(dev);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
      }
      const double det = count * sxx - sx * sx;
      row.decay_slope = (count >= 8 && det > 0.0) ? (count * sxy - sx * sy) / det : 0.0;
    }

    row.ur_l2 = 0.0;
    for (int i = 0; i < n; ++i) row.ur_l2 += u_r[i] * u_r[i] * gr.dr;
    row.log_slope = radial_integral(gr, nd, [&](int i) {
      if (!(f.rho[i] > 0.0)) return 0.0;
      return std::pow(rho_r[i] / f.rho[i], 2.0 * nd);
    });

    row.probe_decay.resize(traj.probe_radii.size());
    for (size_t j = 0; j < traj.probe_radii.size(); ++j) {
      const double w = std::pow(traj.probe_radii[j], nd - 1 + 0.5 * cfg.vartheta);
      row.probe_decay[j] = (j < acc.probe_speed.size() ? acc.probe_speed[j] : 0.0) * w;
    }

    max_mass_drift = std::max(max_mass_drift, std::abs(row.mass - mass0));
    energy_nonneg = energy_nonneg && row.e_rel >= -1e-15;
    density_pos = density_pos && row.rho_min >= 0.0 && (eps == 0.0 || row.rho_min > 0.0);
    energy_noninc = energy_noninc && row.e_rel <= prev_e + 1e-10 * (1.0 + e0);
    prev_e = row.e_rel;

    report.rows.push_back(std::move(row));
  }

  DiagnosticsVerdicts& ver = report.verdicts;
  ver.mass_drift = mass0 > 0.0 ? max_mass_drift / mass0 : max_mass_drift;
  ver.mass_constant = ver.mass_drift <= 1e-12;
  ver.energy_nonnegative = energy_nonneg;
  ver.density_positive = density_pos;
  ver.energy_nonincreasing = energy_noninc;
  ver.final_energy_residual = report.rows.back().energy_residual;
  ver.final_bd_residual = report.rows.back().bd_residual;
  ver.pass = ver.mass_constant && ver.energy_nonnegative && ver.density_positive &&
             (eps > 0.0 || ver.energy_nonincreasing);
  return report;
}

}  // namespace sphlab
