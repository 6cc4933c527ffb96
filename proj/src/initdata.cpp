#include "sphlab/initdata.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace sphlab {

ScalarFn clamp_density(ScalarFn rho0, double eps, double beta) {
  if (eps == 0.0) return rho0;
  if (!(beta > 0.0)) throw std::invalid_argument("clamp_density: beta must be > 0");
  if (!(beta * eps < 1.0))
    throw std::invalid_argument("clamp_density: beta*eps must be < 1 so the band is nonempty");
  const double lo = std::pow(beta * eps, 0.25);
  const double hi = std::pow(beta * eps, -0.5);
  return [rho0 = std::move(rho0), lo, hi](double r) {
    return std::clamp(rho0(r), lo, hi);
  };
}

ScalarFn farfield_cutoff(ScalarFn profile, double eps, double beta, double rho_bar,
                         double far_field_radius, int dim) {
  if (eps == 0.0) return profile;
  const double rc = std::pow(beta * eps, -1.0 / (2.0 * dim));
  if (rc < far_field_radius + 2.0)
    throw std::invalid_argument(
        "farfield_cutoff: cutoff radius " + std::to_string(rc) +
        " does not clear the profile far field " + std::to_string(far_field_radius) +
        " + 2; decrease beta");
  return [profile = std::move(profile), rc, rho_bar](double r) {
    return r > rc ? rho_bar : profile(r);
  };
}

RadialMollifier::RadialMollifier(double sigma, int dim, int radial_order, int angular_order)
    : sigma_(sigma), dim_(dim) {
  if (!(sigma > 0.0)) throw std::invalid_argument("RadialMollifier: sigma must be > 0");
  if (dim < 2) throw std::invalid_argument("RadialMollifier: dim must be >= 2");

  const QuadRule qt = gauss_legendre(radial_order);
  const QuadRule qp = gauss_legendre(angular_order);

  // tensor rule over offset radius t in (0, sigma) and polar angle phi in
  // (0, pi); the bump kernel, t^{N-1}, and sin(phi)^{N-2} all fold into one
  // weight normalized to unit sum
  double mass = 0.0;
  for (int i = 0; i < qt.size(); ++i) {
    const double t = 0.5 * sigma * (qt.nodes[i] + 1.0);
    const double x = t / sigma;
    const double bump = std::exp(-1.0 / (1.0 - x * x));
    const double wt = qt.weights[i] * bump * std::pow(t, dim - 1);
    for (int j = 0; j < qp.size(); ++j) {
      const double phi = 0.5 * M_PI * (qp.nodes[j] + 1.0);
      const double w = wt * qp.weights[j] * std::pow(std::sin(phi), dim - 2);
      off_t_.push_back(t);
      cos_phi_.push_back(std::cos(phi));
      weight_.push_back(w);
      mass += w;
    }
  }
  for (double& w : weight_) w /= mass;
}

double RadialMollifier::apply(const ScalarFn& f, double r) const {
  double acc = 0.0;
  for (size_t k = 0; k < weight_.size(); ++k) {
    const double t = off_t_[k];
    const double d2 = r * r + t * t - 2.0 * r * t * cos_phi_[k];
    acc += weight_[k] * f(std::sqrt(std::max(d2, 0.0)));
  }
  return acc;
}

ScalarFn mollify_sqrt_density(ScalarFn profile, double sigma, int dim) {
  if (sigma == 0.0) return profile;
  auto moll = std::make_shared<RadialMollifier>(sigma, dim);
  auto sqrt_prof = [profile = std::move(profile)](double r) { return std::sqrt(profile(r)); };
  return [moll, sqrt_prof](double r) {
    const double s = moll->apply(sqrt_prof, r);
    return s * s;
  };
}

ScalarFn approx_velocity(ScalarFn m0, ScalarFn rho0, ScalarFn rho_eps) {
  return [m0 = std::move(m0), rho0 = std::move(rho0), rho_eps = std::move(rho_eps)](double r) {
    const double m = m0(r);
    if (m == 0.0) return 0.0;
    const double rho = rho0(r);
    if (!(rho > 0.0))
      throw std::invalid_argument("approx_velocity: nonzero momentum on vacuum at r = " +
                                  std::to_string(r));
    return m / (std::sqrt(rho) * std::sqrt(rho_eps(r)));
  };
}

ScalarFn windowed_velocity(ScalarFn m0, ScalarFn rho0, ScalarFn rho_eps, double delta, int dim) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("windowed_velocity: delta must be in (0, 1]");
  auto moll = std::make_shared<RadialMollifier>(delta, dim);
  const double win_lo = 4.0 * delta;
  const double win_hi = 1.0 / delta;
  auto windowed = [m0 = std::move(m0), rho0 = std::move(rho0), win_lo, win_hi](double r) {
    if (r < win_lo || r > win_hi) return 0.0;
    const double m = m0(r);
    if (m == 0.0) return 0.0;
    const double rho = rho0(r);
    if (!(rho > 0.0))
      throw std::invalid_argument("windowed_velocity: nonzero momentum on vacuum at r = " +
                                  std::to_string(r));
    return m / std::sqrt(rho);
  };
  return [moll, windowed, rho_eps = std::move(rho_eps), win_lo, win_hi, delta](double r) {
    if (r <= win_lo - delta || r >= win_hi + delta) return 0.0;
    const double conv = moll->apply(windowed, r);
    if (conv == 0.0) return 0.0;
    return conv / std::sqrt(rho_eps(r));
  };
}

RadialField restrict_annulus(const ScalarFn& rho_fn, const ScalarFn& u_fn, const RadialGrid& grid,
                             bool enforce_window) {
  if (enforce_window && grid.b < 1.0 + 1.0 / grid.delta)
    throw std::invalid_argument("restrict_annulus: b = " + std::to_string(grid.b) +
                                " is below 1 + 1/delta = " +
                                std::to_string(1.0 + 1.0 / grid.delta) +
                                "; the velocity window does not fit");
  RadialField f = RadialField::zeros(grid);
  for (int i = 0; i < grid.cells; ++i) {
    const double r = grid.r(i);
    const double rho = rho_fn(r);
    f.rho[i] = rho;
    f.m[i] = rho * u_fn(r);
  }
  return f;
}

InitialData build_initial_data(const RadialProfile& profile, const GasParams& g,
                               const ViscosityParams& v, const RadialGrid& grid, double beta,
                               double theta_w) {
  const double eps = v.epsilon;
  ScalarFn rho_hat = farfield_cutoff(clamp_density(profile.rho0, eps, beta), eps, beta,
                                     g.rho_bar, profile.far_field_radius, g.dim);
  const double sigma = eps > 0.0 ? std::pow(eps, 0.25) : 0.0;
  ScalarFn rho_eps = mollify_sqrt_density(std::move(rho_hat), sigma, g.dim);

  ScalarFn u_fn;
  if (profile.momentum_zero) {
    u_fn = [](double) { return 0.0; };
  } else {
    u_fn = windowed_velocity(profile.m0, profile.rho0, rho_eps, grid.delta, g.dim);
  }

  InitialData out;
  out.field = restrict_annulus(rho_eps, u_fn, grid, !profile.momentum_zero);

  const RadialField& f = out.field;
  const int n = grid.cells;
  std::vector<double> sqrt_rho(n), mu(n);
  for (int i = 0; i < n; ++i) {
    sqrt_rho[i] = std::sqrt(f.rho[i]);
    mu[i] = viscosities(f.rho[i], v).mu;
  }
  const std::vector<double> dsr = radial_derivative(grid, sqrt_rho);
  const std::vector<double> dmu = radial_derivative(grid, mu);

  const double a = v.alpha, d = v.delta;
  out.E0 = g.omega_n * radial_integral(grid, g.dim, [&](int i) {
    return 0.5 * f.rho[i] * f.u(i) * f.u(i) + relative_internal_energy(f.rho[i], g);
  });
  out.E1 = eps * eps * radial_integral(grid, g.dim, [&](int i) {
    const double ra = std::pow(f.rho[i], a - 1.0);
    const double fac = 1.0 + 2.0 * a * d * ra + a * a * d * d * ra * ra;
    return fac * dsr[i] * dsr[i];
  });
  out.E2 = radial_integral(grid, g.dim, [&](int i) {
    const double u2n = std::pow(f.u(i), 2.0 * g.dim);
    const double slope = std::pow(std::abs(dmu[i] / f.rho[i]), 2.0 * g.dim);
    return f.rho[i] * (u2n + slope);
  });
  out.E0_tilde = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = std::pow(grid.r(i), 2.0 * (g.dim - 1) + theta_w);
    out.E0_tilde +=
        (0.5 * f.rho[i] * f.u(i) * f.u(i) + relative_internal_energy(f.rho[i], g)) * w;
  }
  out.E0_tilde *= grid.dr;
  return out;
}

}  // namespace sphlab
