#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphlab/initdata.hpp"

using namespace sphlab;

TEST_CASE("density clamp band") {
  const double eps = 0.01, beta = 1e-3;
  const double lo = std::pow(beta * eps, 0.25);
  const double hi = std::pow(beta * eps, -0.5);

  ScalarFn rest = clamp_density([](double) { return 1.0; }, eps, beta);
  CHECK(rest(3.0) == 1.0);  // inside the band, unchanged

  ScalarFn vac = clamp_density([](double) { return 0.0; }, eps, beta);
  CHECK(vac(1.0) == doctest::Approx(lo).epsilon(1e-15));

  ScalarFn spike = clamp_density([](double) { return 1e6; }, eps, beta);
  CHECK(spike(1.0) == doctest::Approx(hi).epsilon(1e-15));

  // idempotent
  ScalarFn twice = clamp_density(vac, eps, beta);
  CHECK(twice(1.0) == vac(1.0));

  // inviscid limit leaves the profile alone
  ScalarFn id = clamp_density([](double) { return 0.0; }, 0.0, beta);
  CHECK(id(1.0) == 0.0);

  CHECK_THROWS_AS(clamp_density([](double) { return 1.0; }, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("far-field cutoff") {
  const double eps = 0.01, beta = 1e-3, rho_bar = 1.0;
  const int dim = 2;
  const double rc = std::pow(beta * eps, -1.0 / (2.0 * dim));

  ScalarFn f = farfield_cutoff([](double r) { return 2.0 + r; }, eps, beta, rho_bar, 3.0, dim);
  CHECK(f(2.0 * rc) == rho_bar);
  CHECK(f(0.5 * rc) == 2.0 + 0.5 * rc);

  ScalarFn c = farfield_cutoff([rho_bar](double) { return rho_bar; }, eps, beta, rho_bar, 0.0, dim);
  CHECK(c(0.1) == rho_bar);
  CHECK(c(100.0) == rho_bar);

  // cutoff radius must clear the far-field radius by 2
  CHECK_THROWS_AS(
      farfield_cutoff([](double) { return 1.0; }, eps, beta, rho_bar, rc + 1.0, dim),
      std::invalid_argument);
}

namespace {

// Direct Cartesian 2-D convolution of sqrt(f) against the normalized bump of
// width sigma, evaluated at radius r; independent of the radial reduction.
double conv_sqrt_2d_oracle(const ScalarFn& f, double sigma, double r) {
  const int n = 600;
  const double h = 2.0 * sigma / n;
  double acc = 0.0, mass = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double yx = -sigma + (i + 0.5) * h;
      const double yy = -sigma + (j + 0.5) * h;
      const double rr = (yx * yx + yy * yy) / (sigma * sigma);
      if (rr >= 1.0) continue;
      const double w = std::exp(-1.0 / (1.0 - rr));
      const double dx = r - yx;
      acc += w * std::sqrt(f(std::hypot(dx, yy)));
      mass += w;
    }
  }
  return acc / mass;
}

}  // namespace

TEST_CASE("square-root mollification") {
  const int dim = 2;

  // constants map to themselves exactly
  ScalarFn cfn = mollify_sqrt_density([](double) { return 2.7; }, 0.3, dim);
  CHECK(cfn(0.5) == doctest::Approx(2.7).epsilon(1e-14));
  CHECK(cfn(4.0) == doctest::Approx(2.7).epsilon(1e-14));

  // pointwise bounds survive mollification and squaring
  ScalarFn step = [](double r) { return r < 1.0 ? 1.0 : 4.0; };
  ScalarFn sm = mollify_sqrt_density(step, 0.25, dim);
  for (double r : {0.2, 0.8, 0.95, 1.0, 1.05, 1.3, 2.0}) {
    const double v = sm(r);
    CHECK(v >= 1.0 - 1e-13);
    CHECK(v <= 4.0 + 1e-13);
  }

  // midpoint of the jump against the direct 2-D oracle; the integrand is
  // discontinuous here, so the rules agree only to their jump-limited order
  const double main_val = sm(1.0);
  const double oracle = conv_sqrt_2d_oracle(step, 0.25, 1.0);
  CHECK(main_val == doctest::Approx(oracle * oracle).epsilon(5e-3));
  CHECK(main_val > 1.0);
  CHECK(main_val < 4.0);
  CHECK(std::abs(main_val - 2.25) < 0.15);

  // zero width is the identity
  ScalarFn id = mollify_sqrt_density(step, 0.0, dim);
  CHECK(id(0.5) == 1.0);
}

TEST_CASE("velocity approximation preserves kinetic energy exactly") {
  const GasParams g = GasParams::make(2.0, 1.0, 2);
  ScalarFn rho0 = [](double r) { return 1.0 + 0.3 * std::sin(r); };
  ScalarFn m0 = [](double r) { return 0.2 * std::exp(-(r - 2.0) * (r - 2.0)); };
  ScalarFn rho_eps = mollify_sqrt_density(rho0, 0.4, g.dim);
  ScalarFn u = approx_velocity(m0, rho0, rho_eps);

  const RadialGrid grid = RadialGrid::make(0.1, 8.0, 500);
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < grid.cells; ++i) {
    const double r = grid.r(i);
    const double w = std::pow(r, g.dim - 1) * grid.dr;
    const double uu = u(r);
    lhs += rho_eps(r) * uu * uu * w;
    rhs += m0(r) * m0(r) / rho0(r) * w;
  }
  CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);

  ScalarFn zero_u = approx_velocity([](double) { return 0.0; }, rho0, rho_eps);
  CHECK(zero_u(1.0) == 0.0);

  // rho0 == rho_eps pointwise collapses to m0 / rho0
  ScalarFn plain = approx_velocity(m0, rho0, rho0);
  CHECK(plain(2.0) == doctest::Approx(m0(2.0) / rho0(2.0)).epsilon(1e-14));

  // momentum on vacuum violates the input contract
  ScalarFn bad = approx_velocity([](double) { return 1.0; }, [](double) { return 0.0; }, rho_eps);
  CHECK_THROWS_AS(bad(1.0), std::invalid_argument);
}

TEST_CASE("windowed velocity: support and energy ladder") {
  const int dim = 2;
  const RadialProfile pulse = preset_pulse(1.0, 0.3, 2.5, 1.0);
  ScalarFn rho_eps = mollify_sqrt_density(pulse.rho0, std::pow(0.05, 0.25), dim);

  {
    const double delta = 0.25;
    ScalarFn u = windowed_velocity(pulse.m0, pulse.rho0, rho_eps, delta, dim);
    for (double r : {0.1, 0.3, 2.0 * delta, 1.0 + 1.0 / delta, 6.0}) CHECK(u(r) == 0.0);
    CHECK(u(2.5) != 0.0);
  }

  {
    ScalarFn zu = windowed_velocity([](double) { return 0.0; }, pulse.rho0, rho_eps, 0.25, dim);
    CHECK(zu(2.5) == 0.0);
  }

  // weighted L2 energy approaches the unwindowed one as delta shrinks
  const RadialGrid grid = RadialGrid::make(0.05, 12.0, 1200);
  ScalarFn u_plain = approx_velocity(pulse.m0, pulse.rho0, rho_eps);
  const double e_limit = radial_integral(grid, dim, [&](int i) {
    const double r = grid.r(i);
    const double uu = u_plain(r);
    return rho_eps(r) * uu * uu;
  });
  std::vector<double> gaps;
  for (double delta : {0.4, 0.2, 0.1}) {
    ScalarFn u = windowed_velocity(pulse.m0, pulse.rho0, rho_eps, delta, dim);
    std::vector<double> uvals(grid.cells);
    for (int i = 0; i < grid.cells; ++i) uvals[i] = u(grid.r(i));
    const double e = radial_integral(grid, dim, [&](int i) {
      return rho_eps(grid.r(i)) * uvals[i] * uvals[i];
    });
    gaps.push_back(std::abs(e - e_limit));
  }
  CHECK(gaps[1] < gaps[0]);
  CHECK(gaps[2] < gaps[1]);
}

TEST_CASE("annulus restriction") {
  const RadialGrid grid = RadialGrid::make(0.25, 6.0, 200);
  ScalarFn rho = [](double) { return 1.0; };
  ScalarFn u = [](double) { return 0.0; };
  const RadialField f = restrict_annulus(rho, u, grid);
  for (int i = 0; i < grid.cells; ++i) {
    CHECK(f.rho[i] == 1.0);
    CHECK(f.m[i] == 0.0);
  }

  // mass agrees with the shared quadrature to round-off
  const double mass = radial_integral(grid, 2, [&](int i) { return f.rho[i]; });
  const double direct = radial_integral(grid, 2, [&](int) { return 1.0; });
  CHECK(mass == doctest::Approx(direct).epsilon(1e-15));

  const RadialGrid tight = RadialGrid::make(0.25, 4.0, 100);  // b < 1 + 1/delta = 5
  CHECK_THROWS_AS(restrict_annulus(rho, u, tight), std::invalid_argument);
  CHECK_NOTHROW(restrict_annulus(rho, u, tight, false));
}

TEST_CASE("pipeline keeps the clamp band") {
  const GasParams g = GasParams::make(2.0, 1.0, 2);
  const ViscosityParams v = ViscosityParams::make(0.01, 0.1, 2);
  const double beta = 1e-3;
  const double lo = std::pow(beta * v.epsilon, 0.25);
  const double hi = std::pow(beta * v.epsilon, -0.5);

  RadialProfile wild;
  wild.rho0 = [](double r) {
    if (r < 2.0) return 0.0;  // vacuum pocket
    if (r < 3.0) return 1e9;  // spike
    return 1.0;
  };
  wild.m0 = [](double) { return 0.0; };
  wild.far_field_radius = 3.0;
  wild.momentum_zero = true;

  const RadialGrid grid = RadialGrid::make(0.1, 11.5, 400);
  const InitialData data = build_initial_data(wild, g, v, grid, beta);
  for (int i = 0; i < grid.cells; ++i) {
    CHECK(data.field.rho[i] >= lo - 1e-12);
    CHECK(data.field.rho[i] <= hi + 1e-9);
  }
}

TEST_CASE("gradient-energy smallness across the viscosity ladder") {
  const GasParams g = GasParams::make(2.0, 1.0, 2);
  const RadialProfile step = preset_step(1.0, 4.0, 1.0);
  const RadialGrid grid = RadialGrid::make(0.1, 12.0, 600);

  std::vector<double> eps_ladder = {0.1, 0.01, 0.001};
  std::vector<double> e1;
  for (double eps : eps_ladder) {
    const ViscosityParams v = ViscosityParams::make(eps, 0.1, g.dim);
    e1.push_back(build_initial_data(step, g, v, grid).E1);
  }
  // one constant, fitted at the head of the ladder, bounds the tail
  const double c_fit = e1[0] / std::sqrt(eps_ladder[0]);
  for (size_t k = 0; k < e1.size(); ++k) {
    CHECK(e1[k] <= 1.5 * c_fit * std::sqrt(eps_ladder[k]));
  }
  CHECK(e1[1] < e1[0]);
  CHECK(e1[2] < e1[1]);
}

TEST_CASE("weighted energy growth stays below the cutoff rate") {
  const GasParams g = GasParams::make(2.0, 1.0, 2);
  const double beta = 1e-3, vartheta = 0.5;
  const RadialProfile tail = preset_tail(1.0, 0.5, 0.5 * g.dim + 0.3);
  const RadialGrid grid = RadialGrid::make(0.1, 40.0, 1200);

  std::vector<double> eps_ladder = {0.1, 0.01, 0.001};
  std::vector<double> weighted;
  for (double eps : eps_ladder) {
    ScalarFn rho_eps = mollify_sqrt_density(
        farfield_cutoff(clamp_density(tail.rho0, eps, beta), eps, beta, g.rho_bar,
                        tail.far_field_radius, g.dim),
        std::pow(eps, 0.25), g.dim);
    weighted.push_back(radial_integral(grid, g.dim, [&](int i) {
      const double r = grid.r(i);
      return relative_internal_energy(rho_eps(r), g) * std::pow(1.0 + r, g.dim - 1 + vartheta);
    }));
  }
  const double rate = (g.dim - 1 + vartheta) / (2.0 * g.dim);
  const double c_fit = weighted[0] * std::pow(eps_ladder[0], rate);
  for (size_t k = 0; k < weighted.size(); ++k) {
    CHECK(weighted[k] <= 1.5 * c_fit * std::pow(eps_ladder[k], -rate));
  }
  // the integral genuinely grows as the cutoff recedes
  CHECK(weighted[1] > weighted[0]);
  CHECK(weighted[2] > weighted[1]);
}

TEST_CASE("L^gamma convergence of the approximate density on compacts") {
  const GasParams g = GasParams::make(2.0, 1.0, 2);
  const double beta = 1e-3;
  const RadialProfile bump = preset_bump(1.0);
  const RadialGrid grid = RadialGrid::make(0.1, 6.0, 600);

  std::vector<double> dist;
  for (double eps : {0.1, 0.01, 0.001}) {
    ScalarFn rho_eps = mollify_sqrt_density(
        farfield_cutoff(clamp_density(bump.rho0, eps, beta), eps, beta, g.rho_bar,
                        bump.far_field_radius, g.dim),
        std::pow(eps, 0.25), g.dim);
    const double lg = radial_integral(grid, g.dim, [&](int i) {
      const double r = grid.r(i);
      return std::pow(std::abs(rho_eps(r) - bump.rho0(r)), g.gamma);
    });
    dist.push_back(std::pow(lg, 1.0 / g.gamma));
  }
  CHECK(dist[1] < dist[0]);
  CHECK(dist[2] < dist[1]);
}
