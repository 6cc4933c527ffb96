#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sphlab {

//! Uniform cell-centered grid on the annulus [delta, b].
struct RadialGrid {
  double delta = 0.0;
  double b = 0.0;
  int cells = 0;
  double dr = 0.0;

  static RadialGrid make(double delta, double b, int cells) {
    if (!(delta > 0.0)) throw std::invalid_argument("RadialGrid: delta must be > 0");
    if (!(b > delta)) throw std::invalid_argument("RadialGrid: b must exceed delta");
    if (cells < 4) throw std::invalid_argument("RadialGrid: need at least 4 cells");
    RadialGrid g;
    g.delta = delta;
    g.b = b;
    g.cells = cells;
    g.dr = (b - delta) / cells;
    return g;
  }

  double r(int i) const { return delta + (i + 0.5) * dr; }
  double face(int i) const { return delta + i * dr; }

  bool operator==(const RadialGrid& o) const {
    return delta == o.delta && b == o.b && cells == o.cells;
  }
};

//! Discretized (rho, m) state at one instant.
struct RadialField {
  RadialGrid grid;
  std::vector<double> rho;
  std::vector<double> m;
  double t = 0.0;

  static RadialField zeros(const RadialGrid& g) {
    RadialField f;
    f.grid = g;
    f.rho.assign(g.cells, 0.0);
    f.m.assign(g.cells, 0.0);
    return f;
  }

  double u(int i) const { return rho[i] > 0.0 ? m[i] / rho[i] : 0.0; }

  bool finite() const {
    for (double v : rho)
      if (!std::isfinite(v)) return false;
    for (double v : m)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

//! Midpoint rule for Int f r^{N-1} dr on the grid; every diagnostic uses
//! this same quadrature.
template <class F>
double radial_integral(const RadialGrid& g, int dim, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < g.cells; ++i) acc += f(i) * std::pow(g.r(i), dim - 1);
  return acc * g.dr;
}

//! Centered differences in r, one-sided at the walls.
inline std::vector<double> radial_derivative(const RadialGrid& g, const std::vector<double>& f) {
  const int n = g.cells;
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  d[0] = (f[1] - f[0]) / g.dr;
  d[n - 1] = (f[n - 1] - f[n - 2]) / g.dr;
  for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * g.dr);
  return d;
}

}  // namespace sphlab
