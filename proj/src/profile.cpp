#include "sphlab/profile.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "sphlab/csvio.hpp"

namespace sphlab {

RadialProfile preset_rest(double rho_bar) {
  RadialProfile p;
  p.rho0 = [rho_bar](double) { return rho_bar; };
  p.m0 = [](double) { return 0.0; };
  p.far_field_radius = 0.0;
  p.momentum_zero = true;
  return p;
}

RadialProfile preset_bump(double rho_bar, double amplitude, double center, double width) {
  RadialProfile p;
  p.rho0 = [=](double r) {
    const double x = (r - center) / width;
    return rho_bar * (1.0 + amplitude * std::exp(-x * x));
  };
  p.m0 = [](double) { return 0.0; };
  // the Gaussian tail is below double precision past six widths
  p.far_field_radius = center + 6.0 * width;
  p.momentum_zero = true;
  return p;
}

RadialProfile preset_pulse(double rho_bar, double amplitude, double center, double width) {
  RadialProfile p;
  p.rho0 = [rho_bar](double) { return rho_bar; };
  p.m0 = [=](double r) {
    const double x = (r - center) / width;
    if (std::abs(x) >= 1.0) return 0.0;
    return amplitude * std::exp(-1.0 / (1.0 - x * x));
  };
  p.far_field_radius = center + width;
  p.momentum_zero = false;
  return p;
}

RadialProfile preset_tail(double rho_bar, double amplitude, double exponent) {
  if (!(amplitude >= 0.0 && amplitude <= 0.5))
    throw std::invalid_argument("preset_tail: amplitude must be in [0, 1/2]");
  RadialProfile p;
  p.rho0 = [=](double r) { return rho_bar * (1.0 + amplitude * std::pow(1.0 + r, -exponent)); };
  p.m0 = [](double) { return 0.0; };
  p.far_field_radius = 0.0;  // within the half-band of rho_bar everywhere
  p.momentum_zero = true;
  return p;
}

RadialProfile preset_step(double rho_bar, double inner, double r0) {
  RadialProfile p;
  p.rho0 = [=](double r) { return r < r0 ? inner : rho_bar; };
  p.m0 = [](double) { return 0.0; };
  p.far_field_radius = r0;
  p.momentum_zero = true;
  return p;
}

namespace {

struct SampledColumns {
  std::vector<double> r, rho, m;

  double interp(const std::vector<double>& col, double x) const {
    if (x <= r.front()) return col.front();
    if (x >= r.back()) return col.back();
    // r is strictly increasing
    size_t lo = 0, hi = r.size() - 1;
    while (hi - lo > 1) {
      const size_t mid = (lo + hi) / 2;
      (r[mid] <= x ? lo : hi) = mid;
    }
    const double w = (x - r[lo]) / (r[hi] - r[lo]);
    return (1.0 - w) * col[lo] + w * col[hi];
  }
};

}  // namespace

RadialProfile profile_from_csv(const std::string& path) { return profile_from_csv(path, 0.0); }

RadialProfile profile_from_csv(const std::string& path, double rho_bar) {
  const CsvTable table = read_csv(path);
  const int cr = table.column("r");
  const int crho = table.column("rho0");
  const int cm = table.column("m0");
  if (cr < 0 || crho < 0 || cm < 0)
    throw std::runtime_error("profile_from_csv: " + path + ": header must contain r,rho0,m0");
  if (table.rows.size() < 2)
    throw std::runtime_error("profile_from_csv: " + path + ": need at least two rows");

  auto cols = std::make_shared<SampledColumns>();
  double prev = -1.0;
  for (size_t k = 0; k < table.rows.size(); ++k) {
    const auto& row = table.rows[k];
    const double r = row[cr];
    if (r <= prev)
      throw std::runtime_error("profile_from_csv: " + path + ": row " + std::to_string(k + 2) +
                               ": radii must be strictly increasing");
    if (row[crho] < 0.0)
      throw std::runtime_error("profile_from_csv: " + path + ": row " + std::to_string(k + 2) +
                               ": negative density");
    prev = r;
    cols->r.push_back(r);
    cols->rho.push_back(row[crho]);
    cols->m.push_back(row[cm]);
  }

  RadialProfile p;
  p.rho0 = [cols](double r) { return cols->interp(cols->rho, r); };
  p.m0 = [cols](double r) { return cols->interp(cols->m, r); };
  p.momentum_zero = true;
  for (double v : cols->m)
    if (v != 0.0) p.momentum_zero = false;

  // far field: the radius past which the samples sit in the half-band of
  // rho_bar with zero momentum; falls back to the last radius
  p.far_field_radius = cols->r.back();
  if (rho_bar > 0.0) {
    size_t k = cols->r.size();
    while (k > 0) {
      const double rho = cols->rho[k - 1];
      if (rho < 0.5 * rho_bar || rho > 1.5 * rho_bar || cols->m[k - 1] != 0.0) break;
      --k;
    }
    p.far_field_radius = k == 0 ? cols->r.front() : cols->r[k - 1];
  }
  return p;
}

}  // namespace sphlab
