#include "sphlab/ladder.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

namespace sphlab {

LadderParameter ladder_parameter_from_string(const std::string& s) {
  if (s == "b") return LadderParameter::OuterRadius;
  if (s == "delta") return LadderParameter::Degeneracy;
  if (s == "epsilon") return LadderParameter::Viscosity;
  throw std::invalid_argument("ladder.parameter must be one of b, delta, epsilon, sequence (got '" +
                              s + "')");
}

std::string to_string(LadderParameter p) {
  switch (p) {
    case LadderParameter::OuterRadius: return "b";
    case LadderParameter::Degeneracy: return "delta";
    default: return "epsilon";
  }
}

void LadderSpec::validate(double gamma) const {
  if (values.size() < 3) throw std::invalid_argument("ladder.values needs at least 3 entries");
  const bool incr = values[1] > values[0];
  for (size_t k = 1; k < values.size(); ++k) {
    if (incr ? values[k] <= values[k - 1] : values[k] >= values[k - 1])
      throw std::invalid_argument("ladder.values must be strictly monotone");
  }
  if (!(window_lo < window_hi))
    throw std::invalid_argument("ladder.window must be a nonempty interval");
  if (!(p >= 1.0 && p < gamma + 1.0))
    throw std::invalid_argument("ladder.p must lie in [1, gamma+1)");
  const double q_hi = 3.0 * (gamma + 1.0) / (gamma + 3.0);
  if (!(q >= 1.0 && q < q_hi))
    throw std::invalid_argument("ladder.q must lie in [1, 3(gamma+1)/(gamma+3))");
  if (resolution < 8) throw std::invalid_argument("ladder.resolution must be >= 8");
}

namespace {

double sample_field(const RadialField& f, FieldKind kind, double r) {
  const RadialGrid& g = f.grid;
  // clamped linear interpolation between cell centers
  const double pos = (r - g.r(0)) / g.dr;
  const int i0 = std::max(0, std::min(g.cells - 2, static_cast<int>(std::floor(pos))));
  const double w = std::min(1.0, std::max(0.0, pos - i0));
  auto value = [&](int i) {
    switch (kind) {
      case FieldKind::Density: return f.rho[i];
      case FieldKind::Momentum: return f.m[i];
      default: return f.rho[i] > 0.0 ? f.m[i] / std::sqrt(f.rho[i]) : 0.0;
    }
  };
  return (1.0 - w) * value(i0) + w * value(i0 + 1);
}

}  // namespace

double lp_distance(const Trajectory& a, const Trajectory& b, FieldKind kind, double p,
                   double window_lo, double window_hi, int dim, int resolution) {
  if (a.snapshots.empty() || b.snapshots.empty())
    throw std::invalid_argument("lp_distance: empty trajectory");
  if (a.snapshots.size() != b.snapshots.size())
    throw std::invalid_argument("lp_distance: snapshot counts differ");
  const double h = (window_hi - window_lo) / resolution;
  if (!(h > 0.0)) throw std::invalid_argument("lp_distance: empty window");

  std::vector<double> power(a.snapshots.size());
  for (size_t k = 0; k < a.snapshots.size(); ++k) {
    const RadialField& fa = a.snapshots[k];
    const RadialField& fb = b.snapshots[k];
    if (std::abs(fa.t - fb.t) > 1e-10 * (1.0 + std::abs(fa.t)))
      throw std::invalid_argument("lp_distance: snapshot times differ");
    double acc = 0.0;
    for (int j = 0; j < resolution; ++j) {
      const double r = window_lo + (j + 0.5) * h;
      const double diff = std::abs(sample_field(fa, kind, r) - sample_field(fb, kind, r));
      acc += std::pow(diff, p) * std::pow(r, dim - 1);
    }
    power[k] = acc * h;
  }

  if (power.size() == 1) return std::pow(power[0], 1.0 / p);
  double total = 0.0;
  for (size_t k = 1; k < power.size(); ++k) {
    const double dt = a.snapshots[k].t - a.snapshots[k - 1].t;
    total += 0.5 * dt * (power[k - 1] + power[k]);
  }
  return std::pow(total, 1.0 / p);
}

LadderDistances trajectory_distance(const Trajectory& a, const Trajectory& b,
                                    const LadderSpec& spec, int dim) {
  LadderDistances d;
  d.d_rho = lp_distance(a, b, FieldKind::Density, spec.p, spec.window_lo, spec.window_hi, dim,
                        spec.resolution);
  d.d_m = lp_distance(a, b, FieldKind::Momentum, spec.q, spec.window_lo, spec.window_hi, dim,
                      spec.resolution);
  d.d_sqrho_u = lp_distance(a, b, FieldKind::SqrtRhoU, 2.0, spec.window_lo, spec.window_hi, dim,
                            spec.resolution);
  return d;
}

LadderTable run_ladder(const LadderSpec& spec, int dim,
                       const std::function<Trajectory(double)>& run_point, int jobs,
                       const Trajectory* reference) {
  LadderTable table;
  table.parameter = spec.parameter;
  table.has_reference = reference != nullptr;

  const size_t n = spec.values.size();
  std::vector<Trajectory> trajs(n);
  std::vector<double> wall(n, 0.0);

  // bounded fan-out; results land in ladder order
  size_t next = 0;
  while (next < n) {
    const size_t batch = std::min<size_t>(std::max(jobs, 1), n - next);
    std::vector<std::future<std::pair<Trajectory, double>>> futures;
    for (size_t j = 0; j < batch; ++j) {
      const double value = spec.values[next + j];
      futures.push_back(std::async(std::launch::async, [&run_point, value]() {
        const auto start = std::chrono::steady_clock::now();
        Trajectory t = run_point(value);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::make_pair(std::move(t), secs);
      }));
    }
    for (size_t j = 0; j < batch; ++j) {
      auto res = futures[j].get();
      trajs[next + j] = std::move(res.first);
      wall[next + j] = res.second;
    }
    next += batch;
  }

  table.rows.resize(n);
  for (size_t k = 0; k < n; ++k) {
    table.rows[k].value = spec.values[k];
    table.rows[k].wall_seconds = wall[k];
    if (k + 1 < n)
      table.rows[k].to_next = trajectory_distance(trajs[k], trajs[k + 1], spec, dim);
    if (reference)
      table.rows[k].to_reference = trajectory_distance(trajs[k], *reference, spec, dim);
  }

  // strictly decreasing, except that pairs already at the round-off floor
  // count as converged (compact data may give exact zeros for every point)
  constexpr double kFloor = 1e-12;
  auto trend = [](double prev, double next) {
    return next < prev || (prev <= kFloor && next <= kFloor);
  };
  table.cauchy_rho = table.cauchy_m = table.cauchy_sqrho_u = true;
  for (size_t k = 0; k + 2 < n; ++k) {
    table.cauchy_rho &= trend(table.rows[k].to_next.d_rho, table.rows[k + 1].to_next.d_rho);
    table.cauchy_m &= trend(table.rows[k].to_next.d_m, table.rows[k + 1].to_next.d_m);
    table.cauchy_sqrho_u &=
        trend(table.rows[k].to_next.d_sqrho_u, table.rows[k + 1].to_next.d_sqrho_u);
  }
  if (reference) {
    table.reference_trend = true;
    for (size_t k = 0; k + 1 < n; ++k) {
      table.reference_trend &=
          trend(table.rows[k].to_reference.d_rho, table.rows[k + 1].to_reference.d_rho) &&
          trend(table.rows[k].to_reference.d_m, table.rows[k + 1].to_reference.d_m) &&
          trend(table.rows[k].to_reference.d_sqrho_u,
                table.rows[k + 1].to_reference.d_sqrho_u);
    }
  }
  return table;
}

}  // namespace sphlab
