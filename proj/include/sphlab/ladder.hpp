#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sphlab/grid.hpp"
#include "sphlab/solver.hpp"

namespace sphlab {

enum class LadderParameter { OuterRadius, Degeneracy, Viscosity };

LadderParameter ladder_parameter_from_string(const std::string& s);
std::string to_string(LadderParameter p);

struct LadderSpec {
  LadderParameter parameter = LadderParameter::Viscosity;
  std::vector<double> values;  //!< >= 3, strictly monotone
  double window_lo = 1.0;
  double window_hi = 3.0;
  double p = 1.0;  //!< exponent for the density metric
  double q = 1.0;  //!< exponent for the momentum metric
  int resolution = 400;

  void validate(double gamma) const;
};

//! Which discrete field enters a metric.
enum class FieldKind { Density, Momentum, SqrtRhoU };

//! Weighted space-time L^p distance over window x [t0, T]: resample both
//! trajectories onto a common uniform window grid by linear interpolation,
//! integrate |f - g|^p with weight r^{N-1} in space (midpoint) and
//! trapezoidally over the shared snapshot times, then take the p-th root.
//! On vacuum cells sqrt(rho) u is zero.
double lp_distance(const Trajectory& a, const Trajectory& b, FieldKind kind, double p,
                   double window_lo, double window_hi, int dim, int resolution);

struct LadderDistances {
  double d_rho = 0.0;
  double d_m = 0.0;
  double d_sqrho_u = 0.0;
};

LadderDistances trajectory_distance(const Trajectory& a, const Trajectory& b,
                                    const LadderSpec& spec, int dim);

struct LadderRow {
  double value = 0.0;       //!< parameter value of the ladder point
  LadderDistances to_next;  //!< distance to the next ladder point (last row: zeros)
  LadderDistances to_reference;  //!< distance to the reference run, when present
  double wall_seconds = 0.0;
};

struct LadderTable {
  LadderParameter parameter = LadderParameter::Viscosity;
  std::vector<LadderRow> rows;
  bool cauchy_rho = false;
  bool cauchy_m = false;
  bool cauchy_sqrho_u = false;
  bool reference_trend = false;  //!< distances to the reference strictly decrease
  bool has_reference = false;

  bool pass() const {
    return cauchy_rho && cauchy_m && cauchy_sqrho_u && (!has_reference || reference_trend);
  }
};

//! Run every ladder point through the supplied factory (concurrently, up to
//! `jobs` at a time), then reduce successive-pair distances and verdicts.
//! An optional reference trajectory (an inviscid run, say) adds a distance
//! column and its own trend verdict.
LadderTable run_ladder(const LadderSpec& spec, int dim,
                       const std::function<Trajectory(double)>& run_point, int jobs = 1,
                       const Trajectory* reference = nullptr);

}  // namespace sphlab
