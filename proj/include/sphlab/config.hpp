#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "sphlab/diagnostics.hpp"
#include "sphlab/eos.hpp"
#include "sphlab/grid.hpp"
#include "sphlab/ladder.hpp"
#include "sphlab/profile.hpp"
#include "sphlab/solver.hpp"

namespace sphlab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! Parsed and validated run configuration; `hash` is embedded in every
//! artifact so outputs are keyed to the exact inputs that produced them.
struct RunConfig {
  GasParams gas = GasParams::make(2.0, 1.0, 2);
  ViscosityParams visc = ViscosityParams::make(0.05, 0.1, 2);
  int grid_cells = 800;
  double grid_b = 11.0;
  SolverConfig solver;
  std::string solver_kind = "navier_stokes";  // or "euler"

  std::string preset = "rest";
  std::string profile_csv;
  nlohmann::json preset_params = nlohmann::json::object();
  double beta = 1e-3;

  DiagnosticsConfig diag;
  bool has_ladder = false;
  LadderSpec ladder;
  //! parameter = "sequence": the three limit passages in order (b up, then
  //! delta down, then epsilon down), each with its own value list.
  bool ladder_sequence = false;
  std::vector<double> seq_b_values, seq_delta_values, seq_epsilon_values;

  std::string out_dir = "out";
  std::string hash;
  nlohmann::json raw;

  RadialGrid make_grid() const { return RadialGrid::make(visc.delta, grid_b, grid_cells); }

  //! Grid with the same spacing over a different annulus (for ladders).
  RadialGrid make_grid_for(double delta, double b) const {
    const double dr = (grid_b - visc.delta) / grid_cells;
    const int cells = std::max(4, static_cast<int>(std::lround((b - delta) / dr)));
    return RadialGrid::make(delta, delta + cells * dr, cells);
  }
};

//! FNV-1a over the canonical (key-sorted) dump.
std::string config_hash(const nlohmann::json& j);

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);

//! Initial profile selected by the config (preset or CSV).
RadialProfile make_profile(const RunConfig& cfg);

}  // namespace sphlab
