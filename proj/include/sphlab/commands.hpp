#pragma once

#include <string>

#include "sphlab/config.hpp"

namespace sphlab {

//! Build the approximate initial data for a config and run the configured
//! solver (viscous by default, inviscid when solver.kind = euler).
Trajectory run_from_config(const RunConfig& cfg);

//! Trajectory persistence: one CSV per snapshot plus a manifest and the
//! in-step accumulator series, all keyed by the config hash.
void write_trajectory(const Trajectory& traj, const RunConfig& cfg, const std::string& dir);
Trajectory load_trajectory(const std::string& dir);

//! Subcommand bodies; they return process exit codes (0 pass, 1 verdict
//! failure; config and runtime faults surface as exceptions).
int cmd_init_data(const RunConfig& cfg);
int cmd_run(const RunConfig& cfg);
int cmd_diagnose(const RunConfig& cfg, const std::string& trajectory_dir);
int cmd_ladder(const RunConfig& cfg, int jobs);
int cmd_compare(const RunConfig& cfg, int jobs);

}  // namespace sphlab
