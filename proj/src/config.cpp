#include "sphlab/config.hpp"

#include <cmath>
#include <fstream>

namespace sphlab {

using nlohmann::json;

std::string config_hash(const json& j) {
  const std::string dump = j.dump();
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError("missing required field " + path + "." + key);
  return *it;
}

double num(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + " must be a number");
  return j.get<double>();
}

double get_num(const json& j, const char* key, const std::string& path, double fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return num(*it, path + "." + key);
}

int get_int(const json& j, const char* key, const std::string& path, int fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_integer()) throw ConfigError(path + "." + key + " must be an integer");
  return it->get<int>();
}

bool get_bool(const json& j, const char* key, const std::string& path, bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw ConfigError(path + "." + key + " must be a boolean");
  return it->get<bool>();
}

std::string get_str(const json& j, const char* key, const std::string& path,
                    const std::string& fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_string()) throw ConfigError(path + "." + key + " must be a string");
  return it->get<std::string>();
}

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig cfg;
  cfg.raw = j;
  cfg.hash = config_hash(j);

  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  {
    const json& gj = require(j, "gas", "");
    const double gamma = num(require(gj, "gamma", "gas"), "gas.gamma");
    const double rho_bar = num(require(gj, "rho_bar", "gas"), "gas.rho_bar");
    const int dim = get_int(gj, "dim", "gas", 2);
    try {
      cfg.gas = GasParams::make(gamma, rho_bar, dim);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("gas: ") + e.what());
    }
  }

  {
    const json& vj = require(j, "visc", "");
    const double eps = num(require(vj, "epsilon", "visc"), "visc.epsilon");
    const double delta = num(require(vj, "delta", "visc"), "visc.delta");
    const double alpha = get_num(vj, "alpha", "visc", -1.0);
    try {
      cfg.visc = ViscosityParams::make(eps, delta, cfg.gas.dim, alpha);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("visc: ") + e.what());
    }
    if (!(delta > 0.0)) throw ConfigError("visc.delta must be > 0 (it is the inner radius)");
  }

  {
    const json& gj = require(j, "grid", "");
    cfg.grid_cells = get_int(gj, "cells", "grid", 800);
    if (cfg.grid_cells < 4) throw ConfigError("grid.cells must be >= 4");
    const double gdelta = num(require(gj, "delta", "grid"), "grid.delta");
    if (gdelta != cfg.visc.delta)
      throw ConfigError("grid.delta must equal visc.delta (one truncation parameter)");
    cfg.grid_b = num(require(gj, "b", "grid"), "grid.b");
    if (!(cfg.grid_b > gdelta)) throw ConfigError("grid.b must exceed grid.delta");
  }

  if (auto it = j.find("solver"); it != j.end()) {
    const json& sj = *it;
    cfg.solver.cfl = get_num(sj, "cfl", "solver", cfg.solver.cfl);
    cfg.solver.t_end = get_num(sj, "t_end", "solver", cfg.solver.t_end);
    cfg.solver.snapshot_interval =
        get_num(sj, "snapshot_interval", "solver", cfg.solver.snapshot_interval);
    cfg.solver.implicit_viscous =
        get_bool(sj, "implicit_viscous", "solver", cfg.solver.implicit_viscous);
    cfg.solver.strang_splitting =
        get_bool(sj, "strang_splitting", "solver", cfg.solver.strang_splitting);
    cfg.solver.positivity_floor =
        get_num(sj, "positivity_floor", "solver", cfg.solver.positivity_floor);
    cfg.solver.max_wall_seconds =
        get_num(sj, "max_wall_seconds", "solver", cfg.solver.max_wall_seconds);
    cfg.solver_kind = get_str(sj, "kind", "solver", cfg.solver_kind);
    if (cfg.solver_kind != "navier_stokes" && cfg.solver_kind != "euler")
      throw ConfigError("solver.kind must be navier_stokes or euler");
    try {
      cfg.solver.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("solver: ") + e.what());
    }
  }

  if (auto it = j.find("initdata"); it != j.end()) {
    const json& ij = *it;
    cfg.preset = get_str(ij, "preset", "initdata", cfg.preset);
    cfg.profile_csv = get_str(ij, "csv", "initdata", "");
    cfg.beta = get_num(ij, "beta", "initdata", cfg.beta);
    if (!(cfg.beta > 0.0)) throw ConfigError("initdata.beta must be > 0");
    if (!(cfg.beta * cfg.visc.epsilon < 1.0))
      throw ConfigError("initdata.beta: beta*epsilon must be < 1 for a nonempty clamp band");
    if (auto pit = ij.find("params"); pit != ij.end()) {
      if (!pit->is_object()) throw ConfigError("initdata.params must be an object");
      cfg.preset_params = *pit;
    }
  }

  if (auto it = j.find("diagnostics"); it != j.end()) {
    const json& dj = *it;
    if (auto wit = dj.find("window"); wit != dj.end()) {
      if (!wit->is_array() || wit->size() != 2)
        throw ConfigError("diagnostics.window must be [lo, hi]");
      cfg.diag.window_lo = num((*wit)[0], "diagnostics.window[0]");
      cfg.diag.window_hi = num((*wit)[1], "diagnostics.window[1]");
      if (!(cfg.diag.window_lo < cfg.diag.window_hi))
        throw ConfigError("diagnostics.window must be a nonempty interval");
    }
    cfg.diag.origin_hi = get_num(dj, "origin_window_end", "diagnostics", cfg.diag.origin_hi);
    cfg.diag.vartheta = get_num(dj, "vartheta", "diagnostics", cfg.diag.vartheta);
    if (!(cfg.diag.vartheta > 0.0 && cfg.diag.vartheta < 1.0))
      throw ConfigError("diagnostics.vartheta must lie in (0, 1)");
    if (auto pit = dj.find("probe_radii"); pit != dj.end()) {
      if (!pit->is_array()) throw ConfigError("diagnostics.probe_radii must be an array");
      for (const auto& e : *pit) cfg.diag.probe_radii.push_back(num(e, "diagnostics.probe_radii[]"));
    }
  }

  if (auto it = j.find("ladder"); it != j.end()) {
    const json& lj = *it;
    cfg.has_ladder = true;
    const std::string pname = get_str(lj, "parameter", "ladder", "epsilon");
    if (auto wit = lj.find("window"); wit != lj.end()) {
      if (!wit->is_array() || wit->size() != 2)
        throw ConfigError("ladder.window must be [lo, hi]");
      cfg.ladder.window_lo = num((*wit)[0], "ladder.window[0]");
      cfg.ladder.window_hi = num((*wit)[1], "ladder.window[1]");
    }
    cfg.ladder.p = get_num(lj, "p", "ladder", cfg.ladder.p);
    cfg.ladder.q = get_num(lj, "q", "ladder", cfg.ladder.q);
    cfg.ladder.resolution = get_int(lj, "resolution", "ladder", cfg.ladder.resolution);

    auto read_values = [&](const char* key, std::vector<double>& out) {
      auto vit = lj.find(key);
      if (vit == lj.end()) return false;
      if (!vit->is_array()) throw ConfigError(std::string("ladder.") + key + " must be an array");
      for (const auto& e : *vit) out.push_back(num(e, std::string("ladder.") + key + "[]"));
      return true;
    };

    if (pname == "sequence") {
      cfg.ladder_sequence = true;
      if (!read_values("b_values", cfg.seq_b_values))
        cfg.seq_b_values = {cfg.grid_b, 2.0 * cfg.grid_b, 4.0 * cfg.grid_b};
      if (!read_values("delta_values", cfg.seq_delta_values)) {
        if (4.0 * cfg.visc.delta > 1.0)
          throw ConfigError(
              "ladder: 4*delta exceeds 1; give ladder.delta_values explicitly");
        cfg.seq_delta_values = {4.0 * cfg.visc.delta, 2.0 * cfg.visc.delta, cfg.visc.delta};
      }
      if (!read_values("epsilon_values", cfg.seq_epsilon_values)) {
        if (4.0 * cfg.visc.epsilon > 1.0)
          throw ConfigError(
              "ladder: 4*epsilon exceeds 1; give ladder.epsilon_values explicitly");
        cfg.seq_epsilon_values = {4.0 * cfg.visc.epsilon, 2.0 * cfg.visc.epsilon,
                                  cfg.visc.epsilon};
      }
      for (auto [param, vals] :
           {std::pair{LadderParameter::OuterRadius, &cfg.seq_b_values},
            std::pair{LadderParameter::Degeneracy, &cfg.seq_delta_values},
            std::pair{LadderParameter::Viscosity, &cfg.seq_epsilon_values}}) {
        LadderSpec probe = cfg.ladder;
        probe.parameter = param;
        probe.values = *vals;
        try {
          probe.validate(cfg.gas.gamma);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(std::string("ladder (") + to_string(param) + "): " + e.what());
        }
      }
    } else {
      cfg.ladder.parameter = ladder_parameter_from_string(pname);
      read_values("values", cfg.ladder.values);
      try {
        cfg.ladder.validate(cfg.gas.gamma);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("ladder: ") + e.what());
      }
    }
  }

  cfg.out_dir = get_str(j, "output", "", cfg.out_dir);
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return parse_config(j);
}

RadialProfile make_profile(const RunConfig& cfg) {
  if (!cfg.profile_csv.empty()) {
    try {
      return profile_from_csv(cfg.profile_csv, cfg.gas.rho_bar);
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
  }
  const nlohmann::json& p = cfg.preset_params;
  auto param = [&](const char* key, double fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    if (!it->is_number()) throw ConfigError(std::string("initdata.params.") + key + " must be a number");
    return it->get<double>();
  };
  const double rb = cfg.gas.rho_bar;
  if (cfg.preset == "rest") return preset_rest(rb);
  if (cfg.preset == "bump")
    return preset_bump(rb, param("amplitude", 0.5), param("center", 3.0), param("width", 0.8));
  if (cfg.preset == "pulse")
    return preset_pulse(rb, param("amplitude", 0.3), param("center", 2.5), param("width", 1.0));
  if (cfg.preset == "tail")
    return preset_tail(rb, param("amplitude", 0.5), param("exponent", 0.5 * cfg.gas.dim + 0.3));
  if (cfg.preset == "step")
    return preset_step(rb, param("inner", 1.0), param("r0", 1.0));
  throw ConfigError("initdata.preset: unknown preset '" + cfg.preset + "'");
}

}  // namespace sphlab
