#include "sphlab/commands.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sphlab/csvio.hpp"
#include "sphlab/euler.hpp"
#include "sphlab/initdata.hpp"

namespace sphlab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

InitialData initial_data_for(const RunConfig& cfg, const ViscosityParams& v,
                             const RadialGrid& grid) {
  const RadialProfile profile = make_profile(cfg);
  try {
    return build_initial_data(profile, cfg.gas, v, grid, cfg.beta, cfg.diag.vartheta);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Trajectory run_one(const RunConfig& cfg, const ViscosityParams& v, const RadialGrid& grid,
                   bool inviscid) {
  const InitialData data = initial_data_for(cfg, v, grid);
  if (inviscid) {
    const EulerSolver solver(cfg.gas, cfg.solver);
    return solver.run(data.field);
  }
  const NavierStokesSolver solver(cfg.gas, v, cfg.solver);
  return solver.run(data.field, cfg.diag.probe_radii);
}

void write_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << '\n';
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::vector<std::string> report_header(size_t probes) {
  std::vector<std::string> h = {"t",          "mass",       "e_rel",        "rho_min",
                                "rho_max",    "visc_main",  "visc_degen",   "energy_residual",
                                "bd",         "bd_cross",   "bd_residual",  "hi_local",
                                "hi_origin",  "grad_rho",   "grad_rho_acc", "decay_sup",
                                "decay_slope", "ur_l2",     "log_slope"};
  for (size_t k = 0; k < probes; ++k) h.push_back("probe_decay_" + std::to_string(k));
  return h;
}

void write_report_files(const DiagnosticsReport& report, const RunConfig& cfg,
                        const std::string& dir) {
  std::vector<std::vector<double>> rows;
  for (const ReportRow& r : report.rows) {
    std::vector<double> row = {r.t,          r.mass,      r.e_rel,        r.rho_min,
                               r.rho_max,    r.visc_main, r.visc_degen,   r.energy_residual,
                               r.bd,         r.bd_cross,  r.bd_residual,  r.hi_local,
                               r.hi_origin,  r.grad_rho,  r.grad_rho_acc, r.decay_sup,
                               r.decay_slope, r.ur_l2,     r.log_slope};
    for (double pd : r.probe_decay) row.push_back(pd);
    rows.push_back(std::move(row));
  }
  write_csv(dir + "/report.csv", report_header(cfg.diag.probe_radii.size()), rows);

  const DiagnosticsVerdicts& v = report.verdicts;
  json summary = {
      {"config_hash", cfg.hash},
      {"verdicts",
       {{"mass_constant", v.mass_constant},
        {"energy_nonnegative", v.energy_nonnegative},
        {"density_positive", v.density_positive},
        {"energy_nonincreasing", v.energy_nonincreasing},
        {"pass", v.pass}}},
      {"mass_drift", v.mass_drift},
      {"final_energy_residual", v.final_energy_residual},
      {"final_bd_residual", v.final_bd_residual},
  };
  write_json(summary, dir + "/summary.json");
}

}  // namespace

Trajectory run_from_config(const RunConfig& cfg) {
  return run_one(cfg, cfg.visc, cfg.make_grid(), cfg.solver_kind == "euler");
}

void write_trajectory(const Trajectory& traj, const RunConfig& cfg, const std::string& dir) {
  fs::create_directories(dir + "/snapshots");

  json manifest = {
      {"config_hash", cfg.hash},
      {"solver_kind", cfg.solver_kind},
      {"gas", {{"gamma", cfg.gas.gamma}, {"rho_bar", cfg.gas.rho_bar}, {"dim", cfg.gas.dim}}},
      {"visc",
       {{"epsilon", cfg.visc.epsilon}, {"delta", cfg.visc.delta}, {"alpha", cfg.visc.alpha}}},
      {"probe_radii", traj.probe_radii},
  };

  const RadialGrid& grid = traj.snapshots.front().grid;
  manifest["grid"] = {{"delta", grid.delta}, {"b", grid.b}, {"cells", grid.cells}};

  json snaps = json::array();
  std::vector<std::string> acc_header = {"t", "visc_main", "visc_degen", "bd_cross"};
  for (size_t k = 0; k < traj.probe_radii.size(); ++k)
    acc_header.push_back("probe_" + std::to_string(k));
  std::vector<std::vector<double>> acc_rows;

  for (size_t k = 0; k < traj.snapshots.size(); ++k) {
    const RadialField& f = traj.snapshots[k];
    char name[48];
    std::snprintf(name, sizeof(name), "snapshots/snap_%05zu.csv", k);
    std::vector<std::vector<double>> rows;
    rows.reserve(f.grid.cells);
    for (int i = 0; i < f.grid.cells; ++i)
      rows.push_back({f.t, f.grid.r(i), f.rho[i], f.m[i], f.u(i)});
    write_csv(dir + "/" + name, {"t", "r", "rho", "m", "u"}, rows);
    snaps.push_back({{"t", f.t}, {"file", name}});

    const AccumRow& a = traj.accum[k];
    std::vector<double> row = {a.t, a.visc_main, a.visc_degen, a.bd_cross};
    for (double ps : a.probe_speed) row.push_back(ps);
    row.resize(acc_header.size(), 0.0);
    acc_rows.push_back(std::move(row));
  }
  manifest["snapshots"] = snaps;
  write_csv(dir + "/accumulators.csv", acc_header, acc_rows);
  write_json(manifest, dir + "/manifest.json");
}

Trajectory load_trajectory(const std::string& dir) {
  const json manifest = load_json(dir + "/manifest.json");
  const json& gj = manifest.at("grid");
  const RadialGrid grid = RadialGrid::make(gj.at("delta").get<double>(),
                                           gj.at("b").get<double>(), gj.at("cells").get<int>());

  Trajectory traj;
  traj.probe_radii = manifest.at("probe_radii").get<std::vector<double>>();

  for (const json& s : manifest.at("snapshots")) {
    const CsvTable table = read_csv(dir + "/" + s.at("file").get<std::string>());
    const int ct = table.column("t"), crho = table.column("rho"), cm = table.column("m");
    if (ct < 0 || crho < 0 || cm < 0)
      throw std::runtime_error("snapshot is missing t/rho/m columns");
    if (static_cast<int>(table.rows.size()) != grid.cells)
      throw std::runtime_error("snapshot row count does not match the manifest grid");
    RadialField f = RadialField::zeros(grid);
    f.t = s.at("t").get<double>();
    for (int i = 0; i < grid.cells; ++i) {
      f.rho[i] = table.rows[i][crho];
      f.m[i] = table.rows[i][cm];
    }
    traj.snapshots.push_back(std::move(f));
  }

  const CsvTable acc = read_csv(dir + "/accumulators.csv");
  if (acc.rows.size() != traj.snapshots.size())
    throw std::runtime_error("accumulator rows do not match the snapshot count");
  for (const auto& row : acc.rows) {
    AccumRow a;
    a.t = row[0];
    a.visc_main = row[1];
    a.visc_degen = row[2];
    a.bd_cross = row[3];
    for (size_t k = 4; k < row.size(); ++k) a.probe_speed.push_back(row[k]);
    traj.accum.push_back(std::move(a));
  }
  return traj;
}

int cmd_init_data(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  const InitialData data = initial_data_for(cfg, cfg.visc, cfg.make_grid());

  std::vector<std::vector<double>> rows;
  const RadialField& f = data.field;
  for (int i = 0; i < f.grid.cells; ++i)
    rows.push_back({f.grid.r(i), f.rho[i], f.m[i]});
  write_csv(cfg.out_dir + "/initial_data.csv", {"r", "rho", "m"}, rows);

  const json sidecar = {
      {"config_hash", cfg.hash}, {"E0", data.E0},           {"E1", data.E1},
      {"E2", data.E2},           {"E0_tilde", data.E0_tilde},
  };
  write_json(sidecar, cfg.out_dir + "/initial_data.json");
  return 0;
}

int cmd_run(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  const Trajectory traj = run_from_config(cfg);
  write_trajectory(traj, cfg, cfg.out_dir);
  const ViscosityParams veff =
      cfg.solver_kind == "euler" ? ViscosityParams::make(0.0, cfg.visc.delta, cfg.gas.dim)
                                 : cfg.visc;
  const DiagnosticsReport report = build_report(traj, cfg.gas, veff, cfg.diag);
  write_report_files(report, cfg, cfg.out_dir);
  return report.verdicts.pass ? 0 : 1;
}

int cmd_diagnose(const RunConfig& cfg, const std::string& trajectory_dir) {
  fs::create_directories(cfg.out_dir);
  const Trajectory traj = load_trajectory(trajectory_dir);
  const json manifest = load_json(trajectory_dir + "/manifest.json");
  const bool inviscid = manifest.at("solver_kind").get<std::string>() == "euler";
  const ViscosityParams veff =
      inviscid ? ViscosityParams::make(0.0, cfg.visc.delta, cfg.gas.dim) : cfg.visc;
  const DiagnosticsReport report = build_report(traj, cfg.gas, veff, cfg.diag);
  write_report_files(report, cfg, cfg.out_dir);
  return report.verdicts.pass ? 0 : 1;
}

namespace {

json distances_json(const LadderDistances& d) {
  return {{"rho", d.d_rho}, {"m", d.d_m}, {"sqrho_u", d.d_sqrho_u}};
}

}  // namespace

namespace {

LadderTable run_single_ladder(const RunConfig& cfg, const LadderSpec& spec, int jobs) {
  auto factory = [&cfg, &spec](double value) {
    RadialGrid grid = cfg.make_grid();
    ViscosityParams v = cfg.visc;
    switch (spec.parameter) {
      case LadderParameter::Viscosity:
        v.epsilon = value;
        break;
      case LadderParameter::Degeneracy:
        v.delta = value;
        grid = cfg.make_grid_for(value, cfg.grid_b);
        break;
      case LadderParameter::OuterRadius:
        grid = cfg.make_grid_for(cfg.visc.delta, value);
        break;
    }
    return run_one(cfg, v, grid, false);
  };

  Trajectory reference;
  const Trajectory* ref = nullptr;
  if (spec.parameter == LadderParameter::Viscosity) {
    ViscosityParams v0 = cfg.visc;
    v0.epsilon = 0.0;
    reference = run_one(cfg, v0, cfg.make_grid(), true);
    ref = &reference;
  }
  return run_ladder(spec, cfg.gas.dim, factory, jobs, ref);
}

void write_ladder_table(const LadderTable& table, const std::string& path) {
  std::vector<std::string> header = {"value",     "d_rho",   "d_m",           "d_sqrho_u",
                                     "d_ref_rho", "d_ref_m", "d_ref_sqrho_u", "wall_seconds"};
  std::vector<std::vector<double>> rows;
  for (const LadderRow& r : table.rows) {
    rows.push_back({r.value, r.to_next.d_rho, r.to_next.d_m, r.to_next.d_sqrho_u,
                    r.to_reference.d_rho, r.to_reference.d_m, r.to_reference.d_sqrho_u,
                    r.wall_seconds});
  }
  write_csv(path, header, rows);
}

json ladder_verdict_json(const LadderTable& table) {
  return {
      {"parameter", to_string(table.parameter)},
      {"cauchy_rho", table.cauchy_rho},
      {"cauchy_m", table.cauchy_m},
      {"cauchy_sqrho_u", table.cauchy_sqrho_u},
      {"has_reference", table.has_reference},
      {"reference_trend", table.reference_trend},
      {"pass", table.pass()},
  };
}

}  // namespace

int cmd_ladder(const RunConfig& cfg, int jobs) {
  if (!cfg.has_ladder) throw ConfigError("ladder: missing ladder block in the config");
  fs::create_directories(cfg.out_dir);

  if (!cfg.ladder_sequence) {
    const LadderTable table = run_single_ladder(cfg, cfg.ladder, jobs);
    write_ladder_table(table, cfg.out_dir + "/ladder.csv");
    json verdict = ladder_verdict_json(table);
    verdict["config_hash"] = cfg.hash;
    write_json(verdict, cfg.out_dir + "/ladder.json");
    return table.pass() ? 0 : 1;
  }

  // the three limit passages in order: b up, then delta down, then eps down
  bool all_pass = true;
  json verdicts = json::array();
  const std::vector<std::pair<LadderParameter, const std::vector<double>*>> passes = {
      {LadderParameter::OuterRadius, &cfg.seq_b_values},
      {LadderParameter::Degeneracy, &cfg.seq_delta_values},
      {LadderParameter::Viscosity, &cfg.seq_epsilon_values},
  };
  for (const auto& [param, values] : passes) {
    LadderSpec spec = cfg.ladder;
    spec.parameter = param;
    spec.values = *values;
    const LadderTable table = run_single_ladder(cfg, spec, jobs);
    write_ladder_table(table, cfg.out_dir + "/ladder_" + to_string(param) + ".csv");
    verdicts.push_back(ladder_verdict_json(table));
    all_pass = all_pass && table.pass();
  }
  const json combined = {
      {"config_hash", cfg.hash}, {"sequence", verdicts}, {"pass", all_pass}};
  write_json(combined, cfg.out_dir + "/ladder.json");
  return all_pass ? 0 : 1;
}

int cmd_compare(const RunConfig& cfg, int jobs) {
  (void)jobs;
  fs::create_directories(cfg.out_dir);

  const RadialGrid grid = cfg.make_grid();
  const Trajectory viscous = run_one(cfg, cfg.visc, grid, false);
  ViscosityParams v0 = cfg.visc;
  v0.epsilon = 0.0;
  const Trajectory inviscid = run_one(cfg, v0, grid, true);

  LadderSpec spec = cfg.ladder;
  if (!cfg.has_ladder) {
    spec.window_lo = cfg.diag.window_lo;
    spec.window_hi = cfg.diag.window_hi;
  }
  const LadderDistances d = trajectory_distance(viscous, inviscid, spec, cfg.gas.dim);

  write_csv(cfg.out_dir + "/compare.csv", {"epsilon", "d_rho", "d_m", "d_sqrho_u"},
            {{cfg.visc.epsilon, d.d_rho, d.d_m, d.d_sqrho_u}});
  const json out = {{"config_hash", cfg.hash}, {"distances", distances_json(d)}};
  write_json(out, cfg.out_dir + "/compare.json");
  return 0;
}

}  // namespace sphlab
