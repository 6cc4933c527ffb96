#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sphlab/commands.hpp"
#include "sphlab/csvio.hpp"

using namespace sphlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json base_config() {
  return json{
      {"gas", {{"gamma", 2.0}, {"rho_bar", 1.0}, {"dim", 2}}},
      {"visc", {{"epsilon", 0.05}, {"delta", 0.1}}},
      {"grid", {{"cells", 200}, {"delta", 0.1}, {"b", 11.0}}},
      {"solver",
       {{"cfl", 0.4}, {"t_end", 0.1}, {"snapshot_interval", 0.05}, {"kind", "navier_stokes"}}},
      {"initdata", {{"preset", "rest"}}},
      {"diagnostics", {{"window", {1.0, 2.0}}, {"vartheta", 0.5}}},
      {"output", "out"},
  };
}

std::string fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("sphlab_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config validation produces field-precise errors") {
  json j = base_config();
  j.erase("gas");
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("gas"), ConfigError);

  j = base_config();
  j["gas"]["gamma"] = 0.9;
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["grid"]["delta"] = 0.2;  // disagrees with visc.delta
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("grid.delta"), ConfigError);

  j = base_config();
  j["ladder"] = {{"parameter", "epsilon"}, {"values", {0.1}}};
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("ladder"), ConfigError);

  j = base_config();
  j["solver"]["kind"] = "spectral";
  CHECK_THROWS_AS(parse_config(j), ConfigError);

  j = base_config();
  j["initdata"] = {{"preset", "unknown-preset"}};
  CHECK_THROWS_AS(make_profile(parse_config(j)), ConfigError);
}

TEST_CASE("config hash is stable and order-insensitive") {
  const json a = base_config();
  json b;  // same content, different insertion order
  for (auto it = a.rbegin(); it != a.rend(); ++it) b[it.key()] = it.value();
  CHECK(config_hash(a) == config_hash(b));
  json c = a;
  c["solver"]["t_end"] = 0.2;
  CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("init-data on the rest preset") {
  RunConfig cfg = parse_config(base_config());
  cfg.out_dir = fresh_dir("initdata_rest");
  CHECK(cmd_init_data(cfg) == 0);

  const CsvTable table = read_csv(cfg.out_dir + "/initial_data.csv");
  REQUIRE(table.header == std::vector<std::string>{"r", "rho", "m"});
  REQUIRE(static_cast<int>(table.rows.size()) == cfg.grid_cells);
  for (const auto& row : table.rows) {
    CHECK(row[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(row[2] == 0.0);
  }

  json sidecar;
  std::ifstream(cfg.out_dir + "/initial_data.json") >> sidecar;
  CHECK(sidecar["config_hash"] == cfg.hash);
  CHECK(sidecar["E0"].get<double>() <= 1e-20);

  // determinism: rerunning produces byte-identical artifacts
  const std::string first = slurp(cfg.out_dir + "/initial_data.csv");
  CHECK(cmd_init_data(cfg) == 0);
  CHECK(slurp(cfg.out_dir + "/initial_data.csv") == first);
}

TEST_CASE("malformed profile CSV errors name the offending row") {
  const std::string dir = fresh_dir("bad_csv");
  {
    std::ofstream out(dir + "/profile.csv");
    out << "r,rho0,m0\n0.5,1.0,0\n0.4,1.0,0\n";  // non-monotone radius at row 3
  }
  json j = base_config();
  j["initdata"] = {{"csv", dir + "/profile.csv"}};
  try {
    make_profile(parse_config(j));
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
}

TEST_CASE("run on the rest preset passes with tiny residuals") {
  RunConfig cfg = parse_config(base_config());
  cfg.out_dir = fresh_dir("run_rest");
  CHECK(cmd_run(cfg) == 0);

  json summary;
  std::ifstream(cfg.out_dir + "/summary.json") >> summary;
  CHECK(summary["verdicts"]["pass"].get<bool>());
  CHECK(summary["final_energy_residual"].get<double>() <= 1e-12);
  CHECK(summary["final_bd_residual"].get<double>() <= 1e-12);
  CHECK(summary["mass_drift"].get<double>() <= 1e-12);
}

TEST_CASE("run artifacts are bit-identical across reruns") {
  json j = base_config();
  j["initdata"] = {{"preset", "bump"}, {"params", {{"amplitude", 0.3}}}};
  RunConfig cfg = parse_config(j);
  cfg.out_dir = fresh_dir("run_det_a");
  CHECK(cmd_run(cfg) == 0);
  const std::string snap_a = slurp(cfg.out_dir + "/snapshots/snap_00002.csv");
  const std::string report_a = slurp(cfg.out_dir + "/report.csv");

  cfg.out_dir = fresh_dir("run_det_b");
  CHECK(cmd_run(cfg) == 0);
  CHECK(slurp(cfg.out_dir + "/snapshots/snap_00002.csv") == snap_a);
  CHECK(slurp(cfg.out_dir + "/report.csv") == report_a);
}

TEST_CASE("diagnose reproduces the in-run report byte for byte") {
  json j = base_config();
  j["initdata"] = {{"preset", "bump"}, {"params", {{"amplitude", 0.4}}}};
  j["diagnostics"]["probe_radii"] = {2.0, 4.0};
  RunConfig cfg = parse_config(j);
  cfg.out_dir = fresh_dir("diag_run");
  CHECK(cmd_run(cfg) == 0);
  const std::string run_report = slurp(cfg.out_dir + "/report.csv");
  const std::string run_summary = slurp(cfg.out_dir + "/summary.json");

  RunConfig diag_cfg = cfg;
  diag_cfg.out_dir = fresh_dir("diag_out");
  CHECK(cmd_diagnose(diag_cfg, cfg.out_dir) == 0);
  CHECK(slurp(diag_cfg.out_dir + "/report.csv") == run_report);
  CHECK(slurp(diag_cfg.out_dir + "/summary.json") == run_summary);
}

TEST_CASE("trajectory round trip") {
  json j = base_config();
  j["initdata"] = {{"preset", "bump"}};
  RunConfig cfg = parse_config(j);
  const Trajectory traj = run_from_config(cfg);
  const std::string dir = fresh_dir("traj_rt");
  write_trajectory(traj, cfg, dir);
  const Trajectory back = load_trajectory(dir);
  REQUIRE(back.snapshots.size() == traj.snapshots.size());
  for (size_t k = 0; k < traj.snapshots.size(); ++k) {
    CHECK(back.snapshots[k].t == traj.snapshots[k].t);
    for (int i = 0; i < traj.snapshots[k].grid.cells; ++i) {
      CHECK(back.snapshots[k].rho[i] == traj.snapshots[k].rho[i]);
      CHECK(back.snapshots[k].m[i] == traj.snapshots[k].m[i]);
    }
    CHECK(back.accum[k].visc_main == traj.accum[k].visc_main);
    CHECK(back.accum[k].bd_cross == traj.accum[k].bd_cross);
  }
}

TEST_CASE("compare on rest data reports zero distances") {
  json j = base_config();
  RunConfig cfg = parse_config(j);
  cfg.out_dir = fresh_dir("compare_rest");
  CHECK(cmd_compare(cfg, 1) == 0);
  json out;
  std::ifstream(cfg.out_dir + "/compare.json") >> out;
  // the viscous branch mollifies the constant profile, which perturbs it at
  // the last bit; both trajectories stay steady at machine precision
  CHECK(out["distances"]["rho"].get<double>() <= 1e-14);
  CHECK(out["distances"]["m"].get<double>() <= 1e-14);
  CHECK(out["distances"]["sqrho_u"].get<double>() <= 1e-14);
}

TEST_CASE("ladder command needs a ladder block") {
  RunConfig cfg = parse_config(base_config());
  CHECK_THROWS_AS(cmd_ladder(cfg, 1), ConfigError);
}
