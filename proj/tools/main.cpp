#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "sphlab/commands.hpp"

namespace {

// exit codes: 0 pass, 1 verdict failure, 2 config error, 3 runtime fault
constexpr int kVerdictFailure = 1;
constexpr int kConfigError = 2;
constexpr int kRuntimeFault = 3;

void print_failure(const std::string& kind, const std::string& message) {
  nlohmann::json j = {{"status", kind}, {"message", message}};
  std::cerr << j.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification laboratory for radial compressible gas flow"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_override;
  std::string trajectory_dir;
  int jobs = 1;
  bool seedless = false;  // reserved: every computation is already deterministic

  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--out", out_override, "output directory (overrides the config)");
  app.add_option("--jobs", jobs, "maximum concurrent ladder jobs")->default_val(1);
  app.add_flag("--seedless", seedless, "reserved; runs are deterministic");

  CLI::App* c_init = app.add_subcommand("init-data", "emit the approximate initial data");
  CLI::App* c_run = app.add_subcommand("run", "advance the configured solver and diagnose");
  CLI::App* c_diag = app.add_subcommand("diagnose", "re-evaluate diagnostics on a trajectory");
  c_diag->add_option("--trajectory", trajectory_dir, "trajectory directory (default: output)");
  CLI::App* c_ladder = app.add_subcommand("ladder", "run a parameter ladder study");
  CLI::App* c_compare = app.add_subcommand("compare", "diff a viscous run against inviscid");

  CLI11_PARSE(app, argc, argv);

  try {
    sphlab::RunConfig cfg = sphlab::load_config_file(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;

    if (c_init->parsed()) return sphlab::cmd_init_data(cfg);
    if (c_run->parsed()) return sphlab::cmd_run(cfg);
    if (c_diag->parsed()) {
      const std::string dir = trajectory_dir.empty() ? cfg.out_dir : trajectory_dir;
      return sphlab::cmd_diagnose(cfg, dir);
    }
    if (c_ladder->parsed()) return sphlab::cmd_ladder(cfg, jobs);
    if (c_compare->parsed()) return sphlab::cmd_compare(cfg, jobs);
    return kConfigError;
  } catch (const sphlab::ConfigError& e) {
    print_failure("config_error", e.what());
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    print_failure("config_error", e.what());
    return kConfigError;
  } catch (const sphlab::SolverFault& e) {
    nlohmann::json j = {{"status", "fault"},
                        {"message", e.what()},
                        {"cell", e.cell},
                        {"time", e.time}};
    std::cerr << j.dump() << std::endl;
    return kRuntimeFault;
  } catch (const std::exception& e) {
    print_failure("fault", e.what());
    return kRuntimeFault;
  }
}
