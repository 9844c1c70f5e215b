#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "aniso/experiments/experiment.hpp"
#include "aniso/experiments/scenario.hpp"
#include "aniso/experiments/sweep.hpp"
#include "aniso/experiments/twin.hpp"
#include "aniso/experiments/verification.hpp"

namespace {

std::vector<double> parse_amplitudes(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw aniso::ConfigError("--amps: empty amplitude in '" + text + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw aniso::ConfigError("--amps: not a number: '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_run(const std::string& path, const std::vector<std::string>& overrides) {
  const aniso::Scenario s = aniso::load_scenario(path, overrides);
  const aniso::RunResult r = aniso::run_scenario(s);
  const auto& b = r.bootstrap;
  fmt::print("{}: {} after {} steps, t = {:.6g}\n", s.name, r.run.outcome.blew_up ? "blow-up" : "completed",
             r.run.outcome.steps, r.run.outcome.final_state.t);
  fmt::print("  budget residual max {:.3e}; bootstrap {} (eps0 {:.4g}, C1 {:.4g}); decay ratios {:.3g} / {:.3g}\n",
             r.run.max_abs_budget_residual, b.held ? "held" : "violated", b.eps0, b.c1_hat, r.decay.v_ratio,
             r.decay.theta_ratio);
  fmt::print("  artifacts in {}\n", r.directory.string());
  return r.exit_code;
}

int cmd_sweep(const std::string& path) {
  const aniso::SweepMatrix mx = aniso::load_sweep_matrix(path);
  aniso::Scenario root = mx.base;
  const std::filesystem::path dir = aniso::output_root(root) / mx.name;
  const auto rows = aniso::run_sweep(mx, dir);
  std::size_t failed = 0;
  for (const auto& row : rows) failed += row.status == "error" ? 1 : 0;
  fmt::print("{} cells ({} failed); report in {}\n", rows.size(), failed, (dir / "matrix_report.csv").string());
  return aniso::kExitCompleted;
}

int cmd_verify(const std::string& suite) {
  const auto results = aniso::run_verification(suite);
  const std::string json = aniso::verification_json(results);
  std::cout << json;
  for (const auto& r : results) {
    if (!r.passed()) return 1;
  }
  return 0;
}

int cmd_twin(const std::string& path, const std::string& amps, const std::vector<std::string>& overrides) {
  const aniso::Scenario s = aniso::load_scenario(path, overrides);
  const std::vector<double> amplitudes = parse_amplitudes(amps);
  const aniso::TwinReport rep = aniso::run_twin(s, amplitudes);
  const std::filesystem::path dir = aniso::output_root(s) / (s.name + "-twin");
  aniso::write_twin_report(s, rep, dir);
  for (const auto& row : rep.rows) {
    fmt::print("amplitude {:.3e}: sup difference {:.6e}, ratio {:.6g}\n", row.amplitude, row.sup_difference, row.ratio);
  }
  fmt::print("ratio spread {:.4g} ({}within factor {:g}); report in {}\n", rep.ratio_spread, rep.bounded ? "" : "not ",
             aniso::kTwinRatioFactor, dir.string());
  return rep.blew_up ? aniso::kExitBlowUp : aniso::kExitCompleted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anisotropic Boussinesq pseudo-spectral experiments"};
  app.require_subcommand(1);

  std::string scenario_path, matrix_path, suite, amps;
  std::vector<std::string> overrides;

  auto* run = app.add_subcommand("run", "Run one scenario");
  run->add_option("scenario", scenario_path, "Scenario TOML file")->required();
  run->add_option("--set", overrides, "Override as key=value (dotted keys)");

  auto* sweep = app.add_subcommand("sweep", "Run a scenario matrix");
  sweep->add_option("matrix", matrix_path, "Matrix TOML file")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "spectral, model, integration, norms, diagnostics or all")->required();

  auto* twin = app.add_subcommand("twin", "Continuous-dependence twin runs");
  twin->add_option("scenario", scenario_path, "Scenario TOML file")->required();
  twin->add_option("--amps", amps, "Comma-separated perturbation amplitudes, nonincreasing")->required();
  twin->add_option("--set", overrides, "Override as key=value (dotted keys)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : aniso::kExitConfigError;
  }

  try {
    if (*run) return cmd_run(scenario_path, overrides);
    if (*sweep) return cmd_sweep(matrix_path);
    if (*verify) return cmd_verify(suite);
    if (*twin) return cmd_twin(scenario_path, amps, overrides);
  } catch (const aniso::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return aniso::kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return aniso::kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return aniso::kExitConfigError;
  }
  return aniso::kExitConfigError;
}
