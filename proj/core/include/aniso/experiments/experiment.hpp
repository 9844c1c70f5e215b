#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "aniso/diagnostics.hpp"
#include "aniso/experiments/scenario.hpp"

namespace aniso {

/// Process exit codes of the command-line front end.
inline constexpr int kExitCompleted = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitBlowUp = 2;

inline constexpr const char* kArtifactVersion = "0.3.0";

struct DecayVerdict {
  bool defined = false;  // m >= 2
  double horizon_time = 0.0;
  bool horizon_reached = false;
  double v_ratio = 0.0;      // ||v(T)||_{H.^{m-1}} / ||v(0)||_{H.^{m-1}}
  double theta_ratio = 0.0;
  bool thresholds_met = false;
  double integral = 0.0;
  double last_decade_fraction = 0.0;
  bool superlinear_late = false;
};

struct RunResult {
  int exit_code = kExitCompleted;
  std::filesystem::path directory;
  MonitoredRun run;
  BootstrapVerdict bootstrap;
  DecayVerdict decay;
  std::string summary_json;
};

/// Output root: ANISO_OUT if set, else the scenario's output directory.
std::filesystem::path output_root(const Scenario& s);

/// Decay thresholds at the first recorded time >= horizon (or the last row).
DecayVerdict evaluate_decay(const std::vector<EnergyReport>& reports, int m, double horizon, double threshold);

/// Runs the scenario and writes report.csv, summary.json and snapshots/ into
/// `directory` (default output_root(s) / s.name).
RunResult run_scenario(const Scenario& s, std::optional<std::filesystem::path> directory = std::nullopt);

/// Summary label: "observation" for the open cases, "verdict" otherwise.
std::string verdict_label(const Scenario& s);

}  // namespace aniso
