#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aniso/experiments/scenario.hpp"

namespace aniso {

/// Cartesian product of cases x amplitudes x N x dt x lambda on top of a base scenario.
struct SweepMatrix {
  std::string name = "sweep";
  Scenario base;
  std::vector<std::string> cases;        // preset names
  std::vector<double> amplitudes;        // eps0 values; empty keeps the base data
  std::vector<int> resolutions;          // empty keeps base N
  std::vector<double> steps;             // empty keeps base dt
  std::vector<double> lambdas;           // sets lambda1 = lambda2; empty keeps the preset's
  unsigned workers = 1;
};

struct SweepCell {
  std::size_t index = 0;
  std::string case_name;
  std::optional<double> amplitude;
  std::optional<int> n;
  std::optional<double> dt;
  std::optional<double> lambda;
};

struct SweepRow {
  SweepCell cell;
  std::string status;  // held, violated, blow-up or error
  std::string label;   // observation or verdict
  double max_budget_residual = 0.0;
  double decay_ratio = 0.0;  // max of the velocity and theta ratios at the horizon
  double eps0 = 0.0;
  std::string config_hash;
  std::string error;
};

/// [matrix] keys: name, base (path relative to the matrix file), cases,
/// amplitudes, N, dt, lambda, workers; [set] holds base overrides.
SweepMatrix load_sweep_matrix(const std::filesystem::path& path);
SweepMatrix parse_sweep_matrix(std::string_view toml_text, const std::filesystem::path& relative_to = ".");

std::vector<SweepCell> expand_cells(const SweepMatrix& matrix);
/// Scenario of one cell; throws ConfigError.
Scenario cell_scenario(const SweepMatrix& matrix, const SweepCell& cell);

/// Runs every cell (in parallel across `workers` threads), each in its own
/// subdirectory, and writes matrix_report.csv. Failed cells become error rows.
std::vector<SweepRow> run_sweep(const SweepMatrix& matrix, const std::filesystem::path& directory);

inline constexpr const char* kMatrixCsvHeader =
    "case,amplitude,N,dt,lambda,status,label,max_budget_residual,decay_ratio,eps0,config_hash,error";
std::string matrix_report_csv(const std::vector<SweepRow>& rows);

}  // namespace aniso
