#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "aniso/experiments/scenario.hpp"

namespace aniso {

struct TwinRow {
  double amplitude = 0.0;
  double sup_difference = 0.0;  // sup_t ||(v, theta) - (v', theta')||_{L^2}
  double ratio = 0.0;           // sup_difference / amplitude (0 for a zero amplitude)
};

struct TwinReport {
  std::vector<TwinRow> rows;
  double dt = 0.0;
  std::size_t steps = 0;
  /// max ratio / min ratio over the nonzero amplitudes.
  double ratio_spread = 1.0;
  /// ratio_spread <= kTwinRatioFactor.
  bool bounded = true;
  bool blew_up = false;
};

inline constexpr double kTwinRatioFactor = 3.0;

/// Unit-L^2 perturbation (delta v, delta theta) with seeds offset from the scenario's.
SimulationState twin_perturbation(const Scenario& s);

/// Base and perturbed runs advanced in lockstep with one fixed step (the
/// scenario's dt, or the automatic step of the base data when dt = "auto").
/// Amplitudes must be nonincreasing.
TwinReport run_twin(const Scenario& s, std::span<const double> amplitudes);

/// Writes twin_report.csv and twin_summary.json into `directory`.
void write_twin_report(const Scenario& s, const TwinReport& report, const std::filesystem::path& directory);

}  // namespace aniso
