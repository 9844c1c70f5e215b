#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aniso/dissipation.hpp"
#include "aniso/integrator.hpp"
#include "aniso/model.hpp"
#include "aniso/synthesis.hpp"

namespace aniso {

/// Invalid or malformed scenario input; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name = "scenario";
  std::string preset;  // empty when the dissipation is given explicitly
  DissipationConfig dissipation;
  int m = 1;

  int n = 128;
  double length = 6.283185307179586;

  IntegratorConfig integrator;

  RegularityRecipe velocity{3.0, 1.0, 0.5, 1};
  RegularityRecipe theta{3.0, 1.0, 0.5, 2};
  /// When positive, data is rescaled so that ||v0||_{H^m}^2 + ||theta0||_{H^m}^2 = eps0^2.
  double eps0 = 0.0;
  /// Drop the theta modes with xi1 = 0, which no channel of the linear problem damps
  /// when delta2 = 0.
  bool strip_stationary = false;

  /// Steps between report rows.
  std::size_t cadence = 10;
  /// Steps between snapshots, taken on recorded rows only (effective period
  /// lcm(cadence, snapshot_every)); 0 keeps only the initial and final states.
  std::size_t snapshot_every = 0;
  double horizon = 100.0;
  double threshold = 0.1;

  std::string output_dir = "out";

  /// Throws ConfigError.
  void validate() const;
};

/// Strict TOML reader: unknown sections or keys are rejected by name.
Scenario parse_scenario(std::string_view toml_text, std::span<const std::string> overrides = {});
Scenario load_scenario(const std::filesystem::path& path, std::span<const std::string> overrides = {});

/// Initial data described by the scenario at t = 0.
SimulationState initial_state(const Scenario& s);
/// Rescales (v, theta) to E_m = eps0^2; zero data is returned unchanged.
SimulationState normalize_hm(SimulationState state, int m, double eps0);
/// Removes theta modes with xi1 = 0.
SpectralField strip_stationary_modes(SpectralField theta);

/// Canonical JSON of every resolved parameter (sorted keys, no whitespace).
std::string canonical_config(const Scenario& s);
/// 64-bit FNV-1a of canonical_config, as 16 hex digits.
std::string config_hash(const Scenario& s);
std::string fnv1a_hex(std::string_view bytes);

std::string to_string(Method method);
std::string to_string(RhsVariant::Kind kind);

}  // namespace aniso
