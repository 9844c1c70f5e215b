#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aniso {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// spectral, model, integration, norms, diagnostics, all.
std::span<const std::string_view> verification_suites();

/// Throws std::invalid_argument listing the valid names for an unknown suite.
/// "all" expands to every other suite.
std::vector<SuiteResult> run_verification(std::string_view suite);

std::string verification_json(const std::vector<SuiteResult>& results);

}  // namespace aniso
