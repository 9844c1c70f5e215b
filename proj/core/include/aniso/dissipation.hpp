#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aniso {

/// Coefficients of the perturbed Boussinesq system around hydrostatic balance:
///
///   d_t v1 + v.grad v1 + d_1 pi = nu1 d_11 v1 + nu2 d_22 v1
///   d_t v2 + v.grad v2 + d_2 pi = mu1 d_11 v2 + mu2 d_22 v2 + lambda1 theta
///   d_t theta + v.grad theta + lambda2 v2 = delta1 d_11 theta + delta2 d_22 theta
struct DissipationConfig {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  /// Throws std::invalid_argument when a viscosity or diffusivity is negative or
  /// any coefficient is non-finite.
  void validate() const;

  bool inviscid() const;
  bool operator==(const DissipationConfig&) const = default;
};

/// Named coefficient sets. Positive entries default to 1, buoyancy couplings to 1.
///
///   thm1, gwp-case3         nu2, mu1 > 0 (lambda1 = 1, lambda2 = 0)
///   thm2-d2                 nu2, mu1, delta2 > 0, lambda1 = lambda2 = 1
///   thm2-d1                 nu2, mu1, delta1 > 0, lambda1 = lambda2 = 1
///   stability-1 .. -5       rows of the two-dimensional stability table
///   open-A .. open-I        combinations whose stability is currently open
///   inviscid                all dissipation zero, lambda1 = lambda2 = 1
DissipationConfig dissipation_preset(std::string_view name);
std::vector<std::string> preset_names();
bool is_open_case(std::string_view preset);
/// thm2-* presets need lambda1 = lambda2 > 0.
bool requires_positive_lambda(std::string_view preset);

}  // namespace aniso
