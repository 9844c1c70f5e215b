#pragma once

#include <cstdint>

#include "aniso/grid.hpp"
#include "aniso/spectral_field.hpp"

namespace aniso {

/// Power-law spectrum with seeded phases:
///   c(xi) = amplitude * (1 + |xi|^2)^(-(s + 1 + decay_margin)/2) * exp(i phi(xi)).
/// Such data has finite H^s norm that converges as N grows, while H^(s+1)
/// keeps growing for decay_margin < 1.
struct RegularityRecipe {
  double s = 1.0;
  double amplitude = 1.0;
  double decay_margin = 0.5;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Mean-zero real field confined to the 2/3-dealiased band. Phases depend only on
/// (seed, k1, k2), so the shared modes agree across resolutions.
SpectralField synthesize_field(const Grid2D& grid, const RegularityRecipe& recipe);

/// (-d2 psi, d1 psi) with psi synthesized at regularity s + 1, so the velocity
/// follows the recipe's H^s profile. Certified divergence-free.
VectorField2 synthesize_divfree_velocity(const Grid2D& grid, const RegularityRecipe& recipe);

/// Deterministic phase in [0, 2 pi) for a mode; exposed for tests.
double mode_phase(std::uint64_t seed, int k1, int k2);

}  // namespace aniso
