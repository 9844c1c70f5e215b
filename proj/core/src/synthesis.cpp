#include "aniso/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aniso/operators.hpp"

namespace aniso {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void RegularityRecipe::validate() const {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) throw std::invalid_argument("recipe: amplitude must be >= 0");
  if (!(decay_margin > 0.0)) throw std::invalid_argument("recipe: decay_margin must be > 0");
  if (!(s >= 0.0)) throw std::invalid_argument("recipe: s must be >= 0");
}

double mode_phase(std::uint64_t seed, int k1, int k2) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(k1)));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(static_cast<std::int64_t>(k2)) << 1));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return 2.0 * std::numbers::pi * u;
}

SpectralField synthesize_field(const Grid2D& grid, const RegularityRecipe& recipe) {
  recipe.validate();
  SpectralField f(grid);
  if (recipe.amplitude == 0.0) return f;
  const int cut = grid.dealias_cutoff();
  const double exponent = -0.5 * (recipe.s + 1.0 + recipe.decay_margin);
  const double dk = grid.base_wavenumber();
  for (int k1 = 0; k1 <= cut; ++k1) {
    for (int k2 = -cut; k2 <= cut; ++k2) {
      if (k1 == 0 && k2 <= 0) continue;  // half plane; mean stays zero
      const double xi1 = dk * k1;
      const double xi2 = dk * k2;
      const double modulus = recipe.amplitude * std::pow(1.0 + xi1 * xi1 + xi2 * xi2, exponent);
      f.set_mode(k1, k2, std::polar(modulus, mode_phase(recipe.seed, k1, k2)));
    }
  }
  return f;
}

VectorField2 synthesize_divfree_velocity(const Grid2D& grid, const RegularityRecipe& recipe) {
  RegularityRecipe stream = recipe;
  stream.s = recipe.s + 1.0;
  return perpendicular_gradient(synthesize_field(grid, stream));
}

}  // namespace aniso
