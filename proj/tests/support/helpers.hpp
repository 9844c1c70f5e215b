#pragma once

#include <algorithm>
#include <cmath>

#include "aniso/spectral_field.hpp"
#include "aniso/synthesis.hpp"
#include "aniso/transform.hpp"

namespace testing {

inline aniso::SpectralField single_cos(const aniso::Grid2D& g, int k1, int k2, double amplitude = 1.0) {
  aniso::SpectralField f(g);
  f.set_mode(k1, k2, 0.5 * amplitude);
  return f;
}

inline aniso::SpectralField single_sin(const aniso::Grid2D& g, int k1, int k2, double amplitude = 1.0) {
  aniso::SpectralField f(g);
  f.set_mode(k1, k2, aniso::Complex(0.0, -0.5 * amplitude));
  return f;
}

inline aniso::RegularityRecipe recipe(std::uint64_t seed, double s = 2.0, double margin = 0.5) {
  return {s, 1.0, margin, seed};
}

inline double relative_difference(const aniso::SpectralField& a, const aniso::SpectralField& b) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  return scale == 0.0 ? 0.0 : aniso::max_abs_difference(a, b) / scale;
}

inline double max_abs(const aniso::PhysicalField& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace testing
