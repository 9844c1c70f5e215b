#include "aniso/experiments/dft_oracle.hpp"

#include <cmath>
#include <numbers>

namespace aniso {

namespace {

// exp(2 pi i k j / N) with the phase index reduced mod N, so every angle is exact in
// units of 2 pi / N.
Complex root(long long kj, int n) {
  const long long r = ((kj % n) + n) % n;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

PhysicalField dft_to_physical(const SpectralField& f) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  PhysicalField out(g);
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j2 < n; ++j2) {
      Complex sum{};
      for (int i1 = 0; i1 < n; ++i1) {
        if (g.is_nyquist(i1)) continue;
        for (int i2 = 0; i2 < n; ++i2) {
          if (g.is_nyquist(i2)) continue;
          sum += f(i1, i2) * root(static_cast<long long>(g.mode(i1)) * j1 + static_cast<long long>(g.mode(i2)) * j2, n);
        }
      }
      out(j1, j2) = sum.real();
    }
  }
  return out;
}

SpectralField dft_to_spectral(const PhysicalField& f) {
  const Grid2D& g = f.grid;
  const int n = g.n();
  SpectralField out(g);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int i1 = 0; i1 < n; ++i1) {
    if (g.is_nyquist(i1)) continue;
    for (int i2 = 0; i2 < n; ++i2) {
      if (g.is_nyquist(i2)) continue;
      Complex sum{};
      for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
          sum += f(j1, j2) * root(-(static_cast<long long>(g.mode(i1)) * j1 + static_cast<long long>(g.mode(i2)) * j2), n);
        }
      }
      out(i1, i2) = sum * scale;
    }
  }
  return out;
}

}  // namespace aniso
