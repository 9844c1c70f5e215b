#pragma once

#include <span>
#include <vector>

#include "aniso/grid.hpp"
#include "aniso/spectral_field.hpp"

namespace aniso {

/// Real samples on the collocation points x = (j1, j2) * L/N, row-major with j1 outermost.
struct PhysicalField {
  Grid2D grid;
  std::vector<double> values;

  explicit PhysicalField(const Grid2D& g) : grid(g), values(g.size(), 0.0) {}
  PhysicalField(const Grid2D& g, std::vector<double> v);

  double& operator()(int j1, int j2) { return values[grid.flat(j1, j2)]; }
  double operator()(int j1, int j2) const { return values[grid.flat(j1, j2)]; }
};

/// Synthesis f(x_j) = sum_k c_k exp(i xi_k . x_j). Output is real by construction.
PhysicalField to_physical(const SpectralField& f);

/// Analysis c_k = N^-2 sum_j f(x_j) exp(-i xi_k . x_j); Nyquist modes zeroed and
/// Hermitian symmetry imposed exactly.
SpectralField to_spectral(const Grid2D& grid, std::span<const double> samples);
SpectralField to_spectral(const PhysicalField& samples);

}  // namespace aniso
