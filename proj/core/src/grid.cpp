#include "aniso/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aniso {

Grid2D::Grid2D(int modes_per_axis, double box_length)
    : n_(modes_per_axis), length_(box_length), base_(2.0 * std::numbers::pi / box_length) {
  if (n_ < 4 || n_ % 2 != 0) {
    throw std::invalid_argument("Grid2D: modes_per_axis must be even and >= 4, got " + std::to_string(n_));
  }
  if (!(length_ > 0.0) || !std::isfinite(length_)) {
    throw std::invalid_argument("Grid2D: box_length must be positive and finite");
  }
}

double Grid2D::max_wavenumber_magnitude() const {
  const double k = base_ * (n_ / 2 - 1);
  return std::sqrt(2.0) * k;
}

int Grid2D::dealias_cutoff() const {
  // largest integer strictly below N/3
  return (n_ - 1) / 3;
}

}  // namespace aniso
