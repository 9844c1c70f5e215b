#pragma once

#include <cstddef>
#include <numbers>

namespace aniso {

/// Periodic box [0, L)^2 sampled on an N x N collocation grid.
///
/// Spectral arrays use FFT index order on both axes: index i maps to the
/// integer mode k = i for i < N/2 and k = i - N otherwise, so the Nyquist
/// index N/2 carries k = -N/2. Physical wavenumbers are xi = (2*pi/L) * k.
class Grid2D {
 public:
  explicit Grid2D(int modes_per_axis, double box_length = 2.0 * std::numbers::pi);

  int n() const { return n_; }
  double length() const { return length_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

  /// Fundamental wavenumber 2*pi/L.
  double base_wavenumber() const { return base_; }
  /// Collocation spacing L/N.
  double spacing() const { return length_ / n_; }

  int mode(int index) const { return index < n_ / 2 ? index : index - n_; }
  int index_of(int mode) const { return mode >= 0 ? mode : mode + n_; }
  double wavenumber(int index) const { return base_ * mode(index); }
  bool is_nyquist(int index) const { return index == n_ / 2; }
  std::size_t flat(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i2);
  }

  /// Largest |xi| over retained (non-Nyquist) lattice points.
  double max_wavenumber_magnitude() const;

  /// Largest |k| kept by the 2/3 dealiasing rule (|k| < N/3).
  int dealias_cutoff() const;

  bool operator==(const Grid2D& other) const { return n_ == other.n_ && length_ == other.length_; }
  bool operator!=(const Grid2D& other) const { return !(*this == other); }

 private:
  int n_;
  double length_;
  double base_;
};

}  // namespace aniso
