#pragma once

#include <complex>
#include <span>
#include <vector>

#include "aniso/grid.hpp"

namespace aniso {

using Complex = std::complex<double>;

/// Fourier coefficients of a real scalar field on a Grid2D.
///
/// Coefficients are normalized so that f(x) = sum_k c_k exp(i xi_k . x); a
/// constant field c has c_(0,0) = c and cos(x1) has c_(+-1,0) = 1/2. Storage is
/// row-major with the xi1 index outermost.
class SpectralField {
 public:
  explicit SpectralField(const Grid2D& grid);
  SpectralField(const Grid2D& grid, std::vector<Complex> coeffs);

  const Grid2D& grid() const { return grid_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  Complex& operator()(int i1, int i2) { return coeffs_[grid_.flat(i1, i2)]; }
  const Complex& operator()(int i1, int i2) const { return coeffs_[grid_.flat(i1, i2)]; }

  /// Coefficient at integer mode (k1, k2).
  Complex mode(int k1, int k2) const;
  /// Sets mode (k1, k2) and its Hermitian partner (-k1, -k2).
  void set_mode(int k1, int k2, Complex value);

  double max_abs() const;
  bool is_zero() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale);
  /// this += scale * other
  SpectralField& axpy(double scale, const SpectralField& other);

 private:
  Grid2D grid_;
  std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double scale, SpectralField a);
SpectralField operator-(SpectralField a);

/// Largest coefficient-wise |a - b|.
double max_abs_difference(const SpectralField& a, const SpectralField& b);

/// Largest violation of c(-xi) = conj(c(xi)) plus any nonzero Nyquist entry.
double hermitian_defect(const SpectralField& f);

/// Velocity pair on a shared grid. The flag records a passed divergence check
/// and is only set by the operators that produce certified fields.
struct VectorField2 {
  SpectralField u1;
  SpectralField u2;
  bool divergence_free = false;

  VectorField2(SpectralField first, SpectralField second, bool certified = false);
  explicit VectorField2(const Grid2D& grid);

  const Grid2D& grid() const { return u1.grid(); }
  const SpectralField& operator[](int axis) const { return axis == 0 ? u1 : u2; }
  SpectralField& operator[](int axis) { return axis == 0 ? u1 : u2; }
};

}  // namespace aniso
