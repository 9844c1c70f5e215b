#include "aniso/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aniso {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* what) {
  if (a.grid() != b.grid()) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
  }
}

}  // namespace

SpectralField::SpectralField(const Grid2D& grid) : grid_(grid), coeffs_(grid.size(), Complex{0.0, 0.0}) {}

SpectralField::SpectralField(const Grid2D& grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != grid_.size()) {
    throw std::invalid_argument("SpectralField: coefficient count does not match grid");
  }
}

Complex SpectralField::mode(int k1, int k2) const {
  const int n = grid_.n();
  if (k1 < -n / 2 || k1 >= n / 2 || k2 < -n / 2 || k2 >= n / 2) {
    throw std::out_of_range("SpectralField::mode: wavenumber outside lattice");
  }
  return (*this)(grid_.index_of(k1), grid_.index_of(k2));
}

void SpectralField::set_mode(int k1, int k2, Complex value) {
  const int n = grid_.n();
  if (k1 <= -n / 2 || k1 >= n / 2 || k2 <= -n / 2 || k2 >= n / 2) {
    throw std::out_of_range("SpectralField::set_mode: wavenumber outside retained lattice");
  }
  if (k1 == 0 && k2 == 0) {
    (*this)(0, 0) = Complex{value.real(), 0.0};
    return;
  }
  (*this)(grid_.index_of(k1), grid_.index_of(k2)) = value;
  (*this)(grid_.index_of(-k1), grid_.index_of(-k2)) = std::conj(value);
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool SpectralField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) { return c == Complex{}; });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(*this, other, "SpectralField::operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(*this, other, "SpectralField::operator-=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

SpectralField& SpectralField::axpy(double scale, const SpectralField& other) {
  require_same_grid(*this, other, "SpectralField::axpy");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += scale * other.coeffs_[i];
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double scale, SpectralField a) { return a *= scale; }
SpectralField operator-(SpectralField a) { return a *= -1.0; }

double max_abs_difference(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b, "max_abs_difference");
  double m = 0.0;
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) m = std::max(m, std::abs(ca[i] - cb[i]));
  return m;
}

double hermitian_defect(const SpectralField& f) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  double defect = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      if (g.is_nyquist(i1) || g.is_nyquist(i2)) {
        defect = std::max(defect, std::abs(f(i1, i2)));
        continue;
      }
      const int j1 = g.index_of(-g.mode(i1));
      const int j2 = g.index_of(-g.mode(i2));
      defect = std::max(defect, std::abs(f(i1, i2) - std::conj(f(j1, j2))));
    }
  }
  return defect;
}

VectorField2::VectorField2(SpectralField first, SpectralField second, bool certified)
    : u1(std::move(first)), u2(std::move(second)), divergence_free(certified) {
  if (u1.grid() != u2.grid()) {
    throw std::invalid_argument("VectorField2: components must share one grid");
  }
}

VectorField2::VectorField2(const Grid2D& grid) : u1(grid), u2(grid), divergence_free(true) {}

}  // namespace aniso
