#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "aniso/grid.hpp"
#include "aniso/spectral_field.hpp"

namespace aniso {

enum class Axis { x1 = 0, x2 = 1 };

/// Applies out(xi) = m(xi1, xi2) * in(xi) over the retained lattice.
///
/// `at_zero`, when given, replaces m at xi = 0 (required for symbols singular
/// there). Nyquist entries stay zero. A non-finite symbol value throws and
/// names the offending wavenumber.
template <typename Symbol>
SpectralField apply_multiplier(const SpectralField& f, Symbol&& m, std::optional<Complex> at_zero = std::nullopt) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  SpectralField out(g);
  for (int i1 = 0; i1 < n; ++i1) {
    if (g.is_nyquist(i1)) continue;
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      if (g.is_nyquist(i2)) continue;
      const double xi2 = g.wavenumber(i2);
      Complex symbol;
      if (i1 == 0 && i2 == 0 && at_zero) {
        symbol = *at_zero;
      } else {
        symbol = Complex(m(xi1, xi2));
      }
      if (!std::isfinite(symbol.real()) || !std::isfinite(symbol.imag())) {
        throw std::domain_error("apply_multiplier: non-finite symbol at xi=(" + std::to_string(xi1) + ", " +
                                std::to_string(xi2) + ")");
      }
      out(i1, i2) = symbol * f(i1, i2);
    }
  }
  return out;
}

/// Real symbols depending on (xi1, xi2) only; cheaper than the general engine.
template <typename Symbol>
SpectralField apply_real_multiplier(const SpectralField& f, Symbol&& m) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  SpectralField out(g);
  for (int i1 = 0; i1 < n; ++i1) {
    if (g.is_nyquist(i1)) continue;
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      if (g.is_nyquist(i2)) continue;
      out(i1, i2) = m(xi1, g.wavenumber(i2)) * f(i1, i2);
    }
  }
  return out;
}

/// d/dx_axis (symbol i xi_axis).
SpectralField partial(const SpectralField& f, Axis axis);
/// d^2/dx_axis^2 (symbol -xi_axis^2).
SpectralField second_partial(const SpectralField& f, Axis axis);
SpectralField laplacian(const SpectralField& f);

/// Lambda^s = (-Laplacian)^{s/2}, symbol |xi|^s. For s < 0 the mean must vanish.
SpectralField fractional_laplacian(const SpectralField& f, double s);
/// J^s, symbol (1 + |xi|^2)^{s/2}.
SpectralField bessel_potential(const SpectralField& f, double s);
/// (-Laplacian)^{-1}; the mean mode maps to zero.
SpectralField inverse_negative_laplacian(const SpectralField& f);

/// 2x2 Leray symbol P(xi) = I - xi xi^T / |xi|^2; identity at xi = 0.
std::array<std::array<double, 2>, 2> leray_symbol(double xi1, double xi2);
/// Projection onto divergence-free fields. Output carries the certified flag.
VectorField2 leray_project(const VectorField2& u);

/// T_n: keeps |xi| <= n. Throws for n <= 0.
SpectralField fourier_truncate(const SpectralField& f, double n);
VectorField2 fourier_truncate(const VectorField2& u, double n);

/// Fourier transform of the unit-mass bump used by J^eps:
/// exp(1 - 1/(1 - |eta/2|^2)) for |eta| < 2, zero beyond.
double mollifier_symbol(double eta_magnitude);
SpectralField mollify(const SpectralField& f, double eps);
VectorField2 mollify(const VectorField2& u, double eps);

/// Double Riesz transform symbol xi_i xi_j / |xi|^2, mean mode mapped to zero.
SpectralField riesz_double(const SpectralField& f, Axis i, Axis j);

/// 2/3-rule mask: zero all modes with |k1| or |k2| >= N/3.
SpectralField dealias(const SpectralField& f);
VectorField2 dealias(const VectorField2& u);

/// Spectral interpolation onto another resolution of the same box: modes
/// representable on both grids are copied, the rest are dropped or zero.
SpectralField resample(const SpectralField& f, const Grid2D& target);

SpectralField divergence(const VectorField2& u);
/// Scalar vorticity w = d1 u2 - d2 u1.
SpectralField vorticity(const VectorField2& u);
VectorField2 gradient(const SpectralField& f);
/// (-d2 psi, d1 psi), divergence-free by construction.
VectorField2 perpendicular_gradient(const SpectralField& psi);

/// max_xi |xi . u(xi)| / max_xi |u(xi)| (zero for a zero field).
double divergence_defect(const VectorField2& u);
/// Divergence tolerance for certification, relative to the largest coefficient.
inline constexpr double kDivergenceTolerance = 1e-12;
/// Sets the flag when divergence_defect <= kDivergenceTolerance; returns it.
bool certify_divergence_free(VectorField2& u);

}  // namespace aniso
