#pragma once

// Reference computations that share no code with the library beyond the
// coefficient container: direct trigonometric sums in long double.

#include <cmath>
#include <complex>
#include <vector>

#include "aniso/spectral_field.hpp"

namespace oracle {

using LComplex = std::complex<long double>;

inline long double pi() { return 3.141592653589793238462643383279502884L; }

/// f(x) = sum_k c_k exp(i xi_k . x) at one point, Nyquist modes skipped.
inline long double evaluate(const aniso::SpectralField& f, long double x1, long double x2) {
  const aniso::Grid2D& g = f.grid();
  const int n = g.n();
  const long double base = 2.0L * pi() / g.length();
  LComplex sum = 0.0L;
  for (int i1 = 0; i1 < n; ++i1) {
    if (i1 == n / 2) continue;
    const int k1 = i1 < n / 2 ? i1 : i1 - n;
    for (int i2 = 0; i2 < n; ++i2) {
      if (i2 == n / 2) continue;
      const int k2 = i2 < n / 2 ? i2 : i2 - n;
      const long double phase = base * (k1 * x1 + k2 * x2);
      const LComplex c(f(i1, i2).real(), f(i1, i2).imag());
      sum += c * LComplex(std::cos(phase), std::sin(phase));
    }
  }
  return sum.real();
}

/// Samples on the collocation grid x_j = j L / N.
inline std::vector<long double> sample(const aniso::SpectralField& f) {
  const aniso::Grid2D& g = f.grid();
  const int n = g.n();
  const long double h = static_cast<long double>(g.length()) / n;
  std::vector<long double> out(g.size());
  for (int j1 = 0; j1 < n; ++j1) {
    for (int j2 = 0; j2 < n; ++j2) out[g.flat(j1, j2)] = evaluate(f, j1 * h, j2 * h);
  }
  return out;
}

/// Forward coefficients by direct summation.
inline std::vector<LComplex> analyze(const aniso::Grid2D& g, const std::vector<long double>& samples) {
  const int n = g.n();
  std::vector<LComplex> out(g.size(), 0.0L);
  for (int i1 = 0; i1 < n; ++i1) {
    if (i1 == n / 2) continue;
    const int k1 = i1 < n / 2 ? i1 : i1 - n;
    for (int i2 = 0; i2 < n; ++i2) {
      if (i2 == n / 2) continue;
      const int k2 = i2 < n / 2 ? i2 : i2 - n;
      LComplex sum = 0.0L;
      for (int j1 = 0; j1 < n; ++j1) {
        for (int j2 = 0; j2 < n; ++j2) {
          const long double phase = -2.0L * pi() * (static_cast<long double>(k1) * j1 + static_cast<long double>(k2) * j2) / n;
          sum += samples[g.flat(j1, j2)] * LComplex(std::cos(phase), std::sin(phase));
        }
      }
      out[g.flat(i1, i2)] = sum / static_cast<long double>(n * n);
    }
  }
  return out;
}

/// Midpoint-free collocation quadrature of |f|^2 (exact for band-limited f).
inline long double l2_squared_quadrature(const std::vector<long double>& samples, double length, int n) {
  long double s = 0.0L;
  for (long double v : samples) s += v * v;
  const long double h = static_cast<long double>(length) / n;
  return s * h * h;
}

}  // namespace oracle
