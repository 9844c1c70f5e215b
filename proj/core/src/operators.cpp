#include "aniso/operators.hpp"

#include <algorithm>

namespace aniso {

namespace {

double component(double xi1, double xi2, Axis a) { return a == Axis::x1 ? xi1 : xi2; }

}  // namespace

SpectralField partial(const SpectralField& f, Axis axis) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  SpectralField out(g);
  for (int i1 = 0; i1 < n; ++i1) {
    if (g.is_nyquist(i1)) continue;
    for (int i2 = 0; i2 < n; ++i2) {
      if (g.is_nyquist(i2)) continue;
      const double xi = axis == Axis::x1 ? g.wavenumber(i1) : g.wavenumber(i2);
      const Complex c = f(i1, i2);
      // i * xi * c
      out(i1, i2) = Complex{-xi * c.imag(), xi * c.real()};
    }
  }
  return out;
}

SpectralField second_partial(const SpectralField& f, Axis axis) {
  return apply_real_multiplier(f, [axis](double xi1, double xi2) {
    const double xi = component(xi1, xi2, axis);
    return -xi * xi;
  });
}

SpectralField laplacian(const SpectralField& f) {
  return apply_real_multiplier(f, [](double xi1, double xi2) { return -(xi1 * xi1 + xi2 * xi2); });
}

SpectralField fractional_laplacian(const SpectralField& f, double s) {
  if (s == 0.0) return f;
  if (s < 0.0 && f(0, 0) != Complex{}) {
    throw std::domain_error("fractional_laplacian: singular symbol at xi=0 (nonzero mean with s < 0)");
  }
  return apply_real_multiplier(f, [s](double xi1, double xi2) {
    const double r2 = xi1 * xi1 + xi2 * xi2;
    return r2 == 0.0 ? 0.0 : std::pow(r2, 0.5 * s);
  });
}

SpectralField bessel_potential(const SpectralField& f, double s) {
  if (s == 0.0) return f;
  return apply_real_multiplier(f, [s](double xi1, double xi2) { return std::pow(1.0 + xi1 * xi1 + xi2 * xi2, 0.5 * s); });
}

SpectralField inverse_negative_laplacian(const SpectralField& f) {
  return apply_real_multiplier(f, [](double xi1, double xi2) {
    const double r2 = xi1 * xi1 + xi2 * xi2;
    return r2 == 0.0 ? 0.0 : 1.0 / r2;
  });
}

std::array<std::array<double, 2>, 2> leray_symbol(double xi1, double xi2) {
  const double r2 = xi1 * xi1 + xi2 * xi2;
  if (r2 == 0.0) return {{{1.0, 0.0}, {0.0, 1.0}}};
  return {{{xi2 * xi2 / r2, -xi1 * xi2 / r2}, {-xi1 * xi2 / r2, xi1 * xi1 / r2}}};
}

VectorField2 leray_project(const VectorField2& u) {
  const Grid2D& g = u.grid();
  const int n = g.n();
  VectorField2 out(g);
  for (int i1 = 0; i1 < n; ++i1) {
    if (g.is_nyquist(i1)) continue;
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      if (g.is_nyquist(i2)) continue;
      const double xi2 = g.wavenumber(i2);
      const auto p = leray_symbol(xi1, xi2);
      const Complex a = u.u1(i1, i2);
      const Complex b = u.u2(i1, i2);
      out.u1(i1, i2) = p[0][0] * a + p[0][1] * b;
      out.u2(i1, i2) = p[1][0] * a + p[1][1] * b;
    }
  }
  out.divergence_free = false;
  if (!certify_divergence_free(out)) {
    throw std::logic_error("leray_project: projected field failed divergence certification");
  }
  return out;
}

SpectralField fourier_truncate(const SpectralField& f, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("fourier_truncate: radius must be positive");
  const double n2 = n * n;
  return apply_real_multiplier(f, [n2](double xi1, double xi2) { return xi1 * xi1 + xi2 * xi2 <= n2 ? 1.0 : 0.0; });
}

VectorField2 fourier_truncate(const VectorField2& u, double n) {
  return VectorField2(fourier_truncate(u.u1, n), fourier_truncate(u.u2, n), u.divergence_free);
}

double mollifier_symbol(double eta_magnitude) {
  const double q = 0.5 * eta_magnitude;
  const double q2 = q * q;
  if (q2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - q2));
}

SpectralField mollify(const SpectralField& f, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("mollify: eps must be positive");
  return apply_real_multiplier(f, [eps](double xi1, double xi2) { return mollifier_symbol(eps * std::hypot(xi1, xi2)); });
}

VectorField2 mollify(const VectorField2& u, double eps) {
  return VectorField2(mollify(u.u1, eps), mollify(u.u2, eps), u.divergence_free);
}

SpectralField riesz_double(const SpectralField& f, Axis i, Axis j) {
  return apply_real_multiplier(f, [i, j](double xi1, double xi2) {
    const double r2 = xi1 * xi1 + xi2 * xi2;
    if (r2 == 0.0) return 0.0;
    return component(xi1, xi2, i) * component(xi1, xi2, j) / r2;
  });
}

SpectralField dealias(const SpectralField& f) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  const int cut = g.dealias_cutoff();
  SpectralField out(g);
  for (int i1 = 0; i1 < n; ++i1) {
    if (std::abs(g.mode(i1)) > cut) continue;
    for (int i2 = 0; i2 < n; ++i2) {
      if (std::abs(g.mode(i2)) > cut) continue;
      out(i1, i2) = f(i1, i2);
    }
  }
  return out;
}

VectorField2 dealias(const VectorField2& u) { return VectorField2(dealias(u.u1), dealias(u.u2), u.divergence_free); }

SpectralField resample(const SpectralField& f, const Grid2D& target) {
  const Grid2D& g = f.grid();
  if (g.length() != target.length()) throw std::invalid_argument("resample: box lengths differ");
  SpectralField out(target);
  const int kmax = std::min(g.n(), target.n()) / 2 - 1;
  for (int k1 = -kmax; k1 <= kmax; ++k1) {
    for (int k2 = -kmax; k2 <= kmax; ++k2) {
      out(target.index_of(k1), target.index_of(k2)) = f(g.index_of(k1), g.index_of(k2));
    }
  }
  return out;
}

SpectralField divergence(const VectorField2& u) {
  SpectralField d = partial(u.u1, Axis::x1);
  d += partial(u.u2, Axis::x2);
  return d;
}

SpectralField vorticity(const VectorField2& u) {
  SpectralField w = partial(u.u2, Axis::x1);
  w -= partial(u.u1, Axis::x2);
  return w;
}

VectorField2 gradient(const SpectralField& f) { return VectorField2(partial(f, Axis::x1), partial(f, Axis::x2)); }

VectorField2 perpendicular_gradient(const SpectralField& psi) {
  VectorField2 v(-partial(psi, Axis::x2), partial(psi, Axis::x1));
  certify_divergence_free(v);
  return v;
}

double divergence_defect(const VectorField2& u) {
  const Grid2D& g = u.grid();
  const int n = g.n();
  double div = 0.0;
  double mag = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      const double xi2 = g.wavenumber(i2);
      const Complex a = u.u1(i1, i2);
      const Complex b = u.u2(i1, i2);
      div = std::max(div, std::abs(xi1 * a + xi2 * b));
      mag = std::max({mag, std::abs(a), std::abs(b)});
    }
  }
  return mag == 0.0 ? 0.0 : div / mag;
}

bool certify_divergence_free(VectorField2& u) {
  u.divergence_free = divergence_defect(u) <= kDivergenceTolerance;
  return u.divergence_free;
}

}  // namespace aniso
