#include "aniso/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aniso {

double sobolev_norm_squared(const SpectralField& f, double s, bool homogeneous) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  if (homogeneous && s < 0.0 && f(0, 0) != Complex{}) {
    throw std::domain_error("sobolev_norm: singular symbol at xi=0 (nonzero mean with s < 0)");
  }
  double sum = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      const double xi2 = g.wavenumber(i2);
      const double a = std::norm(f(i1, i2));
      if (a == 0.0) continue;
      const double r2 = xi1 * xi1 + xi2 * xi2;
      double w = 1.0;
      if (s != 0.0) {
        if (homogeneous) {
          w = r2 == 0.0 ? 0.0 : std::pow(r2, s);
        } else {
          w = std::pow(1.0 + r2, s);
        }
      }
      sum += w * a;
    }
  }
  const double l = g.length();
  return sum * l * l;
}

std::vector<double> sobolev_weights(const Grid2D& grid, double s, bool homogeneous) {
  const int n = grid.n();
  std::vector<double> w(grid.size(), 0.0);
  for (int i1 = 0; i1 < n; ++i1) {
    const double xi1 = grid.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      const double xi2 = grid.wavenumber(i2);
      const double r2 = xi1 * xi1 + xi2 * xi2;
      double v = 1.0;
      if (homogeneous) {
        v = r2 == 0.0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(r2, s);
      } else if (s != 0.0) {
        v = std::pow(1.0 + r2, s);
      }
      w[grid.flat(i1, i2)] = v;
    }
  }
  return w;
}

double weighted_norm_squared(const SpectralField& f, std::span<const double> weights) {
  const auto c = f.coeffs();
  if (weights.size() != c.size()) throw std::invalid_argument("weighted_norm_squared: weight count mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) sum += weights[i] * std::norm(c[i]);
  const double l = f.grid().length();
  return sum * l * l;
}

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
  return std::sqrt(sobolev_norm_squared(f, s, homogeneous));
}

double sobolev_norm(const VectorField2& u, double s, bool homogeneous) {
  return std::sqrt(sobolev_norm_squared(u.u1, s, homogeneous) + sobolev_norm_squared(u.u2, s, homogeneous));
}

double lp_norm(const PhysicalField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : f.values) m = std::max(m, std::abs(x));
    return m;
  }
  const double h = f.grid.spacing();
  double sum = 0.0;
  for (double x : f.values) sum += std::pow(std::abs(x), p);
  return std::pow(sum * h * h, 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) { return lp_norm(to_physical(f), p); }

double lp_norm(std::span<const PhysicalField> components, double p) {
  if (components.empty()) return 0.0;
  PhysicalField mag(components.front().grid);
  for (const auto& c : components) {
    if (c.grid != mag.grid) throw std::invalid_argument("lp_norm: component grid mismatch");
    for (std::size_t i = 0; i < mag.values.size(); ++i) mag.values[i] += c.values[i] * c.values[i];
  }
  for (double& x : mag.values) x = std::sqrt(x);
  return lp_norm(mag, p);
}

SqrtLNorm sqrtL_norm(const SpectralField& f) {
  const PhysicalField phys = to_physical(f);
  SqrtLNorm best;
  bool first = true;
  for (double p : kSqrtLExponents) {
    const double v = lp_norm(phys, p) / std::sqrt(p - 1.0);
    if (first || v > best.value) {
      best = {v, p};
      first = false;
    }
  }
  return best;
}

double fourier_l1(const SpectralField& f) {
  double sum = 0.0;
  for (const Complex& c : f.coeffs()) sum += std::abs(c);
  return sum;
}

}  // namespace aniso
