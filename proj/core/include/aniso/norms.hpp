#pragma once

#include <limits>
#include <span>
#include <vector>

#include "aniso/spectral_field.hpp"
#include "aniso/transform.hpp"

namespace aniso {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// ||f||_{H^s} = ||J^s f||_{L^2}, or ||Lambda^s f||_{L^2} when homogeneous, via Parseval.
/// Homogeneous norms with s < 0 require a zero mean.
double sobolev_norm(const SpectralField& f, double s, bool homogeneous = false);
double sobolev_norm_squared(const SpectralField& f, double s, bool homogeneous = false);
double sobolev_norm(const VectorField2& u, double s, bool homogeneous = false);

/// Per-mode Parseval weights for repeated norm evaluation on one grid.
std::vector<double> sobolev_weights(const Grid2D& grid, double s, bool homogeneous = false);
/// L^2 * sum_xi w(xi) |F(f)(xi)|^2.
double weighted_norm_squared(const SpectralField& f, std::span<const double> weights);

inline double l2_norm(const SpectralField& f) { return sobolev_norm(f, 0.0); }

/// Collocation quadrature of (int |f|^p)^{1/p}; p = infinity is the grid maximum.
double lp_norm(const PhysicalField& f, double p);
double lp_norm(const SpectralField& f, double p);
/// Pointwise Euclidean magnitude of several components, integrated as one L^p norm.
double lp_norm(std::span<const PhysicalField> components, double p);

/// Exponents over which the sqrt-L supremum is approximated.
inline constexpr double kSqrtLExponents[] = {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64};

struct SqrtLNorm {
  double value = 0.0;
  double maximizing_p = 2.0;
};

/// max over kSqrtLExponents of ||f||_{L^p} / sqrt(p - 1).
SqrtLNorm sqrtL_norm(const SpectralField& f);

/// Sum of |F(f)(xi)| over the lattice (ell^1 of Fourier coefficients).
double fourier_l1(const SpectralField& f);

}  // namespace aniso
