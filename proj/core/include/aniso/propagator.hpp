#pragma once

#include <vector>

#include "aniso/dissipation.hpp"
#include "aniso/grid.hpp"
#include "aniso/model.hpp"

namespace aniso {

/// Decay exponent of the projected anisotropic viscous operator on
/// divergence-free fields:
///   a(xi) = -(mu1 xi1^4 + nu2 xi2^4 + (nu1 + mu2) xi1^2 xi2^2) / |xi|^2,  a(0) = 0.
/// For nu1 = mu2 = 0 this is -(mu1 xi1^4 + nu2 xi2^4)/|xi|^2, and
///   exp(-max(mu1,nu2)|xi|^2 t) <= exp(a t) <= exp(-min(mu1,nu2)|xi|^2 t / 2).
double velocity_kernel_exponent(const DissipationConfig& cfg, double xi1, double xi2);

/// -(delta1 xi1^2 + delta2 xi2^2).
double theta_kernel_exponent(const DissipationConfig& cfg, double xi1, double xi2);

/// Per-mode exponents of the diagonal linear part for one RHS variant. The
/// mollified system carries the extra factor rho_hat(eps xi)^2.
struct PropagatorSymbol {
  Grid2D grid;
  std::vector<double> velocity_rate;
  std::vector<double> theta_rate;

  static PropagatorSymbol make(const DissipationConfig& cfg, const Grid2D& grid,
                               const RhsVariant& variant = RhsVariant::full());
  double max_rate() const;
};

/// exp(t L) applied to divergence-free velocity and theta; lambda couplings excluded.
class LinearPropagator {
 public:
  LinearPropagator(PropagatorSymbol symbol, double t);
  LinearPropagator(const DissipationConfig& cfg, const Grid2D& grid, double t);

  double time() const { return t_; }
  const PropagatorSymbol& symbol() const { return symbol_; }

  VectorField2 apply(const VectorField2& v) const;
  SpectralField apply_theta(const SpectralField& theta) const;
  SimulationState operator()(const SimulationState& state) const;

 private:
  PropagatorSymbol symbol_;
  double t_;
  std::vector<double> velocity_factor_;
  std::vector<double> theta_factor_;
};

LinearPropagator linear_propagator(const DissipationConfig& cfg, const Grid2D& grid, double t);

}  // namespace aniso
