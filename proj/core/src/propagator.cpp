#include "aniso/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aniso/operators.hpp"

namespace aniso {

double velocity_kernel_exponent(const DissipationConfig& cfg, double xi1, double xi2) {
  const double a2 = xi1 * xi1;
  const double b2 = xi2 * xi2;
  const double r2 = a2 + b2;
  if (r2 == 0.0) return 0.0;
  return -(cfg.mu1 * a2 * a2 + cfg.nu2 * b2 * b2 + (cfg.nu1 + cfg.mu2) * a2 * b2) / r2;
}

double theta_kernel_exponent(const DissipationConfig& cfg, double xi1, double xi2) {
  return -(cfg.delta1 * xi1 * xi1 + cfg.delta2 * xi2 * xi2);
}

PropagatorSymbol PropagatorSymbol::make(const DissipationConfig& cfg, const Grid2D& grid, const RhsVariant& variant) {
  cfg.validate();
  variant.validate();
  PropagatorSymbol p{grid, std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 0.0)};
  const int n = grid.n();
  for (int i1 = 0; i1 < n; ++i1) {
    const double xi1 = grid.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      const double xi2 = grid.wavenumber(i2);
      double weight = 1.0;
      if (variant.kind == RhsVariant::Kind::mollified) {
        const double r = mollifier_symbol(variant.parameter * std::hypot(xi1, xi2));
        weight = r * r;
      }
      const std::size_t k = grid.flat(i1, i2);
      p.velocity_rate[k] = weight * velocity_kernel_exponent(cfg, xi1, xi2);
      p.theta_rate[k] = weight * theta_kernel_exponent(cfg, xi1, xi2);
    }
  }
  return p;
}

double PropagatorSymbol::max_rate() const {
  double m = 0.0;
  for (double r : velocity_rate) m = std::max(m, -r);
  for (double r : theta_rate) m = std::max(m, -r);
  return m;
}

LinearPropagator::LinearPropagator(PropagatorSymbol symbol, double t) : symbol_(std::move(symbol)), t_(t) {
  if (!(t >= 0.0)) throw std::invalid_argument("linear_propagator: t must be >= 0");
  velocity_factor_.resize(symbol_.velocity_rate.size());
  theta_factor_.resize(symbol_.theta_rate.size());
  for (std::size_t k = 0; k < velocity_factor_.size(); ++k) {
    velocity_factor_[k] = std::exp(symbol_.velocity_rate[k] * t);
    theta_factor_[k] = std::exp(symbol_.theta_rate[k] * t);
  }
}

LinearPropagator::LinearPropagator(const DissipationConfig& cfg, const Grid2D& grid, double t)
    : LinearPropagator(PropagatorSymbol::make(cfg, grid), t) {}

VectorField2 LinearPropagator::apply(const VectorField2& v) const {
  if (v.grid() != symbol_.grid) throw std::invalid_argument("LinearPropagator: grid mismatch");
  VectorField2 out = v;
  auto c1 = out.u1.coeffs();
  auto c2 = out.u2.coeffs();
  for (std::size_t k = 0; k < c1.size(); ++k) {
    c1[k] *= velocity_factor_[k];
    c2[k] *= velocity_factor_[k];
  }
  return out;
}

SpectralField LinearPropagator::apply_theta(const SpectralField& theta) const {
  if (theta.grid() != symbol_.grid) throw std::invalid_argument("LinearPropagator: grid mismatch");
  SpectralField out = theta;
  auto c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= theta_factor_[k];
  return out;
}

SimulationState LinearPropagator::operator()(const SimulationState& state) const {
  return SimulationState(state.t + t_, apply(state.v), apply_theta(state.theta));
}

LinearPropagator linear_propagator(const DissipationConfig& cfg, const Grid2D& grid, double t) {
  return LinearPropagator(cfg, grid, t);
}

}  // namespace aniso
