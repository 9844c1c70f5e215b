#pragma once

#include "aniso/dissipation.hpp"
#include "aniso/operators.hpp"
#include "aniso/spectral_field.hpp"

namespace aniso {

struct SimulationState {
  double t = 0.0;
  VectorField2 v;
  SpectralField theta;

  SimulationState(double time, VectorField2 velocity, SpectralField temperature);
  /// Rest state (v, theta) = (0, 0) at t = 0.
  static SimulationState rest(const Grid2D& grid);

  const Grid2D& grid() const { return theta.grid(); }
};

/// Which right-hand side is integrated: the full system, the ball-truncated
/// Galerkin system, or the doubly mollified system.
struct RhsVariant {
  enum class Kind { full, truncated, mollified };
  Kind kind = Kind::full;
  double parameter = 0.0;  // truncation radius n or mollifier width eps

  static RhsVariant full() { return {}; }
  static RhsVariant truncated(double n) { return {Kind::truncated, n}; }
  static RhsVariant mollified(double eps) { return {Kind::mollified, eps}; }
  void validate() const;
};

struct Tendency {
  VectorField2 dv;
  SpectralField dtheta;
};

/// Dealiased pseudo-spectral v . grad f. Requires a certified v.
SpectralField advect(const VectorField2& v, const SpectralField& f);

Tendency rhs_full(const SimulationState& state, const DissipationConfig& cfg);
Tendency rhs_truncated(const SimulationState& state, const DissipationConfig& cfg, double n);
Tendency rhs_mollified(const SimulationState& state, const DissipationConfig& cfg, double eps);
Tendency rhs(const SimulationState& state, const DissipationConfig& cfg, const RhsVariant& variant);

/// Right-hand side without the diagonal dissipation, i.e. what an integrating
/// factor scheme treats explicitly: transport (unless `with_transport` is false)
/// plus the lambda couplings.
Tendency explicit_terms(const SimulationState& state, const DissipationConfig& cfg, const RhsVariant& variant,
                        bool with_transport = true);

/// Restricts a state to the variant's admissible subspace (T_n for the
/// truncated system, identity otherwise) and recertifies v.
SimulationState admissible_state(const SimulationState& state, const RhsVariant& variant);

/// Real L^2 inner product <f, g> over the box, via Parseval.
double inner_product(const SpectralField& f, const SpectralField& g);
double inner_product(const VectorField2& u, const VectorField2& w);

}  // namespace aniso
