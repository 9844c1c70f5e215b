#include "aniso/model.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <stdexcept>

#include "aniso/transform.hpp"

namespace aniso {

namespace {

void require_grid(const VectorField2& v, const SpectralField& f, const char* what) {
  if (v.grid() != f.grid()) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

/// Dealiased transport of several scalars by one velocity, sharing the
/// physical-space velocity samples.
template <std::size_t K>
std::array<SpectralField, K> transport(const VectorField2& v, const std::array<const SpectralField*, K>& targets) {
  if (!v.divergence_free) throw std::invalid_argument("advect: velocity is not certified divergence-free");
  const Grid2D& g = v.grid();
  for (const auto* f : targets) require_grid(v, *f, "advect");

  const PhysicalField v1 = to_physical(v.u1);
  const PhysicalField v2 = to_physical(v.u2);
  const auto compute = [&](std::size_t k) {
    const PhysicalField d1 = to_physical(partial(*targets[k], Axis::x1));
    const PhysicalField d2 = to_physical(partial(*targets[k], Axis::x2));
    PhysicalField prod(g);
    for (std::size_t i = 0; i < prod.values.size(); ++i) {
      prod.values[i] = v1.values[i] * d1.values[i] + v2.values[i] * d2.values[i];
    }
    return dealias(to_spectral(prod));
  };
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<SpectralField, K>{compute(I)...};
  }(std::make_index_sequence<K>{});
}

/// Sum over axes of c_axis * d_axis^2 applied as one symbol, scaled by `weight(xi)`.
template <typename Weight>
SpectralField anisotropic_diffusion(const SpectralField& f, double c1, double c2, Weight&& weight) {
  return apply_real_multiplier(f, [&](double xi1, double xi2) {
    return -(c1 * xi1 * xi1 + c2 * xi2 * xi2) * weight(xi1, xi2);
  });
}

struct Unit {
  double operator()(double, double) const { return 1.0; }
};

Tendency assemble(const SimulationState& s, const DissipationConfig& cfg, const std::array<SpectralField, 3>& nl,
                  const SpectralField& visc1, const SpectralField& visc2, const SpectralField& diff_theta) {
  SpectralField f1 = visc1;
  f1 -= nl[0];
  SpectralField f2 = visc2;
  f2 -= nl[1];
  f2.axpy(cfg.lambda1, s.theta);
  VectorField2 dv = leray_project(VectorField2(std::move(f1), std::move(f2)));

  SpectralField dtheta = diff_theta;
  dtheta -= nl[2];
  dtheta.axpy(-cfg.lambda2, s.v.u2);
  return Tendency{std::move(dv), std::move(dtheta)};
}

std::array<SpectralField, 3> transport_state(const SimulationState& s) {
  return transport<3>(s.v, {&s.v.u1, &s.v.u2, &s.theta});
}

}  // namespace

SimulationState::SimulationState(double time, VectorField2 velocity, SpectralField temperature)
    : t(time), v(std::move(velocity)), theta(std::move(temperature)) {
  if (v.grid() != theta.grid()) throw std::invalid_argument("SimulationState: fields must share one grid");
}

SimulationState SimulationState::rest(const Grid2D& grid) { return SimulationState(0.0, VectorField2(grid), SpectralField(grid)); }

void RhsVariant::validate() const {
  if (kind == Kind::truncated && !(parameter > 0.0)) {
    throw std::invalid_argument("truncated system: radius n must be positive");
  }
  if (kind == Kind::mollified && !(parameter > 0.0)) {
    throw std::invalid_argument("mollified system: eps must be positive");
  }
}

SpectralField advect(const VectorField2& v, const SpectralField& f) { return std::move(transport<1>(v, {&f})[0]); }

Tendency rhs_full(const SimulationState& state, const DissipationConfig& cfg) {
  const auto nl = transport_state(state);
  return assemble(state, cfg, nl, anisotropic_diffusion(state.v.u1, cfg.nu1, cfg.nu2, Unit{}),
                  anisotropic_diffusion(state.v.u2, cfg.mu1, cfg.mu2, Unit{}),
                  anisotropic_diffusion(state.theta, cfg.delta1, cfg.delta2, Unit{}));
}

Tendency rhs_truncated(const SimulationState& state, const DissipationConfig& cfg, double n) {
  if (!(n > 0.0)) throw std::invalid_argument("rhs_truncated: radius n must be positive");
  const SimulationState s = admissible_state(state, RhsVariant::truncated(n));
  auto nl = transport_state(s);
  for (auto& term : nl) term = fourier_truncate(term, n);
  return assemble(s, cfg, nl, anisotropic_diffusion(s.v.u1, cfg.nu1, cfg.nu2, Unit{}),
                  anisotropic_diffusion(s.v.u2, cfg.mu1, cfg.mu2, Unit{}),
                  anisotropic_diffusion(s.theta, cfg.delta1, cfg.delta2, Unit{}));
}

Tendency rhs_mollified(const SimulationState& state, const DissipationConfig& cfg, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("rhs_mollified: eps must be positive");
  const VectorField2 jv = mollify(state.v, eps);
  const SpectralField jtheta = mollify(state.theta, eps);
  auto nl = transport<3>(jv, {&jv.u1, &jv.u2, &jtheta});
  for (auto& term : nl) term = mollify(term, eps);
  // J (d_ii J f): the mollifier symbol enters squared.
  const auto sandwich = [eps](double xi1, double xi2) {
    const double r = mollifier_symbol(eps * std::hypot(xi1, xi2));
    return r * r;
  };
  return assemble(state, cfg, nl, anisotropic_diffusion(state.v.u1, cfg.nu1, cfg.nu2, sandwich),
                  anisotropic_diffusion(state.v.u2, cfg.mu1, cfg.mu2, sandwich),
                  anisotropic_diffusion(state.theta, cfg.delta1, cfg.delta2, sandwich));
}

Tendency rhs(const SimulationState& state, const DissipationConfig& cfg, const RhsVariant& variant) {
  switch (variant.kind) {
    case RhsVariant::Kind::full:
      return rhs_full(state, cfg);
    case RhsVariant::Kind::truncated:
      return rhs_truncated(state, cfg, variant.parameter);
    case RhsVariant::Kind::mollified:
      return rhs_mollified(state, cfg, variant.parameter);
  }
  throw std::logic_error("rhs: unknown variant");
}

Tendency explicit_terms(const SimulationState& state, const DissipationConfig& cfg, const RhsVariant& variant,
                        bool with_transport) {
  const Grid2D& g = state.grid();
  std::array<SpectralField, 3> nl{SpectralField(g), SpectralField(g), SpectralField(g)};
  if (with_transport) {
    switch (variant.kind) {
      case RhsVariant::Kind::full:
        nl = transport_state(state);
        break;
      case RhsVariant::Kind::truncated:
        nl = transport_state(state);
        for (auto& term : nl) term = fourier_truncate(term, variant.parameter);
        break;
      case RhsVariant::Kind::mollified: {
        const double eps = variant.parameter;
        const VectorField2 jv = mollify(state.v, eps);
        const SpectralField jtheta = mollify(state.theta, eps);
        nl = transport<3>(jv, {&jv.u1, &jv.u2, &jtheta});
        for (auto& term : nl) term = mollify(term, eps);
        break;
      }
    }
  }
  const SpectralField zero(g);
  return assemble(state, cfg, nl, zero, zero, zero);
}

SimulationState admissible_state(const SimulationState& state, const RhsVariant& variant) {
  if (variant.kind != RhsVariant::Kind::truncated) return state;
  VectorField2 v = fourier_truncate(state.v, variant.parameter);
  certify_divergence_free(v);
  return SimulationState(state.t, std::move(v), fourier_truncate(state.theta, variant.parameter));
}

double inner_product(const SpectralField& f, const SpectralField& g) {
  if (f.grid() != g.grid()) throw std::invalid_argument("inner_product: grid mismatch");
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  const double l = f.grid().length();
  return sum * l * l;
}

double inner_product(const VectorField2& u, const VectorField2& w) {
  return inner_product(u.u1, w.u1) + inner_product(u.u2, w.u2);
}

}  // namespace aniso
