#include "aniso/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "aniso/operators.hpp"
#include "aniso/transform.hpp"

namespace aniso {

namespace {

void scale_modes(SpectralField& f, const std::vector<double>& factor) {
  auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= factor[k];
}

SimulationState scaled(const SimulationState& s, const std::vector<double>& vel, const std::vector<double>& th) {
  SimulationState out = s;
  scale_modes(out.v.u1, vel);
  scale_modes(out.v.u2, vel);
  scale_modes(out.theta, th);
  return out;
}

Tendency scaled(const Tendency& k, const std::vector<double>& vel, const std::vector<double>& th) {
  Tendency out = k;
  scale_modes(out.dv.u1, vel);
  scale_modes(out.dv.u2, vel);
  scale_modes(out.dtheta, th);
  return out;
}

// s += h * k
void add_scaled(SimulationState& s, double h, const Tendency& k) {
  s.v.u1.axpy(h, k.dv.u1);
  s.v.u2.axpy(h, k.dv.u2);
  s.theta.axpy(h, k.dtheta);
}

void add_scaled(Tendency& acc, double h, const Tendency& k) {
  acc.dv.u1.axpy(h, k.dv.u1);
  acc.dv.u2.axpy(h, k.dv.u2);
  acc.dtheta.axpy(h, k.dtheta);
}

void recertify(SimulationState& s) {
  if (!certify_divergence_free(s.v)) s.v = leray_project(s.v);
}

bool all_finite(const SpectralField& f) {
  for (const Complex& c : f.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

double max_speed(const VectorField2& v) {
  const PhysicalField a = to_physical(v.u1);
  const PhysicalField b = to_physical(v.u2);
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::hypot(a.values[i], b.values[i]));
  return m;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!auto_dt && !(dt > 0.0)) throw std::invalid_argument("integrator: dt must be positive");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("integrator: cfl must lie in (0, 1]");
  if (!(dt_max > 0.0)) throw std::invalid_argument("integrator: dt_max must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("integrator: t_end must be >= 0");
  variant.validate();
}

BlowUpError::BlowUpError(double t, SimulationState last)
    : std::runtime_error("blow-up detected at t=" + std::to_string(t)), t_(t), last_(std::move(last)) {}

Stepper::Stepper(const DissipationConfig& cfg, const Grid2D& grid, IntegratorConfig icfg)
    : cfg_(cfg), icfg_(icfg), symbol_(PropagatorSymbol::make(cfg, grid, icfg.variant)) {
  icfg_.validate();
}

double Stepper::resolve_dt(const SimulationState& state) const {
  if (!icfg_.auto_dt) return icfg_.dt;
  const Grid2D& g = state.grid();
  double rate = max_speed(state.v) * g.n() / g.length();
  rate += std::max(std::abs(cfg_.lambda1), std::abs(cfg_.lambda2));
  if (icfg_.method == Method::erk4) rate += symbol_.max_rate();
  if (rate == 0.0) return icfg_.dt_max;
  return std::min(icfg_.cfl / rate, icfg_.dt_max);
}

void Stepper::refresh_factors(double dt) {
  if (dt == cached_dt_) return;
  const std::size_t n = symbol_.velocity_rate.size();
  vel_full_.resize(n);
  vel_half_.resize(n);
  th_full_.resize(n);
  th_half_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    vel_full_[k] = std::exp(symbol_.velocity_rate[k] * dt);
    vel_half_[k] = std::exp(symbol_.velocity_rate[k] * 0.5 * dt);
    th_full_[k] = std::exp(symbol_.theta_rate[k] * dt);
    th_half_[k] = std::exp(symbol_.theta_rate[k] * 0.5 * dt);
  }
  cached_dt_ = dt;
}

Tendency Stepper::full_tendency(const SimulationState& s) const {
  if (icfg_.with_transport) return rhs(s, cfg_, icfg_.variant);
  Tendency k = explicit_terms(s, cfg_, icfg_.variant, false);
  auto lin = [](SpectralField& acc, const SpectralField& f, const std::vector<double>& rate) {
    auto a = acc.coeffs();
    const auto c = f.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += rate[i] * c[i];
  };
  lin(k.dv.u1, s.v.u1, symbol_.velocity_rate);
  lin(k.dv.u2, s.v.u2, symbol_.velocity_rate);
  lin(k.dtheta, s.theta, symbol_.theta_rate);
  return k;
}

SimulationState Stepper::if_rk4(const SimulationState& u, double h) {
  refresh_factors(h);
  const auto N = [&](const SimulationState& s) { return explicit_terms(s, cfg_, icfg_.variant, icfg_.with_transport); };

  const Tendency k1 = N(u);
  SimulationState a = u;
  add_scaled(a, 0.5 * h, k1);
  a = scaled(a, vel_half_, th_half_);
  recertify(a);

  const Tendency k2 = N(a);
  SimulationState b = scaled(u, vel_half_, th_half_);
  add_scaled(b, 0.5 * h, k2);
  recertify(b);

  const Tendency k3 = N(b);
  SimulationState c = scaled(u, vel_full_, th_full_);
  add_scaled(c, h, scaled(k3, vel_half_, th_half_));
  recertify(c);

  const Tendency k4 = N(c);
  Tendency acc = scaled(k1, vel_full_, th_full_);
  Tendency mid = k2;
  add_scaled(mid, 1.0, k3);
  add_scaled(acc, 2.0, scaled(mid, vel_half_, th_half_));
  add_scaled(acc, 1.0, k4);

  SimulationState next = scaled(u, vel_full_, th_full_);
  add_scaled(next, h / 6.0, acc);
  next.t = u.t + h;
  return next;
}

SimulationState Stepper::erk4(const SimulationState& u, double h) {
  const Tendency k1 = full_tendency(u);
  SimulationState a = u;
  add_scaled(a, 0.5 * h, k1);
  recertify(a);
  const Tendency k2 = full_tendency(a);
  SimulationState b = u;
  add_scaled(b, 0.5 * h, k2);
  recertify(b);
  const Tendency k3 = full_tendency(b);
  SimulationState c = u;
  add_scaled(c, h, k3);
  recertify(c);
  const Tendency k4 = full_tendency(c);

  SimulationState next = u;
  add_scaled(next, h / 6.0, k1);
  add_scaled(next, h / 3.0, k2);
  add_scaled(next, h / 3.0, k3);
  add_scaled(next, h / 6.0, k4);
  next.t = u.t + h;
  return next;
}

SimulationState Stepper::step(const SimulationState& state, double dt, StepInfo* info) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  SimulationState s = state;
  if (!s.v.divergence_free) recertify(s);
  SimulationState next = icfg_.method == Method::if_rk4 ? if_rk4(s, dt) : erk4(s, dt);
  if (!all_finite(next.v.u1) || !all_finite(next.v.u2) || !all_finite(next.theta)) {
    throw BlowUpError(state.t, state);
  }
  const double drift = divergence_defect(next.v);
  next.v = leray_project(next.v);
  if (info != nullptr) {
    info->dt = dt;
    info->divergence_drift = drift;
    info->drift_alarm = drift > kDivergenceDriftAlarm;
  }
  return next;
}

SimulationState step(const SimulationState& state, const DissipationConfig& cfg, const IntegratorConfig& icfg) {
  Stepper stepper(cfg, state.grid(), icfg);
  return stepper.step(state, stepper.resolve_dt(state));
}

RunOutcome run(const SimulationState& initial, const DissipationConfig& cfg, const IntegratorConfig& icfg,
               const StepObserver& observer) {
  Stepper stepper(cfg, initial.grid(), icfg);
  SimulationState state = admissible_state(initial, icfg.variant);
  if (!state.v.divergence_free) recertify(state);
  RunOutcome outcome{state};
  if (observer) observer(state, 0, StepInfo{});

  const double t_stop = initial.t + icfg.t_end;
  const double slack = 1e-12 * std::max(1.0, std::abs(t_stop));
  std::size_t index = 0;
  while (state.t < t_stop - slack) {
    double dt = stepper.resolve_dt(state);
    if (state.t + dt > t_stop - slack) dt = t_stop - state.t;
    StepInfo info;
    try {
      state = stepper.step(state, dt, &info);
    } catch (const BlowUpError& e) {
      outcome.final_state = e.last_state();
      outcome.steps = index;
      outcome.blew_up = true;
      outcome.blowup_time = e.time();
      return outcome;
    }
    ++index;
    outcome.max_divergence_drift = std::max(outcome.max_divergence_drift, info.divergence_drift);
    if (info.drift_alarm) ++outcome.drift_alarms;
    if (observer) observer(state, index, info);
  }
  outcome.final_state = state;
  outcome.steps = index;
  return outcome;
}

}  // namespace aniso
