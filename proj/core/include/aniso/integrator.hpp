#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "aniso/dissipation.hpp"
#include "aniso/model.hpp"
#include "aniso/propagator.hpp"

namespace aniso {

enum class Method {
  if_rk4,  // integrating-factor (Lawson) RK4 with the exact diagonal propagator
  erk4,    // classical explicit RK4 on the whole right-hand side
};

struct IntegratorConfig {
  Method method = Method::if_rk4;
  /// Fixed step; ignored when auto_dt is set.
  double dt = 1e-3;
  bool auto_dt = false;
  double cfl = 0.4;
  /// Upper bound on an automatically chosen step.
  double dt_max = 0.1;
  double t_end = 1.0;
  RhsVariant variant = RhsVariant::full();
  /// Drop the transport terms (linear problem).
  bool with_transport = true;

  void validate() const;
};

/// Divergence drift above which a step is flagged before re-projection.
inline constexpr double kDivergenceDriftAlarm = 1e-10;

struct StepInfo {
  double dt = 0.0;
  double divergence_drift = 0.0;
  bool drift_alarm = false;
};

/// Non-finite coefficients appeared; carries the last finite state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double t, SimulationState last);
  double time() const { return t_; }
  const SimulationState& last_state() const { return last_; }

 private:
  double t_;
  SimulationState last_;
};

/// Owns the cached exponentials for one (cfg, grid, integrator) triple.
class Stepper {
 public:
  Stepper(const DissipationConfig& cfg, const Grid2D& grid, IntegratorConfig icfg);

  const IntegratorConfig& config() const { return icfg_; }
  const PropagatorSymbol& symbol() const { return symbol_; }

  /// Step size for `state`: fixed dt, or cfl / (max|v| N/L + max|lambda| [+ stiff rate for erk4]).
  double resolve_dt(const SimulationState& state) const;

  /// Advances by dt, re-projects v and throws BlowUpError on NaN/Inf.
  SimulationState step(const SimulationState& state, double dt, StepInfo* info = nullptr);

 private:
  SimulationState if_rk4(const SimulationState& s, double dt);
  SimulationState erk4(const SimulationState& s, double dt);
  Tendency full_tendency(const SimulationState& s) const;
  void refresh_factors(double dt);

  DissipationConfig cfg_;
  IntegratorConfig icfg_;
  PropagatorSymbol symbol_;
  double cached_dt_ = -1.0;
  std::vector<double> vel_full_, vel_half_, th_full_, th_half_;
};

SimulationState step(const SimulationState& state, const DissipationConfig& cfg, const IntegratorConfig& icfg);

using StepObserver = std::function<void(const SimulationState& state, std::size_t step_index, const StepInfo& info)>;

struct RunOutcome {
  SimulationState final_state;
  std::size_t steps = 0;
  bool blew_up = false;
  double blowup_time = 0.0;
  std::size_t drift_alarms = 0;
  double max_divergence_drift = 0.0;
};

/// Integrates to icfg.t_end. The observer sees the initial state (index 0) and
/// every accepted step. Blow-up ends the run with the last finite state.
RunOutcome run(const SimulationState& initial, const DissipationConfig& cfg, const IntegratorConfig& icfg,
               const StepObserver& observer = {});

}  // namespace aniso
