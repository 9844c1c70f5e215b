#include "aniso/experiments/twin.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "aniso/norms.hpp"

namespace aniso {

namespace {

constexpr std::uint64_t kPerturbationSeedOffset = 1000003;

double l2_distance(const SimulationState& a, const SimulationState& b) {
  return std::sqrt(sobolev_norm_squared(a.v.u1 - b.v.u1, 0.0) + sobolev_norm_squared(a.v.u2 - b.v.u2, 0.0) +
                   sobolev_norm_squared(a.theta - b.theta, 0.0));
}

}  // namespace

SimulationState twin_perturbation(const Scenario& s) {
  Scenario p = s;
  p.velocity.seed += kPerturbationSeedOffset;
  p.theta.seed += kPerturbationSeedOffset;
  p.velocity.amplitude = 1.0;
  p.theta.amplitude = 1.0;
  p.eps0 = 0.0;
  SimulationState d = initial_state(p);
  return normalize_hm(std::move(d), 0, 1.0);
}

TwinReport run_twin(const Scenario& s, std::span<const double> amplitudes) {
  s.validate();
  for (std::size_t k = 1; k < amplitudes.size(); ++k) {
    if (amplitudes[k] > amplitudes[k - 1]) throw ConfigError("twin: amplitudes must be nonincreasing");
  }
  for (double a : amplitudes) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ConfigError("twin: amplitudes must be finite and >= 0");
  }
  const SimulationState base0 = admissible_state(initial_state(s), s.integrator.variant);
  const SimulationState delta = twin_perturbation(s);

  Stepper stepper(s.dissipation, base0.grid(), s.integrator);
  TwinReport report;
  report.dt = stepper.resolve_dt(base0);

  SimulationState base = base0;
  std::vector<SimulationState> twins;
  for (double a : amplitudes) {
    SimulationState t = base0;
    t.v.u1.axpy(a, delta.v.u1);
    t.v.u2.axpy(a, delta.v.u2);
    t.theta.axpy(a, delta.theta);
    twins.push_back(admissible_state(t, s.integrator.variant));
    report.rows.push_back({a, l2_distance(base0, twins.back()), 0.0});
  }

  const double t_stop = base0.t + s.integrator.t_end;
  const double slack = 1e-12 * std::max(1.0, std::abs(t_stop));
  try {
    while (base.t < t_stop - slack) {
      const double dt = std::min(report.dt, t_stop - base.t);
      base = stepper.step(base, dt);
      for (std::size_t k = 0; k < twins.size(); ++k) {
        twins[k] = stepper.step(twins[k], dt);
        report.rows[k].sup_difference = std::max(report.rows[k].sup_difference, l2_distance(base, twins[k]));
      }
      ++report.steps;
    }
  } catch (const BlowUpError&) {
    report.blew_up = true;
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (TwinRow& r : report.rows) {
    if (r.amplitude > 0.0) {
      r.ratio = r.sup_difference / r.amplitude;
      lo = std::min(lo, r.ratio);
      hi = std::max(hi, r.ratio);
    }
  }
  if (hi > 0.0) report.ratio_spread = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  report.bounded = !report.blew_up && report.ratio_spread <= kTwinRatioFactor;
  return report;
}

void write_twin_report(const Scenario& s, const TwinReport& report, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  {
    std::ofstream csv(directory / "twin_report.csv", std::ios::binary | std::ios::trunc);
    csv << "amplitude,sup_difference,ratio\n";
    for (const TwinRow& r : report.rows) csv << fmt::format("{:.17g},{:.17g},{:.17g}\n", r.amplitude, r.sup_difference, r.ratio);
  }
  nlohmann::ordered_json j = {
      {"name", s.name},
      {"provenance", {{"config_hash", config_hash(s)},
                      {"seeds", {{"velocity", s.velocity.seed}, {"theta", s.theta.seed}}},
                      {"perturbation_seed_offset", kPerturbationSeedOffset}}},
      {"dt", report.dt},
      {"steps", report.steps},
      {"blew_up", report.blew_up},
      {"ratio_spread", report.ratio_spread},
      {"bounded", report.bounded},
      {"factor", kTwinRatioFactor},
  };
  std::ofstream out(directory / "twin_summary.json", std::ios::binary | std::ios::trunc);
  out << j.dump(2) << "\n";
}

}  // namespace aniso
