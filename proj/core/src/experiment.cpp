#include "aniso/experiments/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "aniso/snapshot.hpp"

namespace aniso {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Snapshot to_snapshot(const SimulationState& s) {
  return Snapshot{s.t, {"v1", "v2", "theta"}, {s.v.u1, s.v.u2, s.theta}};
}

}  // namespace

std::filesystem::path output_root(const Scenario& s) {
  if (const char* env = std::getenv("ANISO_OUT"); env != nullptr && *env != '\0') return env;
  return s.output_dir;
}

std::string verdict_label(const Scenario& s) { return is_open_case(s.preset) ? "observation" : "verdict"; }

DecayVerdict evaluate_decay(const std::vector<EnergyReport>& reports, int m, double horizon, double threshold) {
  DecayVerdict d;
  if (reports.empty()) return d;
  const EnergyReport* at = &reports.back();
  for (const EnergyReport& r : reports) {
    if (r.t >= horizon * (1.0 - 1e-12)) {
      at = &r;
      break;
    }
  }
  const EnergyReport& first = reports.front();
  d.horizon_time = at->t;
  d.horizon_reached = at->t >= horizon * (1.0 - 1e-12);
  d.v_ratio = first.v_hm1 > 0.0 ? at->v_hm1 / first.v_hm1 : 0.0;
  d.theta_ratio = first.theta_hm1 > 0.0 ? at->theta_hm1 / first.theta_hm1 : 0.0;
  d.thresholds_met = d.horizon_reached && d.v_ratio < threshold && d.theta_ratio < threshold;
  if (m >= 2) {
    d.defined = true;
    const DecaySeries series = decay_series(reports, m);
    d.integral = series.total_integral();
    d.last_decade_fraction = series.last_decade_fraction;
    d.superlinear_late = series.superlinear_late;
  }
  return d;
}

RunResult run_scenario(const Scenario& s, std::optional<std::filesystem::path> directory) {
  s.validate();
  const std::filesystem::path dir = directory ? *directory : output_root(s) / s.name;
  const std::filesystem::path snapdir = dir / "snapshots";
  std::filesystem::create_directories(snapdir);

  const SimulationState initial = initial_state(s);
  std::size_t sample_index = 0;
  std::size_t snapshot_index = 0;
  const double t_stop = initial.t + s.integrator.t_end;
  const auto on_sample = [&](const SimulationState& state, const EnergyReport&) {
    const bool last = state.t >= t_stop - 1e-12 * std::max(1.0, t_stop);
    const bool periodic = s.snapshot_every > 0 && (sample_index * s.cadence) % s.snapshot_every == 0;
    if (sample_index == 0 || last || periodic) {
      write_snapshot(snapdir / fmt::format("snap_{:05d}.absf", snapshot_index++), to_snapshot(state));
    }
    ++sample_index;
  };
  RunResult result{kExitCompleted, dir, monitored_run(initial, s.dissipation, s.integrator, s.m, s.cadence, on_sample),
                   {}, {}, {}};
  const RunOutcome& outcome = result.run.outcome;
  if (outcome.blew_up) {
    // The last finite state is kept for inspection.
    write_snapshot(snapdir / fmt::format("snap_{:05d}.absf", snapshot_index++), to_snapshot(outcome.final_state));
  }

  const double eps0 = s.eps0 > 0.0 ? s.eps0
                                   : std::sqrt(result.run.reports.empty() ? 0.0
                                                                          : result.run.reports.front().hm_energy);
  result.bootstrap = bootstrap_monitor(result.run.reports, eps0);
  result.decay = evaluate_decay(result.run.reports, s.m, s.horizon, s.threshold);
  result.exit_code = outcome.blew_up ? kExitBlowUp : kExitCompleted;

  {
    std::ostringstream csv;
    write_report_csv(csv, result.run.reports);
    write_text(result.directory / "report.csv", csv.str());
  }

  const BootstrapVerdict& b = result.bootstrap;
  const DecayVerdict& d = result.decay;
  nlohmann::ordered_json decay = {
      {"m", s.m},
      {"horizon", s.horizon},
      {"threshold", s.threshold},
      {"horizon_time", d.horizon_time},
      {"horizon_reached", d.horizon_reached},
      {"v_ratio", d.v_ratio},
      {"theta_ratio", d.theta_ratio},
      {"thresholds_met", d.thresholds_met},
  };
  if (d.defined) {
    decay["f_integral"] = d.integral;
    decay["last_decade_fraction"] = d.last_decade_fraction;
    decay["superlinear_late"] = d.superlinear_late;
  } else {
    decay["f_integral"] = nullptr;
  }
  nlohmann::ordered_json summary = {
      {"name", s.name},
      {"label", verdict_label(s)},
      {"provenance",
       {{"config_hash", config_hash(s)},
        {"seeds", {{"velocity", s.velocity.seed}, {"theta", s.theta.seed}}},
        {"version", kArtifactVersion},
        {"snapshot_format", kSnapshotVersion}}},
      {"config", nlohmann::ordered_json::parse(canonical_config(s))},
      {"outcome",
       {{"status", outcome.blew_up ? "blow-up" : "completed"},
        {"exit_code", result.exit_code},
        {"t_final", outcome.final_state.t},
        {"steps", outcome.steps},
        {"blowup_time", outcome.blew_up ? nlohmann::ordered_json(outcome.blowup_time) : nlohmann::ordered_json()},
        {"divergence_drift_max", outcome.max_divergence_drift},
        {"divergence_drift_alarms", outcome.drift_alarms}}},
      {"verdicts",
       {{"budget_residual_max", result.run.max_abs_budget_residual},
        {"bootstrap",
         {{"verdict", b.held ? "held" : "violated"},
          {"violation_time", b.held ? nlohmann::ordered_json() : nlohmann::ordered_json(b.violation_time)},
          {"eps0", eps0},
          {"max_ratio", b.max_ratio},
          {"c1_hat", b.c1_hat},
          {"smallness_condition", b.smallness_condition}}},
        {"decay", decay}}},
  };
  result.summary_json = summary.dump(2) + "\n";
  write_text(result.directory / "summary.json", result.summary_json);
  return result;
}

}  // namespace aniso
