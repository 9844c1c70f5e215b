#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "aniso/dissipation.hpp"
#include "aniso/integrator.hpp"
#include "aniso/model.hpp"

namespace aniso {

/// Guards divisions by an initial energy in relative residuals.
inline constexpr double kEnergyFloor = 1e-30;

/// One diagnostics row. Dissipation channels are at level H^m and already
/// carry their coefficients; cum_diss integrates every channel of the
/// configuration (including nu1 and mu2, which have no column of their own).
/// budget_residual is the relative L^2 budget defect.
struct EnergyReport {
  double t = 0.0;
  double l2_energy = 0.0;  // (||v||^2 + ||theta||^2) / 2
  double hm_energy = 0.0;  // ||v||_{H^m}^2 + ||theta||_{H^m}^2
  double diss_nu2 = 0.0;
  double diss_mu1 = 0.0;
  double diss_d1 = 0.0;
  double diss_d2 = 0.0;
  double cum_diss = 0.0;
  double budget_residual = 0.0;
  double f_t = 0.0;  // ||d2 v1||^2_{H.^{m-2}} + ||d1 v2||^2_{H.^{m-2}} + ||theta||^2_{H.^{m-1}}
  double v_hm1 = 0.0;
  double theta_hm1 = 0.0;
};

/// Column order of the report CSV.
inline constexpr const char* kReportCsvHeader =
    "t,l2_energy,hm_energy_m,diss_nu2,diss_mu1,diss_d1,diss_d2,cum_diss,budget_residual,f_t,v_hm1,theta_hm1";
void write_report_csv(std::ostream& out, std::span<const EnergyReport> rows);

/// L^2 budget ingredients at one instant: E = ||v||^2 + ||theta||^2, the
/// dissipation rate D (all channels, coefficients included) and the buoyancy
/// production (lambda1 - lambda2) <theta, v2>, so that dE/dt = -2D + 2P.
struct BudgetSample {
  double t = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;
  double production = 0.0;
};

/// Channel values of one state; mollified variants measure J^eps of the fields.
BudgetSample budget_sample(const SimulationState& state, const DissipationConfig& cfg,
                           const RhsVariant& variant = RhsVariant::full());

/// r(t_k) = [E(t_k) - E(0) + 2 int (D - P)] / max(E(0), kEnergyFloor), trapezoid in time.
/// Throws std::invalid_argument for fewer than two samples.
std::vector<double> energy_budget(std::span<const BudgetSample> samples);
std::vector<double> energy_budget(std::span<const SimulationState> trajectory, const DissipationConfig& cfg,
                                  const RhsVariant& variant = RhsVariant::full());

/// Accumulates EnergyReports along a trajectory. Every observed state enters
/// the time integrals; only states observed with `record` produce a row.
class EnergyTracker {
 public:
  EnergyTracker(const DissipationConfig& cfg, const Grid2D& grid, int m, const RhsVariant& variant = RhsVariant::full());

  /// Returns the row for `state` (stored when `record` is set).
  EnergyReport observe(const SimulationState& state, bool record = true);

  int m() const { return m_; }
  const std::vector<EnergyReport>& reports() const { return reports_; }
  double max_abs_budget_residual() const { return max_residual_; }

 private:
  struct Channels {
    double nu1 = 0.0, nu2 = 0.0, mu1 = 0.0, mu2 = 0.0, d1 = 0.0, d2 = 0.0;
    double total() const { return nu1 + nu2 + mu1 + mu2 + d1 + d2; }
  };
  Channels channels(const SimulationState& s, const std::vector<double>& w1, const std::vector<double>& w2) const;

  DissipationConfig cfg_;
  int m_;
  std::vector<double> unit_, l2_w1_, l2_w2_, hm_w1_, hm_w2_, hm_;
  std::vector<double> f_vel1_, f_vel2_, f_theta_, hm1_;
  bool started_ = false;
  BudgetSample first_{}, last_{};
  double last_hm_diss_ = 0.0;
  double cum_l2_ = 0.0;
  double cum_hm_ = 0.0;
  double max_residual_ = 0.0;
  std::vector<EnergyReport> reports_;
};

struct BootstrapVerdict {
  bool held = true;
  double violation_time = 0.0;  // first sample with E_m(t) > 2 eps0^2 when !held
  double eps0 = 0.0;
  double max_ratio = 0.0;       // max_t E_m(t) / (2 eps0^2)
  double c1_hat = 0.0;          // max_t (E_m(t) - E_m(0))_+ / E_m(t)^{3/2}
  bool smallness_condition = true;  // 4 c1_hat eps0 <= 1
};

/// E_m(t) = hm_energy + 2 cum_diss against 2 eps0^2. Throws when E_m(0) > eps0^2.
BootstrapVerdict bootstrap_monitor(std::span<const EnergyReport> reports, double eps0);

struct DecaySeries {
  std::vector<double> times;
  std::vector<double> f_values;
  std::vector<double> v_hm1;
  std::vector<double> theta_hm1;
  std::vector<double> cumulative_f;
  /// (f(t_k) - f(t_{k-1})) / (t_k - t_{k-1}) for consecutive samples.
  std::vector<double> lipschitz_quotients;
  double max_lipschitz = 0.0;
  /// Share of int_0^T f accumulated over [T/10, T].
  double last_decade_fraction = 0.0;
  /// Mean of f over the last tenth of the run exceeds that of the tenth before.
  bool superlinear_late = false;

  double total_integral() const { return cumulative_f.empty() ? 0.0 : cumulative_f.back(); }
};

/// Throws std::invalid_argument for m < 2.
DecaySeries decay_series(std::span<const EnergyReport> reports, int m);
DecaySeries decay_series(std::span<const SimulationState> trajectory, int m);

enum class DecayModel { exp, power, log_power };
DecayModel parse_decay_model(const std::string& name);
std::string to_string(DecayModel model);

/// Least squares in log y: exp fits c + r t, power c + p log t, log_power
/// c + p log log(e + t).
struct DecayFit {
  DecayModel model = DecayModel::exp;
  double intercept = 0.0;
  double exponent = 0.0;  // rate r or power p
  double residual = 0.0;  // RMS residual of log y
  double reference_exponent = 0.0;  // -m/2 for log_power
  double exponent_gap = 0.0;        // exponent - reference_exponent for log_power
};

/// Needs >= 10 samples with t_max >= 10 t_min (t_min > 0 for the logarithmic
/// models; for exp the span is measured from the first positive time).
/// Nonpositive values are skipped; an all-zero series throws "no decay to fit".
DecayFit decay_fit(std::span<const double> times, std::span<const double> values, DecayModel model, int m = 0);

/// Integration plus per-step tracking.
struct MonitoredRun {
  RunOutcome outcome;
  std::vector<EnergyReport> reports;
  double max_abs_budget_residual = 0.0;
};

/// Calls `on_sample` after each recorded row (every `cadence` steps, plus the
/// first and last state).
MonitoredRun monitored_run(const SimulationState& initial, const DissipationConfig& cfg, const IntegratorConfig& icfg,
                           int m, std::size_t cadence = 1,
                           const std::function<void(const SimulationState&, const EnergyReport&)>& on_sample = {});

/// Bisection for the largest eps0 in [lo, hi] whose data keeps the bootstrap
/// bound over the run. `initial(eps0)` must return data with E_m(0) = eps0^2.
struct Eps0Search {
  double eps0 = 0.0;     // largest amplitude found to hold (0 if none)
  bool upper_held = false;
  int evaluations = 0;
  BootstrapVerdict verdict;  // of the accepted eps0
  std::optional<MonitoredRun> run;  // of the accepted eps0, or of lo when nothing held
};

Eps0Search bisect_eps0(const std::function<SimulationState(double)>& initial, const DissipationConfig& cfg,
                       const IntegratorConfig& icfg, int m, double lo, double hi, int max_iterations,
                       std::size_t cadence = 1);

}  // namespace aniso
