#include "aniso/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "aniso/norms.hpp"
#include "aniso/operators.hpp"

namespace aniso {

namespace {

std::vector<double> axis_weights(const Grid2D& g, std::vector<double> base, Axis axis, const RhsVariant& variant) {
  const int n = g.n();
  for (int i1 = 0; i1 < n; ++i1) {
    const double xi1 = g.wavenumber(i1);
    for (int i2 = 0; i2 < n; ++i2) {
      const double xi2 = g.wavenumber(i2);
      const double c = axis == Axis::x1 ? xi1 : xi2;
      double w = c * c;
      if (variant.kind == RhsVariant::Kind::mollified) {
        const double r = mollifier_symbol(variant.parameter * std::hypot(xi1, xi2));
        w *= r * r;
      }
      base[g.flat(i1, i2)] *= w;
    }
  }
  return base;
}

std::vector<double> axis_weights(const Grid2D& g, const std::vector<double>& base, Axis axis) {
  return axis_weights(g, base, axis, RhsVariant::full());
}

double energy(const SimulationState& s, std::span<const double> w) {
  return weighted_norm_squared(s.v.u1, w) + weighted_norm_squared(s.v.u2, w) + weighted_norm_squared(s.theta, w);
}

double production(const SimulationState& s, const DissipationConfig& cfg) {
  const double c = cfg.lambda1 - cfg.lambda2;
  return c == 0.0 ? 0.0 : c * inner_product(s.theta, s.v.u2);
}

double l2_dissipation(const SimulationState& s, const DissipationConfig& cfg, std::span<const double> w1,
                      std::span<const double> w2) {
  return cfg.nu1 * weighted_norm_squared(s.v.u1, w1) + cfg.nu2 * weighted_norm_squared(s.v.u1, w2) +
         cfg.mu1 * weighted_norm_squared(s.v.u2, w1) + cfg.mu2 * weighted_norm_squared(s.v.u2, w2) +
         cfg.delta1 * weighted_norm_squared(s.theta, w1) + cfg.delta2 * weighted_norm_squared(s.theta, w2);
}

double trapezoid(double dt, double a, double b) { return 0.5 * dt * (a + b); }

double interpolate(std::span<const double> x, std::span<const double> y, double at) {
  if (at <= x.front()) return y.front();
  if (at >= x.back()) return y.back();
  const auto it = std::upper_bound(x.begin(), x.end(), at);
  const std::size_t k = static_cast<std::size_t>(it - x.begin());
  const double w = (at - x[k - 1]) / (x[k] - x[k - 1]);
  return y[k - 1] + w * (y[k] - y[k - 1]);
}

double window_mean(std::span<const double> x, std::span<const double> y, double from, double to) {
  double sum = 0.0;
  int count = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] >= from && x[k] <= to) {
      sum += y[k];
      ++count;
    }
  }
  return count == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / count;
}

}  // namespace

void write_report_csv(std::ostream& out, std::span<const EnergyReport> rows) {
  out << kReportCsvHeader << '\n';
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const EnergyReport& r : rows) {
    out << r.t << ',' << r.l2_energy << ',' << r.hm_energy << ',' << r.diss_nu2 << ',' << r.diss_mu1 << ','
        << r.diss_d1 << ',' << r.diss_d2 << ',' << r.cum_diss << ',' << r.budget_residual << ',' << r.f_t << ','
        << r.v_hm1 << ',' << r.theta_hm1 << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

BudgetSample budget_sample(const SimulationState& state, const DissipationConfig& cfg, const RhsVariant& variant) {
  const Grid2D& g = state.grid();
  const std::vector<double> unit(g.size(), 1.0);
  const auto w1 = axis_weights(g, unit, Axis::x1, variant);
  const auto w2 = axis_weights(g, unit, Axis::x2, variant);
  return {state.t, energy(state, unit), l2_dissipation(state, cfg, w1, w2), production(state, cfg)};
}

std::vector<double> energy_budget(std::span<const BudgetSample> samples) {
  if (samples.size() < 2) throw std::invalid_argument("energy_budget: need at least 2 samples");
  std::vector<double> out(samples.size(), 0.0);
  const double e0 = samples.front().energy;
  const double scale = std::max(e0, kEnergyFloor);
  double integral = 0.0;
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const BudgetSample& a = samples[k - 1];
    const BudgetSample& b = samples[k];
    integral += trapezoid(b.t - a.t, a.dissipation - a.production, b.dissipation - b.production);
    out[k] = (b.energy - e0 + 2.0 * integral) / scale;
  }
  return out;
}

std::vector<double> energy_budget(std::span<const SimulationState> trajectory, const DissipationConfig& cfg,
                                  const RhsVariant& variant) {
  std::vector<BudgetSample> samples;
  samples.reserve(trajectory.size());
  for (const SimulationState& s : trajectory) samples.push_back(budget_sample(s, cfg, variant));
  return energy_budget(samples);
}

EnergyTracker::EnergyTracker(const DissipationConfig& cfg, const Grid2D& grid, int m, const RhsVariant& variant)
    : cfg_(cfg), m_(m) {
  cfg.validate();
  variant.validate();
  if (m < 0) throw std::invalid_argument("EnergyTracker: m must be >= 0");
  unit_.assign(grid.size(), 1.0);
  l2_w1_ = axis_weights(grid, unit_, Axis::x1, variant);
  l2_w2_ = axis_weights(grid, unit_, Axis::x2, variant);
  hm_ = sobolev_weights(grid, m);
  hm_w1_ = axis_weights(grid, hm_, Axis::x1, variant);
  hm_w2_ = axis_weights(grid, hm_, Axis::x2, variant);
  // Homogeneous weights of negative order drop the mean mode.
  const std::vector<double> below2 = sobolev_weights(grid, m - 2.0, true);
  f_vel1_ = axis_weights(grid, below2, Axis::x2);
  f_vel2_ = axis_weights(grid, below2, Axis::x1);
  f_theta_ = sobolev_weights(grid, m - 1.0, true);
  hm1_ = f_theta_;
}

EnergyTracker::Channels EnergyTracker::channels(const SimulationState& s, const std::vector<double>& w1,
                                                const std::vector<double>& w2) const {
  Channels c;
  c.nu1 = cfg_.nu1 * weighted_norm_squared(s.v.u1, w1);
  c.nu2 = cfg_.nu2 * weighted_norm_squared(s.v.u1, w2);
  c.mu1 = cfg_.mu1 * weighted_norm_squared(s.v.u2, w1);
  c.mu2 = cfg_.mu2 * weighted_norm_squared(s.v.u2, w2);
  c.d1 = cfg_.delta1 * weighted_norm_squared(s.theta, w1);
  c.d2 = cfg_.delta2 * weighted_norm_squared(s.theta, w2);
  return c;
}

EnergyReport EnergyTracker::observe(const SimulationState& state, bool record) {
  const Channels l2 = channels(state, l2_w1_, l2_w2_);
  const Channels hm = channels(state, hm_w1_, hm_w2_);
  const BudgetSample b{state.t, energy(state, unit_), l2.total(), production(state, cfg_)};
  if (!started_) {
    first_ = b;
    started_ = true;
  } else {
    const double dt = b.t - last_.t;
    cum_l2_ += trapezoid(dt, last_.dissipation - last_.production, b.dissipation - b.production);
    cum_hm_ += trapezoid(dt, last_hm_diss_, hm.total());
  }
  last_ = b;
  last_hm_diss_ = hm.total();

  EnergyReport r;
  r.t = state.t;
  r.l2_energy = 0.5 * b.energy;
  r.hm_energy = energy(state, hm_);
  r.diss_nu2 = hm.nu2;
  r.diss_mu1 = hm.mu1;
  r.diss_d1 = hm.d1;
  r.diss_d2 = hm.d2;
  r.cum_diss = cum_hm_;
  r.budget_residual = (b.energy - first_.energy + 2.0 * cum_l2_) / std::max(first_.energy, kEnergyFloor);
  r.f_t = weighted_norm_squared(state.v.u1, f_vel1_) + weighted_norm_squared(state.v.u2, f_vel2_) +
          weighted_norm_squared(state.theta, f_theta_);
  r.v_hm1 = std::sqrt(weighted_norm_squared(state.v.u1, hm1_) + weighted_norm_squared(state.v.u2, hm1_));
  r.theta_hm1 = std::sqrt(weighted_norm_squared(state.theta, hm1_));
  max_residual_ = std::max(max_residual_, std::abs(r.budget_residual));
  if (record) reports_.push_back(r);
  return r;
}

BootstrapVerdict bootstrap_monitor(std::span<const EnergyReport> reports, double eps0) {
  if (!(eps0 >= 0.0)) throw std::invalid_argument("bootstrap_monitor: eps0 must be >= 0");
  BootstrapVerdict v;
  v.eps0 = eps0;
  if (reports.empty()) return v;
  const double bound = 2.0 * eps0 * eps0;
  const auto em = [](const EnergyReport& r) { return r.hm_energy + 2.0 * r.cum_diss; };
  const double e0 = em(reports.front());
  if (e0 > eps0 * eps0 * (1.0 + 1e-12)) {
    throw std::invalid_argument("bootstrap_monitor: initial E_m exceeds eps0^2");
  }
  for (const EnergyReport& r : reports) {
    const double e = em(r);
    if (bound > 0.0) v.max_ratio = std::max(v.max_ratio, e / bound);
    if (e > bound && v.held) {
      v.held = false;
      v.violation_time = r.t;
    }
    if (e > 0.0) v.c1_hat = std::max(v.c1_hat, std::max(e - e0, 0.0) / std::pow(e, 1.5));
  }
  v.smallness_condition = 4.0 * v.c1_hat * eps0 <= 1.0;
  return v;
}

DecaySeries decay_series(std::span<const EnergyReport> reports, int m) {
  if (m < 2) throw std::invalid_argument("decay_series: m must be >= 2");
  DecaySeries d;
  for (const EnergyReport& r : reports) {
    d.times.push_back(r.t);
    d.f_values.push_back(r.f_t);
    d.v_hm1.push_back(r.v_hm1);
    d.theta_hm1.push_back(r.theta_hm1);
  }
  if (d.times.empty()) return d;
  d.cumulative_f.assign(d.times.size(), 0.0);
  for (std::size_t k = 1; k < d.times.size(); ++k) {
    const double dt = d.times[k] - d.times[k - 1];
    d.cumulative_f[k] = d.cumulative_f[k - 1] + trapezoid(dt, d.f_values[k - 1], d.f_values[k]);
    if (dt > 0.0) {
      const double q = (d.f_values[k] - d.f_values[k - 1]) / dt;
      d.lipschitz_quotients.push_back(q);
      d.max_lipschitz = std::max(d.max_lipschitz, q);
    }
  }
  const double t0 = d.times.front();
  const double tend = d.times.back();
  const double total = d.total_integral();
  if (total > 0.0) {
    const double tail = total - interpolate(d.times, d.cumulative_f, t0 + 0.1 * (tend - t0));
    d.last_decade_fraction = tail / total;
  }
  const double span = tend - t0;
  const double late = window_mean(d.times, d.f_values, t0 + 0.9 * span, tend);
  const double before = window_mean(d.times, d.f_values, t0 + 0.8 * span, t0 + 0.9 * span);
  d.superlinear_late = std::isfinite(late) && std::isfinite(before) && late > before;
  return d;
}

DecaySeries decay_series(std::span<const SimulationState> trajectory, int m) {
  if (m < 2) throw std::invalid_argument("decay_series: m must be >= 2");
  if (trajectory.empty()) return {};
  EnergyTracker tracker(DissipationConfig{}, trajectory.front().grid(), m);
  for (const SimulationState& s : trajectory) tracker.observe(s);
  return decay_series(tracker.reports(), m);
}

DecayModel parse_decay_model(const std::string& name) {
  if (name == "exp") return DecayModel::exp;
  if (name == "power") return DecayModel::power;
  if (name == "log_power") return DecayModel::log_power;
  throw std::invalid_argument("unknown decay model: " + name);
}

std::string to_string(DecayModel model) {
  switch (model) {
    case DecayModel::exp:
      return "exp";
    case DecayModel::power:
      return "power";
    case DecayModel::log_power:
      return "log_power";
  }
  return "unknown";
}

DecayFit decay_fit(std::span<const double> times, std::span<const double> values, DecayModel model, int m) {
  if (times.size() != values.size()) throw std::invalid_argument("decay_fit: size mismatch");
  if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) {
    throw std::invalid_argument("no decay to fit");
  }
  std::vector<double> x, y;
  double tmin_pos = std::numeric_limits<double>::infinity();
  double tmax = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    if (!(values[k] > 0.0)) continue;
    if (model != DecayModel::exp && !(t > 0.0)) continue;
    if (t > 0.0) tmin_pos = std::min(tmin_pos, t);
    tmax = std::max(tmax, t);
    switch (model) {
      case DecayModel::exp:
        x.push_back(t);
        break;
      case DecayModel::power:
        x.push_back(std::log(t));
        break;
      case DecayModel::log_power:
        x.push_back(std::log(std::log(std::numbers::e + t)));
        break;
    }
    y.push_back(std::log(values[k]));
  }
  if (x.empty()) throw std::invalid_argument("no decay to fit");
  if (x.size() < 10) throw std::invalid_argument("decay_fit: need at least 10 positive samples");
  if (!(tmax >= 10.0 * tmin_pos)) throw std::invalid_argument("decay_fit: samples must span a decade of t");

  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("decay_fit: degenerate abscissae");
  DecayFit fit;
  fit.model = model;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double r = y[k] - (fit.intercept + fit.exponent * x[k]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  if (model == DecayModel::log_power) {
    fit.reference_exponent = -0.5 * m;
    fit.exponent_gap = fit.exponent - fit.reference_exponent;
  }
  return fit;
}

MonitoredRun monitored_run(const SimulationState& initial, const DissipationConfig& cfg, const IntegratorConfig& icfg,
                           int m, std::size_t cadence,
                           const std::function<void(const SimulationState&, const EnergyReport&)>& on_sample) {
  if (cadence == 0) throw std::invalid_argument("monitored_run: cadence must be >= 1");
  EnergyTracker tracker(cfg, initial.grid(), m, icfg.variant);
  const double t_stop = initial.t + icfg.t_end;
  const double slack = 1e-12 * std::max(1.0, std::abs(t_stop));
  double last_recorded = std::numeric_limits<double>::quiet_NaN();
  const auto observer = [&](const SimulationState& s, std::size_t index, const StepInfo&) {
    const bool record = index % cadence == 0 || s.t >= t_stop - slack;
    const EnergyReport r = tracker.observe(s, record);
    if (record) {
      last_recorded = s.t;
      if (on_sample) on_sample(s, r);
    }
  };
  MonitoredRun out{run(initial, cfg, icfg, observer), {}, 0.0};
  const SimulationState& last = out.outcome.final_state;
  if (last.t != last_recorded) {
    // Re-observing the last integrated state adds a zero-length interval.
    const EnergyReport r = tracker.observe(last, true);
    if (on_sample) on_sample(last, r);
  }
  out.reports = tracker.reports();
  out.max_abs_budget_residual = tracker.max_abs_budget_residual();
  return out;
}

Eps0Search bisect_eps0(const std::function<SimulationState(double)>& initial, const DissipationConfig& cfg,
                       const IntegratorConfig& icfg, int m, double lo, double hi, int max_iterations,
                       std::size_t cadence) {
  if (!(lo > 0.0 && hi >= lo)) throw std::invalid_argument("bisect_eps0: need 0 < lo <= hi");
  Eps0Search search;
  const auto attempt = [&](double eps) {
    ++search.evaluations;
    MonitoredRun r = monitored_run(initial(eps), cfg, icfg, m, cadence);
    const BootstrapVerdict v = bootstrap_monitor(r.reports, eps);
    const bool held = v.held && !r.outcome.blew_up;
    return std::make_tuple(held, std::move(r), v);
  };
  const auto accept = [&](double eps, MonitoredRun&& r, const BootstrapVerdict& v) {
    search.eps0 = eps;
    search.verdict = v;
    search.run.emplace(std::move(r));
  };
  {
    auto [held, r, v] = attempt(hi);
    if (held) {
      accept(hi, std::move(r), v);
      search.upper_held = true;
      return search;
    }
  }
  {
    auto [held, r, v] = attempt(lo);
    accept(held ? lo : 0.0, std::move(r), v);
    if (!held) return search;
  }
  double good = lo;
  double bad = hi;
  for (int i = 0; i < max_iterations; ++i) {
    const double mid = std::sqrt(good * bad);
    auto [held, r, v] = attempt(mid);
    if (held) {
      good = mid;
      accept(mid, std::move(r), v);
    } else {
      bad = mid;
    }
  }
  return search;
}

}  // namespace aniso
