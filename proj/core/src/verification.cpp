#include "aniso/experiments/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "aniso/diagnostics.hpp"
#include "aniso/experiments/dft_oracle.hpp"
#include "aniso/inequalities.hpp"
#include "aniso/integrator.hpp"
#include "aniso/littlewood_paley.hpp"
#include "aniso/norms.hpp"
#include "aniso/operators.hpp"
#include "aniso/propagator.hpp"
#include "aniso/synthesis.hpp"
#include "aniso/transform.hpp"

namespace aniso {

namespace {

constexpr std::array<std::string_view, 6> kSuites = {"spectral", "model", "integration", "norms", "diagnostics", "all"};

// value <= tolerance passes.
CheckResult at_most(std::string name, double value, double tolerance) {
  return {std::move(name), value <= tolerance, value, tolerance};
}

RegularityRecipe recipe(std::uint64_t seed, double s = 2.0) { return {s, 1.0, 0.5, seed}; }

double max_abs_diff(const PhysicalField& a, const PhysicalField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

double relative(const SpectralField& a, const SpectralField& b) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  return scale == 0.0 ? 0.0 : max_abs_difference(a, b) / scale;
}

std::vector<CheckResult> spectral_suite() {
  std::vector<CheckResult> out;
  {
    const Grid2D g(8);
    const SpectralField f = synthesize_field(g, recipe(11, 0.0));
    const PhysicalField p = to_physical(f);
    out.push_back(at_most("to_physical matches direct DFT (N=8)", max_abs_diff(p, dft_to_physical(f)), 1e-12));
    out.push_back(at_most("to_spectral matches direct DFT (N=8)", max_abs_difference(to_spectral(p), dft_to_spectral(p)),
                          1e-12));
  }
  double trip = 0.0;
  for (int n : {16, 64, 128}) {
    const SpectralField f = synthesize_field(Grid2D(n), recipe(12));
    trip = std::max(trip, relative(to_spectral(to_physical(f)), f));
  }
  out.push_back(at_most("round trip at N=16,64,128 (relative)", trip, 1e-12));

  const auto p = leray_symbol(1.0, 1.0);
  const double sym = std::abs(p[0][0] - 0.5) + std::abs(p[0][1] + 0.5) + std::abs(p[1][0] + 0.5) + std::abs(p[1][1] - 0.5);
  out.push_back(at_most("Leray symbol at (1,1)", sym, 0.0));

  const Grid2D g(32);
  const VectorField2 u(synthesize_field(g, recipe(13)), synthesize_field(g, recipe(14)));
  const VectorField2 pu = leray_project(u);
  const VectorField2 ppu = leray_project(pu);
  out.push_back(at_most("Leray divergence defect", divergence_defect(pu), 1e-12));
  out.push_back(at_most("Leray idempotence", std::max(relative(ppu.u1, pu.u1), relative(ppu.u2, pu.u2)), 1e-12));
  return out;
}

std::vector<CheckResult> model_suite() {
  std::vector<CheckResult> out;
  const Grid2D g(32);
  const VectorField2 v = synthesize_divfree_velocity(g, recipe(21));
  const SpectralField theta = synthesize_field(g, recipe(22));
  const SimulationState s(0.0, v, theta);
  const double scale = inner_product(v, v) * std::sqrt(inner_product(v, v)) + 1e-300;
  const VectorField2 nl = leray_project(VectorField2(advect(v, v.u1), advect(v, v.u2)));
  out.push_back(at_most("velocity transport is energy neutral", std::abs(inner_product(v, nl)) / scale, 1e-12));
  out.push_back(at_most("theta transport is energy neutral",
                        std::abs(inner_product(theta, advect(v, theta))) / scale, 1e-12));

  const Tendency rest = rhs(SimulationState::rest(g), dissipation_preset("thm2-d2"), RhsVariant::full());
  out.push_back(at_most("rest state is stationary",
                        std::max({rest.dv.u1.max_abs(), rest.dv.u2.max_abs(), rest.dtheta.max_abs()}), 0.0));

  // Linear velocity tendency against the scalar kernel a(xi).
  DissipationConfig cfg{0.3, 1.0, 2.0, 0.7, 0.0, 0.0, 0.0, 0.0};
  SimulationState lin(0.0, v, SpectralField(g));
  const Tendency full = rhs(lin, cfg, RhsVariant::full());
  const Tendency expl = explicit_terms(lin, cfg, RhsVariant::full(), true);
  const PropagatorSymbol sym = PropagatorSymbol::make(cfg, g);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Complex d1 = full.dv.u1.coeffs()[k] - expl.dv.u1.coeffs()[k] - sym.velocity_rate[k] * v.u1.coeffs()[k];
    const Complex d2 = full.dv.u2.coeffs()[k] - expl.dv.u2.coeffs()[k] - sym.velocity_rate[k] * v.u2.coeffs()[k];
    worst = std::max({worst, std::abs(d1), std::abs(d2)});
  }
  out.push_back(at_most("projected dissipation equals kernel a(xi)", worst / v.u1.max_abs(), 1e-10));
  return out;
}

std::vector<CheckResult> integration_suite() {
  std::vector<CheckResult> out;
  const Grid2D g(32);
  const DissipationConfig cfg = dissipation_preset("thm2-d2");
  const SimulationState s0(0.0, synthesize_divfree_velocity(g, recipe(31)), synthesize_field(g, recipe(32)));
  {
    const LinearPropagator a(cfg, g, 0.3), b(cfg, g, 0.7), ab(cfg, g, 1.0);
    const SimulationState x = b(a(s0));
    const SimulationState y = ab(s0);
    out.push_back(at_most("semigroup e(0.3) e(0.7) = e(1)",
                          std::max({relative(x.v.u1, y.v.u1), relative(x.v.u2, y.v.u2), relative(x.theta, y.theta)}),
                          1e-12));
  }
  {
    DissipationConfig lin = cfg;
    lin.lambda1 = lin.lambda2 = 0.0;
    IntegratorConfig ic;
    ic.dt = 0.01;
    ic.t_end = 0.5;
    ic.with_transport = false;
    const RunOutcome r = run(s0, lin, ic);
    const SimulationState exact = LinearPropagator(lin, g, 0.5)(s0);
    out.push_back(at_most("integrating-factor stepper equals closed form",
                          std::max({max_abs_difference(r.final_state.v.u1, exact.v.u1),
                                    max_abs_difference(r.final_state.v.u2, exact.v.u2),
                                    max_abs_difference(r.final_state.theta, exact.theta)}),
                          1e-10));
  }
  {
    IntegratorConfig ic;
    ic.dt = 1e-3;
    ic.t_end = 0.05;
    const RunOutcome r = run(s0, cfg, ic);
    out.push_back(at_most("divergence drift stays below alarm", r.max_divergence_drift, kDivergenceDriftAlarm));
  }
  return out;
}

std::vector<CheckResult> norms_suite() {
  std::vector<CheckResult> out;
  const Grid2D g(16);
  SpectralField c(g);
  c.set_mode(1, 0, 0.5);
  const double pi = std::numbers::pi;
  out.push_back(at_most("||cos x1||_L2 = pi sqrt 2", std::abs(sobolev_norm(c, 0.0) - pi * std::sqrt(2.0)), 1e-12));
  out.push_back(at_most("||cos x1||_H1 = 2 pi", std::abs(sobolev_norm(c, 1.0) - 2.0 * pi), 1e-12));
  out.push_back(at_most("||cos x1||_Linf = 1", std::abs(lp_norm(c, kInfinity) - 1.0), 1e-12));

  const Grid2D h(64);
  out.push_back(at_most("LP partition of unity", lp_partition_defect(h), 1e-12));
  const SpectralField f = synthesize_field(h, recipe(41));
  const LPBlockSet blocks = lp_decompose(f);
  out.push_back(at_most("LP reconstruction", relative(blocks.reconstruct(), f), 1e-10));
  out.push_back(at_most("LP block supports", blocks.support_violation(), 0.0));

  SpectralField constant(h);
  constant(0, 0) = 3.0;
  const std::array<SpectralField, 2> kp = {constant, f};
  out.push_back(at_most("Kato-Ponce commutator vanishes for constant factor", inequality_probe("kato_ponce", kp).lhs, 0.0));

  double interp = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SpectralField r = synthesize_field(h, recipe(100 + seed));
    interp = std::max(interp, sobolev_norm(r, 1.0, true) / std::sqrt(sobolev_norm(r, 0.0) * sobolev_norm(r, 2.0, true)));
  }
  out.push_back(at_most("H.1 interpolation ratio", interp, 1.0 + 1e-10));
  return out;
}

std::vector<CheckResult> diagnostics_suite() {
  std::vector<CheckResult> out;
  const Grid2D g(32);
  const SimulationState s0(0.0, synthesize_divfree_velocity(g, recipe(51, 3.0)), synthesize_field(g, recipe(52, 3.0)));
  IntegratorConfig ic;
  ic.dt = 1e-3;
  ic.t_end = 0.1;
  {
    const MonitoredRun r = monitored_run(s0, dissipation_preset("inviscid"), ic, 0);
    out.push_back(at_most("inviscid energy budget", r.max_abs_budget_residual, 1e-8));
  }
  {
    const MonitoredRun r = monitored_run(s0, dissipation_preset("thm2-d2"), ic, 0);
    out.push_back(at_most("dissipative energy budget", r.max_abs_budget_residual, 1e-6));
  }
  {
    std::vector<double> t, y;
    for (int k = 0; k <= 40; ++k) {
      t.push_back(0.25 * k);
      y.push_back(std::exp(-0.25 * k));
    }
    const DecayFit fit = decay_fit(t, y, DecayModel::exp);
    out.push_back(at_most("exp fit of e^-t: rate", std::abs(fit.exponent + 1.0), 1e-10));
    out.push_back(at_most("exp fit of e^-t: residual", fit.residual, 1e-10));
  }
  {
    const MonitoredRun r = monitored_run(SimulationState::rest(g), dissipation_preset("thm2-d2"), ic, 2);
    const BootstrapVerdict v = bootstrap_monitor(r.reports, 0.0);
    const DecaySeries d = decay_series(r.reports, 2);
    out.push_back(at_most("rest data: bootstrap held, f = 0", (v.held ? 0.0 : 1.0) + d.total_integral(), 0.0));
  }
  return out;
}

using Suite = std::function<std::vector<CheckResult>()>;

Suite suite_by_name(std::string_view name) {
  if (name == "spectral") return spectral_suite;
  if (name == "model") return model_suite;
  if (name == "integration") return integration_suite;
  if (name == "norms") return norms_suite;
  if (name == "diagnostics") return diagnostics_suite;
  return {};
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::span<const std::string_view> verification_suites() { return kSuites; }

std::vector<SuiteResult> run_verification(std::string_view suite) {
  std::vector<std::string_view> names;
  if (suite == "all") {
    names.assign(kSuites.begin(), kSuites.end() - 1);
  } else if (suite_by_name(suite)) {
    names.push_back(suite);
  } else {
    std::string valid;
    for (std::string_view s : kSuites) valid += (valid.empty() ? "" : ", ") + std::string(s);
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'; valid suites: " + valid);
  }
  std::vector<SuiteResult> results;
  for (std::string_view n : names) results.push_back({std::string(n), suite_by_name(n)()});
  return results;
}

std::string verification_json(const std::vector<SuiteResult>& results) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  bool all = true;
  for (const SuiteResult& r : results) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& c : r.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tolerance", c.tolerance}});
    }
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    all = all && r.passed();
  }
  return nlohmann::ordered_json{{"passed", all}, {"suites", suites}}.dump(2) + "\n";
}

}  // namespace aniso
