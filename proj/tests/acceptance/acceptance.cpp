// Acceptance gate: one verdict line per criterion, nonzero exit on any failure.
//   aniso_acceptance            run every criterion
//   aniso_acceptance --only 7   run one criterion

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "aniso/diagnostics.hpp"
#include "aniso/experiments/experiment.hpp"
#include "aniso/experiments/scenario.hpp"
#include "aniso/experiments/twin.hpp"
#include "aniso/inequalities.hpp"
#include "aniso/integrator.hpp"
#include "aniso/littlewood_paley.hpp"
#include "aniso/norms.hpp"
#include "aniso/operators.hpp"
#include "aniso/propagator.hpp"
#include "aniso/snapshot.hpp"
#include "aniso/synthesis.hpp"
#include "aniso/transform.hpp"
#include "oracles.hpp"

using namespace aniso;
namespace fs = std::filesystem;

namespace {

/// Sub-checks of one criterion; the criterion passes when all of them do.
class Checks {
 public:
  void expect(const std::string& what, bool ok, double value, double tolerance) {
    pass_ = pass_ && ok;
    std::cout << fmt::format("    {} {}: {:.6g} (limit {:.3g})\n", ok ? "ok  " : "FAIL", what, value, tolerance);
  }
  void le(const std::string& what, double value, double limit) { expect(what, value <= limit, value, limit); }
  void note(const std::string& text) { std::cout << "    " << text << '\n'; }
  bool passed() const { return pass_; }

 private:
  bool pass_ = true;
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(Checks&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / fmt::format("aniso_acceptance_{}_{}", name, ::getpid());
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SpectralField random_hermitian(const Grid2D& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  PhysicalField p(g);
  for (double& v : p.values) v = normal(rng);
  return to_spectral(p);
}

/// Random moduli as well as phases: unlike synthesize_field, the spectrum shape varies per seed.
SpectralField random_modulus_field(const Grid2D& g, std::uint64_t seed) {
  return dealias(random_hermitian(g, seed));
}

double relative(const SpectralField& a, const SpectralField& b) {
  const double scale = std::max(a.max_abs(), b.max_abs());
  return scale == 0.0 ? 0.0 : max_abs_difference(a, b) / scale;
}

double energy(const SimulationState& s) {
  return sobolev_norm_squared(s.v.u1, 0.0) + sobolev_norm_squared(s.v.u2, 0.0) + sobolev_norm_squared(s.theta, 0.0);
}

DissipationConfig cross_viscosity(double nu1, double nu2) {
  // Kernel pairs (nu1, nu2) act as d11 on v2 and d22 on v1, i.e. our (mu1, nu2).
  DissipationConfig c;
  c.mu1 = nu1;
  c.nu2 = nu2;
  return c;
}

SimulationState random_state(const Grid2D& g, std::uint64_t seed, double s = 3.0, double amplitude = 1.0) {
  return {0.0, synthesize_divfree_velocity(g, {s, amplitude, 0.5, seed}),
          synthesize_field(g, {s, amplitude, 0.5, seed + 7919})};
}

// ---------------------------------------------------------------------------

void spectral_oracle(Checks& c) {
  const auto start = std::chrono::steady_clock::now();
  const Grid2D g8(8);
  double fwd = 0.0, inv = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SpectralField f = random_hermitian(g8, seed);
    const auto direct = oracle::sample(f);
    const PhysicalField p = to_physical(f);
    for (std::size_t i = 0; i < direct.size(); ++i) fwd = std::max(fwd, std::abs(p.values[i] - double(direct[i])));
    const auto coeffs = oracle::analyze(g8, direct);
    const SpectralField back = to_spectral(p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const Complex ref(double(coeffs[i].real()), double(coeffs[i].imag()));
      inv = std::max(inv, std::abs(back.coeffs()[i] - ref));
    }
  }
  c.le("N=8 to_physical vs direct sum (abs)", fwd, 1e-12);
  c.le("N=8 to_spectral vs direct sum (abs)", inv, 1e-12);
  for (int n : {16, 64, 128}) {
    const Grid2D g(n);
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SpectralField f = random_hermitian(g, seed);
      worst = std::max(worst, relative(to_spectral(to_physical(f)), f));
    }
    c.le(fmt::format("round trip N={} (rel)", n), worst, 1e-12);
  }
  c.le("runtime [s]", seconds_since(start), 10.0);
}

void leray(Checks& c) {
  const Grid2D g(64);
  double div = 0.0, idem = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const VectorField2 u(random_modulus_field(g, seed), random_modulus_field(g, seed + 1000));
    const VectorField2 p = leray_project(u);
    div = std::max(div, divergence_defect(p));
    const VectorField2 pp = leray_project(p);
    idem = std::max({idem, relative(pp.u1, p.u1), relative(pp.u2, p.u2)});
  }
  c.le("divergence of P(u) (rel)", div, 1e-12);
  c.le("idempotence P(P(u)) - P(u) (rel)", idem, 1e-12);
  const auto s = leray_symbol(1.0, 1.0);
  const double mismatch =
      std::abs(s[0][0] - 0.5) + std::abs(s[0][1] + 0.5) + std::abs(s[1][0] + 0.5) + std::abs(s[1][1] - 0.5);
  c.expect("symbol at (1,1) equals 1/2 [[1,-1],[-1,1]] exactly", mismatch == 0.0, mismatch, 0.0);
}

void truncation(Checks& c) {
  const auto start = std::chrono::steady_clock::now();
  const Grid2D g(64);
  const double orders[] = {0.0, 0.5, 1.0, 2.0};
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SpectralField f = seed % 2 ? synthesize_field(g, {2.0, 1.0, 0.5, seed}) : random_modulus_field(g, seed);
    for (double n : {2.0, 4.0, 8.0}) {
      const SpectralField err = f - fourier_truncate(f, n);
      for (double s1 : orders) {
        for (double s2 : orders) {
          const double lhs = sobolev_norm(err, s1);
          const double rhs = std::pow(n, -s2) * sobolev_norm(f, s1 + s2);
          worst = std::max(worst, lhs / rhs);
        }
      }
    }
  }
  // With s2 = 0 the ratio approaches 1 for fields concentrated outside the ball; allow rounding.
  c.le("max ||T_n f - f||_{H^s1} / (n^-s2 ||f||_{H^(s1+s2)})", worst, 1.0 + 1e-12);
  c.le("runtime [s]", seconds_since(start), 30.0);
}

void kernel(Checks& c) {
  const Grid2D g(64);
  const std::pair<double, double> pairs[] = {{1.0, 1.0}, {1.0, 4.0}, {0.1, 10.0}};
  double semigroup = 0.0, lower = 0.0, upper = 0.0, stepper = 0.0;
  for (auto [nu1, nu2] : pairs) {
    const DissipationConfig cfg = cross_viscosity(nu1, nu2);
    const SimulationState s0 = random_state(g, 3);
    const SimulationState ab = linear_propagator(cfg, g, 0.3)(linear_propagator(cfg, g, 0.7)(s0));
    const SimulationState one = linear_propagator(cfg, g, 1.0)(s0);
    semigroup = std::max({semigroup, relative(ab.v.u1, one.v.u1), relative(ab.v.u2, one.v.u2)});

    const PropagatorSymbol sym = PropagatorSymbol::make(cfg, g);
    for (double t : {0.1, 1.0, 10.0}) {
      for (int i1 = 0; i1 < g.n(); ++i1) {
        for (int i2 = 0; i2 < g.n(); ++i2) {
          const double r2 = std::pow(g.wavenumber(i1), 2) + std::pow(g.wavenumber(i2), 2);
          if (r2 == 0.0) continue;
          const double k = std::exp(sym.velocity_rate[g.flat(i1, i2)] * t);
          const double lo = std::exp(-std::max(nu1, nu2) * r2 * t);
          const double hi = std::exp(-0.5 * std::min(nu1, nu2) * r2 * t);
          // Relative shortfall; 0 when the bound holds.
          if (lo > 0.0) lower = std::max(lower, (lo - k) / lo);
          if (hi > 0.0) upper = std::max(upper, (k - hi) / hi);
        }
      }
    }

    IntegratorConfig icfg;
    icfg.with_transport = false;
    icfg.dt = 0.01;
    icfg.t_end = 1.0;
    const SimulationState stepped = run(s0, cfg, icfg).final_state;
    stepper = std::max({stepper, relative(stepped.v.u1, one.v.u1), relative(stepped.v.u2, one.v.u2),
                        relative(stepped.theta, one.theta)});
  }
  c.le("semigroup S(0.3)S(0.7) - S(1) (rel)", semigroup, 1e-12);
  c.le("lower bound exp(-max nu |xi|^2 t) <= exp(a t), shortfall", lower, 1e-14);
  c.le("upper bound exp(a t) <= exp(-min nu |xi|^2 t / 2), excess", upper, 1e-14);
  c.le("integrating-factor stepper vs closed form (rel)", stepper, 1e-10);
}

void energy_identity(Checks& c) {
  const auto start = std::chrono::steady_clock::now();
  const Grid2D g(64);
  {
    DissipationConfig cfg = dissipation_preset("inviscid");
    const SimulationState s0 = random_state(g, 11);
    IntegratorConfig icfg;
    icfg.dt = 1e-3;
    icfg.t_end = 1.0;
    const double e0 = energy(s0);
    double drift = 0.0;
    run(s0, cfg, icfg, [&](const SimulationState& s, std::size_t, const StepInfo&) {
      drift = std::max(drift, std::abs(energy(s) - e0) / e0);
    });
    c.le("inviscid relative energy drift, N=64 dt=1e-3 t<=1", drift, 1e-8);
  }
  {
    const DissipationConfig cfg = dissipation_preset("thm2-d2");
    const SimulationState s0 = normalize_hm(random_state(g, 12), 2, 0.1);
    IntegratorConfig icfg;
    icfg.dt = 1e-3;
    icfg.t_end = 10.0;
    const MonitoredRun run = monitored_run(s0, cfg, icfg, 2, 100);
    c.le("thm2-d2 max |budget residual|, N=64 dt=1e-3 t<=10", run.max_abs_budget_residual, 1e-6);
  }
  c.le("runtime [s]", seconds_since(start), 120.0);
}

void vorticity_identities(Checks& c) {
  const Grid2D g(64);
  double norm_gap = 0.0, grad_gap = 0.0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const VectorField2 v = seed % 2 ? synthesize_divfree_velocity(g, {2.0, 1.0, 0.5, seed})
                                    : leray_project(VectorField2(random_modulus_field(g, seed),
                                                                 random_modulus_field(g, seed + 99)));
    const SpectralField w = vorticity(v);
    double grad_sq = 0.0;
    for (const SpectralField* comp : {&v.u1, &v.u2}) {
      grad_sq += sobolev_norm_squared(partial(*comp, Axis::x1), 0.0) + sobolev_norm_squared(partial(*comp, Axis::x2), 0.0);
    }
    norm_gap = std::max(norm_gap, std::abs(std::sqrt(grad_sq) - l2_norm(w)) / l2_norm(w));
    const VectorField2 gw = gradient(w);
    grad_gap = std::max({grad_gap, relative(gw.u1, laplacian(v.u2)), relative(gw.u2, -laplacian(v.u1))});
  }
  c.le("| ||grad v|| - ||w|| | / ||w||", norm_gap, 1e-10);
  c.le("grad w - (lap v2, -lap v1) (rel)", grad_gap, 1e-10);
}

// Criteria 7 and 8 share the bisected runs. The bracket spans six decades so
// that the search locates the threshold instead of stopping at a held upper end.
constexpr double kEps0Lo = 1e-3;
constexpr double kEps0Hi = 1e3;
constexpr int kEps0Iterations = 6;
struct StabilityCase {
  std::string preset;
  int m;
  Eps0Search search;
  double seconds;
};

StabilityCase stability_case(const std::string& file, int m) {
  Scenario s = load_scenario(fs::path(ANISO_SCENARIO_DIR) / file);
  s.m = m;
  const auto start = std::chrono::steady_clock::now();
  auto initial = [&](double eps) {
    Scenario si = s;
    si.eps0 = eps;
    return initial_state(si);
  };
  Eps0Search found = bisect_eps0(initial, s.dissipation, s.integrator, m, kEps0Lo, kEps0Hi, kEps0Iterations, s.cadence);
  return {s.preset, m, std::move(found), seconds_since(start)};
}

void stability(Checks& c) {
  for (const char* file : {"thm2-d2-small.toml", "thm2-d1-small.toml"}) {
    double preset_seconds = 0.0;
    std::string preset;
    for (int m : {1, 2}) {
      const StabilityCase k = stability_case(file, m);
      preset = k.preset;
      preset_seconds += k.seconds;
      const BootstrapVerdict& v = k.search.verdict;
      c.note(fmt::format("{} m={}: eps0={:.4g} (upper bound held: {}, {} runs), C1_hat={:.4g}, max E_m/(2 eps0^2)={:.4g}, "
                         "4 C1_hat eps0 <= 1: {}",
                         k.preset, m, k.search.eps0, k.search.upper_held ? "yes" : "no", k.search.evaluations,
                         v.c1_hat, v.max_ratio, v.smallness_condition ? "yes" : "no"));
      const bool reached = k.search.run && !k.search.run->outcome.blew_up &&
                           k.search.run->reports.back().t >= 100.0 - 1e-9;
      c.expect(fmt::format("{} m={} bound E_m <= 2 eps0^2 held to t=100", k.preset, m),
               k.search.eps0 > 0.0 && v.held && reached, v.max_ratio, 1.0);
    }
    c.le(fmt::format("{} runtime [s]", preset), preset_seconds, 600.0);
  }
}

void decay(Checks& c) {
  for (const char* file : {"thm2-d2-small.toml", "thm2-d1-small.toml"}) {
    const StabilityCase k = stability_case(file, 2);
    if (!k.search.run) {
      c.expect(fmt::format("{} produced a run", k.preset), false, 0.0, 0.0);
      continue;
    }
    const DecayVerdict d = evaluate_decay(k.search.run->reports, 2, 100.0, 0.1);
    c.note(fmt::format("{} m=2 at eps0={:.4g}: int f = {:.6g}, superlinear late: {}", k.preset, k.search.eps0,
                       d.integral, d.superlinear_late ? "yes" : "no"));
    c.le(fmt::format("{} last-decade share of int_0^T f", k.preset), d.last_decade_fraction, 0.05);
    c.le(fmt::format("{} ||v(100)||_(H.^1) / ||v(0)||", k.preset), d.v_ratio, 0.1);
    c.le(fmt::format("{} ||theta(100)||_(H.^1) / ||theta(0)||", k.preset), d.theta_ratio, 0.1);
    // Modes with xi1 = 0 are steady for delta2 = 0 on the torus; report how much of theta sits there.
    const SpectralField& th = k.search.run->outcome.final_state.theta;
    std::vector<double> w = sobolev_weights(th.grid(), 1.0, true);
    const double total = weighted_norm_squared(th, w);
    for (int i1 = 1; i1 < th.grid().n(); ++i1) {
      for (int i2 = 0; i2 < th.grid().n(); ++i2) w[th.grid().flat(i1, i2)] = 0.0;
    }
    c.note(fmt::format("{} share of ||theta(T)||^2_(H.^1) in xi1 = 0 modes: {:.6g}", k.preset,
                       total > 0.0 ? weighted_norm_squared(th, w) / total : 0.0));
  }
}

void besov(Checks& c) {
  const Grid2D g(128);
  double recon = 0.0, support = 0.0;
  std::vector<double> phase_ratios, modulus_ratios;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SpectralField a = synthesize_field(g, {1.0, 1.0, 0.5, seed});
    const SpectralField b = random_modulus_field(g, seed);
    for (const SpectralField* f : {&a, &b}) {
      const LPBlockSet blocks = lp_decompose(*f);
      recon = std::max(recon, relative(blocks.reconstruct(), *f));
      support = std::max(support, blocks.support_violation());
    }
    phase_ratios.push_back(besov_norm(a, {0.0, 2.0, 2.0}) / l2_norm(a));
    modulus_ratios.push_back(besov_norm(b, {0.0, 2.0, 2.0}) / l2_norm(b));
  }
  c.le("LP reconstruction (rel)", recon, 1e-10);
  c.expect("block supports inside their annuli", support == 0.0, support, 0.0);
  c.le("partition defect on the lattice", lp_partition_defect(g), 1e-12);

  const auto [plo, phi] = std::minmax_element(phase_ratios.begin(), phase_ratios.end());
  c.le("B^0_{2,2}/L^2 relative spread, random-phase corpus", (*phi - *plo) / *plo, 1e-8);
  const auto [mlo, mhi] = std::minmax_element(modulus_ratios.begin(), modulus_ratios.end());
  c.note(fmt::format("random-modulus corpus: c1 = {:.8f}, c2 = {:.8f}", *mlo, *mhi));
  c.expect("random-modulus ratios inside [1/sqrt 2, 1]", *mlo >= 1.0 / std::sqrt(2.0) - 1e-12 && *mhi <= 1.0 + 1e-12,
           *mhi - *mlo, 1.0 - 1.0 / std::sqrt(2.0));

  for (double lambda0 : {1.0, 2.0, 4.0, 8.0}) {
    ProbeParams params;
    params.bernstein_lambda0 = lambda0;
    double sup[2] = {0.0, 0.0};
    int slot = 0;
    for (int n : {64, 128}) {
      const Grid2D grid(n);
      for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const std::vector<SpectralField> f{fourier_truncate(synthesize_field(grid, {1.0, 1.0, 0.5, seed}), lambda0)};
        sup[slot] = std::max(sup[slot], inequality_probe("bernstein", f, params).ratio);
      }
      ++slot;
    }
    c.note(fmt::format("Bernstein lambda0={}: sup ratio N=64 {:.6f}, N=128 {:.6f}", lambda0, sup[0], sup[1]));
    c.le(fmt::format("Bernstein constant change N 64->128, lambda0={}", lambda0), std::abs(sup[1] / sup[0] - 1.0), 0.1);
  }
}

void probes(Checks& c) {
  const RegularityRecipe base{3.0, 1.0, 0.5, 1};
  // Bernstein's side condition is a band limit lambda0 fixed independently of N.
  // Its default lambda0 (the spectral radius) grows with N, so its corpus is
  // truncated to |xi| <= 8 instead.
  const auto sup_ratio = [&](std::string_view name, int n) {
    if (name != "bernstein") return probe_corpus(name, Grid2D(n), 200, base).sup_ratio;
    ProbeParams params;
    params.bernstein_lambda0 = 8.0;
    double sup = 0.0;
    for (std::uint64_t seed = base.seed; seed < base.seed + 200; ++seed) {
      RegularityRecipe r = base;
      r.seed = seed;
      const std::vector<SpectralField> f{fourier_truncate(synthesize_field(Grid2D(n), r), 8.0)};
      sup = std::max(sup, inequality_probe(name, f, params).ratio);
    }
    return sup;
  };
  for (std::string_view name : inequality_names()) {
    const double s64 = sup_ratio(name, 64);
    const double s128 = sup_ratio(name, 128);
    const bool finite = std::isfinite(s64) && std::isfinite(s128) && s64 > 0.0;
    c.note(fmt::format("{}: sup ratio N=64 {:.6g}, N=128 {:.6g}", name, s64, s128));
    c.expect(fmt::format("{} sup ratio finite, change N 64->128", name), finite && std::abs(s128 / s64 - 1.0) <= 0.2,
             finite ? std::abs(s128 / s64 - 1.0) : std::numeric_limits<double>::infinity(), 0.2);
  }
  const Grid2D g(64);
  SpectralField one(g);
  one(0, 0) = 3.0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::vector<SpectralField> kp{one, synthesize_field(g, {3.0, 1.0, 0.5, seed})};
    worst = std::max(worst, inequality_probe("kato_ponce", kp).lhs);
  }
  c.expect("Kato-Ponce commutator with constant outer factor", worst == 0.0, worst, 0.0);
}

void twin(Checks& c) {
  const Scenario s = load_scenario(fs::path(ANISO_SCENARIO_DIR) / "thm1-twin.toml");
  const std::vector<double> amps{1e-2, 1e-3, 1e-4};
  const TwinReport r = run_twin(s, amps);
  for (const TwinRow& row : r.rows) {
    c.note(fmt::format("amplitude {:.0e}: sup_t ||difference|| = {:.6g}, ratio {:.6g}", row.amplitude, row.sup_difference,
                       row.ratio));
  }
  c.expect("no blow-up over t in [0,5]", !r.blew_up, r.blew_up ? 1.0 : 0.0, 0.0);
  c.le("ratio spread max/min", r.ratio_spread, kTwinRatioFactor);
}

void determinism(Checks& c) {
  const fs::path dir = scratch("determinism");
  Scenario s = parse_scenario(R"(
name = "determinism"
preset = "thm2-d2"
m = 2
[grid]
N = 32
[integrator]
dt = "auto"
t_end = 2.0
[initial]
eps0 = 0.1
[diagnostics]
cadence = 3
snapshot_every = 6
horizon = 2.0
)");
  run_scenario(s, dir / "a");
  run_scenario(s, dir / "b");
  std::size_t files = 0, mismatches = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir / "a")) {
    if (!e.is_regular_file()) continue;
    ++files;
    if (slurp(e.path()) != slurp(dir / "b" / fs::relative(e.path(), dir / "a"))) ++mismatches;
  }
  c.note(fmt::format("{} artifact files compared", files));
  c.expect("rerun artifacts bit-identical (csv, json, snapshots)", files >= 4 && mismatches == 0, double(mismatches), 0.0);

  std::size_t bad = 0, snaps = 0;
  for (const auto& e : fs::directory_iterator(dir / "a" / "snapshots")) {
    if (e.path().extension() != ".absf") continue;
    ++snaps;
    const Snapshot snap = read_snapshot(e.path());
    const fs::path copy = dir / "copy.absf";
    write_snapshot(copy, snap);
    if (slurp(copy) != slurp(e.path()) || slurp(snapshot_sidecar(copy)) != slurp(snapshot_sidecar(e.path()))) ++bad;
  }
  c.expect(fmt::format("snapshot read/write round trip bit-exact ({} files)", snaps), snaps > 0 && bad == 0, double(bad),
           0.0);
  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "spectral transforms match the direct DFT oracle", spectral_oracle},
      {2, "Leray projection", leray},
      {3, "Fourier truncation bound", truncation},
      {4, "anisotropic heat kernel", kernel},
      {5, "energy identity", energy_identity},
      {6, "vorticity identities", vorticity_identities},
      {7, "small-data stability bound", stability},
      {8, "decay at the horizon", decay},
      {9, "Littlewood-Paley and Besov norms", besov},
      {10, "inequality probes", probes},
      {11, "twin-run continuous dependence", twin},
      {12, "determinism and formats", determinism},
  };

  bool all = true;
  for (const Criterion& k : criteria) {
    if (only != 0 && k.id != only) continue;
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.body(checks);
    } catch (const std::exception& e) {
      checks.expect(std::string("unexpected exception: ") + e.what(), false, 0.0, 0.0);
    }
    std::cout << fmt::format("[{}] criterion {}: {} ({:.1f} s)\n", checks.passed() ? "PASS" : "FAIL", k.id, k.title,
                             seconds_since(start))
              << std::flush;
    all = all && checks.passed();
  }
  return all ? 0 : 1;
}
