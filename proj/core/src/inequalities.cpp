#include "aniso/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "aniso/model.hpp"
#include "aniso/norms.hpp"
#include "aniso/operators.hpp"
#include "aniso/transform.hpp"

namespace aniso {

namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "kato_ponce",    "kwz_commutator",  "cao_wu",  "kozono_wadade", "brezis_gallouet", "brezis_gallouet_fourier",
    "gagliardo_nirenberg", "bernstein"};
constexpr std::array<int, 8> kArity = {2, 3, 3, 1, 1, 1, 1, 1};

ProbeResult make_result(double lhs, double rhs) {
  ProbeResult r{lhs, rhs, 0.0};
  if (rhs > 0.0) {
    r.ratio = lhs / rhs;
  } else if (lhs > 0.0) {
    r.ratio = std::numeric_limits<double>::infinity();
  }
  return r;
}

// Products are formed on a grid with twice the modes per axis, where the
// product of two fields from the original grid is represented without aliasing.
Grid2D padded_grid(const Grid2D& g) { return Grid2D(2 * g.n(), g.length()); }

SpectralField product(const SpectralField& a, const SpectralField& b) {
  PhysicalField pa = to_physical(a);
  const PhysicalField pb = to_physical(b);
  for (std::size_t i = 0; i < pa.values.size(); ++i) pa.values[i] *= pb.values[i];
  return to_spectral(pa);
}

SpectralField without_mean(SpectralField f) {
  f(0, 0) = Complex{};
  return f;
}

double gradient_sup(const SpectralField& f) {
  const std::array<PhysicalField, 2> g = {to_physical(partial(f, Axis::x1)), to_physical(partial(f, Axis::x2))};
  return lp_norm(std::span<const PhysicalField>(g), kInfinity);
}

double spectral_radius(const SpectralField& f) {
  const Grid2D& g = f.grid();
  double r = 0.0;
  for (int i1 = 0; i1 < g.n(); ++i1) {
    for (int i2 = 0; i2 < g.n(); ++i2) {
      if (f(i1, i2) != Complex{}) r = std::max(r, std::hypot(g.wavenumber(i1), g.wavenumber(i2)));
    }
  }
  return r;
}

// Sum over multi-indices of order k of d^alpha.
SpectralField mixed_derivative_sum(const SpectralField& f, int k) {
  return apply_multiplier(f, [k](double a, double b) {
    Complex sum{};
    for (int i = 0; i <= k; ++i) sum += std::pow(Complex(0.0, a), i) * std::pow(Complex(0.0, b), k - i);
    return sum;
  });
}

// J^r(fg) - f J^r g; constants commute with J^r, so only the fluctuation of f enters.
ProbeResult kato_ponce(const SpectralField& f0, const SpectralField& g0, const ProbeParams& p) {
  const double r = p.kato_ponce_r;
  if (!(r > 0.0)) throw std::invalid_argument("kato_ponce: r must be positive");
  const Grid2D big = padded_grid(f0.grid());
  const SpectralField f = resample(without_mean(f0), big);
  const SpectralField g = resample(g0, big);
  const SpectralField comm = bessel_potential(product(f, g), r) - product(f, bessel_potential(g, r));
  const double lhs = l2_norm(comm);
  const double rhs = l2_norm(bessel_potential(f0, r)) * lp_norm(g0, kInfinity) +
                     gradient_sup(f0) * l2_norm(bessel_potential(g0, r - 1.0));
  return make_result(lhs, rhs);
}

// Lambda^s(f . grad g) - f . grad Lambda^s g for a vector f.
ProbeResult kwz_commutator(const SpectralField& f1_0, const SpectralField& f2_0, const SpectralField& g0,
                           const ProbeParams& p) {
  const double s = p.commutator_sigma;
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("kwz_commutator: sigma must lie in (0, 1)");
  const Grid2D big = padded_grid(g0.grid());
  const SpectralField f1 = resample(without_mean(f1_0), big);
  const SpectralField f2 = resample(without_mean(f2_0), big);
  const SpectralField g = resample(g0, big);
  const SpectralField lg = fractional_laplacian(g, s);
  const SpectralField transport = product(f1, partial(g, Axis::x1)) + product(f2, partial(g, Axis::x2));
  const SpectralField shifted = product(f1, partial(lg, Axis::x1)) + product(f2, partial(lg, Axis::x2));
  const double lhs = l2_norm(fractional_laplacian(transport, s) - shifted);

  const std::array<PhysicalField, 2> top = {to_physical(fractional_laplacian(f1_0, s + 1.0)),
                                            to_physical(fractional_laplacian(f2_0, s + 1.0))};
  const std::array<PhysicalField, 4> grad = {
      to_physical(partial(f1_0, Axis::x1)), to_physical(partial(f1_0, Axis::x2)),
      to_physical(partial(f2_0, Axis::x1)), to_physical(partial(f2_0, Axis::x2))};
  const double rhs = lp_norm(std::span<const PhysicalField>(top), p.commutator_p1) * lp_norm(g0, p.commutator_q1) +
                     lp_norm(std::span<const PhysicalField>(grad), p.commutator_p2) *
                         lp_norm(fractional_laplacian(g0, s), p.commutator_q2);
  return make_result(lhs, rhs);
}

ProbeResult cao_wu(const SpectralField& f, const SpectralField& g, const SpectralField& h) {
  const Grid2D big = padded_grid(f.grid());
  // The triple product integrates exactly as <fg, h> once fg is alias-free.
  const double lhs = std::abs(inner_product(product(resample(f, big), resample(g, big)), resample(h, big)));
  const double rhs = l2_norm(f) * std::sqrt(l2_norm(g) * l2_norm(partial(g, Axis::x1))) *
                     std::sqrt(l2_norm(h) * l2_norm(partial(h, Axis::x2)));
  return make_result(lhs, rhs);
}

ProbeResult kozono_wadade(const SpectralField& f, const ProbeParams& p) {
  const double p0 = p.kozono_p0;
  if (!(p0 >= 2.0) || std::isinf(p0)) throw std::invalid_argument("kozono_wadade: p0 must lie in [2, inf)");
  const double lhs = lp_norm(f, p0);
  const double rhs = std::sqrt(p0) * std::pow(l2_norm(f), 2.0 / p0) * std::pow(sobolev_norm(f, 1.0, true), 1.0 - 2.0 / p0);
  return make_result(lhs, rhs);
}

double brezis_gallouet_rhs(const SpectralField& f, const ProbeParams& p) {
  if (!(p.brezis_s0 > 0.0)) throw std::invalid_argument("brezis_gallouet: s0 must be positive");
  const double h2 = sobolev_norm(f, 2.0);
  if (h2 == 0.0) return 0.0;
  return h2 * std::sqrt(1.0 + std::log(sobolev_norm(f, 2.0 + p.brezis_s0) / h2));
}

ProbeResult brezis_gallouet(const SpectralField& f, const ProbeParams& p) {
  return make_result(gradient_sup(f), brezis_gallouet_rhs(f, p));
}

// Fourier l1 norm of the gradient, the middle term of the Brezis-Gallouet chain.
ProbeResult brezis_gallouet_fourier(const SpectralField& f, const ProbeParams& p) {
  const Grid2D& g = f.grid();
  double l1 = 0.0;
  for (int i1 = 0; i1 < g.n(); ++i1) {
    for (int i2 = 0; i2 < g.n(); ++i2) l1 += std::hypot(g.wavenumber(i1), g.wavenumber(i2)) * std::abs(f(i1, i2));
  }
  return make_result(l1, brezis_gallouet_rhs(f, p));
}

ProbeResult gagliardo_nirenberg(const SpectralField& f, const ProbeParams& p) {
  if (p.gn_j < 0 || p.gn_m <= p.gn_j) throw std::invalid_argument("gagliardo_nirenberg: need 0 <= j < m");
  if (!(p.gn_a >= 0.0 && p.gn_a <= 1.0)) throw std::invalid_argument("gagliardo_nirenberg: a must lie in [0, 1]");
  const double lhs = lp_norm(mixed_derivative_sum(f, p.gn_j), p.gn_p);
  const double rhs = std::pow(lp_norm(mixed_derivative_sum(f, p.gn_m), p.gn_r), p.gn_a) *
                     std::pow(lp_norm(f, p.gn_q), 1.0 - p.gn_a);
  return make_result(lhs, rhs);
}

// ||f||_{L^inf} against lambda0 ||f||_{L^2} for spectra inside the ball of radius lambda0.
ProbeResult bernstein(const SpectralField& f, const ProbeParams& p) {
  const double radius = spectral_radius(f);
  double lambda0 = p.bernstein_lambda0;
  if (lambda0 == 0.0) lambda0 = radius;
  if (radius > lambda0 * (1.0 + 1e-12)) throw std::invalid_argument("bernstein: spectrum exceeds lambda0");
  return make_result(lp_norm(f, kInfinity), lambda0 * l2_norm(f));
}

}  // namespace

std::span<const std::string_view> inequality_names() { return kNames; }

int inequality_arity(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kArity[i];
  }
  throw std::invalid_argument("unknown inequality: " + std::string(name));
}

ProbeResult inequality_probe(std::string_view name, std::span<const SpectralField> fields, const ProbeParams& params) {
  const int arity = inequality_arity(name);
  if (static_cast<int>(fields.size()) != arity) {
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(arity) + " fields, got " +
                                std::to_string(fields.size()));
  }
  for (const SpectralField& f : fields) {
    if (f.grid() != fields.front().grid()) throw std::invalid_argument(std::string(name) + ": grid mismatch");
  }
  if (name == "kato_ponce") return kato_ponce(fields[0], fields[1], params);
  if (name == "kwz_commutator") return kwz_commutator(fields[0], fields[1], fields[2], params);
  if (name == "cao_wu") return cao_wu(fields[0], fields[1], fields[2]);
  if (name == "kozono_wadade") return kozono_wadade(fields[0], params);
  if (name == "brezis_gallouet") return brezis_gallouet(fields[0], params);
  if (name == "brezis_gallouet_fourier") return brezis_gallouet_fourier(fields[0], params);
  if (name == "gagliardo_nirenberg") return gagliardo_nirenberg(fields[0], params);
  return bernstein(fields[0], params);
}

CorpusSummary probe_corpus(std::string_view name, const Grid2D& grid, int count, const RegularityRecipe& base,
                           const ProbeParams& params) {
  const int arity = inequality_arity(name);
  CorpusSummary summary;
  summary.records.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    std::vector<SpectralField> args;
    const std::uint64_t first = base.seed + static_cast<std::uint64_t>(arity) * static_cast<std::uint64_t>(i);
    for (int k = 0; k < arity; ++k) {
      RegularityRecipe r = base;
      r.seed = first + static_cast<std::uint64_t>(k);
      args.push_back(synthesize_field(grid, r));
    }
    const ProbeResult res = inequality_probe(name, args, params);
    summary.sup_ratio = std::max(summary.sup_ratio, res.ratio);
    summary.records.push_back({std::string(name), first, grid.n(), res});
  }
  return summary;
}

void write_probe_csv(std::ostream& out, std::span<const ProbeRecord> records) {
  out << "inequality,seed,N,lhs,rhs,ratio\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const ProbeRecord& r : records) {
    out << r.inequality << ',' << r.seed << ',' << r.n << ',' << r.result.lhs << ',' << r.result.rhs << ','
        << r.result.ratio << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace aniso
