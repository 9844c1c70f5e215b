#include "aniso/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aniso/norms.hpp"
#include "aniso/operators.hpp"

namespace aniso {

namespace {

constexpr double kInner = 0.75;
constexpr double kOuter = 4.0 / 3.0;

double smooth_step(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

// Block supports are closed sets; a small slack absorbs rounding in 2^-j r.
bool inside_support(int j, double r) {
  constexpr double slack = 1e-12;
  if (j < 0) return r <= kOuter + slack;
  const double scaled = std::ldexp(r, -j);
  return scaled >= kInner - slack && scaled <= 2.0 * kOuter + slack;
}

}  // namespace

double lp_chi(double r) {
  if (r <= kInner) return 1.0;
  if (r >= kOuter) return 0.0;
  const double a = smooth_step(kOuter - r);
  const double b = smooth_step(r - kInner);
  return a / (a + b);
}

double lp_phi(double r) { return lp_chi(0.5 * r) - lp_chi(r); }

double lp_block_weight(int j, double r) {
  if (j < 0) return lp_chi(r);
  return lp_phi(std::ldexp(r, -j));
}

int lp_max_block(const Grid2D& grid) {
  const double rmax = grid.max_wavenumber_magnitude();
  int j = -1;
  while (std::ldexp(kInner, j + 1) <= rmax) ++j;
  return j;
}

SpectralField LPBlockSet::reconstruct() const {
  SpectralField sum(grid);
  for (const auto& [j, block] : blocks) sum += block;
  return sum;
}

double LPBlockSet::support_violation() const {
  const int n = grid.n();
  double worst = 0.0;
  for (const auto& [j, block] : blocks) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int i2 = 0; i2 < n; ++i2) {
        const double a = std::abs(block(i1, i2));
        if (a == 0.0) continue;
        if (!inside_support(j, std::hypot(grid.wavenumber(i1), grid.wavenumber(i2)))) worst = std::max(worst, a);
      }
    }
  }
  return worst;
}

LPBlockSet lp_decompose(const SpectralField& f) {
  const Grid2D& g = f.grid();
  LPBlockSet set{g, {}};
  const int jmax = lp_max_block(g);
  for (int j = -1; j <= jmax; ++j) {
    set.blocks.emplace(j, apply_real_multiplier(f, [j](double a, double b) {
                         return lp_block_weight(j, std::hypot(a, b));
                       }));
  }
  return set;
}

double lp_partition_defect(const Grid2D& grid) {
  const int n = grid.n();
  const int jmax = lp_max_block(grid);
  double worst = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    if (grid.is_nyquist(i1)) continue;
    for (int i2 = 0; i2 < n; ++i2) {
      if (grid.is_nyquist(i2)) continue;
      const double r = std::hypot(grid.wavenumber(i1), grid.wavenumber(i2));
      double sum = 0.0;
      for (int j = -1; j <= jmax; ++j) sum += lp_block_weight(j, r);
      worst = std::max(worst, std::abs(1.0 - sum));
    }
  }
  return worst;
}

void BesovParams::validate() const {
  if (!std::isfinite(s)) throw std::invalid_argument("besov: s must be finite");
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("besov: p and q must be >= 1");
}

double besov_norm(const LPBlockSet& blocks, const BesovParams& params) {
  params.validate();
  double acc = 0.0;
  for (const auto& [j, block] : blocks.blocks) {
    const double term = std::exp2(params.s * j) * lp_norm(block, params.p);
    if (std::isinf(params.q)) {
      acc = std::max(acc, term);
    } else {
      acc += std::pow(term, params.q);
    }
  }
  return std::isinf(params.q) ? acc : std::pow(acc, 1.0 / params.q);
}

double besov_norm(const SpectralField& f, const BesovParams& params) {
  return besov_norm(lp_decompose(f), params);
}

}  // namespace aniso
