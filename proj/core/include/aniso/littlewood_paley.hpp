#pragma once

#include <map>

#include "aniso/grid.hpp"
#include "aniso/spectral_field.hpp"

namespace aniso {

/// Radial cutoff: 1 for r <= 3/4, 0 for r >= 4/3, smooth in between.
double lp_chi(double r);
/// Annulus profile phi(r) = chi(r/2) - chi(r), supported in [3/4, 8/3].
double lp_phi(double r);
/// Weight of block j at radius r: chi for j = -1, phi(2^-j r) otherwise.
double lp_block_weight(int j, double r);

/// Largest block index needed on `grid`; the sum over j <= lp_max_block is
/// exactly one on every retained lattice point.
int lp_max_block(const Grid2D& grid);

/// Nonhomogeneous dyadic blocks Delta_j f for j = -1 .. lp_max_block.
struct LPBlockSet {
  Grid2D grid;
  std::map<int, SpectralField> blocks;

  SpectralField reconstruct() const;
  /// Largest coefficient found outside the nominal support of its block.
  double support_violation() const;
};

LPBlockSet lp_decompose(const SpectralField& f);

/// Largest |1 - sum_j weight_j(xi)| over the retained lattice.
double lp_partition_defect(const Grid2D& grid);

struct BesovParams {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;

  void validate() const;
};

/// || 2^{sj} ||Delta_j f||_{L^p} ||_{ell^q}; p, q may be infinite.
double besov_norm(const SpectralField& f, const BesovParams& params);
double besov_norm(const LPBlockSet& blocks, const BesovParams& params);

}  // namespace aniso
