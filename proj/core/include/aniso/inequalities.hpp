#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aniso/spectral_field.hpp"
#include "aniso/synthesis.hpp"

namespace aniso {

/// Exponents of the probed inequalities. Defaults give the two-dimensional
/// Ladyzhenskaya case for Gagliardo-Nirenberg and p2 = infinity, q2 = 2 for the
/// commutator estimate.
struct ProbeParams {
  double kato_ponce_r = 1.5;
  double commutator_sigma = 0.5;
  double commutator_p1 = 2.0;
  double commutator_q1 = std::numeric_limits<double>::infinity();
  double commutator_p2 = std::numeric_limits<double>::infinity();
  double commutator_q2 = 2.0;
  double kozono_p0 = 4.0;
  double brezis_s0 = 1.0;
  int gn_j = 0;
  int gn_m = 1;
  double gn_p = 4.0;
  double gn_q = 2.0;
  double gn_r = 2.0;
  double gn_a = 0.5;
  /// Band radius; zero means the spectral radius of the argument.
  double bernstein_lambda0 = 0.0;
};

/// Both sides with the constant stripped. ratio = lhs / rhs, defined as 0 when
/// both vanish and +infinity when only the right side does.
struct ProbeResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

/// Probe names:
///   kato_ponce (f, g), kwz_commutator (f1, f2, g), cao_wu (f, g, h),
///   kozono_wadade (f), brezis_gallouet (f), brezis_gallouet_fourier (f),
///   gagliardo_nirenberg (f), bernstein (f).
std::span<const std::string_view> inequality_names();
/// Number of field arguments; throws std::invalid_argument for an unknown name.
int inequality_arity(std::string_view name);

ProbeResult inequality_probe(std::string_view name, std::span<const SpectralField> fields,
                             const ProbeParams& params = {});

struct ProbeRecord {
  std::string inequality;
  std::uint64_t seed = 0;
  int n = 0;
  ProbeResult result;
};

struct CorpusSummary {
  std::vector<ProbeRecord> records;
  double sup_ratio = 0.0;
};

/// Runs one probe over `count` synthesized fields; argument k of corpus item i
/// uses seed base.seed + arity * i + k.
CorpusSummary probe_corpus(std::string_view name, const Grid2D& grid, int count, const RegularityRecipe& base,
                           const ProbeParams& params = {});

/// CSV with header inequality,seed,N,lhs,rhs,ratio.
void write_probe_csv(std::ostream& out, std::span<const ProbeRecord> records);

}  // namespace aniso
