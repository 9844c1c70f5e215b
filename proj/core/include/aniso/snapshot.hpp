#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aniso/spectral_field.hpp"

namespace aniso {

/// Named fields sharing one grid, persisted as an ABSF binary plus JSON sidecar.
///
/// Binary layout (little-endian): "ABSF", u32 version, u32 N, f64 L,
/// u32 field_count, then field_count blocks of N*N complex128 values
/// (real, imaginary) in the coefficient storage order. The sidecar
/// `<file>.json` lists the field names in block order plus the time stamp.
struct Snapshot {
  double time = 0.0;
  std::vector<std::string> names;
  std::vector<SpectralField> fields;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const std::filesystem::path& path, const Snapshot& snapshot);
Snapshot read_snapshot(const std::filesystem::path& path);

/// Path of the JSON sidecar written next to `path`.
std::filesystem::path snapshot_sidecar(const std::filesystem::path& path);

}  // namespace aniso
