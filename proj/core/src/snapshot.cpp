#include "aniso/snapshot.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace aniso {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <typename T>
T to_little(T value) {
  if constexpr (std::endian::native == std::endian::little) {
    return value;
  } else {
    unsigned char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
    T out;
    std::memcpy(&out, bytes, sizeof(T));
    return out;
  }
}

template <typename T>
void put(std::ostream& out, T value) {
  const T le = to_little(value);
  out.write(reinterpret_cast<const char*>(&le), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T raw{};
  in.read(reinterpret_cast<char*>(&raw), sizeof(T));
  if (!in) throw std::runtime_error("read_snapshot: truncated file");
  return to_little(raw);
}

}  // namespace

std::filesystem::path snapshot_sidecar(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p += ".json";
  return p;
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& snapshot) {
  if (snapshot.fields.empty()) throw std::invalid_argument("write_snapshot: no fields");
  if (snapshot.names.size() != snapshot.fields.size()) {
    throw std::invalid_argument("write_snapshot: names and fields differ in length");
  }
  const Grid2D& grid = snapshot.fields.front().grid();
  for (const auto& f : snapshot.fields) {
    if (f.grid() != grid) throw std::invalid_argument("write_snapshot: fields must share one grid");
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_snapshot: cannot open " + path.string());
  out.write("ABSF", 4);
  put<std::uint32_t>(out, kSnapshotVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.n()));
  put<double>(out, grid.length());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(snapshot.fields.size()));
  for (const auto& f : snapshot.fields) {
    for (const Complex& c : f.coeffs()) {
      put<double>(out, c.real());
      put<double>(out, c.imag());
    }
  }
  if (!out) throw std::runtime_error("write_snapshot: write failed for " + path.string());

  nlohmann::ordered_json meta;
  meta["format"] = "ABSF";
  meta["version"] = kSnapshotVersion;
  meta["N"] = grid.n();
  meta["L"] = grid.length();
  meta["time"] = snapshot.time;
  meta["fields"] = snapshot.names;
  std::ofstream side(snapshot_sidecar(path), std::ios::trunc);
  side << meta.dump(2) << '\n';
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_snapshot: cannot open " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "ABSF", 4) != 0) throw std::runtime_error("read_snapshot: bad magic");
  const auto version = get<std::uint32_t>(in);
  if (version != kSnapshotVersion) throw std::runtime_error("read_snapshot: unsupported version");
  const auto n = get<std::uint32_t>(in);
  const auto length = get<double>(in);
  const auto count = get<std::uint32_t>(in);
  const Grid2D grid(static_cast<int>(n), length);

  Snapshot snap;
  for (std::uint32_t k = 0; k < count; ++k) {
    std::vector<Complex> coeffs(grid.size());
    for (auto& c : coeffs) {
      const double re = get<double>(in);
      const double im = get<double>(in);
      c = Complex{re, im};
    }
    snap.fields.emplace_back(grid, std::move(coeffs));
  }

  std::ifstream side(snapshot_sidecar(path));
  if (side) {
    const auto meta = nlohmann::json::parse(side);
    snap.names = meta.at("fields").get<std::vector<std::string>>();
    snap.time = meta.value("time", 0.0);
    if (snap.names.size() != snap.fields.size()) {
      throw std::runtime_error("read_snapshot: sidecar field count mismatch");
    }
  } else {
    for (std::uint32_t k = 0; k < count; ++k) snap.names.push_back("field" + std::to_string(k));
  }
  return snap;
}

}  // namespace aniso
