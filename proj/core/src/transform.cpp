#include "aniso/transform.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace aniso {

namespace {

// FFTW_ESTIMATE keeps plan selection independent of timing, so repeated runs are
// bit-identical.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(int n) {
  static std::map<int, PlanPair> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const std::size_t half = static_cast<std::size_t>(n) * static_cast<std::size_t>(n / 2 + 1);
  double* real = fftw_alloc_real(static_cast<std::size_t>(n) * n);
  fftw_complex* spec = fftw_alloc_complex(half);
  PlanPair p;
  p.forward = fftw_plan_dft_r2c_2d(n, n, real, spec, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_c2r_2d(n, n, spec, real, FFTW_ESTIMATE);
  fftw_free(real);
  fftw_free(spec);
  if (p.forward == nullptr || p.backward == nullptr) {
    throw std::runtime_error("FFTW planning failed for N=" + std::to_string(n));
  }
  return cache.emplace(n, p).first->second;
}

struct Workspace {
  explicit Workspace(int n)
      : real(fftw_alloc_real(static_cast<std::size_t>(n) * n)),
        spec(fftw_alloc_complex(static_cast<std::size_t>(n) * (n / 2 + 1))) {}
  ~Workspace() {
    fftw_free(real);
    fftw_free(spec);
  }
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  double* real;
  fftw_complex* spec;
};

Workspace& workspace_for(int n) {
  thread_local std::map<int, std::unique_ptr<Workspace>> spaces;
  auto& slot = spaces[n];
  if (!slot) slot = std::make_unique<Workspace>(n);
  return *slot;
}

}  // namespace

PhysicalField::PhysicalField(const Grid2D& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("PhysicalField: sample count does not match grid");
  }
}

PhysicalField to_physical(const SpectralField& f) {
  const Grid2D& g = f.grid();
  const int n = g.n();
  const int nh = n / 2 + 1;
  const PlanPair& plans = plans_for(n);
  Workspace& ws = workspace_for(n);

  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < nh; ++i2) {
      const Complex c = g.is_nyquist(i1) || g.is_nyquist(i2) ? Complex{} : f(i1, i2);
      fftw_complex& out = ws.spec[static_cast<std::size_t>(i1) * nh + i2];
      out[0] = c.real();
      out[1] = c.imag();
    }
  }
  fftw_execute_dft_c2r(plans.backward, ws.spec, ws.real);

  PhysicalField result(g);
  std::copy(ws.real, ws.real + g.size(), result.values.begin());
  return result;
}

SpectralField to_spectral(const Grid2D& grid, std::span<const double> samples) {
  if (samples.size() != grid.size()) {
    throw std::invalid_argument("to_spectral: expected " + std::to_string(grid.size()) + " samples, got " +
                                std::to_string(samples.size()));
  }
  const int n = grid.n();
  const int nh = n / 2 + 1;
  const PlanPair& plans = plans_for(n);
  Workspace& ws = workspace_for(n);
  std::copy(samples.begin(), samples.end(), ws.real);
  fftw_execute_dft_r2c(plans.forward, ws.real, ws.spec);

  const double norm = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  SpectralField f(grid);
  for (int i1 = 0; i1 < n; ++i1) {
    if (grid.is_nyquist(i1)) continue;
    for (int i2 = 0; i2 < n / 2; ++i2) {
      const fftw_complex& c = ws.spec[static_cast<std::size_t>(i1) * nh + i2];
      f(i1, i2) = Complex{c[0] * norm, c[1] * norm};
    }
  }
  // xi2 = 0 column: the two halves come from separate FFT outputs, impose conjugacy exactly.
  f(0, 0) = Complex{f(0, 0).real(), 0.0};
  for (int i1 = 1; i1 < n / 2; ++i1) f(n - i1, 0) = std::conj(f(i1, 0));
  for (int i1 = 0; i1 < n; ++i1) {
    if (grid.is_nyquist(i1)) continue;
    const int j1 = i1 == 0 ? 0 : n - i1;
    for (int i2 = n / 2 + 1; i2 < n; ++i2) f(i1, i2) = std::conj(f(j1, n - i2));
  }
  return f;
}

SpectralField to_spectral(const PhysicalField& samples) { return to_spectral(samples.grid, samples.values); }

}  // namespace aniso
