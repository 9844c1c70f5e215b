#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "aniso/norms.hpp"
#include "aniso/operators.hpp"
#include "aniso/snapshot.hpp"
#include "aniso/synthesis.hpp"
#include "aniso/transform.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace aniso;
using testing::single_cos;

namespace {

SpectralField random_hermitian(const Grid2D& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  PhysicalField p(g);
  for (double& v : p.values) v = normal(rng);
  return to_spectral(p);
}

double cell(const Grid2D& g, int j) { return j * g.spacing(); }

}  // namespace

TEST_CASE("to_physical of zero coefficients is zero") {
  const Grid2D g(16);
  const PhysicalField p = to_physical(SpectralField(g));
  for (double v : p.values) CHECK(v == 0.0);
}

TEST_CASE("cos(x1) mode pair samples cos on the grid") {
  const Grid2D g(16);
  const PhysicalField p = to_physical(single_cos(g, 1, 0));
  for (int j1 = 0; j1 < 16; ++j1) {
    for (int j2 = 0; j2 < 16; ++j2) CHECK(p(j1, j2) == doctest::Approx(std::cos(cell(g, j1))).epsilon(1e-14));
  }
}

TEST_CASE("FFT transforms agree with direct summation at N=8") {
  const Grid2D g(8);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const SpectralField f = random_hermitian(g, seed);
    const auto direct = oracle::sample(f);
    const PhysicalField p = to_physical(f);
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(std::abs(p.values[i] - static_cast<double>(direct[i])) <= 1e-12);

    const auto coeffs = oracle::analyze(g, direct);
    const SpectralField back = to_spectral(p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      CHECK(std::abs(back.coeffs()[i] - Complex(static_cast<double>(coeffs[i].real()), static_cast<double>(coeffs[i].imag()))) <= 1e-12);
    }
  }
}

TEST_CASE("to_spectral of a constant keeps only the mean") {
  const Grid2D g(16);
  const SpectralField f = to_spectral(PhysicalField(g, std::vector<double>(g.size(), 2.5)));
  CHECK(f(0, 0).real() == doctest::Approx(2.5).epsilon(1e-15));
  f.coeffs()[0];
  SpectralField rest = f;
  rest(0, 0) = 0.0;
  CHECK(rest.max_abs() <= 1e-15);
}

TEST_CASE("cos(2 x1) has coefficients 1/2 at (+-2, 0)") {
  const Grid2D g(16);
  PhysicalField p(g);
  for (int j1 = 0; j1 < 16; ++j1) {
    for (int j2 = 0; j2 < 16; ++j2) p(j1, j2) = std::cos(2.0 * cell(g, j1));
  }
  SpectralField f = to_spectral(p);
  CHECK(std::abs(f.mode(2, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(f.mode(-2, 0) - 0.5) <= 1e-15);
  f.set_mode(2, 0, 0.0);
  CHECK(f.max_abs() <= 1e-15);
}

TEST_CASE("to_spectral rejects a sample count that does not match the grid") {
  const Grid2D g(8);
  std::vector<double> samples(63, 0.0);
  CHECK_THROWS(to_spectral(g, samples));
}

TEST_CASE("round trip is exact to 1e-12 and leaves Nyquist zero") {
  for (int n : {16, 64, 128}) {
    const Grid2D g(n);
    const SpectralField f = random_hermitian(g, 7);
    CHECK(hermitian_defect(f) == 0.0);
    const SpectralField back = to_spectral(to_physical(f));
    CHECK(testing::relative_difference(f, back) <= 1e-12);
  }
}

TEST_CASE("Parseval: quadrature equals coefficient sum") {
  const Grid2D g(32);
  const SpectralField f = synthesize_field(g, testing::recipe(11));
  const auto samples = oracle::sample(f);
  const double quad = static_cast<double>(oracle::l2_squared_quadrature(samples, g.length(), g.n()));
  CHECK(sobolev_norm_squared(f, 0.0) == doctest::Approx(quad).epsilon(1e-10));
}

TEST_CASE("apply_multiplier examples") {
  const Grid2D g(16);
  const SpectralField c1 = single_cos(g, 1, 0);
  CHECK(max_abs_difference(apply_multiplier(c1, [](double, double) { return 1.0; }), c1) == 0.0);

  const SpectralField d = apply_multiplier(c1, [](double xi1, double) { return Complex(0.0, xi1); });
  const PhysicalField p = to_physical(d);
  for (int j1 = 0; j1 < 16; ++j1) CHECK(p(j1, 3) == doctest::Approx(-std::sin(cell(g, j1))).epsilon(1e-14));

  const SpectralField diag = single_cos(g, 1, 1);
  const SpectralField lap = apply_multiplier(diag, [](double a, double b) { return a * a + b * b; });
  CHECK(max_abs_difference(lap, 2.0 * diag) <= 1e-15);
}

TEST_CASE("apply_multiplier names the wavenumber of a non-finite symbol") {
  const Grid2D g(8);
  try {
    apply_multiplier(single_cos(g, 1, 0), [](double a, double b) { return 1.0 / (a * a + b * b); });
    FAIL("expected an error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("xi=(0.000000, 0.000000)") != std::string::npos);
  }
  CHECK_NOTHROW(apply_multiplier(single_cos(g, 1, 0), [](double a, double b) { return 1.0 / (a * a + b * b); },
                                 Complex(0.0)));
}

TEST_CASE("fractional Laplacian") {
  const Grid2D g(16);
  const SpectralField f = synthesize_field(g, testing::recipe(3));
  CHECK(max_abs_difference(fractional_laplacian(f, 0.0), f) == 0.0);
  CHECK(max_abs_difference(fractional_laplacian(single_cos(g, 2, 0), 1.0), 2.0 * single_cos(g, 2, 0)) <= 1e-15);
  CHECK(max_abs_difference(fractional_laplacian(single_cos(g, 1, 1), 0.5), std::pow(2.0, 0.25) * single_cos(g, 1, 1)) <=
        1e-15);

  SpectralField with_mean = single_cos(g, 1, 0);
  with_mean(0, 0) = 1.0;
  CHECK(fractional_laplacian(with_mean, 1.0)(0, 0) == Complex(0.0));
  try {
    fractional_laplacian(with_mean, -1.0);
    FAIL("expected an error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("singular symbol at xi=0") != std::string::npos);
  }
  CHECK_NOTHROW(fractional_laplacian(f, -1.0));
}

TEST_CASE("Bessel potential") {
  const Grid2D g(16);
  const SpectralField f = synthesize_field(g, testing::recipe(5));
  CHECK(max_abs_difference(bessel_potential(f, 0.0), f) == 0.0);
  CHECK(max_abs_difference(bessel_potential(single_cos(g, 1, 0), 2.0), 2.0 * single_cos(g, 1, 0)) <= 1e-15);
  CHECK(testing::relative_difference(bessel_potential(bessel_potential(f, -2.0), 2.0), f) <= 1e-12);
}

TEST_CASE("Leray projection examples") {
  const Grid2D g(16);
  const VectorField2 solenoidal(testing::single_sin(g, 0, 1), SpectralField(g));
  const VectorField2 p1 = leray_project(solenoidal);
  CHECK(p1.divergence_free);
  CHECK(max_abs_difference(p1.u1, solenoidal.u1) <= 1e-15);
  CHECK(p1.u2.max_abs() <= 1e-15);

  const VectorField2 grad = gradient(single_cos(g, 1, 0));
  const VectorField2 p2 = leray_project(grad);
  CHECK(p2.u1.max_abs() <= 1e-15);
  CHECK(p2.u2.max_abs() <= 1e-15);

  const VectorField2 tilted(single_cos(g, 1, 1), SpectralField(g));
  const VectorField2 p3 = leray_project(tilted);
  CHECK(max_abs_difference(p3.u1, 0.5 * single_cos(g, 1, 1)) <= 1e-15);
  CHECK(max_abs_difference(p3.u2, -0.5 * single_cos(g, 1, 1)) <= 1e-15);

  const auto sym = leray_symbol(1.0, 1.0);
  CHECK(sym[0][0] == doctest::Approx(0.5));
  CHECK(sym[0][1] == doctest::Approx(-0.5));
  CHECK(sym[1][1] == doctest::Approx(0.5));
  const auto origin = leray_symbol(0.0, 0.0);
  CHECK(origin[0][0] == 1.0);
  CHECK(origin[0][1] == 0.0);
}

TEST_CASE("Leray projection is idempotent and certifies") {
  const Grid2D g(32);
  const VectorField2 u(synthesize_field(g, testing::recipe(1)), synthesize_field(g, testing::recipe(2)));
  const VectorField2 p = leray_project(u);
  CHECK(p.divergence_free);
  CHECK(divergence_defect(p) <= 1e-12);
  const VectorField2 pp = leray_project(p);
  CHECK(testing::relative_difference(pp.u1, p.u1) <= 1e-12);
  CHECK(testing::relative_difference(pp.u2, p.u2) <= 1e-12);
}

TEST_CASE("Fourier truncation") {
  const Grid2D g(16);
  const SpectralField two = single_cos(g, 1, 0) + single_cos(g, 2, 0);
  CHECK(max_abs_difference(fourier_truncate(two, 1.5), single_cos(g, 1, 0)) == 0.0);
  CHECK(max_abs_difference(fourier_truncate(two, g.max_wavenumber_magnitude()), two) == 0.0);
  CHECK_THROWS_AS(fourier_truncate(two, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(fourier_truncate(two, -1.0), std::invalid_argument);

  const SpectralField f = synthesize_field(Grid2D(32), testing::recipe(9));
  const SpectralField t3 = fourier_truncate(f, 3.0);
  CHECK(max_abs_difference(fourier_truncate(t3, 3.0), t3) == 0.0);
  CHECK(sobolev_norm(f - t3, 0.0) <= sobolev_norm(f, 1.0) / 3.0);
}

TEST_CASE("mollifier") {
  const Grid2D g(32);
  CHECK(mollifier_symbol(0.0) == 1.0);
  CHECK(mollifier_symbol(2.0) == 0.0);
  CHECK(mollifier_symbol(3.0) == 0.0);

  const SpectralField f = fourier_truncate(synthesize_field(g, testing::recipe(4)), 6.0);
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {1.0, 0.1, 0.01, 0.001}) {
    const double rel = l2_norm(mollify(f, eps) - f) / l2_norm(f);
    CHECK(rel <= previous);
    previous = rel;
  }
  CHECK(previous <= 1e-3);

  SpectralField constant(g);
  constant(0, 0) = 3.0;
  for (double eps : {2.0, 0.5, 0.01}) CHECK(max_abs_difference(mollify(constant, eps), constant) == 0.0);

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const SpectralField r = synthesize_field(g, testing::recipe(seed, 1.0, 0.2));
    CHECK(l2_norm(mollify(r, 0.3)) <= l2_norm(r));
  }
  CHECK_THROWS_AS(mollify(f, 0.0), std::invalid_argument);
}

TEST_CASE("double Riesz transforms") {
  const Grid2D g(16);
  const SpectralField c = single_cos(g, 1, 0);
  CHECK(max_abs_difference(riesz_double(c, Axis::x1, Axis::x1), c) <= 1e-15);
  CHECK(riesz_double(c, Axis::x1, Axis::x2).max_abs() <= 1e-15);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SpectralField r = synthesize_field(g, testing::recipe(seed));
    CHECK(l2_norm(riesz_double(r, Axis::x1, Axis::x2)) <= l2_norm(r));
    CHECK(l2_norm(riesz_double(r, Axis::x2, Axis::x2)) <= l2_norm(r));
  }
}

TEST_CASE("diagonal multipliers commute") {
  const Grid2D g(32);
  const SpectralField f = synthesize_field(g, testing::recipe(8));
  const SpectralField a = fractional_laplacian(bessel_potential(f, -1.5), 0.5);
  const SpectralField b = bessel_potential(fractional_laplacian(f, 0.5), -1.5);
  CHECK(max_abs_difference(a, b) <= 1e-12);
  const SpectralField c = riesz_double(mollify(f, 0.2), Axis::x1, Axis::x2);
  const SpectralField d = mollify(riesz_double(f, Axis::x1, Axis::x2), 0.2);
  CHECK(max_abs_difference(c, d) <= 1e-12);
  const SpectralField e = fourier_truncate(laplacian(f), 4.0);
  const SpectralField h = laplacian(fourier_truncate(f, 4.0));
  CHECK(max_abs_difference(e, h) <= 1e-12);
}

TEST_CASE("vorticity identities on divergence-free fields") {
  const Grid2D g(32);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const VectorField2 v = synthesize_divfree_velocity(g, testing::recipe(seed));
    const SpectralField w = vorticity(v);
    const double grad_sq = sobolev_norm_squared(partial(v.u1, Axis::x1), 0.0) +
                           sobolev_norm_squared(partial(v.u1, Axis::x2), 0.0) +
                           sobolev_norm_squared(partial(v.u2, Axis::x1), 0.0) +
                           sobolev_norm_squared(partial(v.u2, Axis::x2), 0.0);
    CHECK(std::sqrt(grad_sq) == doctest::Approx(l2_norm(w)).epsilon(1e-10));
    const VectorField2 gw = gradient(w);
    CHECK(testing::relative_difference(gw.u1, laplacian(v.u2)) <= 1e-10);
    CHECK(testing::relative_difference(gw.u2, -laplacian(v.u1)) <= 1e-10);
  }
}

TEST_CASE("resample copies the shared modes") {
  const Grid2D coarse(16), fine(32);
  const SpectralField f = synthesize_field(coarse, testing::recipe(2));
  const SpectralField up = resample(f, fine);
  CHECK(max_abs_difference(resample(up, coarse), f) == 0.0);
  CHECK(l2_norm(up) == doctest::Approx(l2_norm(f)).epsilon(1e-14));
  CHECK_THROWS(resample(f, Grid2D(32, 1.0)));
}

TEST_CASE("snapshot round trip is bit exact") {
  const Grid2D g(16);
  Snapshot s;
  s.time = 0.125;
  s.names = {"v1", "theta"};
  s.fields = {synthesize_field(g, testing::recipe(1)), synthesize_field(g, testing::recipe(2))};
  const auto dir = std::filesystem::temp_directory_path() / "aniso_unit_snapshot";
  std::filesystem::create_directories(dir);
  const auto path = dir / "snap.absf";
  write_snapshot(path, s);
  CHECK(std::filesystem::exists(snapshot_sidecar(path)));
  const Snapshot r = read_snapshot(path);
  CHECK(r.time == s.time);
  CHECK(r.names == s.names);
  REQUIRE(r.fields.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(r.fields[k].grid() == g);
    CHECK(std::equal(r.fields[k].coeffs().begin(), r.fields[k].coeffs().end(), s.fields[k].coeffs().begin()));
  }
  std::ofstream(dir / "bad.absf", std::ios::binary) << "XXXX";
  CHECK_THROWS(read_snapshot(dir / "bad.absf"));
  std::filesystem::remove_all(dir);
}
