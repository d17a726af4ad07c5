#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "slepian/error.hpp"
#include "slepian/gridprojector.hpp"
#include "slepian/planeslep.hpp"

using namespace slepian;

namespace {

std::vector<double> random_field(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<double> v(n);
  for (auto& x : v) x = nd(rng);
  return v;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

const double kK10 = 2.0 * std::sqrt(10.0);

const OperatorProblem& disk_problem() {
  static const OperatorProblem p = build_problem(Region::disk({0, 0}, 1.0), SpectralDomain::disk(kK10), 0.1);
  return p;
}

const GridBasis& disk_basis() {
  static const GridBasis b = solve(disk_problem(), 8, 1);
  return b;
}

const Region kTriangle = Region::polygon({{0, 0}, {30, 5}, {12, 25}});

}  // namespace

TEST_CASE("build_problem: disk mask and grid extent") {
  const auto& p = disk_problem();
  const auto& m = p.spectral_mask;
  std::size_t count = 0;
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i) {
      const double kx = (i - m.nx / 2) * m.dkx, ky = (j - m.ny / 2) * m.dky;
      const bool inside = std::hypot(kx, ky) <= kK10;
      const int ri = (2 * (m.nx / 2) - i + m.nx) % m.nx, rj = (2 * (m.ny / 2) - j + m.ny) % m.ny;
      const double rkx = (ri - m.nx / 2) * m.dkx, rky = (rj - m.ny / 2) * m.dky;
      CHECK(m.at(i, j) == (inside || std::hypot(rkx, rky) <= kK10));
      count += m.at(i, j);
    }
  CHECK(count == p.spectral_count);
  CHECK(m.dkx == doctest::Approx(2 * std::numbers::pi / (p.grid.nx * p.grid.dx)));

  const auto sq = build_problem(Region::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), SpectralDomain::disk(20.0), 0.05);
  CHECK(sq.grid.nx * sq.grid.dx == doctest::Approx(3.0).epsilon(0.02));
  CHECK(sq.grid.ny * sq.grid.dy == doctest::Approx(3.0).epsilon(0.02));
  CHECK(sq.spatial_cells.size() == doctest::Approx(400.0).epsilon(0.06));
}

TEST_CASE("build_problem: wedge mask is antipodally symmetric") {
  for (double th : {std::numbers::pi / 6, -std::numbers::pi / 6}) {
    const auto p = build_problem(kTriangle, wedge_domain(th, 0.3, 0.4), 1.0);
    const auto& m = p.spectral_mask;
    bool any = false;
    for (int j = 0; j < m.ny; ++j)
      for (int i = 0; i < m.nx; ++i) {
        const int ri = (2 * (m.nx / 2) - i + m.nx) % m.nx, rj = (2 * (m.ny / 2) - j + m.ny) % m.ny;
        CHECK(m.at(i, j) == m.at(ri, rj));
        any = any || m.at(i, j);
      }
    CHECK(any);
  }
}

TEST_CASE("build_problem errors") {
  try {
    // Lattice step is about 2.1 here; this pair of triangles holds no cell centre.
    const auto tiny = hermitian_symmetrize(SpectralDomain::polygons({Region::polygon({{0.5, 0.5}, {0.6, 0.5}, {0.55, 0.6}})}));
    build_problem(Region::disk({0, 0}, 1.0), tiny, 0.1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidConfiguration);
  }
  CHECK_THROWS_AS(build_problem(Region::disk({0, 0}, 1.0), SpectralDomain::disk(3.0), 0.0), Error);
  CHECK_THROWS_AS(build_problem(Region::disk({0, 0}, 0.01), SpectralDomain::disk(3.0), 1.0), Error);
}

TEST_CASE("apply: support, adjointness, Rayleigh bounds") {
  for (ProjectorMode mode : {ProjectorMode::Space, ProjectorMode::Spectral}) {
    const auto p = build_problem(kTriangle, wedge_domain(std::numbers::pi / 6, 0.3, 0.4), 1.0, 3.0, mode);
    const std::size_t n = p.grid.size();
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto u = random_field(n, 2 * s + 1), v = random_field(n, 2 * s + 2);
      const auto au = slepian::apply(p, u), av = slepian::apply(p, v);
      const double lhs = dot(u, av), rhs = dot(au, v);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::sqrt(dot(u, u) * dot(v, v)));
      const double r = rayleigh_quotient(p, u);
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
      // Second application cannot increase the quadratic form.
      CHECK(rayleigh_quotient(p, au) >= r - 1e-12);
    }
    CHECK_THROWS_AS(slepian::apply(p, std::vector<double>(n + 1, 0.0)), Error);
  }
  // A field supported outside the region maps to zero in space mode.
  const auto& p = disk_problem();
  std::vector<double> f(p.grid.size(), 0.0);
  for (std::size_t k = 0; k < f.size(); ++k)
    if (!p.spatial_mask[k]) f[k] = std::cos(0.1 * k);
  for (double v : slepian::apply(p, f)) CHECK(v == 0.0);
}

TEST_CASE("solve: disk/disk against Nystrom") {
  // The spectral lattice step 2 pi / (embed diameter) must be fine against K,
  // hence the wider embedding.
  const auto g = solve(build_problem(Region::disk({0, 0}, 1.0), SpectralDomain::disk(kK10), 0.1, 6.0), 5, 1);
  const auto n = solve_region_disk(Region::disk({0, 0}, 1.0), kK10, 32, 8);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(g.eigenvalues[i] - n.eigenvalues()[i]) < 5e-3);
}

TEST_CASE("solve: Rayleigh consistency, support and realness") {
  const auto& g = disk_basis();
  const auto& p = g.problem;
  for (std::size_t a = 0; a < g.fields.size(); ++a) {
    CHECK(g.eigenvalues[a] >= -1e-10);
    CHECK(g.eigenvalues[a] <= 1.0 + 1e-10);
    if (a > 0) CHECK(g.eigenvalues[a] <= g.eigenvalues[a - 1] + 1e-12);
    const auto& f = g.fields[a].values;
    CHECK(std::abs(rayleigh_quotient(p, f) - g.eigenvalues[a]) < 1e-10);
    for (std::size_t k = 0; k < f.size(); ++k)
      if (!p.spatial_mask[k]) CHECK(f[k] == 0.0);
    CHECK(dot(f, f) * p.grid.dx * p.grid.dy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.imag_residuals[a] < 1e-8);
    CHECK(g.residuals[a] < 1e-8);
  }
}

TEST_CASE("solve: space and spectral modes share the spectrum") {
  const auto sp = solve(build_problem(kTriangle, SpectralDomain::disk(0.5), 1.0, 3.0, ProjectorMode::Spectral), 5, 3);
  const auto ss = solve(build_problem(kTriangle, SpectralDomain::disk(0.5), 1.0, 3.0, ProjectorMode::Space), 5, 3);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(sp.eigenvalues[i] - ss.eigenvalues[i]) < 1e-8);
}

TEST_CASE("solve: wedges at +pi/6 and -pi/6") {
  const auto plus = solve(build_problem(kTriangle, wedge_domain(std::numbers::pi / 6, 0.3, 0.4), 1.0), 4, 1);
  const auto minus = solve(build_problem(kTriangle, wedge_domain(-std::numbers::pi / 6, 0.3, 0.4), 1.0), 4, 1);
  double diff = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK(plus.imag_residuals[i] < 1e-8);
    CHECK(minus.imag_residuals[i] < 1e-8);
    CHECK(std::abs(plus.eigenvalues[i] - minus.eigenvalues[i]) < 0.2);
    diff = std::max(diff, std::abs(plus.eigenvalues[i] - minus.eigenvalues[i]));
  }
  CHECK(diff > 1e-6);

  // Sum maximum lies inside the wedge pair.
  const GridField w = weighted_periodogram_sum(plus, 4);
  std::size_t arg = 0;
  for (std::size_t k = 0; k < w.values.size(); ++k)
    if (w.values[k] > w.values[arg]) arg = k;
  CHECK(plus.problem.spectral_mask.cells[arg] == 1);
}

TEST_CASE("solve: full spectral mask gives lambda = 1") {
  const double k_all = 2.0 * std::numbers::pi / 0.2 * 2.0;
  const auto g = solve(build_problem(Region::disk({0, 0}, 1.0), SpectralDomain::disk(k_all), 0.2), 3, 5);
  for (double l : g.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("solve: determinism") {
  const auto p = build_problem(kTriangle, wedge_domain(std::numbers::pi / 6, 0.3, 0.4), 1.0);
  const auto a = solve(p, 4, 42), b = solve(p, 4, 42);
  CHECK(a.eigenvalues == b.eigenvalues);
  for (int i = 0; i < 4; ++i) CHECK(a.fields[i].values == b.fields[i].values);
  CHECK(a.iterations == b.iterations);
  CHECK(a.applications == b.applications);
  CHECK_THROWS_AS(solve(p, 0, 1), Error);
}

TEST_CASE("weighted_periodogram_sum") {
  const auto& g = disk_basis();
  const GridField one = weighted_periodogram_sum(g, 1);
  const GridField p1 = periodogram(g.fields[0]);
  for (std::size_t k = 0; k < one.values.size(); k += 13)
    CHECK(one.values[k] == doctest::Approx(g.eigenvalues[0] * p1.values[k]).epsilon(1e-12).scale(1e-300));

  const int count = 6;
  const GridField w = weighted_periodogram_sum(g, count);
  double in = 0, all = 0, lmin = 1, lsum = 0;
  for (std::size_t k = 0; k < w.values.size(); ++k) {
    all += w.values[k];
    if (g.problem.spectral_mask.cells[k]) in += w.values[k];
  }
  for (int a = 0; a < count; ++a) lmin = std::min(lmin, g.eigenvalues[a]), lsum += g.eigenvalues[a];
  CHECK(1.0 - in / all <= 1.0 - lmin + 1e-12);
  CHECK_THROWS_AS(weighted_periodogram_sum(g, 100), Error);
}
