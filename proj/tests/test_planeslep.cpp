#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slepian/diskanalytic.hpp"
#include "slepian/error.hpp"
#include "slepian/planeslep.hpp"

using namespace slepian;

namespace {

const double kC42 = 2.0 * std::sqrt(42.0);

const SlepianBasis& disk42() {
  static const SlepianBasis b = solve_region_disk(Region::disk({0, 0}, 1.0), kC42, 32, 90);
  return b;
}

const DiskBasis& analytic42() {
  static const DiskBasis b = assemble_disk_basis(kC42, 1.0, 60);
  return b;
}

Region colorado() { return Region::polygon(read_boundary_file(SLEPIAN_DATA_DIR "/colorado_plateaus.txt")); }

const SlepianBasis& colorado10() {
  static const SlepianBasis b = solve_region_disk(colorado(), 0.0194, 32, 0);
  return b;
}

double sum_sq(const GridField& f) {
  double s = 0;
  for (double v : f.values) s += v * v;
  return s * f.grid.dx * f.grid.dy;
}

}  // namespace

TEST_CASE("shannon_2d") {
  CHECK(std::abs(shannon_2d(0.0194, 334e3) - 10.0) < 0.05);
  CHECK(shannon_2d(2.0, std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(shannon_2d(6.0, 2.5) == doctest::Approx(4 * shannon_2d(3.0, 2.5)).epsilon(1e-15));
  CHECK(shannon_2d(3.0, 2.5) == doctest::Approx(std::numbers::pi * 9 * 2.5 / (4 * std::numbers::pi * std::numbers::pi)).epsilon(1e-15));
  CHECK_THROWS_AS(shannon_2d(0.0, 1.0), Error);
}

TEST_CASE("disk: Nystrom against the analytic basis") {
  const auto& n = disk42();
  const auto& a = analytic42();
  for (int i = 0; i < 10; ++i) CHECK(std::abs(n.eigenvalues()[i] - a.entries[i].lambda) < 1e-4);
  CHECK(n.eigenvalues()[0] < 1.0);
}

TEST_CASE("Colorado Plateaus: trace and top eigenvalue") {
  const auto& b = colorado10();
  CHECK(std::abs(b.trace - 10.0) <= 0.1);
  CHECK(std::abs(b.trace / b.shannon - 1.0) <= 1e-3);
  CHECK(b.eigenvalues()[0] < 1.0);
  for (double l : b.eigenvalues()) CHECK(l < 1.0);
}

TEST_CASE("Colorado Plateaus: leading eigenvalues under quadrature refinement") {
  // Polygon corners limit convergence; 32 vs 48 nodes differ by about 4e-4.
  const auto fine = solve_region_disk(colorado(), 0.0194, 48, 5);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(colorado10().eigenvalues()[i] - fine.eigenvalues()[i]) < 1e-3);
  CHECK(colorado10().eigenvalues()[0] == doctest::Approx(0.99899).epsilon(1e-4));
}

TEST_CASE("trace equals the Shannon number for other regions") {
  const std::vector<Region> regions{
      Region::polygon({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 2}, {3, 2}, {3, 3}, {0, 3}}),
      Region::polygon({{0, 0}, {4, 1}, {2, 3}}),
      Region::disk({1, 1}, 1.5),
  };
  for (const auto& r : regions) {
    const auto b = solve_region_disk(r, 3.0, 24, 5);
    CHECK(std::abs(b.trace / shannon_2d(3.0, area(r)) - 1.0) <= 1e-3);
  }
}

TEST_CASE("region Gram is diag(lambda)") {
  for (const SlepianBasis* b : {&disk42(), &colorado10()}) {
    const auto& w = b->solution.rule.weights;
    const auto& f = b->solution.node_samples;
    const int n = std::min<int>(30, static_cast<int>(b->count()));
    double worst = 0;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        double g = 0;
        for (std::size_t j = 0; j < w.size(); ++j) g += w[j] * f(j, a) * f(j, c);
        worst = std::max(worst, std::abs(g - (a == c ? b->eigenvalues()[a] : 0.0)));
      }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("evaluate_g at quadrature nodes") {
  const auto& b = disk42();
  for (std::size_t j : {std::size_t{0}, std::size_t{333}, std::size_t{700}}) {
    const Point p = b.solution.rule.nodes[j];
    const GridSpec g = GridSpec::make(p, 1.0, 1.0, 1, 1);
    for (int a : {0, 3, 9}) {
      const double v = evaluate_g(b, a, g).values[0];
      CHECK(std::abs(v - b.solution.node_samples(j, a)) <= 1e-9 * std::max(1.0, std::abs(v)));
    }
  }
}

TEST_CASE("g_1 peaks inside the disk; h vanishes outside") {
  const auto& b = disk42();
  const GridSpec grid = GridSpec::covering({-2, 2, -2, 2}, 0.05);
  const GridField g = evaluate_g(b, 0, grid);
  const GridField h = evaluate_h(b, 0, grid);
  std::size_t arg = 0;
  for (std::size_t k = 0; k < g.values.size(); ++k)
    if (std::abs(g.values[k]) > std::abs(g.values[arg])) arg = k;
  const int i = static_cast<int>(arg % grid.nx), j = static_cast<int>(arg / grid.nx);
  CHECK(contains(b.region, grid.at(i, j)));
  for (int jj = 0; jj < grid.ny; ++jj)
    for (int ii = 0; ii < grid.nx; ++ii) {
      const auto k = grid.index(ii, jj);
      if (!contains(b.region, grid.at(ii, jj))) {
        CHECK(h.values[k] == 0.0);
      } else {
        CHECK(h.values[k] == g.values[k]);
      }
    }
  // Cell-centred Riemann sum of h^2 is lambda_1 up to the boundary staircase.
  CHECK(sum_sq(h) == doctest::Approx(b.eigenvalues()[0]).epsilon(0.02));
}

TEST_CASE("h_1 matches the analytic radial function") {
  const auto& b = disk42();
  const auto& a = analytic42();
  REQUIRE(a.entries[0].m == 0);
  const double sign = disk_radial(a, 0, 0.0) * evaluate_g(b, 0, GridSpec::make({0, 0}, 1, 1, 1, 1)).values[0] < 0 ? -1 : 1;
  for (Point p : {Point{0, 0}, Point{0.3, 0.1}, Point{-0.5, 0.6}, Point{0.1, -0.85}}) {
    const double v = evaluate_h(b, 0, GridSpec::make(p, 1, 1, 1, 1)).values[0];
    CHECK(std::abs(v - sign * disk_radial(a, 0, std::hypot(p.x, p.y))) < 1e-5);
  }
}

TEST_CASE("energy fraction inside the region on a large grid") {
  const Region disk = Region::disk({0, 0}, 1.0);
  const auto b = solve_region_disk(disk, 2 * std::sqrt(10.0), 32, 12);
  const GridSpec grid = GridSpec::covering({-6, 6, -6, 6}, 0.08);
  const Eigen::MatrixXd g = evaluate_g_many(b, 12, grid);
  for (int a = 0; a < 12; ++a) {
    if (b.eigenvalues()[a] <= 0.5) continue;
    double in = 0, all = 0;
    for (int j = 0; j < grid.ny; ++j)
      for (int i = 0; i < grid.nx; ++i) {
        const double v = g(static_cast<Eigen::Index>(grid.index(i, j)), a);
        all += v * v;
        if (contains(disk, grid.at(i, j))) in += v * v;
      }
    CHECK(in / all == doctest::Approx(b.eigenvalues()[a]).epsilon(0.02));
  }
}

TEST_CASE("periodogram: constant, plane wave and Parseval") {
  const GridSpec grid = GridSpec::make({0, 0}, 0.5, 0.25, 32, 48);
  GridField c = make_field(grid, "c");
  for (auto& v : c.values) v = 2.0;
  const GridField pc = periodogram(c);
  double total = 0;
  for (double v : pc.values) total += v;
  const std::size_t zero = pc.grid.index(16, 24);
  CHECK(pc.grid.at(16, 24).x == 0.0);
  CHECK(pc.grid.at(16, 24).y == 0.0);
  CHECK(pc.values[zero] == doctest::Approx(total).epsilon(1e-12));

  // cos(k0 . x) with k0 on the lattice: (3 dkx, -5 dky).
  const double dkx = 2 * std::numbers::pi / (32 * 0.5), dky = 2 * std::numbers::pi / (48 * 0.25);
  GridField w = make_field(grid, "w");
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const Point x = grid.at(i, j);
      w.values[grid.index(i, j)] = std::cos(3 * dkx * x.x - 5 * dky * x.y);
    }
  const GridField pw = periodogram(w);
  const double peak = pw.values[pw.grid.index(16 + 3, 24 - 5)];
  CHECK(pw.values[pw.grid.index(16 - 3, 24 + 5)] == doctest::Approx(peak).epsilon(1e-12));
  double rest = 0;
  for (double v : pw.values) rest += v;
  CHECK(2 * peak == doctest::Approx(rest).epsilon(1e-12));

  // Parseval on an arbitrary field with odd sizes.
  const GridSpec g2 = GridSpec::make({-1, 2}, 0.3, 0.7, 25, 17);
  GridField r = make_field(g2, "r");
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] = std::sin(0.37 * k * k + 1.0);
  const GridField pr = periodogram(r);
  double spec = 0;
  for (double v : pr.values) spec += v;
  spec *= pr.grid.dx * pr.grid.dy / (4 * std::numbers::pi * std::numbers::pi);
  CHECK(std::abs(spec - sum_sq(r)) <= 1e-10 * sum_sq(r));

  GridField z = r;
  z.imag.assign(z.values.size(), 0.0);
  CHECK_THROWS_AS(periodogram(z), Error);
}

TEST_CASE("Colorado h_1: spectral energy within |k| <= K") {
  const auto& b = colorado10();
  const auto bb = b.region.bounds();
  const double span = 4 * std::max(bb.width(), bb.height());
  const Point c = bb.center();
  const GridSpec grid = GridSpec::covering({c.x - span / 2, c.x + span / 2, c.y - span / 2, c.y + span / 2}, 15.0);
  const GridField p = periodogram(evaluate_h(b, 0, grid));
  double in = 0, all = 0;
  for (int j = 0; j < p.grid.ny; ++j)
    for (int i = 0; i < p.grid.nx; ++i) {
      const Point k = p.grid.at(i, j);
      const double v = p.values[p.grid.index(i, j)];
      all += v;
      if (std::hypot(k.x, k.y) <= b.K) in += v;
    }
  CHECK(in / all == doctest::Approx(b.eigenvalues()[0]).epsilon(0.02));
}

TEST_CASE("weighted sum of squares on the disk") {
  const auto& b = disk42();
  const double target = 42.0 / std::numbers::pi;
  const std::vector<Point> interior{{0, 0}, {0.3, 0.2}, {-0.5, 0.1}, {0.2, -0.6}};
  const std::vector<Point> exterior{{2.8, 0}, {0, -3.5}, {2.5, 2.5}};
  GridSpec g = GridSpec::make({0, 0}, 1, 1, 1, 1);
  std::vector<double> previous(interior.size(), 0.0);
  for (int count : {21, 42, 84}) {
    for (std::size_t p = 0; p < interior.size(); ++p) {
      g.origin = interior[p];
      const double v = weighted_sumsq(b, g, count).values[0];
      CHECK(v > previous[p]);
      previous[p] = v;
      if (count == 84) {
        // The interior criterion applies at distance > 0.15 sqrt(A) from the edge.
        REQUIRE(boundary_distance(b.region, interior[p]) > 0.15 * std::sqrt(std::numbers::pi));
        CHECK(v == doctest::Approx(target).epsilon(0.10));
      }
    }
  }
  for (Point x : exterior) {
    g.origin = x;
    CHECK(weighted_sumsq(b, g, 84).values[0] < 0.05 * target);
  }
  CHECK_THROWS_AS(weighted_sumsq(b, g, 0), Error);
}

TEST_CASE("Mercer partial sums approach the kernel diagonal from below") {
  const auto b = solve_region_disk(Region::disk({0, 0}, 1.0), 2 * std::sqrt(10.0), 32, 0);
  const double diag = b.K * b.K / (4 * std::numbers::pi);
  double cum = 0;
  int m = 0;
  while (cum < 0.99 * 10.0) cum += b.eigenvalues()[m++];
  m += 40;
  const auto& f = b.solution.node_samples;
  for (std::size_t j = 0; j < b.solution.rule.size(); j += 97) {
    if (boundary_distance(b.region, b.solution.rule.nodes[j]) < 0.2) continue;
    double s = 0;
    for (int a = 0; a < m; ++a) s += f(j, a) * f(j, a);
    CHECK(s <= diag * (1 + 1e-12));
    CHECK(s >= 0.95 * diag);
  }
}

TEST_CASE("step shape") {
  for (double n2d : {10.0, 42.0}) {
    const int c = static_cast<int>(std::ceil(n2d));
    const auto d = solve_region_disk(Region::disk({0, 0}, 1.0), 2 * std::sqrt(n2d), 32, c + 4);
    CHECK(d.eigenvalues()[c - 3] > 0.5);
    CHECK(d.eigenvalues()[c + 2] < 0.5);
    const Region r = colorado();
    const auto k = std::sqrt(4 * std::numbers::pi * n2d / area(r));
    const auto e = solve_region_disk(r, k, 32, c + 4);
    CHECK(e.eigenvalues()[c - 3] > 0.5);
    CHECK(e.eigenvalues()[c + 2] < 0.5);
  }
}

TEST_CASE("whole-plane Gram on an extended grid") {
  const auto b = solve_region_disk(Region::disk({0, 0}, 1.0), 2 * std::sqrt(10.0), 32, 6);
  const GridSpec grid = GridSpec::covering({-40, 40, -40, 40}, 0.4);
  const Eigen::MatrixXd g = evaluate_g_many(b, 6, grid);
  const Eigen::MatrixXd gram = g.transpose() * g * grid.dx * grid.dy;
  CHECK((gram - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-2);
}
