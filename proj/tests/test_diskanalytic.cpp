#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slepian/diskanalytic.hpp"
#include "slepian/error.hpp"
#include "slepian/pswf1d.hpp"
#include "slepian/quadrature.hpp"
#include "slepian/specialfn.hpp"

using namespace slepian;

namespace {

const double kC42 = 2.0 * std::sqrt(42.0);

// The coefficient matrix written out from its entries.
Eigen::MatrixXd reference_matrix(int m, double c, int lmax) {
  const int n = lmax + 1;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l < n; ++l) {
    const double a = 2.0 * l + m;
    const double frac = (m == 0 && l == 0) ? 0.0 : double(m) * m / (a * (a + 2));
    t(l, l) = (a + 0.5) * (a + 1.5) + c * c / 2 * (1 + frac);
    if (l + 1 < n) {
      t(l + 1, l) = -c * c * std::pow(m + l + 1.0, 2) / ((a + 1) * (a + 2));
      t(l, l + 1) = -c * c * std::pow(l + 1.0, 2) / ((a + 2) * (a + 3));
    }
  }
  return t;
}

double norm01(const FixedOrderSolution& s, int b, const QuadratureRule1D& q) {
  double v = 0;
  for (std::size_t i = 0; i < q.size(); ++i) v += q.weights[i] * std::pow(phi_space(s, b, q.nodes[i]), 2);
  return std::sqrt(v);
}

}  // namespace

TEST_CASE("coefficient matrix entries") {
  for (int m : {0, 1, 3}) {
    const Eigen::MatrixXd a = coeff_tridiagonal_matrix(m, 5.5, 12);
    const Eigen::MatrixXd b = reference_matrix(m, 5.5, 12);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12 * b.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("zero-bandwidth limit") {
  for (int m : {0, 2}) {
    const auto pairs = coeff_tridiagonal(m, 1e-7, 30);
    for (int j = 0; j < 10; ++j) CHECK(pairs[j].chi == doctest::Approx((2.0 * j + m + 0.5) * (2.0 * j + m + 1.5)).epsilon(1e-10));
  }
}

TEST_CASE("chi ordering against a non-symmetric dense eigensolve") {
  const auto pairs = coeff_tridiagonal(0, kC42, 84);
  for (std::size_t j = 1; j < pairs.size(); ++j) CHECK(pairs[j].chi - pairs[j - 1].chi > 1e-6);

  Eigen::EigenSolver<Eigen::MatrixXd> es(reference_matrix(0, kC42, 84));
  std::vector<double> ref;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    CHECK(std::abs(es.eigenvalues()[i].imag()) < 1e-8);
    ref.push_back(es.eigenvalues()[i].real());
  }
  std::sort(ref.begin(), ref.end());
  for (int j = 0; j < 20; ++j) CHECK(pairs[j].chi == doctest::Approx(ref[j]).epsilon(1e-10));

  // Eigenvector direction agrees with the dense solver.
  const Eigen::MatrixXd t = reference_matrix(0, kC42, 84);
  for (int j = 0; j < 8; ++j) {
    const Eigen::VectorXd r = t * pairs[j].d - pairs[j].chi * pairs[j].d;
    CHECK(r.norm() < 1e-9 * pairs[j].chi);
  }
}

TEST_CASE("coefficient decay at l = 84") {
  const auto pairs = coeff_tridiagonal(0, kC42, 84);
  for (int j = 0; j < 8; ++j) {
    const auto& d = pairs[j].d;
    CHECK(std::abs(d[84]) / d.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fixed-order solution invariants") {
  for (int m : {0, 1, 5, 12}) {
    const auto s = solve_fixed_order(m, kC42, 8);
    REQUIRE(s.branches.size() == 8);
    for (std::size_t b = 0; b < s.branches.size(); ++b) {
      const auto& br = s.branches[b];
      CHECK(br.d.sum() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(br.lambda_formula == doctest::Approx(2 * br.gamma * br.gamma * std::sqrt(42.0)).epsilon(1e-10));
      CHECK(br.lambda > 0.0);
      CHECK(br.lambda < 1.0);
      if (b > 0) CHECK(br.lambda < s.branches[b - 1].lambda);
      if (b > 0) CHECK(br.chi > s.branches[b - 1].chi);
    }
  }
}

TEST_CASE("gamma_lambda") {
  const auto s = solve_fixed_order(0, kC42, 1);
  const auto& d = s.branches[0].d;
  const auto [g, l] = gamma_lambda(std::span<const double>(d.data(), d.size()), 0, kC42);
  CHECK(g == doctest::Approx(std::pow(kC42, 0.5) * d[0] / (2.0 * 1.0 * d.sum())).epsilon(1e-12));
  CHECK(l == doctest::Approx(kC42 * g * g).epsilon(1e-14));
  CHECK(std::abs(s.branches[0].lambda_formula - s.branches[0].lambda_quadrature) < 1e-6);
  std::vector<double> zero{1.0, -1.0};
  CHECK_THROWS_AS(gamma_lambda(zero, 0, 3.0), Error);
}

TEST_CASE("phi_space and phi_bessel") {
  const auto s = solve_fixed_order(0, kC42, 4);
  const auto s3 = solve_fixed_order(3, kC42, 3);
  for (int b = 0; b < 4; ++b) {
    CHECK(phi_space(s, b, 0.0) == 0.0);
    CHECK(std::abs(phi_bessel(s, b, 1e-9)) < 1e-3);
  }
  for (const auto* sol : {&s, &s3})
    for (int b = 0; b < 3; ++b) {
      const double scale = std::abs(phi_space(*sol, b, 0.5)) + std::abs(phi_space(*sol, b, 0.9)) + 1e-300;
      double worst = 0;
      for (double x = 0.01; x <= 1.0; x += 0.0137) worst = std::max(worst, std::abs(phi_space(*sol, b, x) - phi_bessel(*sol, b, x)));
      CHECK(worst / scale < 1e-8);
    }
  for (int b = 0; b < 4; ++b)
    if (s.branches[b].lambda > 0.9) CHECK(std::abs(phi_bessel(s, b, 5.0)) < std::abs(phi_bessel(s, b, 1.0)));
}

TEST_CASE("orthogonality on [0, 1]") {
  const auto q = gauss_legendre(200, 0.0, 1.0);
  for (int m : {0, 2}) {
    const auto s = solve_fixed_order(m, kC42, 6);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        double ip = 0;
        for (std::size_t i = 0; i < q.size(); ++i) ip += q.weights[i] * phi_space(s, a, q.nodes[i]) * phi_space(s, b, q.nodes[i]);
        CHECK(std::abs(ip) / (norm01(s, a, q) * norm01(s, b, q)) < 1e-8);
      }
  }
}

TEST_CASE("formula and quadrature eigenvalues") {
  for (int m : {0, 1, 4}) {
    const auto s = solve_fixed_order(m, kC42, 10);
    for (const auto& br : s.branches)
      if (br.lambda_formula > 1e-3) CHECK(std::abs(br.lambda_formula - br.lambda_quadrature) < 1e-6);
  }
}

TEST_CASE("n2d_m") {
  for (int m = 0; m < 6; ++m) CHECK(n2d_m(m, 0.0) == 0.0);
  double total = n2d_m(0, 42.0);
  for (int m = 1; m <= 60; ++m) total += 2 * n2d_m(m, 42.0);
  CHECK(std::abs(total - 42.0) < 1e-8);

  // 4 N int_0^1 int_0^1 J_0^2(c p xi) p dp xi dxi by double Gauss-Legendre.
  const auto q = gauss_legendre(120, 0.0, 1.0);
  for (int m : {0, 3}) {
    double s = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) {
        const double jm = oracle::bessel_series(m, kC42 * q.nodes[i] * q.nodes[j]);
        s += q.weights[i] * q.weights[j] * jm * jm * q.nodes[i] * q.nodes[j];
      }
    CHECK(std::abs(n2d_m(m, 42.0) - 4 * 42.0 * s) < 1e-8);
  }
}

TEST_CASE("per-order eigenvalue sums") {
  for (int m : {0, 1, 3, 7, 10}) {
    const auto l = fixed_order_quadrature_eigs(m, 42.0, 80);
    double s = 0;
    for (double v : l) s += v;
    CHECK(std::abs(s - n2d_m(m, 42.0)) < 1e-4);
  }
}

TEST_CASE("square-root operator consistency") {
  for (int m : {0, 2, 6}) {
    const auto a = sqrt_operator_eigs(m, kC42, 80);
    const auto b = fixed_order_quadrature_eigs(m, 42.0, 80);
    for (int i = 0; i < 10; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8);
  }
}

TEST_CASE("half-order reduction matches the parity split of the 1D problem") {
  for (double c : {2.0, kC42 / 2, 9.0}) {
    const auto one = solve_1d(c, 128, 16);
    const auto& x = one.solution.rule.nodes;
    const int n = static_cast<int>(x.size());
    std::vector<double> even, odd;
    for (int a = 0; a < 16; ++a) {
      // Classify by the samples, not by rank.
      double sym = 0, anti = 0;
      for (int j = 0; j < n; ++j) {
        sym += std::abs(one.solution.node_samples(j, a) - one.solution.node_samples(n - 1 - j, a));
        anti += std::abs(one.solution.node_samples(j, a) + one.solution.node_samples(n - 1 - j, a));
      }
      (sym < anti ? even : odd).push_back(one.eigenvalues()[a]);
    }
    const auto plus = sqrt_operator_eigs(HalfOrder::Plus, c, 96);
    const auto minus = sqrt_operator_eigs(HalfOrder::Minus, c, 96);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(std::abs(plus[i] - odd[i]) < 1e-8);
      CHECK(std::abs(minus[i] - even[i]) < 1e-8);
    }
  }
}

TEST_CASE("disk basis invariants") {
  const double K = kC42;
  const auto basis = assemble_disk_basis(K, 1.0, 60);
  CHECK(basis.K * basis.K * basis.R * basis.R / 4 == doctest::Approx(basis.n2d).epsilon(1e-12));
  CHECK(basis.n2d == doctest::Approx(42.0).epsilon(1e-12));
  REQUIRE(basis.entries.size() == 60);
  for (std::size_t i = 1; i < basis.entries.size(); ++i) CHECK(basis.entries[i].lambda <= basis.entries[i - 1].lambda);
  for (std::size_t i = 0; i < basis.entries.size(); ++i) {
    const auto& e = basis.entries[i];
    if (e.m == 0) {
      CHECK(e.branch == DiskEntry::Branch::Zonal);
      continue;
    }
    if (e.branch == DiskEntry::Branch::Cos) {
      CHECK(e.m < 0);
      if (i + 1 < basis.entries.size()) {
        const auto& f = basis.entries[i + 1];
        CHECK(f.branch == DiskEntry::Branch::Sin);
        CHECK(f.m == -e.m);
        CHECK(f.lambda == e.lambda);
      }
    } else {
      CHECK(e.m > 0);
      REQUIRE(i > 0);
      CHECK(basis.entries[i - 1].branch == DiskEntry::Branch::Cos);
    }
  }
  for (int i = 0; i < 30; ++i) {
    CHECK(basis.entries[i].lambda < 1.0);
    CHECK(basis.entries[i].lambda >= 0.8983 - 1e-3);
  }
}

TEST_CASE("radial normalization and concentration") {
  const auto basis = assemble_disk_basis(kC42, 1.0, 12);
  const auto inner = gauss_legendre(160, 0.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    double e = 0;
    for (std::size_t k = 0; k < inner.size(); ++k) e += inner.weights[k] * std::pow(disk_radial(basis, i, inner.nodes[k]), 2) * inner.nodes[k];
    CHECK(2 * std::numbers::pi * e == doctest::Approx(basis.entries[i].lambda).epsilon(1e-8));
  }
  // Angular factor.
  for (int i = 0; i < 12; ++i) {
    const auto& e = basis.entries[i];
    const double r = 0.37, th = 0.9;
    const double ang = e.m == 0 ? 1.0 : std::sqrt(2.0) * (e.m < 0 ? std::cos(-e.m * th) : std::sin(e.m * th));
    CHECK(disk_value(basis, i, {r * std::cos(th), r * std::sin(th)}) == doctest::Approx(ang * disk_radial(basis, i, r)).epsilon(1e-12).scale(1e-14));
  }
}

TEST_CASE("zonal radial zero counts") {
  const auto basis = assemble_disk_basis(kC42, 1.0, 60);
  std::vector<int> zonal;
  for (std::size_t i = 0; i < basis.entries.size(); ++i)
    if (basis.entries[i].m == 0) zonal.push_back(static_cast<int>(i));
  REQUIRE(zonal.size() >= 2);
  for (int k = 0; k < 2; ++k) {
    int changes = 0;
    double prev = disk_radial(basis, zonal[k], 1e-4);
    for (double r = 0.002; r < 1.0; r += 0.002) {
      const double v = disk_radial(basis, zonal[k], r);
      if ((v < 0) != (prev < 0)) ++changes;
      prev = v;
    }
    CHECK(changes == k);
  }
}

TEST_CASE("scale invariance") {
  const double K = 7.3, R = 1.6;
  const auto a = assemble_disk_basis(K, R, 40);
  const auto b = assemble_disk_basis(2 * K, R / 2, 40);
  for (int i = 0; i < 40; ++i) CHECK(std::abs(a.entries[i].lambda - b.entries[i].lambda) < 1e-10);
}

TEST_CASE("step-shaped spectrum") {
  for (double n2d : {3.0, 11.0, 24.0, 42.0}) {
    const auto basis = assemble_disk_basis(2 * std::sqrt(n2d), 1.0, static_cast<int>(3 * n2d) + 20);
    int big = 0;
    for (const auto& e : basis.entries) big += e.lambda >= 0.5;
    CHECK(std::abs(big - std::lround(n2d)) <= 3);
  }
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(assemble_disk_basis(-1.0, 1.0, 5), Error);
  CHECK_THROWS_AS(assemble_disk_basis(1.0, 0.0, 5), Error);
}
