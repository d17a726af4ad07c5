#include "slepian/diskanalytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slepian/error.hpp"
#include "slepian/quadrature.hpp"
#include "slepian/specialfn.hpp"

namespace slepian {
namespace {

// m^2 / ((2l+m)(2l+m+2)), with the l = m = 0 entry taken as its limit 0.
double diag_ratio(int m, int l) {
  if (m == 0) return 0.0;
  return static_cast<double>(m) * m / ((2.0 * l + m) * (2.0 * l + m + 2.0));
}

double t_diag(int m, int l, double c) {
  return (2.0 * l + m + 0.5) * (2.0 * l + m + 1.5) + 0.5 * c * c * (1.0 + diag_ratio(m, l));
}
double t_lower(int m, int l, double c) {  // T_{l+1, l}
  return -c * c * (m + l + 1.0) * (m + l + 1.0) / ((2.0 * l + m + 1.0) * (2.0 * l + m + 2.0));
}
double t_upper(int m, int l, double c) {  // T_{l, l+1}
  return -c * c * (l + 1.0) * (l + 1.0) / ((2.0 * l + m + 2.0) * (2.0 * l + m + 3.0));
}

// a_l = d_l m! l! / (l+m)!
Eigen::VectorXd series_weights(const Eigen::VectorXd& d, int m) {
  Eigen::VectorXd a(d.size());
  double r = 1.0;
  for (Eigen::Index l = 0; l < d.size(); ++l) {
    if (l > 0) r *= static_cast<double>(l) / (l + m);
    a[l] = d[l] * r;
  }
  return a;
}

// xi^m sum_l a_l P_l^{(m,0)}(1 - 2 xi^2)
double psi_space(const Eigen::VectorXd& a, int m, double xi) {
  const double x = 1.0 - 2.0 * xi * xi;
  const double am = m;
  double p0 = 1.0;
  double p1 = (am + 1.0) + (am + 2.0) * (x - 1.0) / 2.0;
  double s = a[0] * p0;
  if (a.size() > 1) s += a[1] * p1;
  for (Eigen::Index n = 2; n < a.size(); ++n) {
    const double sn = 2.0 * n + am;
    const double p2 = ((sn - 1.0) * (sn * (sn - 2.0) * x + am * am) * p1 -
                       2.0 * (n + am - 1.0) * (n - 1.0) * sn * p0) /
                      (2.0 * n * (n + am) * (sn - 2.0));
    p0 = p1;
    p1 = p2;
    s += a[n] * p1;
  }
  return std::pow(xi, m) * s;
}

double bessel_series(const Eigen::VectorXd& a, int m, double c, double xi) {
  if (xi == 0.0) return 0.0;
  const double z = c * xi;
  const int top = m + 2 * static_cast<int>(a.size() - 1) + 1;
  const std::vector<double> j = bessel_j_sequence(top, z);
  double s = 0.0;
  for (Eigen::Index l = 0; l < a.size(); ++l) s += a[l] * j[m + 2 * l + 1];
  return s / std::sqrt(z);
}

int default_lmax(double c) { return std::max(84, static_cast<int>(std::ceil(2.0 * c)) + 40); }

}  // namespace

Eigen::MatrixXd coeff_tridiagonal_matrix(int m, double c, int l_max) {
  require(m >= 0 && c > 0 && l_max >= 0, ErrorCode::InvalidArgument,
          "coeff_tridiagonal: need m >= 0, c > 0, l_max >= 0");
  const int n = l_max + 1;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l < n; ++l) {
    t(l, l) = t_diag(m, l, c);
    if (l + 1 < n) {
      t(l + 1, l) = t_lower(m, l, c);
      t(l, l + 1) = t_upper(m, l, c);
    }
  }
  return t;
}

std::vector<CoeffPair> coeff_tridiagonal(int m, double c, int l_max) {
  require(m >= 0 && c > 0 && l_max >= 1, ErrorCode::InvalidArgument,
          "coeff_tridiagonal: need m >= 0, c > 0, l_max >= 1");
  const int n = l_max + 1;
  Eigen::VectorXd diag(n), off(n - 1), scale(n);
  scale[0] = 1.0;
  for (int l = 0; l < n; ++l) {
    diag[l] = t_diag(m, l, c);
    if (l + 1 < n) {
      const double lo = t_lower(m, l, c), up = t_upper(m, l, c);
      off[l] = -std::sqrt(lo * up);
      scale[l + 1] = scale[l] * std::sqrt(up / lo);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::Numerical, "coeff_tridiagonal: eigensolver failed for m = " + std::to_string(m));
  std::vector<CoeffPair> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    Eigen::VectorXd d = es.eigenvectors().col(k).cwiseQuotient(scale);
    d /= d.norm();
    if (d[0] < 0) d = -d;
    out.push_back({es.eigenvalues()[k], std::move(d)});
  }
  return out;
}

std::pair<double, double> gamma_lambda(std::span<const double> d, int m, double c) {
  require(!d.empty(), ErrorCode::InvalidArgument, "gamma_lambda: empty coefficient vector");
  double sum = 0.0;
  for (double v : d) sum += v;
  if (std::abs(sum) < 1e-14)
    throw Error(ErrorCode::Numerical, "gamma_lambda: coefficient sum vanishes (degenerate normalization)");
  const double log_pref = (m + 0.5) * std::log(c) - (m + 1.0) * std::numbers::ln2 - std::lgamma(m + 2.0);
  const double gamma = std::exp(log_pref) * d[0] / sum;
  return {gamma, c * gamma * gamma};
}

double n2d_m(int m, double n2d) {
  require(m >= 0 && n2d >= 0, ErrorCode::InvalidArgument, "n2d_m: need m >= 0, N2D >= 0");
  const double sq = std::sqrt(n2d);
  const double a = 2.0 * sq;
  const std::vector<double> j = bessel_j_sequence(m + 1, a);
  double bracket = 1.0 - j[0] * j[0];
  for (int n = 1; n <= m; ++n) bracket -= 2.0 * j[n] * j[n];
  return 2.0 * n2d * (j[m] * j[m] + j[m + 1] * j[m + 1]) - (2.0 * m + 1.0) * sq * j[m] * j[m + 1] -
         0.5 * m * bracket;
}

std::vector<double> fixed_order_quadrature_eigs(int m, double n2d, int nodes) {
  require(m >= 0 && n2d > 0 && nodes >= 1, ErrorCode::InvalidArgument,
          "fixed_order_quadrature_eigs: need m >= 0, N2D > 0, nodes >= 1");
  const double c = 2.0 * std::sqrt(n2d);
  const QuadratureRule1D xi = gauss_legendre(nodes, 0.0, 1.0);
  const QuadratureRule1D p = gauss_legendre(static_cast<int>(std::ceil(4.0 * std::sqrt(n2d))) + 32, 0.0, 1.0);
  // sqrt(w_i xi_i) D(xi_i, xi_j) sqrt(w_j xi_j) = B B^T
  Eigen::MatrixXd b(nodes, static_cast<Eigen::Index>(p.size()));
  for (int i = 0; i < nodes; ++i) {
    const double left = c * std::sqrt(xi.weights[i] * xi.nodes[i]);
    for (std::size_t k = 0; k < p.size(); ++k)
      b(i, static_cast<Eigen::Index>(k)) =
          left * std::sqrt(p.weights[k] * p.nodes[k]) * bessel_j(m, c * p.nodes[k] * xi.nodes[i]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    out.push_back(svd.singularValues()[k] * svd.singularValues()[k]);
  return out;
}

namespace {

template <class KernelFn>
std::vector<double> sqrt_eigs_impl(double c, int nodes, KernelFn&& kern) {
  require(c > 0 && nodes >= 1, ErrorCode::InvalidArgument, "sqrt_operator_eigs: need c > 0, nodes >= 1");
  const QuadratureRule1D xi = gauss_legendre(nodes, 0.0, 1.0);
  Eigen::MatrixXd s(nodes, nodes);
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j <= i; ++j)
      s(i, j) = s(j, i) = std::sqrt(xi.weights[i] * xi.weights[j]) * kern(xi.nodes[i], xi.nodes[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, ErrorCode::Numerical, "sqrt_operator_eigs: eigensolver failed");
  std::vector<double> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    out.push_back(c * es.eigenvalues()[k] * es.eigenvalues()[k]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

std::vector<double> sqrt_operator_eigs(int m, double c, int nodes) {
  return sqrt_eigs_impl(c, nodes, [&](double a, double b) { return sqrt_kernel(m, c, a, b); });
}

std::vector<double> sqrt_operator_eigs(HalfOrder order, double c, int nodes) {
  return sqrt_eigs_impl(c, nodes, [&](double a, double b) { return sqrt_kernel_half(order, c, a, b); });
}

FixedOrderSolution solve_fixed_order(int m, double c, int branches, int l_max) {
  require(m >= 0 && c > 0 && branches >= 1, ErrorCode::InvalidArgument,
          "solve_fixed_order: need m >= 0, c > 0, branches >= 1");
  int lm = l_max > 0 ? l_max : default_lmax(c);
  lm = std::max(lm, 2 * branches + 8);
  std::vector<CoeffPair> pairs;
  for (;;) {
    pairs = coeff_tridiagonal(m, c, lm);
    bool converged = true;
    for (int k = 0; k < branches && converged; ++k) {
      const Eigen::VectorXd& d = pairs[k].d;
      converged = std::abs(d[d.size() - 1]) < 1e-12 * d.cwiseAbs().maxCoeff();
    }
    if (converged) break;
    if (lm > 4000)
      throw Error(ErrorCode::Numerical, "solve_fixed_order: coefficients did not decay by l = 4000");
    lm += 40;
  }

  FixedOrderSolution s;
  s.m = m;
  s.c = c;
  s.n2d = c * c / 4.0;
  s.l_max = lm;
  const int nq = std::max(64, static_cast<int>(std::ceil(2.0 * c)) + 48);
  const std::vector<double> quad = fixed_order_quadrature_eigs(m, s.n2d, nq);
  const QuadratureRule1D unit = gauss_legendre(std::max(80, static_cast<int>(std::ceil(3.0 * c)) + 60), 0.0, 1.0);

  for (int k = 0; k < branches; ++k) {
    RadialBranch br;
    br.chi = pairs[k].chi;
    br.d = pairs[k].d;
    br.lambda_quadrature = k < static_cast<int>(quad.size()) ? quad[k] : 0.0;
    const double sum = br.d.sum();
    bool formula_ok = std::abs(sum) >= 1e-14;
    if (formula_ok) {
      br.d /= sum;
      std::tie(br.gamma, br.lambda_formula) =
          gamma_lambda(std::span<const double>(br.d.data(), br.d.size()), m, c);
    } else {
      br.gamma = 0.0;
      br.lambda_formula = std::numeric_limits<double>::quiet_NaN();
    }
    br.lambda = (formula_ok && br.lambda_formula >= 1e-3) ? br.lambda_formula : br.lambda_quadrature;

    const Eigen::VectorXd a = series_weights(br.d, m);
    if (formula_ok && br.lambda_formula >= 1e-3) {
      double e = 0.0;
      for (Eigen::Index l = 0; l < a.size(); ++l) e += a[l] * a[l] / (2.0 * c * (m + 2.0 * l + 1.0));
      br.energy = e / (br.gamma * br.gamma);
    } else {
      double inside = 0.0;
      for (std::size_t q = 0; q < unit.size(); ++q) {
        const double xi = unit.nodes[q];
        const double ps = psi_space(a, m, xi);
        inside += unit.weights[q] * xi * ps * ps;
      }
      br.energy = br.lambda > 0 ? inside / br.lambda : std::numeric_limits<double>::infinity();
    }
    s.branches.push_back(std::move(br));
  }
  return s;
}

double phi_space(const FixedOrderSolution& s, int branch, double xi) {
  require(branch >= 0 && branch < static_cast<int>(s.branches.size()), ErrorCode::InvalidArgument,
          "phi_space: branch out of range");
  require(xi >= 0.0, ErrorCode::InvalidArgument, "phi_space: xi must be non-negative");
  if (xi == 0.0) return 0.0;
  return std::sqrt(xi) * psi_space(series_weights(s.branches[branch].d, s.m), s.m, xi);
}

double phi_bessel(const FixedOrderSolution& s, int branch, double xi) {
  require(branch >= 0 && branch < static_cast<int>(s.branches.size()), ErrorCode::InvalidArgument,
          "phi_bessel: branch out of range");
  require(xi >= 0.0, ErrorCode::InvalidArgument, "phi_bessel: xi must be non-negative");
  const RadialBranch& br = s.branches[branch];
  if (!(std::abs(br.gamma) > 1e-14))
    throw Error(ErrorCode::IllConditioned, "phi_bessel: gamma too small for the Bessel series");
  return bessel_series(series_weights(br.d, s.m), s.m, s.c, xi) / br.gamma;
}

DiskBasis assemble_disk_basis(double K, double R, int count) {
  require(K > 0 && R > 0 && std::isfinite(K) && std::isfinite(R), ErrorCode::InvalidArgument,
          "assemble_disk_basis: K and R must be positive");
  DiskBasis basis;
  basis.K = K;
  basis.R = R;
  basis.n2d = K * K * R * R / 4.0;
  const double c = K * R;
  const int nq = std::max(64, static_cast<int>(std::ceil(2.0 * c)) + 48);

  for (int m = 0;; ++m) {
    const std::vector<double> quad = fixed_order_quadrature_eigs(m, basis.n2d, nq);
    const double best = quad.empty() ? 0.0 : quad.front();
    int keep = 0;
    while (keep < static_cast<int>(quad.size()) && quad[keep] > 1e-8) ++keep;
    keep = std::max(keep, 1);
    basis.orders.push_back(solve_fixed_order(m, c, keep));
    if (n2d_m(m, basis.n2d) < 1e-3 && best < 1e-6) break;
    if (m > 10000) throw Error(ErrorCode::Numerical, "assemble_disk_basis: order loop did not terminate");
  }

  for (const FixedOrderSolution& fo : basis.orders) {
    for (int k = 0; k < static_cast<int>(fo.branches.size()); ++k) {
      const RadialBranch& br = fo.branches[k];
      if (!(br.lambda > 0)) continue;
      DiskEntry e;
      e.radial = k;
      e.lambda = br.lambda;
      e.chi = br.chi;
      e.gamma = br.gamma;
      if (fo.m == 0) {
        e.m = 0;
        e.branch = DiskEntry::Branch::Zonal;
        basis.entries.push_back(e);
      } else {
        e.m = -fo.m;
        e.branch = DiskEntry::Branch::Cos;
        basis.entries.push_back(e);
        e.m = fo.m;
        e.branch = DiskEntry::Branch::Sin;
        basis.entries.push_back(e);
      }
    }
  }
  std::stable_sort(basis.entries.begin(), basis.entries.end(), [](const DiskEntry& a, const DiskEntry& b) {
    if (a.lambda != b.lambda) return a.lambda > b.lambda;
    if (std::abs(a.m) != std::abs(b.m)) return std::abs(a.m) < std::abs(b.m);
    return a.m < b.m;  // cos (negative) before sin
  });
  if (count > 0 && static_cast<std::size_t>(count) < basis.entries.size()) basis.entries.resize(count);
  return basis;
}

double disk_radial(const DiskBasis& basis, int entry, double r) {
  require(entry >= 0 && entry < static_cast<int>(basis.entries.size()), ErrorCode::InvalidArgument,
          "disk_radial: entry out of range");
  require(r >= 0, ErrorCode::InvalidArgument, "disk_radial: r must be non-negative");
  const DiskEntry& e = basis.entries[entry];
  const FixedOrderSolution& fo = basis.orders[std::abs(e.m)];
  const RadialBranch& br = fo.branches[e.radial];
  const double xi = r / basis.R;
  double psi;
  if (xi <= 1.0) {
    psi = psi_space(series_weights(br.d, fo.m), fo.m, xi);
  } else {
    psi = phi_bessel(fo, e.radial, xi) / std::sqrt(xi);
  }
  return psi / (basis.R * std::sqrt(2.0 * std::numbers::pi * br.energy));
}

double disk_value(const DiskBasis& basis, int entry, Point x) {
  const double r = std::hypot(x.x, x.y);
  const double g = disk_radial(basis, entry, r);
  const DiskEntry& e = basis.entries[entry];
  if (e.branch == DiskEntry::Branch::Zonal) return g;
  const double theta = std::atan2(x.y, x.x);
  const int m = std::abs(e.m);
  return std::numbers::sqrt2 * g * (e.branch == DiskEntry::Branch::Cos ? std::cos(m * theta) : std::sin(m * theta));
}

}  // namespace slepian
