#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "slepian/geometry.hpp"
#include "slepian/kernels.hpp"

namespace slepian {

/// The non-symmetric tridiagonal matrix whose eigenvectors are the expansion
/// coefficients d_l (l = 0..l_max) of the fixed-order functions.
Eigen::MatrixXd coeff_tridiagonal_matrix(int m, double c, int l_max);

struct CoeffPair {
  double chi;
  Eigen::VectorXd d;
};

/// Eigenpairs of coeff_tridiagonal_matrix sorted by ascending chi. The matrix
/// is diagonally similar to a symmetric tridiagonal one, which is what gets
/// diagonalized. d is scaled to unit Euclidean norm with d_0 >= 0.
std::vector<CoeffPair> coeff_tridiagonal(int m, double c, int l_max);

/// gamma = c^{m+1/2} d_0 / (2^{m+1} (m+1)! sum d) and lambda = c gamma^2.
/// Throws Numerical when |sum d| < 1e-14.
std::pair<double, double> gamma_lambda(std::span<const double> d, int m, double c);

/// Closed-form number of significant eigenvalues of order m.
double n2d_m(int m, double n2d);

/// Eigenvalues of the fixed-order radial problem by Nystrom quadrature on
/// `nodes` Gauss points in xi, descending.
std::vector<double> fixed_order_quadrature_eigs(int m, double n2d, int nodes);

/// c * gamma^2 for the eigenvalues gamma of the discretized square-root
/// operator with kernel J_m(c xi xi') sqrt(c xi xi'), descending.
std::vector<double> sqrt_operator_eigs(int m, double c, int nodes);
std::vector<double> sqrt_operator_eigs(HalfOrder order, double c, int nodes);

struct RadialBranch {
  double chi = 0.0;
  /// Expansion coefficients normalized to sum 1.
  Eigen::VectorXd d;
  double gamma = 0.0;
  double lambda_formula = 0.0;
  double lambda_quadrature = 0.0;
  /// lambda_formula, or lambda_quadrature when below 1e-3.
  double lambda = 0.0;
  /// int_0^infinity phi^2 d xi.
  double energy = 0.0;
};

struct FixedOrderSolution {
  int m = 0;
  double c = 0.0;
  double n2d = 0.0;
  int l_max = 0;
  /// Ordered by ascending chi, i.e. descending lambda.
  std::vector<RadialBranch> branches;
};

/// Solves order m at bandwidth c for the first `branches` branches.
/// l_max <= 0 selects max(84, ceil(2c) + 40); it grows until the kept
/// coefficient vectors decay below 1e-12 of their peak.
FixedOrderSolution solve_fixed_order(int m, double c, int branches, int l_max = 0);

/// Jacobi series, 0 <= xi <= 1.
double phi_space(const FixedOrderSolution& s, int branch, double xi);
/// Bessel series, any xi >= 0. Throws IllConditioned if |gamma| <= 1e-14.
double phi_bessel(const FixedOrderSolution& s, int branch, double xi);

struct DiskEntry {
  enum class Branch { Zonal, Cos, Sin };
  /// Signed order: negative for the cos member of a doublet, positive for sin.
  int m = 0;
  Branch branch = Branch::Zonal;
  /// Index into orders[|m|].branches.
  int radial = 0;
  double lambda = 0.0;
  double chi = 0.0;
  double gamma = 0.0;
};

struct DiskBasis {
  double n2d = 0.0;
  double K = 0.0;
  double R = 0.0;
  std::vector<FixedOrderSolution> orders;
  /// Mixed-order ranking, lambda descending.
  std::vector<DiskEntry> entries;
};

/// Mixed-order basis for a disk of radius R centred at the origin, bandlimit K.
DiskBasis assemble_disk_basis(double K, double R, int count);

/// Radial factor g(r), normalized so that 2 pi int_0^inf g^2 r dr = 1.
double disk_radial(const DiskBasis& basis, int entry, double r);

/// Full function value, including the sqrt(2) cos / sin angular factor.
double disk_value(const DiskBasis& basis, int entry, Point x);

}  // namespace slepian
