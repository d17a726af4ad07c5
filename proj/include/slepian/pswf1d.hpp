#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slepian/fredholm.hpp"

namespace slepian {

/// Prolate spheroidal functions of the scaled interval problem on [-1, 1]
/// with kernel sin(TW (x - x')) / (pi (x - x')).
struct Basis1D {
  double tw = 0.0;
  double shannon = 0.0;
  /// Node samples scaled so that the quadrature of psi_a^2 over [-1, 1]
  /// equals lambda_a (unit norm on the whole line).
  NystromSolution solution;

  const std::vector<double>& eigenvalues() const { return solution.eigenvalues; }
  std::size_t count() const { return solution.count(); }
};

/// 2TW/pi.
double shannon_1d(double T, double W);

/// Nystrom solution on n_nodes Gauss-Legendre points; count <= 0 keeps all.
Basis1D solve_1d(double tw, int n_nodes = 128, int count = 0);

/// psi_index at any x (Nystrom extension).
double evaluate_1d(const Basis1D& basis, int index, double x);

/// Discrete prolate spheroidal sequences.
struct DpssSet {
  int N = 0;
  double W = 0.0;
  /// Unit-norm sequences as columns, ordered by descending chi.
  Eigen::MatrixXd sequences;
  std::vector<double> chi;
  std::vector<double> lambda;
};

/// Sequences from the symmetric tridiagonal matrix with diagonal
/// ((N-1-2x)/2)^2 cos(2 pi W) and off-diagonal (x+1)(N-x-1)/2; lambda is the
/// Rayleigh quotient of the discrete concentration matrix. Even sequences
/// have positive sum, odd ones a positive first moment about the midpoint.
DpssSet dpss(int N, double W, int count);

/// Entries sin(2 pi W (i-j)) / (pi (i-j)), 2W on the diagonal.
Eigen::MatrixXd dpss_concentration_matrix(int N, double W);

}  // namespace slepian
