#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace slepian {

/// out = A * in for a symmetric operator A, column by column.
using BlockOperator = std::function<void(const Eigen::MatrixXd& in, Eigen::MatrixXd& out)>;

struct EigsOptions {
  int count = 1;
  std::uint64_t seed = 1;
  /// Residual bound ||A x - theta x|| <= tol max(1, |theta|).
  double tol = 1e-10;
  /// Block expansions before giving up; 0 means 10 count sqrt(n).
  int max_iterations = 0;
  /// Block width; 0 picks max(count + 2, 4).
  int block = 0;
};

struct EigsResult {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
  std::vector<double> residuals;
  int iterations = 0;
  long applications = 0;
};

/// Largest eigenpairs of a symmetric operator by thick-restarted block Krylov
/// expansion with Rayleigh-Ritz extraction. Start vectors come from a
/// mt19937_64 seeded with `seed`, so results are reproducible. Vectors are
/// unit norm with their largest entry positive. Throws Numerical with the
/// residuals on hitting the iteration cap.
EigsResult block_krylov_eigs(const BlockOperator& op, Eigen::Index n, const EigsOptions& options);

}  // namespace slepian
