#include "slepian/pswf1d.hpp"

#include <cmath>
#include <numbers>

#include "slepian/error.hpp"
#include "slepian/kernels.hpp"

namespace slepian {

double shannon_1d(double T, double W) {
  require(T > 0 && W > 0, ErrorCode::InvalidArgument, "shannon_1d: T and W must be positive");
  return 2.0 * T * W / std::numbers::pi;
}

Basis1D solve_1d(double tw, int n_nodes, int count) {
  require(tw > 0 && std::isfinite(tw), ErrorCode::InvalidArgument, "solve_1d: TW must be positive");
  require(n_nodes >= 1, ErrorCode::InvalidArgument, "solve_1d: need at least one node");
  const KernelSpec k = KernelSpec::sinc1d(tw);
  Basis1D b;
  b.tw = tw;
  b.shannon = 2.0 * tw / std::numbers::pi;
  b.solution = nystrom_eigs(k, as_node_rule(gauss_legendre(n_nodes)), count);
  for (std::size_t a = 0; a < b.solution.count(); ++a) {
    const double lam = b.solution.eigenvalues[a];
    b.solution.node_samples.col(static_cast<Eigen::Index>(a)) *= std::sqrt(std::max(lam, 0.0));
  }
  return b;
}

double evaluate_1d(const Basis1D& basis, int index, double x) {
  return nystrom_extend(KernelSpec::sinc1d(basis.tw), basis.solution, index, {x, 0.0});
}

Eigen::MatrixXd dpss_concentration_matrix(int N, double W) {
  Eigen::MatrixXd c(N, N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const int d = i - j;
      c(i, j) = d == 0 ? 2.0 * W : std::sin(2.0 * std::numbers::pi * W * d) / (std::numbers::pi * d);
    }
  }
  return c;
}

DpssSet dpss(int N, double W, int count) {
  require(N >= 2, ErrorCode::InvalidArgument, "dpss: N must be >= 2");
  require(W > 0 && W < 0.5, ErrorCode::InvalidArgument, "dpss: W must lie in (0, 1/2)");
  require(count >= 1 && count <= N, ErrorCode::InvalidArgument, "dpss: count must lie in [1, N]");
  Eigen::VectorXd diag(N), off(N - 1);
  const double cw = std::cos(2.0 * std::numbers::pi * W);
  for (int x = 0; x < N; ++x) {
    const double h = (N - 1 - 2.0 * x) / 2.0;
    diag[x] = h * h * cw;
    if (x + 1 < N) off[x] = (x + 1.0) * (N - x - 1.0) / 2.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  require(es.info() == Eigen::Success, ErrorCode::Numerical, "dpss: tridiagonal eigensolve failed");

  const Eigen::MatrixXd conc = dpss_concentration_matrix(N, W);
  DpssSet set;
  set.N = N;
  set.W = W;
  set.sequences.resize(N, count);
  for (int k = 0; k < count; ++k) {
    const Eigen::Index src = N - 1 - k;  // ascending from the solver
    Eigen::VectorXd v = es.eigenvectors().col(src);
    double ref = 0.0;
    if (k % 2 == 0) {
      ref = v.sum();
    } else {
      for (int i = 0; i < N; ++i) ref += (N - 1 - 2.0 * i) * v[i];
    }
    if (ref < 0) v = -v;
    set.sequences.col(k) = v;
    set.chi.push_back(es.eigenvalues()[src]);
    set.lambda.push_back(v.dot(conc * v));
  }
  return set;
}

}  // namespace slepian
