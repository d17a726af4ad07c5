#include "slepian/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "slepian/error.hpp"

namespace slepian {
namespace {

// Orthogonalizes the columns of r against v and among themselves. Columns
// that collapse are dropped.
Eigen::MatrixXd orthonormalize_against(const Eigen::MatrixXd& v, Eigen::MatrixXd r) {
  for (int pass = 0; pass < 2; ++pass)
    if (v.cols() > 0) r -= v * (v.transpose() * r);
  Eigen::MatrixXd out(r.rows(), r.cols());
  Eigen::Index kept = 0;
  for (Eigen::Index c = 0; c < r.cols(); ++c) {
    Eigen::VectorXd x = r.col(c);
    const double before = x.norm();
    if (before == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      if (v.cols() > 0) x -= v * (v.transpose() * x);
      if (kept > 0) x -= out.leftCols(kept) * (out.leftCols(kept).transpose() * x);
    }
    const double after = x.norm();
    if (after <= 1e-10 * before) continue;
    out.col(kept++) = x / after;
  }
  return out.leftCols(kept);
}

Eigen::MatrixXd random_block(std::mt19937_64& rng, Eigen::Index n, Eigen::Index b) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd r(n, b);
  for (Eigen::Index c = 0; c < b; ++c)
    for (Eigen::Index i = 0; i < n; ++i) r(i, c) = u(rng);
  return r;
}

}  // namespace

EigsResult block_krylov_eigs(const BlockOperator& op, Eigen::Index n, const EigsOptions& opt) {
  require(n >= 1, ErrorCode::InvalidArgument, "block_krylov_eigs: empty operator");
  require(opt.count >= 1 && opt.count <= n, ErrorCode::InvalidArgument,
          "block_krylov_eigs: count must lie in [1, n]");
  require(opt.tol > 0, ErrorCode::InvalidArgument, "block_krylov_eigs: tolerance must be positive");
  const Eigen::Index count = opt.count;
  const Eigen::Index b = std::min<Eigen::Index>(n, opt.block > 0 ? opt.block : std::max<Eigen::Index>(count + 2, 4));
  const Eigen::Index mmax = std::min<Eigen::Index>(n, std::max<Eigen::Index>(count + 3 * b, 40));
  const Eigen::Index keep_max = std::max<Eigen::Index>(count, std::min(mmax - b, count + b));
  const long cap = opt.max_iterations > 0
                       ? opt.max_iterations
                       : static_cast<long>(std::ceil(10.0 * count * std::sqrt(static_cast<double>(n))));

  std::mt19937_64 rng(opt.seed);
  EigsResult res;
  Eigen::MatrixXd v = orthonormalize_against(Eigen::MatrixXd(n, 0), random_block(rng, n, b));
  Eigen::MatrixXd w(n, v.cols());
  op(v, w);
  res.applications += v.cols();

  Eigen::VectorXd theta;
  Eigen::MatrixXd x, ax;
  std::vector<double> resid;
  for (;;) {
    Eigen::MatrixXd h = v.transpose() * w;
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    require(es.info() == Eigen::Success, ErrorCode::Numerical, "block_krylov_eigs: Rayleigh-Ritz failed");
    // Descending order.
    const Eigen::Index m = v.cols();
    Eigen::MatrixXd y = es.eigenvectors().rowwise().reverse();
    theta = es.eigenvalues().reverse();
    x = v * y;
    ax = w * y;
    const Eigen::Index look = std::min(m, count + b);
    resid.assign(static_cast<std::size_t>(look), 0.0);
    bool done = m >= count;
    for (Eigen::Index k = 0; k < look; ++k) {
      resid[k] = (ax.col(k) - theta[k] * x.col(k)).norm();
      if (k < count && resid[k] > opt.tol * std::max(1.0, std::abs(theta[k]))) done = false;
    }
    if (done || m == n) break;
    if (res.iterations >= cap) {
      std::ostringstream msg;
      msg << "block_krylov_eigs: no convergence after " << res.iterations << " iterations; residuals:";
      for (Eigen::Index k = 0; k < std::min(count, m); ++k) msg << ' ' << resid[k];
      throw Error(ErrorCode::Numerical, msg.str());
    }
    ++res.iterations;

    // Expansion directions: residuals of the leading unconverged Ritz pairs.
    std::vector<Eigen::Index> pick;
    for (Eigen::Index k = 0; k < look && static_cast<Eigen::Index>(pick.size()) < b; ++k)
      if (resid[k] > opt.tol * std::max(1.0, std::abs(theta[k]))) pick.push_back(k);
    Eigen::MatrixXd r(n, static_cast<Eigen::Index>(pick.size()));
    for (std::size_t c = 0; c < pick.size(); ++c)
      r.col(static_cast<Eigen::Index>(c)) = ax.col(pick[c]) - theta[pick[c]] * x.col(pick[c]);
    if (r.cols() == 0) r = random_block(rng, n, 1);

    // Thick restart: keep the leading Ritz vectors when the basis is full.
    if (m + r.cols() > mmax) {
      const Eigen::Index keep = std::min(m, keep_max);
      v = x.leftCols(keep);
      w = ax.leftCols(keep);
      // Re-orthonormalize to stop drift of the kept basis.
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
      Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, keep);
      Eigen::MatrixXd rr = qr.matrixQR().topLeftCorner(keep, keep).triangularView<Eigen::Upper>();
      w = rr.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(w);
      v = q;
    }
    Eigen::Index room = std::min<Eigen::Index>(mmax, n) - v.cols();
    if (r.cols() > room) r = r.leftCols(room).eval();
    Eigen::MatrixXd add = orthonormalize_against(v, r);
    if (add.cols() == 0) add = orthonormalize_against(v, random_block(rng, n, std::max<Eigen::Index>(1, std::min<Eigen::Index>(room, b))));
    if (add.cols() == 0) break;  // the basis spans everything reachable
    Eigen::MatrixXd wadd(n, add.cols());
    op(add, wadd);
    res.applications += add.cols();
    v.conservativeResize(Eigen::NoChange, v.cols() + add.cols());
    v.rightCols(add.cols()) = add;
    w.conservativeResize(Eigen::NoChange, w.cols() + add.cols());
    w.rightCols(add.cols()) = wadd;
  }

  const Eigen::Index got = std::min<Eigen::Index>(count, theta.size());
  res.values.assign(theta.data(), theta.data() + got);
  res.vectors = x.leftCols(got);
  res.residuals.assign(resid.begin(), resid.begin() + got);
  for (Eigen::Index k = 0; k < got; ++k) {
    res.vectors.col(k).normalize();
    Eigen::Index arg;
    res.vectors.col(k).cwiseAbs().maxCoeff(&arg);
    if (res.vectors(arg, k) < 0) res.vectors.col(k) *= -1.0;
  }
  return res;
}

}  // namespace slepian
