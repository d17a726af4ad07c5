#include "slepian/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "slepian/error.hpp"
#include "slepian/parallel.hpp"

namespace slepian {

RegionQuadrature as_node_rule(const QuadratureRule1D& rule) {
  RegionQuadrature q;
  q.nodes.reserve(rule.size());
  for (double x : rule.nodes) q.nodes.push_back({x, 0.0});
  q.weights = rule.weights;
  return q;
}

namespace {

Eigen::Index argmax_abs(const Eigen::VectorXd& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  return k;
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> v, Eigen::Index anchor) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return;
  double ref = v[anchor];
  if (std::abs(ref) <= 1e-12 * scale) {
    ref = 0.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (std::abs(v[j]) > 1e-8 * scale) {
        ref = v[j];
        break;
      }
    }
  }
  if (ref < 0) v = -v;
}

}  // namespace

NystromSolution nystrom_eigs(const Kernel& kernel, const RegionQuadrature& rule, int count) {
  const auto n = static_cast<Eigen::Index>(rule.size());
  require(n > 0, ErrorCode::InvalidArgument, "nystrom_eigs: empty quadrature rule");
  require(rule.weights.size() == rule.nodes.size(), ErrorCode::InvalidArgument,
          "nystrom_eigs: node/weight size mismatch");
  Eigen::VectorXd sw(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = rule.weights[i];
    require(w > 0 && std::isfinite(w), ErrorCode::InvalidArgument,
            "nystrom_eigs: quadrature weight " + std::to_string(i) + " is not positive");
    sw[i] = std::sqrt(w);
  }

  Eigen::MatrixXd a(n, n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = sw[i] * kernel(rule.nodes[i], rule.nodes[j]) * sw[j];
  });
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) a(i, j) = a(j, i);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::Numerical,
                "nystrom_eigs: dense symmetric eigensolver failed on a " + std::to_string(n) +
                    "x" + std::to_string(n) + " matrix");
  }
  const Eigen::VectorXd& vals = es.eigenvalues();
  const Eigen::MatrixXd& vecs = es.eigenvectors();

  // Descending, then ties resolved by the position of the dominant sample.
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  std::vector<Eigen::Index> peak(n);
  for (Eigen::Index k = 0; k < n; ++k) peak[k] = argmax_abs(vecs.col(k));
  for (Eigen::Index s = 0; s < n;) {
    Eigen::Index e = s + 1;
    while (e < n && std::abs(vals[order[e]] - vals[order[s]]) <=
                        1e-12 * std::max(1.0, std::abs(vals[order[s]])))
      ++e;
    std::stable_sort(order.begin() + s, order.begin() + e,
                     [&](Eigen::Index l, Eigen::Index r) { return peak[l] < peak[r]; });
    s = e;
  }

  const Eigen::Index keep = (count <= 0) ? n : std::min<Eigen::Index>(count, n);

  // Anchor: node nearest the weighted centroid of the nodes.
  double cx = 0.0, cy = 0.0, wsum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    cx += rule.weights[i] * rule.nodes[i].x;
    cy += rule.weights[i] * rule.nodes[i].y;
    wsum += rule.weights[i];
  }
  cx /= wsum;
  cy /= wsum;
  Eigen::Index anchor = 0;
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = std::hypot(rule.nodes[i].x - cx, rule.nodes[i].y - cy);
    if (d < best) {
      best = d;
      anchor = i;
    }
  }

  NystromSolution sol;
  sol.rule = rule;
  sol.all_eigenvalues.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) sol.all_eigenvalues[k] = vals[order[k]];
  sol.eigenvalues.assign(sol.all_eigenvalues.begin(), sol.all_eigenvalues.begin() + keep);
  sol.node_samples.resize(n, keep);
  for (Eigen::Index k = 0; k < keep; ++k) {
    Eigen::VectorXd v = vecs.col(order[k]);
    fix_sign(v, anchor);
    sol.node_samples.col(k) = v.cwiseQuotient(sw);
  }
  return sol;
}

double nystrom_extend(const Kernel& kernel, const NystromSolution& solution, int index, Point x) {
  require(index >= 0 && index < static_cast<int>(solution.count()), ErrorCode::InvalidArgument,
          "nystrom_extend: index out of range");
  const double lambda = solution.eigenvalues[index];
  if (!(lambda > kExtensionThreshold)) {
    throw Error(ErrorCode::IllConditioned, "nystrom_extend: eigenvalue " + std::to_string(lambda) +
                                               " is below the extension threshold");
  }
  const RegionQuadrature& rule = solution.rule;
  double s = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j)
    s += rule.weights[j] * kernel(x, rule.nodes[j]) * solution.node_samples(static_cast<Eigen::Index>(j), index);
  return s / lambda;
}

Eigen::MatrixXd nystrom_extend_many(const Kernel& kernel, const NystromSolution& solution,
                                    int count, std::span<const Point> points) {
  require(count >= 0 && count <= static_cast<int>(solution.count()), ErrorCode::InvalidArgument,
          "nystrom_extend_many: count out of range");
  for (int k = 0; k < count; ++k) {
    if (!(solution.eigenvalues[k] > kExtensionThreshold)) {
      throw Error(ErrorCode::IllConditioned,
                  "nystrom_extend_many: eigenvalue " + std::to_string(k) +
                      " is below the extension threshold");
    }
  }
  const RegionQuadrature& rule = solution.rule;
  const auto n = static_cast<Eigen::Index>(rule.size());
  // Columns pre-scaled by 1/lambda.
  Eigen::MatrixXd f = solution.node_samples.leftCols(count);
  for (int k = 0; k < count; ++k) f.col(k) /= solution.eigenvalues[k];

  Eigen::MatrixXd out(static_cast<Eigen::Index>(points.size()), count);
  parallel_for(points.size(), [&](std::size_t p) {
    Eigen::RowVectorXd row(n);
    for (Eigen::Index j = 0; j < n; ++j) row[j] = rule.weights[j] * kernel(points[p], rule.nodes[j]);
    out.row(static_cast<Eigen::Index>(p)) = row * f;
  });
  return out;
}

double nystrom_trace(const Kernel& kernel, const RegionQuadrature& rule) {
  double s = 0.0;
  for (std::size_t j = 0; j < rule.size(); ++j) s += rule.weights[j] * kernel(rule.nodes[j], rule.nodes[j]);
  return s;
}

}  // namespace slepian
