#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "slepian/geometry.hpp"
#include "slepian/quadrature.hpp"

namespace slepian {

/// Symmetric kernel k(x, x'). One-dimensional problems use the x coordinate.
using Kernel = std::function<double(Point, Point)>;

/// Lift a 1D rule to the generic node/weight form (y = 0).
RegionQuadrature as_node_rule(const QuadratureRule1D& rule);

struct NystromSolution {
  /// Top eigenvalues, descending.
  std::vector<double> eigenvalues;
  /// Every eigenvalue of the discretized operator, descending.
  std::vector<double> all_eigenvalues;
  /// Column a holds f_a(x_j); columns satisfy sum_j w_j f_a f_b = delta_ab.
  Eigen::MatrixXd node_samples;
  RegionQuadrature rule;

  std::size_t count() const { return eigenvalues.size(); }
};

/// Solves sum_j w_j k(x_i, x_j) f_j = lambda f_i through the symmetric form
/// sqrt(W) K sqrt(W). count <= 0 keeps every eigenpair.
///
/// Output is deterministic: eigenvalues descending, numerically tied values
/// (within 1e-12) ordered by the index of their largest-magnitude sample, and
/// each vector signed positive at the node nearest the weighted node centroid
/// (or, if that sample vanishes, at the first node with a non-negligible
/// value).
NystromSolution nystrom_eigs(const Kernel& kernel, const RegionQuadrature& rule, int count);

/// f_index(x) = (1/lambda) sum_j w_j k(x, x_j) f(x_j). Throws IllConditioned
/// for lambda <= 1e-12.
double nystrom_extend(const Kernel& kernel, const NystromSolution& solution, int index, Point x);

/// Extension of the first `count` eigenfunctions at many points; row p of the
/// result belongs to points[p].
Eigen::MatrixXd nystrom_extend_many(const Kernel& kernel, const NystromSolution& solution,
                                    int count, std::span<const Point> points);

/// sum_j w_j k(x_j, x_j), the trace of the discretized operator.
double nystrom_trace(const Kernel& kernel, const RegionQuadrature& rule);

inline constexpr double kExtensionThreshold = 1e-12;

}  // namespace slepian
