#pragma once

#include <vector>

#include "slepian/geometry.hpp"

namespace slepian {

struct QuadratureRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule1D gauss_legendre(int n);

/// Affine image of `rule` on (a, b).
QuadratureRule1D map_rule(const QuadratureRule1D& rule, double a, double b);

/// Gauss-Legendre on [a, b]: gauss_legendre followed by map_rule.
QuadratureRule1D gauss_legendre(int n, double a, double b);

struct RegionQuadrature {
  std::vector<Point> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
  double weight_sum() const;
};

/// Tensor Gauss-Legendre rule over a region: outer rule in x, and for each x
/// node an n_per_dim-point rule on every interval of y_extents. Weights are
/// the products w_x * w_y.
///
/// For polygons with at most n_per_dim/2 distinct vertex abscissae the outer
/// rule is composite, broken at those abscissae with the n_per_dim x nodes
/// shared out by panel width (at least two per panel); the width function is
/// then linear on each panel and low-order moments are exact. Otherwise a
/// single panel spans the bounding interval.
RegionQuadrature region_quadrature(const Region& region, int n_per_dim = 32);

}  // namespace slepian
