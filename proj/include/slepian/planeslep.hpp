#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slepian/fredholm.hpp"
#include "slepian/geometry.hpp"
#include "slepian/gridfield.hpp"

namespace slepian {

/// K^2 A / (4 pi).
double shannon_2d(double K, double area);

/// Concentration basis for a region under the isotropic bandlimit |k| <= K.
struct SlepianBasis {
  Region region;
  double K = 0.0;
  double area = 0.0;
  double shannon = 0.0;
  /// Sum of every discrete eigenvalue.
  double trace = 0.0;
  /// Node samples scaled so that sum_j w_j g_a(x_j)^2 = lambda_a, i.e. unit
  /// norm over the whole plane.
  NystromSolution solution;

  const std::vector<double>& eigenvalues() const { return solution.eigenvalues; }
  std::size_t count() const { return solution.count(); }
};

/// Nystrom solution on region_quadrature(region, n_quad); count <= 0 keeps all.
SlepianBasis solve_region_disk(const Region& region, double K, int n_quad = 32, int count = 0);

/// g_index at every grid point.
GridField evaluate_g(const SlepianBasis& basis, int index, const GridSpec& grid);
/// g_index inside the region, exactly zero outside.
GridField evaluate_h(const SlepianBasis& basis, int index, const GridSpec& grid);
/// First `count` eigenfunctions on the grid, one column each (row = grid index).
Eigen::MatrixXd evaluate_g_many(const SlepianBasis& basis, int count, const GridSpec& grid);

/// |H(k)|^2 with H = dx dy sum h exp(-i k.x), on the centred wavenumber grid
/// k = ((i - nx/2) 2pi/(nx dx), (j - ny/2) 2pi/(ny dy)).
GridField periodogram(const GridField& field);

/// sum_{a < count} lambda_a g_a(x)^2 on the grid.
GridField weighted_sumsq(const SlepianBasis& basis, const GridSpec& grid, int count);

}  // namespace slepian
