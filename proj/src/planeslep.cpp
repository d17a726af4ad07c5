#include "slepian/planeslep.hpp"

#include <cmath>
#include <numbers>

#include "fft2d.hpp"
#include "slepian/error.hpp"
#include "slepian/kernels.hpp"
#include "slepian/quadrature.hpp"

namespace slepian {

double shannon_2d(double K, double area) {
  require(K > 0 && area > 0, ErrorCode::InvalidArgument, "shannon_2d: K and area must be positive");
  return K * K * area / (4.0 * std::numbers::pi);
}

SlepianBasis solve_region_disk(const Region& region, double K, int n_quad, int count) {
  require(K > 0 && std::isfinite(K), ErrorCode::InvalidArgument, "solve_region_disk: K must be positive");
  const double a = area(region);
  SlepianBasis b{region, K, a, shannon_2d(K, a), 0.0, {}};
  b.solution = nystrom_eigs(KernelSpec::disk2d(K), region_quadrature(region, n_quad), count);
  for (double v : b.solution.all_eigenvalues) b.trace += v;
  for (std::size_t a = 0; a < b.solution.count(); ++a)
    b.solution.node_samples.col(static_cast<Eigen::Index>(a)) *= std::sqrt(std::max(b.solution.eigenvalues[a], 0.0));
  return b;
}

Eigen::MatrixXd evaluate_g_many(const SlepianBasis& basis, int count, const GridSpec& grid) {
  const std::vector<Point> pts = grid.points();
  return nystrom_extend_many(KernelSpec::disk2d(basis.K), basis.solution, count, pts);
}

GridField evaluate_g(const SlepianBasis& basis, int index, const GridSpec& grid) {
  require(index >= 0 && index < static_cast<int>(basis.count()), ErrorCode::InvalidArgument,
          "evaluate_g: index out of range");
  if (!(basis.solution.eigenvalues[index] > kExtensionThreshold))
    throw Error(ErrorCode::IllConditioned, "evaluate_g: eigenvalue below the extension threshold");
  // Only column `index` is needed; a one-column solution view keeps the cost linear.
  NystromSolution one;
  one.eigenvalues = {basis.solution.eigenvalues[index]};
  one.node_samples = basis.solution.node_samples.col(index);
  one.rule = basis.solution.rule;
  const std::vector<Point> pts = grid.points();
  const Eigen::MatrixXd v = nystrom_extend_many(KernelSpec::disk2d(basis.K), one, 1, pts);
  GridField f = make_field(grid, "g" + std::to_string(index + 1));
  for (std::size_t k = 0; k < pts.size(); ++k) f.values[k] = v(static_cast<Eigen::Index>(k), 0);
  return f;
}

GridField evaluate_h(const SlepianBasis& basis, int index, const GridSpec& grid) {
  GridField f = evaluate_g(basis, index, grid);
  f.name = "h" + std::to_string(index + 1);
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i)
      if (!contains(basis.region, grid.at(i, j))) f.values[grid.index(i, j)] = 0.0;
  return f;
}

GridField periodogram(const GridField& field) {
  require(!field.is_complex(), ErrorCode::InvalidArgument, "periodogram: input must be real");
  const GridSpec& g = field.grid;
  require(field.values.size() == g.size(), ErrorCode::InvalidArgument, "periodogram: value count mismatch");
  detail::Fft2D fft(g.nx, g.ny);
  std::complex<double>* buf = fft.data();
  for (std::size_t k = 0; k < g.size(); ++k) buf[k] = field.values[k];
  fft.forward();
  const double dkx = 2.0 * std::numbers::pi / (g.nx * g.dx);
  const double dky = 2.0 * std::numbers::pi / (g.ny * g.dy);
  const GridSpec kg = GridSpec::make({-(g.nx / 2) * dkx, -(g.ny / 2) * dky}, dkx, dky, g.nx, g.ny);
  GridField out = make_field(kg, "periodogram(" + field.name + ")");
  const double cell = g.dx * g.dy;
  for (int j = 0; j < g.ny; ++j) {
    const int sj = (j - g.ny / 2 + g.ny) % g.ny;  // centred row j holds DFT row sj
    for (int i = 0; i < g.nx; ++i) {
      const int si = (i - g.nx / 2 + g.nx) % g.nx;
      out.values[kg.index(i, j)] = std::norm(buf[g.index(si, sj)] * cell);
    }
  }
  return out;
}

GridField weighted_sumsq(const SlepianBasis& basis, const GridSpec& grid, int count) {
  require(count >= 1 && count <= static_cast<int>(basis.count()), ErrorCode::InvalidArgument,
          "weighted_sumsq: count out of range");
  const Eigen::MatrixXd g = evaluate_g_many(basis, count, grid);
  GridField f = make_field(grid, "weighted_sumsq_" + std::to_string(count));
  for (Eigen::Index p = 0; p < g.rows(); ++p) {
    double s = 0.0;
    for (int a = 0; a < count; ++a) s += basis.solution.eigenvalues[a] * g(p, a) * g(p, a);
    f.values[static_cast<std::size_t>(p)] = s;
  }
  return f;
}

}  // namespace slepian
