#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slepian/geometry.hpp"
#include "slepian/gridfield.hpp"

namespace slepian {

/// Space: P Q^-1 L Q P acting on fields supported in the region.
/// Spectral: Q^-1 L Q P Q^-1 L Q acting on real bandlimited fields, the
/// spatial image of L Q P Q^-1 L.
enum class ProjectorMode { Space, Spectral };

struct OperatorProblem {
  GridSpec grid;
  ProjectorMode mode = ProjectorMode::Space;
  /// Region indicator, row-major on grid.
  std::vector<std::uint8_t> spatial_mask;
  /// Spectral indicator on the centred wavenumber grid; equal to its point
  /// reflection through k = 0.
  WavenumberMask spectral_mask;
  /// Same mask in unshifted DFT order.
  std::vector<std::uint8_t> spectral_dft;
  std::vector<std::size_t> spatial_cells;
  std::size_t spectral_count = 0;

  /// Dimension of the state vectors the eigensolver works with.
  std::size_t state_size() const {
    return mode == ProjectorMode::Space ? spatial_cells.size() : grid.size();
  }
};

/// Grid covering the region's bounding box enlarged embed_factor times about
/// its centre at `spacing`; spectral cells belong to the mask when their centre
/// lies in the domain, then the mask is OR-ed with its reflection. Throws
/// InvalidConfiguration when either mask is empty.
OperatorProblem build_problem(const Region& region, const SpectralDomain& domain, double spacing,
                              double embed_factor = 3.0, ProjectorMode mode = ProjectorMode::Space);

/// Applies the operator to a full-grid real field. FFTs are unitary.
std::vector<double> apply(const OperatorProblem& problem, std::span<const double> field);

/// <f, A f> / <f, f> on the full grid.
double rayleigh_quotient(const OperatorProblem& problem, std::span<const double> field);

struct GridBasis {
  OperatorProblem problem;
  std::vector<double> eigenvalues;
  /// Real eigenfields on the grid, scaled so sum f^2 dx dy = 1.
  std::vector<GridField> fields;
  /// ||Im(A f)|| / ||Re(A f)|| for each eigenfield.
  std::vector<double> imag_residuals;
  std::vector<double> residuals;
  int iterations = 0;
  long applications = 0;
  std::uint64_t seed = 0;
};

/// Top `count` eigenpairs by block Krylov iteration from seeded start vectors.
/// The block is at least 1.25 times the operator trace plus 8 wide. Cap: 10
/// count sqrt(grid size) block expansions.
GridBasis solve(const OperatorProblem& problem, int count, std::uint64_t seed, double tol = 1e-10);

/// sum_{a < count} lambda_a |H_a(k)|^2 on the centred wavenumber grid.
GridField weighted_periodogram_sum(const GridBasis& basis, int count);

}  // namespace slepian
