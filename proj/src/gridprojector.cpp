#include "slepian/gridprojector.hpp"

#include <cmath>
#include <numbers>

#include "fft2d.hpp"
#include "slepian/error.hpp"
#include "slepian/krylov.hpp"
#include "slepian/planeslep.hpp"

namespace slepian {
namespace {

// Runs Q^-1 L Q in place on the FFT buffer.
void band_limit(const OperatorProblem& p, detail::Fft2D& fft) {
  std::complex<double>* buf = fft.data();
  fft.forward();
  const double scale = 1.0 / static_cast<double>(p.grid.size());  // two unitary factors
  for (std::size_t k = 0; k < p.grid.size(); ++k) buf[k] = p.spectral_dft[k] ? buf[k] * scale : 0.0;
  fft.backward();
}

void space_limit(const OperatorProblem& p, detail::Fft2D& fft) {
  std::complex<double>* buf = fft.data();
  for (std::size_t k = 0; k < p.grid.size(); ++k)
    if (!p.spatial_mask[k]) buf[k] = 0.0;
}

// Full-grid operator on the buffer contents.
void run_operator(const OperatorProblem& p, detail::Fft2D& fft) {
  if (p.mode == ProjectorMode::Space) {
    space_limit(p, fft);
    band_limit(p, fft);
    space_limit(p, fft);
  } else {
    band_limit(p, fft);
    space_limit(p, fft);
    band_limit(p, fft);
  }
}

void load_state(const OperatorProblem& p, const double* x, std::complex<double>* buf) {
  if (p.mode == ProjectorMode::Space) {
    std::fill(buf, buf + p.grid.size(), std::complex<double>(0.0));
    for (std::size_t c = 0; c < p.spatial_cells.size(); ++c) buf[p.spatial_cells[c]] = x[c];
  } else {
    for (std::size_t k = 0; k < p.grid.size(); ++k) buf[k] = x[k];
  }
}

void store_state(const OperatorProblem& p, const std::complex<double>* buf, double* y) {
  if (p.mode == ProjectorMode::Space) {
    for (std::size_t c = 0; c < p.spatial_cells.size(); ++c) y[c] = buf[p.spatial_cells[c]].real();
  } else {
    for (std::size_t k = 0; k < p.grid.size(); ++k) y[k] = buf[k].real();
  }
}

}  // namespace

OperatorProblem build_problem(const Region& region, const SpectralDomain& domain, double spacing,
                              double embed_factor, ProjectorMode mode) {
  require(spacing > 0 && std::isfinite(spacing), ErrorCode::InvalidArgument, "build_problem: spacing must be positive");
  require(embed_factor >= 1.0 && std::isfinite(embed_factor), ErrorCode::InvalidArgument,
          "build_problem: embed factor must be at least 1");
  const BoundingBox b = region.bounds();
  const Point c = b.center();
  const double hw = 0.5 * embed_factor * b.width(), hh = 0.5 * embed_factor * b.height();
  OperatorProblem p;
  p.mode = mode;
  p.grid = GridSpec::covering({c.x - hw, c.x + hw, c.y - hh, c.y + hh}, spacing);
  const GridSpec& g = p.grid;
  if (g.nx < 2 || g.ny < 2)
    throw Error(ErrorCode::InvalidConfiguration, "build_problem: spacing too coarse for the region");

  p.spatial_mask.assign(g.size(), 0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (contains(region, g.at(i, j))) {
        p.spatial_mask[g.index(i, j)] = 1;
        p.spatial_cells.push_back(g.index(i, j));
      }

  WavenumberMask& m = p.spectral_mask;
  m.nx = g.nx;
  m.ny = g.ny;
  m.dkx = 2.0 * std::numbers::pi / (g.nx * g.dx);
  m.dky = 2.0 * std::numbers::pi / (g.ny * g.dy);
  m.cells.assign(g.size(), 0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (domain.contains({(i - g.nx / 2) * m.dkx, (j - g.ny / 2) * m.dky})) m.cells[g.index(i, j)] = 1;
  // Reflection through k = 0 on the centred grid (the Nyquist row maps to itself).
  auto reflect = [](int i, int n) { return (2 * (n / 2) - i + n) % n; };
  std::vector<std::uint8_t> sym = m.cells;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (m.cells[g.index(i, j)]) sym[g.index(reflect(i, g.nx), reflect(j, g.ny))] = 1;
  m.cells = std::move(sym);

  p.spectral_dft.assign(g.size(), 0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (m.cells[g.index(i, j)]) {
        ++p.spectral_count;
        p.spectral_dft[g.index((i - g.nx / 2 + g.nx) % g.nx, (j - g.ny / 2 + g.ny) % g.ny)] = 1;
      }

  if (p.spatial_cells.empty())
    throw Error(ErrorCode::InvalidConfiguration, "build_problem: spatial mask is empty at this spacing");
  if (p.spectral_count == 0)
    throw Error(ErrorCode::InvalidConfiguration, "build_problem: spectral mask is empty on the wavenumber grid");
  return p;
}

std::vector<double> apply(const OperatorProblem& problem, std::span<const double> field) {
  require(field.size() == problem.grid.size(), ErrorCode::InvalidArgument,
          "apply: field has " + std::to_string(field.size()) + " samples, grid has " +
              std::to_string(problem.grid.size()));
  detail::Fft2D fft(problem.grid.nx, problem.grid.ny);
  std::complex<double>* buf = fft.data();
  for (std::size_t k = 0; k < field.size(); ++k) buf[k] = field[k];
  run_operator(problem, fft);
  std::vector<double> out(field.size());
  for (std::size_t k = 0; k < field.size(); ++k) out[k] = buf[k].real();
  return out;
}

double rayleigh_quotient(const OperatorProblem& problem, std::span<const double> field) {
  const std::vector<double> af = apply(problem, field);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < field.size(); ++k) {
    num += field[k] * af[k];
    den += field[k] * field[k];
  }
  require(den > 0, ErrorCode::InvalidArgument, "rayleigh_quotient: zero field");
  return num / den;
}

GridBasis solve(const OperatorProblem& problem, int count, std::uint64_t seed, double tol) {
  const auto n = static_cast<Eigen::Index>(problem.state_size());
  require(count >= 1 && count <= n, ErrorCode::InvalidArgument,
          "solve: count must lie in [1, " + std::to_string(n) + "]");
  detail::Fft2D fft(problem.grid.nx, problem.grid.ny);
  const BlockOperator op = [&](const Eigen::MatrixXd& in, Eigen::MatrixXd& out) {
    out.resize(in.rows(), in.cols());
    for (Eigen::Index c = 0; c < in.cols(); ++c) {
      load_state(problem, in.col(c).data(), fft.data());
      run_operator(problem, fft);
      store_state(problem, fft.data(), out.col(c).data());
    }
  };
  EigsOptions opt;
  opt.count = count;
  opt.seed = seed;
  opt.tol = tol;
  // The spectrum is step shaped: about `trace` eigenvalues crowd near 1. A
  // block narrower than that cluster cannot separate its members, so the
  // block spans it.
  const double trace = static_cast<double>(problem.spatial_cells.size()) * problem.spectral_count /
                       static_cast<double>(problem.grid.size());
  opt.block = static_cast<int>(std::min<double>(static_cast<double>(n), std::max(count + 2.0, std::ceil(1.25 * trace) + 8.0)));
  opt.max_iterations =
      static_cast<int>(std::ceil(10.0 * count * std::sqrt(static_cast<double>(problem.grid.size()))));
  const EigsResult r = block_krylov_eigs(op, n, opt);

  GridBasis basis;
  basis.problem = problem;
  basis.eigenvalues = r.values;
  basis.residuals = r.residuals;
  basis.iterations = r.iterations;
  basis.applications = r.applications;
  basis.seed = seed;
  const double cell = problem.grid.dx * problem.grid.dy;
  for (Eigen::Index a = 0; a < static_cast<Eigen::Index>(r.values.size()); ++a) {
    GridField f = make_field(problem.grid, "eigenfield" + std::to_string(a + 1));
    const Eigen::VectorXd x = r.vectors.col(a) / std::sqrt(cell);
    if (problem.mode == ProjectorMode::Space) {
      for (std::size_t c = 0; c < problem.spatial_cells.size(); ++c) f.values[problem.spatial_cells[c]] = x[c];
    } else {
      for (std::size_t k = 0; k < problem.grid.size(); ++k) f.values[k] = x[k];
    }
    load_state(problem, r.vectors.col(a).data(), fft.data());
    run_operator(problem, fft);
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < problem.grid.size(); ++k) {
      re += std::norm(fft.data()[k].real());
      im += std::norm(fft.data()[k].imag());
    }
    basis.imag_residuals.push_back(re > 0 ? std::sqrt(im / re) : 0.0);
    basis.fields.push_back(std::move(f));
  }
  return basis;
}

GridField weighted_periodogram_sum(const GridBasis& basis, int count) {
  require(count >= 1 && count <= static_cast<int>(basis.fields.size()), ErrorCode::InvalidArgument,
          "weighted_periodogram_sum: count out of range");
  GridField sum;
  for (int a = 0; a < count; ++a) {
    const GridField p = periodogram(basis.fields[a]);
    if (a == 0) {
      sum = make_field(p.grid, "weighted_periodogram_sum_" + std::to_string(count));
    }
    for (std::size_t k = 0; k < p.values.size(); ++k) sum.values[k] += basis.eigenvalues[a] * p.values[k];
  }
  return sum;
}

}  // namespace slepian
