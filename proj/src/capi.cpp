#include "slepian/slepian.h"

#include <memory>
#include <new>
#include <string>

#include "slepian/diskanalytic.hpp"
#include "slepian/error.hpp"
#include "slepian/gridprojector.hpp"
#include "slepian/parallel.hpp"
#include "slepian/planeslep.hpp"
#include "slepian/pswf1d.hpp"
#include "slepian/specialfn.hpp"

using namespace slepian;

struct slp_region {
  Region r;
};
struct slp_grid {
  GridField f;
};
struct slp_basis1d {
  Basis1D b;
};
struct slp_dpss_set {
  DpssSet s;
};
struct slp_disk_basis {
  DiskBasis b;
};
struct slp_region_basis {
  SlepianBasis b;
};
struct slp_spectral {
  SpectralDomain d;
};
struct slp_gridproblem {
  OperatorProblem p;
};
struct slp_grid_basis {
  GridBasis b;
};

namespace {

thread_local std::string last_error;

slp_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return SLP_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidRegion: return SLP_ERR_INVALID_REGION;
    case ErrorCode::Numerical: return SLP_ERR_NUMERICAL;
    case ErrorCode::IllConditioned: return SLP_ERR_ILL_CONDITIONED;
    case ErrorCode::InvalidConfiguration: return SLP_ERR_INVALID_CONFIGURATION;
    case ErrorCode::Parse: return SLP_ERR_PARSE;
    case ErrorCode::Io: return SLP_ERR_IO;
  }
  return SLP_ERR_INTERNAL;
}

template <class F>
slp_status guard(F&& f) {
  try {
    f();
    return SLP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SLP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SLP_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

int checked_index(int index, std::size_t size) {
  if (index < 0 || static_cast<std::size_t>(index) >= size)
    throw Error(ErrorCode::InvalidArgument,
                "index " + std::to_string(index) + " out of range [0, " + std::to_string(size) + ")");
  return index;
}

GridSpec to_spec(const slp_grid_spec* s) {
  need(s, "grid spec");
  return GridSpec::make({s->x0, s->y0}, s->dx, s->dy, s->nx, s->ny);
}

template <class T, class... A>
void emit(T** out, A&&... args) {
  need(out, "output pointer");
  *out = new T{std::forward<A>(args)...};
}

}  // namespace

extern "C" {

const char* slp_last_error(void) { return last_error.c_str(); }
const char* slp_version(void) { return SLP_VERSION_STRING; }
slp_status slp_set_num_threads(int n) {
  return guard([&] { set_num_threads(n); });
}

slp_status slp_bessel_j(int n, double x, double* out) {
  return guard([&] { need(out, "out"); *out = bessel_j(n, x); });
}
slp_status slp_shannon_1d(double T, double W, double* out) {
  return guard([&] { need(out, "out"); *out = shannon_1d(T, W); });
}
slp_status slp_shannon_2d(double K, double a, double* out) {
  return guard([&] { need(out, "out"); *out = shannon_2d(K, a); });
}
slp_status slp_n2d_m(int m, double n2d, double* out) {
  return guard([&] { need(out, "out"); *out = n2d_m(m, n2d); });
}

slp_status slp_region_polygon(const double* xy, size_t n, slp_region** out) {
  return guard([&] {
    need(xy, "vertex array");
    std::vector<Point> v(n);
    for (size_t k = 0; k < n; ++k) v[k] = {xy[2 * k], xy[2 * k + 1]};
    emit(out, Region::polygon(std::move(v)));
  });
}
slp_status slp_region_disk(double cx, double cy, double radius, slp_region** out) {
  return guard([&] { emit(out, Region::disk({cx, cy}, radius)); });
}
slp_status slp_region_read(const char* path, slp_region** out) {
  return guard([&] {
    need(path, "path");
    emit(out, Region::polygon(read_boundary_file(path)));
  });
}
slp_status slp_region_spline(const slp_region* region, int n, slp_region** out) {
  return guard([&] {
    need(region, "region");
    if (region->r.kind() != Region::Kind::Polygon)
      throw Error(ErrorCode::InvalidArgument, "spline smoothing needs a polygon");
    emit(out, spline_boundary(region->r.vertices(), n));
  });
}
slp_status slp_region_area(const slp_region* region, double* out) {
  return guard([&] { need(region, "region"); need(out, "out"); *out = area(region->r); });
}
slp_status slp_region_bounds(const slp_region* region, double out[4]) {
  return guard([&] {
    need(region, "region");
    need(out, "out");
    const BoundingBox b = region->r.bounds();
    out[0] = b.xmin;
    out[1] = b.xmax;
    out[2] = b.ymin;
    out[3] = b.ymax;
  });
}
slp_status slp_region_contains(const slp_region* region, double x, double y, int* out) {
  return guard([&] { need(region, "region"); need(out, "out"); *out = contains(region->r, {x, y}) ? 1 : 0; });
}
slp_status slp_region_boundary_distance(const slp_region* region, double x, double y, double* out) {
  return guard([&] { need(region, "region"); need(out, "out"); *out = boundary_distance(region->r, {x, y}); });
}
size_t slp_region_vertex_count(const slp_region* region) { return region ? region->r.vertices().size() : 0; }
void slp_region_free(slp_region* region) { delete region; }

slp_status slp_grid_create(const slp_grid_spec* spec, const double* values, const char* name, slp_grid** out) {
  return guard([&] {
    GridField f = make_field(to_spec(spec), name ? name : "field");
    if (values) f.values.assign(values, values + f.values.size());
    emit(out, std::move(f));
  });
}
slp_status slp_grid_info(const slp_grid* grid, slp_grid_spec* out) {
  return guard([&] {
    need(grid, "grid");
    need(out, "out");
    const GridSpec& g = grid->f.grid;
    *out = {g.origin.x, g.origin.y, g.dx, g.dy, g.nx, g.ny};
  });
}
const double* slp_grid_values(const slp_grid* grid) { return grid ? grid->f.values.data() : nullptr; }
slp_status slp_grid_write_binary(const slp_grid* grid, const char* base) {
  return guard([&] { need(grid, "grid"); need(base, "path"); write_grid_binary(grid->f, base); });
}
slp_status slp_grid_write_text(const slp_grid* grid, const char* path) {
  return guard([&] { need(grid, "grid"); need(path, "path"); write_grid_text(grid->f, path); });
}
slp_status slp_grid_periodogram(const slp_grid* grid, slp_grid** out) {
  return guard([&] { need(grid, "grid"); emit(out, periodogram(grid->f)); });
}
void slp_grid_free(slp_grid* grid) { delete grid; }

slp_status slp_pswf1d_solve(double tw, int nodes, int count, slp_basis1d** out) {
  return guard([&] { emit(out, solve_1d(tw, nodes, count)); });
}
size_t slp_basis1d_count(const slp_basis1d* b) { return b ? b->b.count() : 0; }
slp_status slp_basis1d_eigenvalue(const slp_basis1d* b, int index, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    *out = b->b.eigenvalues()[checked_index(index, b->b.count())];
  });
}
slp_status slp_basis1d_trace(const slp_basis1d* b, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    double s = 0.0;
    for (double v : b->b.solution.all_eigenvalues) s += v;
    *out = s;
  });
}
slp_status slp_basis1d_evaluate(const slp_basis1d* b, int index, double x, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    *out = evaluate_1d(b->b, checked_index(index, b->b.count()), x);
  });
}
void slp_basis1d_free(slp_basis1d* b) { delete b; }

slp_status slp_dpss_compute(int N, double W, int count, slp_dpss_set** out) {
  return guard([&] { emit(out, dpss(N, W, count)); });
}
slp_status slp_dpss_lambda(const slp_dpss_set* s, int index, double* out) {
  return guard([&] { need(s, "set"); need(out, "out"); *out = s->s.lambda[checked_index(index, s->s.lambda.size())]; });
}
slp_status slp_dpss_chi(const slp_dpss_set* s, int index, double* out) {
  return guard([&] { need(s, "set"); need(out, "out"); *out = s->s.chi[checked_index(index, s->s.chi.size())]; });
}
slp_status slp_dpss_sequence(const slp_dpss_set* s, int index, double* out) {
  return guard([&] {
    need(s, "set");
    need(out, "out");
    const int k = checked_index(index, s->s.chi.size());
    for (int i = 0; i < s->s.N; ++i) out[i] = s->s.sequences(i, k);
  });
}
void slp_dpss_free(slp_dpss_set* s) { delete s; }

slp_status slp_disk_solve(double K, double R, int count, slp_disk_basis** out) {
  return guard([&] { emit(out, assemble_disk_basis(K, R, count)); });
}
size_t slp_disk_count(const slp_disk_basis* b) { return b ? b->b.entries.size() : 0; }
slp_status slp_disk_entry_info(const slp_disk_basis* b, int index, slp_disk_entry* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    const DiskEntry& e = b->b.entries[checked_index(index, b->b.entries.size())];
    *out = {e.m, static_cast<int>(e.branch), e.radial, e.lambda, e.chi, e.gamma};
  });
}
slp_status slp_disk_n2d(const slp_disk_basis* b, double* out) {
  return guard([&] { need(b, "basis"); need(out, "out"); *out = b->b.n2d; });
}
size_t slp_disk_order_count(const slp_disk_basis* b) { return b ? b->b.orders.size() : 0; }
slp_status slp_disk_order_sum(const slp_disk_basis* b, int m, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    double s = 0.0;
    for (const RadialBranch& br : b->b.orders[checked_index(m, b->b.orders.size())].branches) s += br.lambda;
    *out = s;
  });
}
slp_status slp_disk_radial(const slp_disk_basis* b, int index, double r, double* out) {
  return guard([&] { need(b, "basis"); need(out, "out"); *out = disk_radial(b->b, index, r); });
}
slp_status slp_disk_value(const slp_disk_basis* b, int index, double x, double y, double* out) {
  return guard([&] { need(b, "basis"); need(out, "out"); *out = disk_value(b->b, index, {x, y}); });
}
void slp_disk_free(slp_disk_basis* b) { delete b; }

slp_status slp_region_basis_solve(const slp_region* region, double K, int nquad, int count, slp_region_basis** out) {
  return guard([&] {
    need(region, "region");
    emit(out, solve_region_disk(region->r, K, nquad, count));
  });
}
size_t slp_region_basis_count(const slp_region_basis* b) { return b ? b->b.count() : 0; }
slp_status slp_region_basis_eigenvalue(const slp_region_basis* b, int index, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    *out = b->b.eigenvalues()[checked_index(index, b->b.count())];
  });
}
slp_status slp_region_basis_shannon(const slp_region_basis* b, double* out) {
  return guard([&] { need(b, "basis"); need(out, "out"); *out = b->b.shannon; });
}
slp_status slp_region_basis_trace(const slp_region_basis* b, double* out) {
  return guard([&] { need(b, "basis"); need(out, "out"); *out = b->b.trace; });
}
size_t slp_region_basis_nodes(const slp_region_basis* b) { return b ? b->b.solution.rule.size() : 0; }
slp_status slp_region_basis_g(const slp_region_basis* b, int index, const slp_grid_spec* spec, slp_grid** out) {
  return guard([&] { need(b, "basis"); emit(out, evaluate_g(b->b, index, to_spec(spec))); });
}
slp_status slp_region_basis_h(const slp_region_basis* b, int index, const slp_grid_spec* spec, slp_grid** out) {
  return guard([&] { need(b, "basis"); emit(out, evaluate_h(b->b, index, to_spec(spec))); });
}
slp_status slp_region_basis_weighted_sumsq(const slp_region_basis* b, const slp_grid_spec* spec, int count,
                                           slp_grid** out) {
  return guard([&] { need(b, "basis"); emit(out, weighted_sumsq(b->b, to_spec(spec), count)); });
}
void slp_region_basis_free(slp_region_basis* b) { delete b; }

slp_status slp_spectral_disk(double K, slp_spectral** out) {
  return guard([&] { emit(out, SpectralDomain::disk(K)); });
}
slp_status slp_spectral_wedge(double orientation, double half_angle, double k_max, slp_spectral** out) {
  return guard([&] { emit(out, wedge_domain(orientation, half_angle, k_max)); });
}
slp_status slp_spectral_read(const char* path, slp_spectral** out) {
  return guard([&] {
    need(path, "path");
    emit(out, hermitian_symmetrize(SpectralDomain::polygons({Region::polygon(read_boundary_file(path))})));
  });
}
void slp_spectral_free(slp_spectral* d) { delete d; }

slp_status slp_gridproblem_build(const slp_region* region, const slp_spectral* domain, double spacing, double embed,
                                 int mode, slp_gridproblem** out) {
  return guard([&] {
    need(region, "region");
    need(domain, "spectral domain");
    if (mode != 0 && mode != 1) throw Error(ErrorCode::InvalidArgument, "mode must be 0 (space) or 1 (spectral)");
    emit(out, build_problem(region->r, domain->d, spacing, embed,
                            mode == 0 ? ProjectorMode::Space : ProjectorMode::Spectral));
  });
}
slp_status slp_gridproblem_info(const slp_gridproblem* p, slp_grid_spec* grid, size_t* spatial, size_t* spectral) {
  return guard([&] {
    need(p, "problem");
    const GridSpec& g = p->p.grid;
    if (grid) *grid = {g.origin.x, g.origin.y, g.dx, g.dy, g.nx, g.ny};
    if (spatial) *spatial = p->p.spatial_cells.size();
    if (spectral) *spectral = p->p.spectral_count;
  });
}
slp_status slp_gridproblem_apply(const slp_gridproblem* p, const double* in, double* out) {
  return guard([&] {
    need(p, "problem");
    need(in, "input");
    need(out, "output");
    const std::vector<double> r = apply(p->p, std::span<const double>(in, p->p.grid.size()));
    std::copy(r.begin(), r.end(), out);
  });
}
void slp_gridproblem_free(slp_gridproblem* p) { delete p; }

slp_status slp_grid_solve(const slp_gridproblem* p, int count, uint64_t seed, slp_grid_basis** out) {
  return guard([&] { need(p, "problem"); emit(out, solve(p->p, count, seed)); });
}
size_t slp_grid_basis_count(const slp_grid_basis* b) { return b ? b->b.eigenvalues.size() : 0; }
slp_status slp_grid_basis_eigenvalue(const slp_grid_basis* b, int index, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    *out = b->b.eigenvalues[checked_index(index, b->b.eigenvalues.size())];
  });
}
slp_status slp_grid_basis_imag_residual(const slp_grid_basis* b, int index, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    *out = b->b.imag_residuals[checked_index(index, b->b.imag_residuals.size())];
  });
}
slp_status slp_grid_basis_residual(const slp_grid_basis* b, int index, double* out) {
  return guard([&] {
    need(b, "basis");
    need(out, "out");
    *out = b->b.residuals[checked_index(index, b->b.residuals.size())];
  });
}
int slp_grid_basis_iterations(const slp_grid_basis* b) { return b ? b->b.iterations : 0; }
slp_status slp_grid_basis_field(const slp_grid_basis* b, int index, slp_grid** out) {
  return guard([&] {
    need(b, "basis");
    emit(out, b->b.fields[checked_index(index, b->b.fields.size())]);
  });
}
slp_status slp_grid_basis_weighted_periodogram(const slp_grid_basis* b, int count, slp_grid** out) {
  return guard([&] { need(b, "basis"); emit(out, weighted_periodogram_sum(b->b, count)); });
}
void slp_grid_basis_free(slp_grid_basis* b) { delete b; }

}  // extern "C"
