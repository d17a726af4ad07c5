/* C interface to the slepian library. Objects are opaque handles created by
 * *_solve / *_create style calls and released with the matching *_free.
 * Every fallible call returns an slp_status; on failure slp_last_error()
 * describes the problem (per thread, valid until the next failing call). */
#ifndef SLEPIAN_H
#define SLEPIAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(SLP_BUILDING_LIBRARY)
#define SLP_API __attribute__((visibility("default")))
#else
#define SLP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SLP_OK = 0,
  SLP_ERR_INVALID_ARGUMENT = 1,
  SLP_ERR_INVALID_REGION = 2,
  SLP_ERR_NUMERICAL = 3,
  SLP_ERR_ILL_CONDITIONED = 4,
  SLP_ERR_INVALID_CONFIGURATION = 5,
  SLP_ERR_PARSE = 6,
  SLP_ERR_IO = 7,
  SLP_ERR_INTERNAL = 8
} slp_status;

SLP_API const char* slp_last_error(void);
SLP_API const char* slp_version(void);
SLP_API slp_status slp_set_num_threads(int n);

SLP_API slp_status slp_bessel_j(int n, double x, double* out);
SLP_API slp_status slp_shannon_1d(double T, double W, double* out);
SLP_API slp_status slp_shannon_2d(double K, double area, double* out);
SLP_API slp_status slp_n2d_m(int m, double n2d, double* out);

/* Regions. Polygon vertices are interleaved x0, y0, x1, y1, ... */
typedef struct slp_region slp_region;
SLP_API slp_status slp_region_polygon(const double* xy, size_t n_vertices, slp_region** out);
SLP_API slp_status slp_region_disk(double cx, double cy, double radius, slp_region** out);
SLP_API slp_status slp_region_read(const char* path, slp_region** out);
SLP_API slp_status slp_region_spline(const slp_region* region, int n, slp_region** out);
SLP_API slp_status slp_region_area(const slp_region* region, double* out);
/* xmin, xmax, ymin, ymax */
SLP_API slp_status slp_region_bounds(const slp_region* region, double out[4]);
SLP_API slp_status slp_region_contains(const slp_region* region, double x, double y, int* out);
SLP_API slp_status slp_region_boundary_distance(const slp_region* region, double x, double y, double* out);
SLP_API size_t slp_region_vertex_count(const slp_region* region);
SLP_API void slp_region_free(slp_region* region);

/* Grid fields. */
typedef struct {
  double x0, y0, dx, dy;
  int nx, ny;
} slp_grid_spec;
typedef struct slp_grid slp_grid;
SLP_API slp_status slp_grid_create(const slp_grid_spec* spec, const double* values, const char* name, slp_grid** out);
SLP_API slp_status slp_grid_info(const slp_grid* grid, slp_grid_spec* out);
/* Row-major, x fastest; nx * ny values owned by the grid. */
SLP_API const double* slp_grid_values(const slp_grid* grid);
SLP_API slp_status slp_grid_write_binary(const slp_grid* grid, const char* base);
SLP_API slp_status slp_grid_write_text(const slp_grid* grid, const char* path);
SLP_API slp_status slp_grid_periodogram(const slp_grid* grid, slp_grid** out);
SLP_API void slp_grid_free(slp_grid* grid);

/* One-dimensional prolate functions on [-1, 1]. */
typedef struct slp_basis1d slp_basis1d;
SLP_API slp_status slp_pswf1d_solve(double tw, int nodes, int count, slp_basis1d** out);
SLP_API size_t slp_basis1d_count(const slp_basis1d* basis);
SLP_API slp_status slp_basis1d_eigenvalue(const slp_basis1d* basis, int index, double* out);
SLP_API slp_status slp_basis1d_trace(const slp_basis1d* basis, double* out);
SLP_API slp_status slp_basis1d_evaluate(const slp_basis1d* basis, int index, double x, double* out);
SLP_API void slp_basis1d_free(slp_basis1d* basis);

/* Discrete prolate spheroidal sequences. */
typedef struct slp_dpss_set slp_dpss_set;
SLP_API slp_status slp_dpss_compute(int N, double W, int count, slp_dpss_set** out);
SLP_API slp_status slp_dpss_lambda(const slp_dpss_set* set, int index, double* out);
SLP_API slp_status slp_dpss_chi(const slp_dpss_set* set, int index, double* out);
/* Writes N values. */
SLP_API slp_status slp_dpss_sequence(const slp_dpss_set* set, int index, double* out);
SLP_API void slp_dpss_free(slp_dpss_set* set);

/* Circularly symmetric case. Branch: 0 zonal, 1 cos, 2 sin. */
typedef struct slp_disk_basis slp_disk_basis;
typedef struct {
  int m;
  int branch;
  int radial;
  double lambda;
  double chi;
  double gamma;
} slp_disk_entry;
SLP_API slp_status slp_disk_solve(double K, double R, int count, slp_disk_basis** out);
SLP_API size_t slp_disk_count(const slp_disk_basis* basis);
SLP_API slp_status slp_disk_entry_info(const slp_disk_basis* basis, int index, slp_disk_entry* out);
SLP_API slp_status slp_disk_n2d(const slp_disk_basis* basis, double* out);
SLP_API size_t slp_disk_order_count(const slp_disk_basis* basis);
/* Sum of the fixed-order eigenvalues kept for order m. */
SLP_API slp_status slp_disk_order_sum(const slp_disk_basis* basis, int m, double* out);
SLP_API slp_status slp_disk_radial(const slp_disk_basis* basis, int index, double r, double* out);
SLP_API slp_status slp_disk_value(const slp_disk_basis* basis, int index, double x, double y, double* out);
SLP_API void slp_disk_free(slp_disk_basis* basis);

/* Arbitrary region, isotropic bandlimit |k| <= K. */
typedef struct slp_region_basis slp_region_basis;
SLP_API slp_status slp_region_basis_solve(const slp_region* region, double K, int nquad, int count,
                                          slp_region_basis** out);
SLP_API size_t slp_region_basis_count(const slp_region_basis* basis);
SLP_API slp_status slp_region_basis_eigenvalue(const slp_region_basis* basis, int index, double* out);
SLP_API slp_status slp_region_basis_shannon(const slp_region_basis* basis, double* out);
SLP_API slp_status slp_region_basis_trace(const slp_region_basis* basis, double* out);
SLP_API size_t slp_region_basis_nodes(const slp_region_basis* basis);
SLP_API slp_status slp_region_basis_g(const slp_region_basis* basis, int index, const slp_grid_spec* spec,
                                      slp_grid** out);
SLP_API slp_status slp_region_basis_h(const slp_region_basis* basis, int index, const slp_grid_spec* spec,
                                      slp_grid** out);
SLP_API slp_status slp_region_basis_weighted_sumsq(const slp_region_basis* basis, const slp_grid_spec* spec,
                                                   int count, slp_grid** out);
SLP_API void slp_region_basis_free(slp_region_basis* basis);

/* Spectral domains and the grid projector. Mode: 0 space, 1 spectral. */
typedef struct slp_spectral slp_spectral;
SLP_API slp_status slp_spectral_disk(double K, slp_spectral** out);
SLP_API slp_status slp_spectral_wedge(double orientation, double half_angle, double k_max, slp_spectral** out);
/* Polygon in a boundary file (rad per length unit), joined with its reflection. */
SLP_API slp_status slp_spectral_read(const char* path, slp_spectral** out);
SLP_API void slp_spectral_free(slp_spectral* domain);

typedef struct slp_gridproblem slp_gridproblem;
SLP_API slp_status slp_gridproblem_build(const slp_region* region, const slp_spectral* domain, double spacing,
                                         double embed, int mode, slp_gridproblem** out);
SLP_API slp_status slp_gridproblem_info(const slp_gridproblem* problem, slp_grid_spec* grid,
                                        size_t* spatial_cells, size_t* spectral_cells);
/* in and out hold nx * ny values. */
SLP_API slp_status slp_gridproblem_apply(const slp_gridproblem* problem, const double* in, double* out);
SLP_API void slp_gridproblem_free(slp_gridproblem* problem);

typedef struct slp_grid_basis slp_grid_basis;
SLP_API slp_status slp_grid_solve(const slp_gridproblem* problem, int count, uint64_t seed, slp_grid_basis** out);
SLP_API size_t slp_grid_basis_count(const slp_grid_basis* basis);
SLP_API slp_status slp_grid_basis_eigenvalue(const slp_grid_basis* basis, int index, double* out);
SLP_API slp_status slp_grid_basis_imag_residual(const slp_grid_basis* basis, int index, double* out);
SLP_API slp_status slp_grid_basis_residual(const slp_grid_basis* basis, int index, double* out);
SLP_API int slp_grid_basis_iterations(const slp_grid_basis* basis);
SLP_API slp_status slp_grid_basis_field(const slp_grid_basis* basis, int index, slp_grid** out);
SLP_API slp_status slp_grid_basis_weighted_periodogram(const slp_grid_basis* basis, int count, slp_grid** out);
SLP_API void slp_grid_basis_free(slp_grid_basis* basis);

#ifdef __cplusplus
}
#endif

#endif
