// Command-line front end. Talks to the library only through slepian.h.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "slepian/slepian.h"

namespace fs = std::filesystem;
using slepian::cli::Json;
using slepian::cli::RunReport;

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

void check(slp_status s) {
  if (s == SLP_OK) return;
  const bool input = s == SLP_ERR_INVALID_ARGUMENT || s == SLP_ERR_INVALID_REGION ||
                     s == SLP_ERR_INVALID_CONFIGURATION || s == SLP_ERR_PARSE || s == SLP_ERR_IO;
  throw Failure{input ? kExitUsage : kExitNumerical, slp_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{kExitUsage, msg}; }

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using RegionH = Handle<slp_region, slp_region_free>;
using GridH = Handle<slp_grid, slp_grid_free>;

struct Output {
  std::optional<fs::path> dir;
  bool text = false;
  Json files = Json::array();

  void prepare() {
    if (!dir) return;
    std::error_code ec;
    fs::create_directories(*dir, ec);
    if (ec) throw Failure{kExitUsage, "cannot create output directory " + dir->string() + ": " + ec.message()};
  }

  void grid(const slp_grid* g, const std::string& stem) {
    if (!dir) return;
    const std::string base = (*dir / stem).string();
    check(slp_grid_write_binary(g, base.c_str()));
    files.push_back(stem + ".bin");
    if (text) {
      check(slp_grid_write_text(g, (base + ".xyz").c_str()));
      files.push_back(stem + ".xyz");
    }
  }

  void emit(RunReport& r) {
    if (!files.empty()) r.extra["files"] = files;
    const std::string body = slepian::cli::serialize(r);
    if (!dir) {
      std::cout << body;
      return;
    }
    std::ofstream f(*dir / "report.json");
    f << body;
    if (!f) throw Failure{kExitUsage, "cannot write " + (*dir / "report.json").string()};
  }
};

RunReport new_report(const std::string& command) {
  RunReport r;
  r.command = command;
  r.version = slp_version();
  return r;
}

// pswf1d ---------------------------------------------------------------------

struct Pswf1dArgs {
  double tw = 0.0;
  int nodes = 128;
  int count = 10;
};

void run_pswf1d(const Pswf1dArgs& a, Output& out) {
  Handle<slp_basis1d, slp_basis1d_free> b;
  check(slp_pswf1d_solve(a.tw, a.nodes, a.count, b.out()));
  RunReport r = new_report("pswf1d");
  r.parameters = {{"tw", a.tw}, {"nodes", a.nodes}, {"count", a.count}};
  double shannon = 0.0;
  check(slp_shannon_1d(a.tw, 1.0, &shannon));
  r.shannon["N1D"] = shannon;
  double trace = 0.0;
  check(slp_basis1d_trace(b.get(), &trace));
  r.diagnostics = {{"trace", trace}, {"trace_minus_shannon", trace - shannon}};
  const int n = static_cast<int>(slp_basis1d_count(b.get()));
  for (int k = 0; k < n; ++k) {
    double lam = 0.0, plus = 0.0, minus = 0.0;
    check(slp_basis1d_eigenvalue(b.get(), k, &lam));
    r.eigenvalues.push_back(lam);
    Json e = {{"index", k + 1}};
    if (lam > 1e-12) {
      check(slp_basis1d_evaluate(b.get(), k, 0.5, &plus));
      check(slp_basis1d_evaluate(b.get(), k, -0.5, &minus));
      e["parity"] = std::abs(plus - minus) <= std::abs(plus + minus) ? "even" : "odd";
    }
    r.entries.push_back(e);
  }
  out.prepare();
  if (out.dir) {
    std::ofstream f(*out.dir / "psi.txt");
    f << std::setprecision(17) << "# x";
    for (int k = 0; k < n; ++k) f << " psi" << k + 1;
    f << '\n';
    for (int i = 0; i <= 400; ++i) {
      const double x = -2.0 + i * 0.01;
      f << x;
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        double lam = 0.0;
        check(slp_basis1d_eigenvalue(b.get(), k, &lam));
        if (lam > 1e-12) check(slp_basis1d_evaluate(b.get(), k, x, &v));
        f << ' ' << v;
      }
      f << '\n';
    }
    out.files.push_back("psi.txt");
  }
  out.emit(r);
}

// disk -----------------------------------------------------------------------

struct DiskArgs {
  std::optional<double> shannon, bandwidth, radius;
  int count = 30;
  int orders = 0;
};

void run_disk(const DiskArgs& a, Output& out) {
  const bool by_n = a.shannon.has_value();
  const bool by_kr = a.bandwidth.has_value() || a.radius.has_value();
  if (by_n == by_kr) usage_error("disk: give either --shannon or both --bandwidth and --radius");
  if (by_kr && !(a.bandwidth && a.radius)) usage_error("disk: --bandwidth and --radius go together");
  double K, R;
  if (by_n) {
    if (!(*a.shannon > 0)) usage_error("disk: --shannon must be positive");
    R = 1.0;
    K = 2.0 * std::sqrt(*a.shannon);
  } else {
    K = *a.bandwidth;
    R = *a.radius;
  }
  Handle<slp_disk_basis, slp_disk_free> b;
  check(slp_disk_solve(K, R, a.count, b.out()));
  RunReport r = new_report("disk");
  r.parameters = {{"bandwidth", K}, {"radius", R}, {"count", a.count}, {"orders", a.orders}};
  if (by_n) r.parameters["shannon"] = *a.shannon;
  double n2d = 0.0;
  check(slp_disk_n2d(b.get(), &n2d));
  r.shannon["N2D"] = n2d;
  static const char* branch_names[] = {"zonal", "cos", "sin"};
  const int n = static_cast<int>(slp_disk_count(b.get()));
  int above_half = 0;
  for (int k = 0; k < n; ++k) {
    slp_disk_entry e;
    check(slp_disk_entry_info(b.get(), k, &e));
    r.eigenvalues.push_back(e.lambda);
    if (e.lambda >= 0.5) ++above_half;
    r.entries.push_back({{"index", k + 1}, {"m", e.m}, {"branch", branch_names[e.branch]}, {"radial", e.radial + 1},
                         {"lambda", e.lambda}, {"chi", e.chi}, {"gamma", e.gamma}});
  }
  r.diagnostics = {{"orders_solved", slp_disk_order_count(b.get())}, {"count_lambda_ge_half", above_half}};
  if (a.orders > 0) {
    Json table = Json::array();
    const int top = std::min<int>(a.orders, static_cast<int>(slp_disk_order_count(b.get())) - 1);
    for (int m = 0; m <= top; ++m) {
      double nm = 0.0, sum = 0.0;
      check(slp_n2d_m(m, n2d, &nm));
      check(slp_disk_order_sum(b.get(), m, &sum));
      table.push_back({{"m", m}, {"n2d_m", nm}, {"sum_lambda", sum}});
    }
    r.extra["orders"] = table;
  }
  out.prepare();
  if (out.dir) {
    std::ofstream f(*out.dir / "radial.txt");
    f << std::setprecision(17) << "# r";
    for (int k = 0; k < n; ++k) f << " g" << k + 1;
    f << '\n';
    for (int i = 0; i <= 200; ++i) {
      const double rr = i * 2.0 * R / 200.0;
      f << rr;
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        check(slp_disk_radial(b.get(), k, rr, &v));
        f << ' ' << v;
      }
      f << '\n';
    }
    out.files.push_back("radial.txt");
  }
  out.emit(r);
}

// region ---------------------------------------------------------------------

struct RegionArgs {
  std::string boundary;
  double bandwidth = 0.0;
  int nquad = 32;
  int count = 10;
  std::optional<double> grid;
  int spline = 0;
};

void load_region(const std::string& path, int spline, RegionH& region) {
  check(slp_region_read(path.c_str(), region.out()));
  if (spline > 0) {
    RegionH smooth;
    check(slp_region_spline(region.get(), spline, smooth.out()));
    std::swap(region.p, smooth.p);
  }
}

void run_region(const RegionArgs& a, Output& out) {
  RegionH region;
  load_region(a.boundary, a.spline, region);
  double area = 0.0, shannon = 0.0;
  check(slp_region_area(region.get(), &area));
  check(slp_shannon_2d(a.bandwidth, area, &shannon));
  const int wanted = std::max(a.count, a.grid ? 2 * static_cast<int>(std::lround(shannon)) : 0);
  Handle<slp_region_basis, slp_region_basis_free> b;
  check(slp_region_basis_solve(region.get(), a.bandwidth, a.nquad, wanted, b.out()));

  RunReport r = new_report("region");
  r.parameters = {{"boundary", a.boundary}, {"bandwidth", a.bandwidth}, {"nquad", a.nquad}, {"count", a.count},
                  {"spline", a.spline}};
  if (a.grid) r.parameters["grid"] = *a.grid;
  double trace = 0.0;
  check(slp_region_basis_trace(b.get(), &trace));
  r.shannon["N2D"] = shannon;
  r.diagnostics = {{"area", area},
                   {"vertices", slp_region_vertex_count(region.get())},
                   {"quadrature_nodes", slp_region_basis_nodes(b.get())},
                   {"trace", trace},
                   {"trace_relative_error", trace / shannon - 1.0}};
  for (int k = 0; k < a.count && k < static_cast<int>(slp_region_basis_count(b.get())); ++k) {
    double lam = 0.0;
    check(slp_region_basis_eigenvalue(b.get(), k, &lam));
    r.eigenvalues.push_back(lam);
    r.entries.push_back({{"index", k + 1}});
  }

  out.prepare();
  if (a.grid && out.dir) {
    double bb[4];
    check(slp_region_bounds(region.get(), bb));
    const double h = *a.grid;
    const double cx = 0.5 * (bb[0] + bb[1]), cy = 0.5 * (bb[2] + bb[3]);
    const double w = bb[1] - bb[0], hgt = bb[3] - bb[2];
    slp_grid_spec spec;
    spec.dx = spec.dy = h;
    spec.nx = static_cast<int>(std::ceil(2.0 * w / h));
    spec.ny = static_cast<int>(std::ceil(2.0 * hgt / h));
    spec.x0 = cx - 0.5 * (spec.nx - 1) * h;
    spec.y0 = cy - 0.5 * (spec.ny - 1) * h;
    const int show = std::min<int>(a.count, static_cast<int>(r.eigenvalues.size()));
    for (int k = 0; k < show; ++k) {
      if (!(r.eigenvalues[k] > 1e-12)) break;
      GridH g, hf;
      check(slp_region_basis_g(b.get(), k, &spec, g.out()));
      out.grid(g.get(), "g" + std::to_string(k + 1));
      check(slp_region_basis_h(b.get(), k, &spec, hf.out()));
      out.grid(hf.get(), "h" + std::to_string(k + 1));
      GridH p;
      check(slp_grid_periodogram(hf.get(), p.out()));
      out.grid(p.get(), "h" + std::to_string(k + 1) + "_periodogram");
    }
    const int wc = std::min(wanted, static_cast<int>(slp_region_basis_count(b.get())));
    if (wc >= 1) {
      GridH s;
      check(slp_region_basis_weighted_sumsq(b.get(), &spec, wc, s.out()));
      out.grid(s.get(), "weighted_sumsq");
      r.extra["weighted_sumsq_count"] = wc;
    }
  }
  out.emit(r);
}

// grid -----------------------------------------------------------------------

struct GridArgs {
  std::string boundary;
  std::vector<std::string> spectral;
  double spacing = 5.0;
  double embed = 3.0;
  int count = 4;
  std::uint64_t seed = 1;
  std::string mode = "space";
  int spline = 0;
};

double number(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    usage_error(std::string("--spectral: ") + what + " is not a number: " + s);
  }
}

void run_grid(const GridArgs& a, Output& out) {
  RegionH region;
  load_region(a.boundary, a.spline, region);
  Handle<slp_spectral, slp_spectral_free> dom;
  Json spectral;
  const auto& t = a.spectral;
  if (t.empty()) usage_error("--spectral needs arguments");
  if (t[0] == "disk") {
    if (t.size() != 2) usage_error("--spectral disk K");
    const double K = number(t[1], "K");
    check(slp_spectral_disk(K, dom.out()));
    spectral = {{"kind", "disk"}, {"K", K}};
  } else if (t[0] == "wedge") {
    if (t.size() != 4) usage_error("--spectral wedge THETA HALFWIDTH KMAX");
    const double th = number(t[1], "theta"), hw = number(t[2], "half width"), km = number(t[3], "kmax");
    check(slp_spectral_wedge(th, hw, km, dom.out()));
    spectral = {{"kind", "wedge"}, {"theta", th}, {"half_width", hw}, {"kmax", km}};
  } else {
    const std::string path = t[0] == "file" && t.size() == 2 ? t[1] : t[0];
    if (t.size() != (t[0] == "file" ? 2u : 1u)) usage_error("--spectral file PATH");
    check(slp_spectral_read(path.c_str(), dom.out()));
    spectral = {{"kind", "file"}, {"path", path}};
  }
  if (a.mode != "space" && a.mode != "spectral") usage_error("--mode must be space or spectral");
  Handle<slp_gridproblem, slp_gridproblem_free> prob;
  check(slp_gridproblem_build(region.get(), dom.get(), a.spacing, a.embed, a.mode == "space" ? 0 : 1, prob.out()));
  slp_grid_spec g;
  std::size_t ns = 0, nk = 0;
  check(slp_gridproblem_info(prob.get(), &g, &ns, &nk));
  Handle<slp_grid_basis, slp_grid_basis_free> b;
  check(slp_grid_solve(prob.get(), a.count, a.seed, b.out()));

  RunReport r = new_report("grid");
  r.parameters = {{"boundary", a.boundary}, {"spectral", spectral}, {"spacing", a.spacing}, {"embed", a.embed},
                  {"count", a.count},       {"seed", a.seed},       {"mode", a.mode},       {"spline", a.spline}};
  const double n = static_cast<double>(g.nx) * g.ny;
  r.shannon["discrete_trace"] = static_cast<double>(ns) * static_cast<double>(nk) / n;
  r.extra["masks"] = {{"nx", g.nx}, {"ny", g.ny}, {"spatial_cells", ns}, {"spectral_cells", nk}};
  double worst_imag = 0.0;
  for (int k = 0; k < static_cast<int>(slp_grid_basis_count(b.get())); ++k) {
    double lam = 0.0, im = 0.0, res = 0.0;
    check(slp_grid_basis_eigenvalue(b.get(), k, &lam));
    check(slp_grid_basis_imag_residual(b.get(), k, &im));
    check(slp_grid_basis_residual(b.get(), k, &res));
    worst_imag = std::max(worst_imag, im);
    r.eigenvalues.push_back(lam);
    r.entries.push_back({{"index", k + 1}, {"imag_residual", im}, {"residual", res}});
  }
  r.diagnostics = {{"iterations", slp_grid_basis_iterations(b.get())}, {"max_imag_residual", worst_imag}};
  out.prepare();
  if (out.dir) {
    for (int k = 0; k < a.count; ++k) {
      GridH f;
      check(slp_grid_basis_field(b.get(), k, f.out()));
      out.grid(f.get(), "eigenfield" + std::to_string(k + 1));
    }
    GridH p;
    check(slp_grid_basis_weighted_periodogram(b.get(), a.count, p.out()));
    out.grid(p.get(), "weighted_periodogram");
  }
  out.emit(r);
}

int configure_threads() {
  const char* env = std::getenv("SLEPIAN_THREADS");
  if (!env) return 0;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1 || n > 4096) {
    std::cerr << "error: SLEPIAN_THREADS must be an integer >= 1, got '" << env << "'\n";
    return kExitUsage;
  }
  check(slp_set_num_threads(static_cast<int>(n)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatiospectral concentration: prolate functions, disk and region bases, grid projectors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(slp_version()));
  Output out;
  std::string out_dir;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Directory for report.json and exported files (default: report to stdout)");
    sub->add_flag("--text", out.text, "Also write grids as '# x y value' text tables");
  };

  Pswf1dArgs p1;
  auto* c1 = app.add_subcommand("pswf1d", "One-dimensional prolate spheroidal functions");
  c1->add_option("--tw", p1.tw, "Time-bandwidth product TW")->required()->check(CLI::PositiveNumber);
  c1->add_option("--nodes", p1.nodes, "Gauss-Legendre nodes")->capture_default_str()->check(CLI::Range(1, 100000));
  c1->add_option("--count", p1.count, "Eigenfunctions to report (0 = all)")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_out(c1);

  DiskArgs pd;
  auto* c2 = app.add_subcommand("disk", "Circularly symmetric case on a disk");
  c2->add_option("--shannon", pd.shannon, "Shannon number N2D (radius 1)");
  c2->add_option("--bandwidth", pd.bandwidth, "Bandwidth K")->check(CLI::PositiveNumber);
  c2->add_option("--radius", pd.radius, "Disk radius R")->check(CLI::PositiveNumber);
  c2->add_option("--count", pd.count, "Mixed-order entries to report (0 = all)")->capture_default_str()->check(CLI::NonNegativeNumber);
  c2->add_option("--orders", pd.orders, "Tabulate per-order sums for m = 0..M")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_out(c2);

  RegionArgs pr;
  auto* c3 = app.add_subcommand("region", "Arbitrary region with an isotropic bandlimit");
  c3->add_option("--boundary", pr.boundary, "Boundary file, one 'x,y' per line")->required();
  c3->add_option("--bandwidth", pr.bandwidth, "Bandwidth K")->required()->check(CLI::PositiveNumber);
  c3->add_option("--nquad", pr.nquad, "Gauss-Legendre points per dimension")->capture_default_str()->check(CLI::Range(2, 4096));
  c3->add_option("--count", pr.count, "Eigenvalues to report")->capture_default_str()->check(CLI::PositiveNumber);
  c3->add_option("--grid", pr.grid, "Export spacing for g, h, periodogram and weighted-sum grids")->check(CLI::PositiveNumber);
  c3->add_option("--spline", pr.spline, "Resample the boundary with a periodic spline at N points")->check(CLI::NonNegativeNumber);
  add_out(c3);

  GridArgs pg;
  auto* c4 = app.add_subcommand("grid", "General domains by projection operators on a grid");
  c4->add_option("--boundary", pg.boundary, "Boundary file, one 'x,y' per line")->required();
  c4->add_option("--spectral", pg.spectral, "disk K | wedge THETA HALFWIDTH KMAX | file PATH (radians)")
      ->required()
      ->expected(1, 4)
      ->allow_extra_args(false);
  c4->add_option("--spacing", pg.spacing, "Grid spacing")->capture_default_str()->check(CLI::PositiveNumber);
  c4->add_option("--embed", pg.embed, "Grid size relative to the region bounding box")->capture_default_str()->check(CLI::Range(1.0, 1000.0));
  c4->add_option("--count", pg.count, "Eigenpairs")->capture_default_str()->check(CLI::PositiveNumber);
  c4->add_option("--seed", pg.seed, "Start-vector seed")->capture_default_str();
  c4->add_option("--mode", pg.mode, "space or spectral")->capture_default_str();
  c4->add_option("--spline", pg.spline, "Resample the boundary with a periodic spline at N points")->check(CLI::NonNegativeNumber);
  add_out(c4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (const int rc = configure_threads(); rc != 0) return rc;
    if (!out_dir.empty()) out.dir = fs::path(out_dir);
    if (*c1) run_pswf1d(p1, out);
    else if (*c2) run_disk(pd, out);
    else if (*c3) run_region(pr, out);
    else if (*c4) run_grid(pg, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    if (f.exit_code == kExitUsage) std::cerr << "run with --help for usage\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
