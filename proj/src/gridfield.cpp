#include "slepian/gridfield.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "slepian/error.hpp"

namespace slepian {
namespace {

void write_doubles(const std::vector<double>& v, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  for (double d : v) {
    auto bits = std::bit_cast<std::uint64_t>(d);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    char buf[8];
    std::memcpy(buf, &bits, 8);
    out.write(buf, 8);
  }
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path);
}

std::vector<double> read_doubles(const std::string& path, std::size_t n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    char buf[8];
    if (!in.read(buf, 8)) throw Error(ErrorCode::Parse, path + ": truncated after " + std::to_string(k) + " values");
    std::uint64_t bits;
    std::memcpy(&bits, buf, 8);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    v[k] = std::bit_cast<double>(bits);
  }
  return v;
}

}  // namespace

std::vector<Point> GridSpec::points() const {
  std::vector<Point> p;
  p.reserve(size());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) p.push_back(at(i, j));
  return p;
}

GridSpec GridSpec::make(Point origin, double dx, double dy, int nx, int ny) {
  require(dx > 0 && dy > 0 && std::isfinite(dx) && std::isfinite(dy), ErrorCode::InvalidArgument,
          "grid spacings must be positive");
  require(nx >= 1 && ny >= 1, ErrorCode::InvalidArgument, "grid dimensions must be at least 1");
  return GridSpec{origin, dx, dy, nx, ny};
}

GridSpec GridSpec::covering(const BoundingBox& box, double h) {
  require(h > 0 && std::isfinite(h), ErrorCode::InvalidArgument, "grid spacing must be positive");
  const int nx = std::max(1, static_cast<int>(std::ceil(box.width() / h - 1e-9)));
  const int ny = std::max(1, static_cast<int>(std::ceil(box.height() / h - 1e-9)));
  const Point c = box.center();
  return make({c.x - 0.5 * (nx - 1) * h, c.y - 0.5 * (ny - 1) * h}, h, h, nx, ny);
}

double GridField::max_abs() const {
  double m = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double im = imag.empty() ? 0.0 : imag[k];
    m = std::max(m, std::hypot(values[k], im));
  }
  return m;
}

GridField make_field(const GridSpec& grid, std::string name) {
  GridField f;
  f.grid = grid;
  f.name = std::move(name);
  f.values.assign(grid.size(), 0.0);
  return f;
}

void write_grid_binary(const GridField& field, const std::string& base) {
  require(field.values.size() == field.grid.size(), ErrorCode::InvalidArgument,
          "write_grid_binary: value count does not match grid");
  write_doubles(field.values, base + ".bin");
  if (field.is_complex()) write_doubles(field.imag, base + ".imag.bin");
  std::ofstream d(base + ".txt");
  if (!d) throw Error(ErrorCode::Io, "cannot open " + base + ".txt for writing");
  d << std::setprecision(17);
  d << "field " << field.name << '\n'
    << "origin_x " << field.grid.origin.x << '\n'
    << "origin_y " << field.grid.origin.y << '\n'
    << "dx " << field.grid.dx << '\n'
    << "dy " << field.grid.dy << '\n'
    << "nx " << field.grid.nx << '\n'
    << "ny " << field.grid.ny << '\n'
    << "complex " << (field.is_complex() ? 1 : 0) << '\n'
    << "layout row-major x-fastest float64 little-endian\n"
    << "display_threshold " << field.max_abs() / 100.0 << '\n';
}

GridField read_grid_binary(const std::string& base) {
  std::ifstream d(base + ".txt");
  if (!d) throw Error(ErrorCode::Io, "cannot open " + base + ".txt");
  GridField f;
  int is_complex = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(d, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "field") {
      std::getline(ls >> std::ws, f.name);
      continue;
    }
    if (key == "layout" || key.empty()) continue;
    double v;
    if (!(ls >> v)) throw Error(ErrorCode::Parse, base + ".txt:" + std::to_string(lineno) + ": bad value");
    if (key == "origin_x") f.grid.origin.x = v;
    else if (key == "origin_y") f.grid.origin.y = v;
    else if (key == "dx") f.grid.dx = v;
    else if (key == "dy") f.grid.dy = v;
    else if (key == "nx") f.grid.nx = static_cast<int>(v);
    else if (key == "ny") f.grid.ny = static_cast<int>(v);
    else if (key == "complex") is_complex = static_cast<int>(v);
  }
  f.grid = GridSpec::make(f.grid.origin, f.grid.dx, f.grid.dy, f.grid.nx, f.grid.ny);
  f.values = read_doubles(base + ".bin", f.grid.size());
  if (is_complex) f.imag = read_doubles(base + ".imag.bin", f.grid.size());
  return f;
}

void write_grid_text(const GridField& field, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out << std::setprecision(17);
  out << "# x y value" << (field.is_complex() ? " imag" : "") << '\n';
  for (int j = 0; j < field.grid.ny; ++j) {
    for (int i = 0; i < field.grid.nx; ++i) {
      const Point p = field.grid.at(i, j);
      const std::size_t k = field.grid.index(i, j);
      out << p.x << ' ' << p.y << ' ' << field.values[k];
      if (field.is_complex()) out << ' ' << field.imag[k];
      out << '\n';
    }
  }
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path);
}

}  // namespace slepian
