#pragma once

#include <string>
#include <vector>

#include "slepian/geometry.hpp"

namespace slepian {

/// Regular grid of sample points origin + (i dx, j dy), i < nx, j < ny.
struct GridSpec {
  Point origin;
  double dx = 1.0;
  double dy = 1.0;
  int nx = 0;
  int ny = 0;

  std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  Point at(int i, int j) const { return {origin.x + i * dx, origin.y + j * dy}; }
  /// Row-major offset, x fastest.
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  std::vector<Point> points() const;

  /// Throws InvalidArgument unless spacings are positive and dimensions >= 1.
  static GridSpec make(Point origin, double dx, double dy, int nx, int ny);
  /// Grid with spacing h whose cells cover `box`, cell centres symmetric about
  /// the box centre.
  static GridSpec covering(const BoundingBox& box, double h);
};

/// Samples on a GridSpec, row-major. `imag` is empty for real fields.
struct GridField {
  GridSpec grid;
  std::string name;
  std::vector<double> values;
  std::vector<double> imag;

  bool is_complex() const { return !imag.empty(); }
  double max_abs() const;
};

GridField make_field(const GridSpec& grid, std::string name);

/// <base>.bin holds the real parts as little-endian doubles, row-major;
/// <base>.imag.bin holds imaginary parts of complex fields. <base>.txt describes the grid
/// and records the display threshold max|v|/100.
void write_grid_binary(const GridField& field, const std::string& base);
GridField read_grid_binary(const std::string& base);

/// Text table with header "# x y value", one grid point per row.
void write_grid_text(const GridField& field, const std::string& path);

}  // namespace slepian
