#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace slepian {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct BoundingBox {
  double xmin, xmax, ymin, ymax;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  Point center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
};

struct Interval {
  double lo, hi;
  double length() const { return hi - lo; }
};

/// Closed planar region: a simple polygon (stored counter-clockwise) or a disk.
/// Immutable once built; the factories validate.
class Region {
 public:
  enum class Kind { Polygon, Disk };

  /// Throws InvalidRegion for fewer than three distinct vertices, zero area or
  /// self-intersection. Clockwise input is reoriented; a repeated closing
  /// vertex is dropped.
  static Region polygon(std::vector<Point> vertices);
  static Region disk(Point center, double radius);

  Kind kind() const { return kind_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  Point center() const { return center_; }
  double radius() const { return radius_; }
  BoundingBox bounds() const { return bounds_; }
  /// Area centroid.
  Point centroid() const;

  /// Coordinates multiplied by `factor` about the origin.
  Region scaled(double factor) const;

 private:
  Region() = default;
  Kind kind_ = Kind::Polygon;
  std::vector<Point> vertices_;
  Point center_;
  double radius_ = 0.0;
  BoundingBox bounds_{};
};

double area(const Region& region);

/// Even-odd membership; points on the boundary count as inside.
bool contains(const Region& region, Point p);

/// Euclidean distance from p to the region boundary.
double boundary_distance(const Region& region, Point p);

/// Intersection of the vertical line at x with the region as sorted, disjoint
/// intervals. When x coincides with a vertex abscissa it is nudged by 1e-12 of
/// the bounding-box width.
std::vector<Interval> y_extents(const Region& region, double x);

/// Periodic cubic spline through `vertices` (chord-length parameter), resampled
/// at n equal parameter steps.
Region spline_boundary(std::span<const Point> vertices, int n);

/// Region scaled about the origin to area `target`, and the factor used.
std::pair<Region, double> scale_to_area(const Region& region,
                                        double target = 4.0 * std::numbers::pi);

/// Boolean field on a centred wavenumber grid: cell (i, j) sits at
/// ((i - nx/2) dkx, (j - ny/2) dky), row-major in j.
struct WavenumberMask {
  int nx = 0;
  int ny = 0;
  double dkx = 0.0;
  double dky = 0.0;
  std::vector<std::uint8_t> cells;

  bool at(int i, int j) const { return cells[static_cast<std::size_t>(j) * nx + i] != 0; }
};

/// Spectral concentration set.
class SpectralDomain {
 public:
  enum class Kind { Disk, PolygonSet, GridMask };

  static SpectralDomain disk(double K);
  static SpectralDomain polygons(std::vector<Region> polygons);
  static SpectralDomain grid_mask(WavenumberMask mask);

  Kind kind() const { return kind_; }
  double radius() const { return K_; }
  const std::vector<Region>& polygon_set() const { return polygons_; }
  const WavenumberMask& mask() const { return mask_; }

  bool contains(Point k) const;
  /// Half-width of a box around the origin that holds the whole domain.
  double extent() const;

 private:
  SpectralDomain() = default;
  Kind kind_ = Kind::Disk;
  double K_ = 0.0;
  std::vector<Region> polygons_;
  WavenumberMask mask_;
};

/// Union of the domain with its point reflection through k = 0. Idempotent.
SpectralDomain hermitian_symmetrize(const SpectralDomain& domain);

/// Triangle with apex at the origin, axis at `orientation`, opening
/// `half_angle` either side and outer vertices at radius `k_max`, paired with
/// its antipode.
SpectralDomain wedge_domain(double orientation, double half_angle, double k_max);

/// Boundary file: one "x,y" pair per line, '#' lines ignored. Parse errors
/// carry the 1-based line number.
std::vector<Point> parse_boundary(std::istream& in, const std::string& source = "<stream>");
std::vector<Point> read_boundary_file(const std::string& path);

}  // namespace slepian
