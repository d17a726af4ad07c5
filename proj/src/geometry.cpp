#include "slepian/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "slepian/error.hpp"

namespace slepian {
namespace {

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double signed_area(const std::vector<Point>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

BoundingBox box_of(const std::vector<Point>& v) {
  BoundingBox b{v[0].x, v[0].x, v[0].y, v[0].y};
  for (const Point& p : v) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
  const int d1 = sign(cross(q1, q2, p1));
  const int d2 = sign(cross(q1, q2, p2));
  const int d3 = sign(cross(p1, p2, q1));
  const int d4 = sign(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

// Returns the index pair of the first crossing edge pair, or {-1, -1}.
std::pair<int, int> find_self_intersection(const std::vector<Point>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<BoundingBox> boxes(n);
  for (int i = 0; i < n; ++i) {
    const Point a = v[i], b = v[(i + 1) % n];
    boxes[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (boxes[i].xmax < boxes[j].xmin || boxes[j].xmax < boxes[i].xmin ||
          boxes[i].ymax < boxes[j].ymin || boxes[j].ymax < boxes[i].ymin)
        continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return {i, j};
    }
  }
  return {-1, -1};
}

double segment_distance(Point a, Point b, Point p) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

std::vector<Point> dedupe(std::span<const Point> in) {
  std::vector<Point> out;
  out.reserve(in.size());
  for (const Point& p : in) {
    if (!out.empty() && out.back().x == p.x && out.back().y == p.y) continue;
    out.push_back(p);
  }
  while (out.size() > 1 && out.front().x == out.back().x && out.front().y == out.back().y)
    out.pop_back();
  return out;
}

// Cyclic tridiagonal solve (Sherman-Morrison); sub a, diag b, super c, with
// corners A[0][n-1] = a[0] and A[n-1][0] = c[n-1].
std::vector<double> solve_cyclic(const std::vector<double>& a, const std::vector<double>& b,
                                 const std::vector<double>& c, const std::vector<double>& r) {
  const std::size_t n = b.size();
  auto tridiag = [&](const std::vector<double>& diag, const std::vector<double>& rhs) {
    std::vector<double> cp(n), x(n);
    double bet = diag[0];
    x[0] = rhs[0] / bet;
    for (std::size_t i = 1; i < n; ++i) {
      cp[i] = c[i - 1] / bet;
      bet = diag[i] - a[i] * cp[i];
      x[i] = (rhs[i] - a[i] * x[i - 1]) / bet;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= cp[i + 1] * x[i + 1];
    return x;
  };
  const double alpha = c[n - 1];
  const double beta = a[0];
  const double gamma = -b[0];
  std::vector<double> bb = b;
  bb[0] = b[0] - gamma;
  bb[n - 1] = b[n - 1] - alpha * beta / gamma;
  std::vector<double> x = tridiag(bb, r);
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = alpha;
  std::vector<double> z = tridiag(bb, u);
  const double fact = (x[0] + beta * x[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
  for (std::size_t i = 0; i < n; ++i) x[i] -= fact * z[i];
  return x;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_number(const std::string& field, const std::string& source, int line) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (!field.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v, std::chars_format::general);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw Error(ErrorCode::Parse,
                source + ":" + std::to_string(line) + ": invalid number '" + field + "'");
  }
  return v;
}

}  // namespace

Region Region::polygon(std::vector<Point> vertices) {
  std::vector<Point> v = dedupe(vertices);
  require(v.size() >= 3, ErrorCode::InvalidRegion, "polygon needs at least 3 distinct vertices");
  for (const Point& p : v)
    require(std::isfinite(p.x) && std::isfinite(p.y), ErrorCode::InvalidRegion,
            "polygon vertex is not finite");
  double a = signed_area(v);
  const BoundingBox b = box_of(v);
  const double scale = std::max(b.width(), b.height());
  require(std::abs(a) > 1e-14 * scale * scale, ErrorCode::InvalidRegion, "polygon has zero area");
  if (a < 0) std::reverse(v.begin(), v.end());
  const auto [i, j] = find_self_intersection(v);
  if (i >= 0) {
    throw Error(ErrorCode::InvalidRegion, "polygon is self-intersecting: edge " + std::to_string(i) +
                                              " crosses edge " + std::to_string(j));
  }
  Region r;
  r.kind_ = Kind::Polygon;
  r.vertices_ = std::move(v);
  r.bounds_ = b;
  return r;
}

Region Region::disk(Point center, double radius) {
  require(std::isfinite(radius) && radius > 0, ErrorCode::InvalidRegion,
          "disk radius must be positive");
  require(std::isfinite(center.x) && std::isfinite(center.y), ErrorCode::InvalidRegion,
          "disk center is not finite");
  Region r;
  r.kind_ = Kind::Disk;
  r.center_ = center;
  r.radius_ = radius;
  r.bounds_ = {center.x - radius, center.x + radius, center.y - radius, center.y + radius};
  return r;
}

Point Region::centroid() const {
  if (kind_ == Kind::Disk) return center_;
  double cx = 0.0, cy = 0.0, a = 0.0;
  const std::size_t n = vertices_.size();
  // Shift to the first vertex to limit cancellation for far-off coordinates.
  const Point o = vertices_[0];
  for (std::size_t i = 0; i < n; ++i) {
    const Point p{vertices_[i].x - o.x, vertices_[i].y - o.y};
    const Point q{vertices_[(i + 1) % n].x - o.x, vertices_[(i + 1) % n].y - o.y};
    const double w = p.x * q.y - q.x * p.y;
    a += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {o.x + cx / (3.0 * a), o.y + cy / (3.0 * a)};
}

Region Region::scaled(double factor) const {
  require(factor > 0 && std::isfinite(factor), ErrorCode::InvalidArgument,
          "scale factor must be positive");
  if (kind_ == Kind::Disk) return disk({center_.x * factor, center_.y * factor}, radius_ * factor);
  std::vector<Point> v = vertices_;
  for (Point& p : v) {
    p.x *= factor;
    p.y *= factor;
  }
  return polygon(std::move(v));
}

double area(const Region& region) {
  if (region.kind() == Region::Kind::Disk)
    return std::numbers::pi * region.radius() * region.radius();
  return signed_area(region.vertices());
}

bool contains(const Region& region, Point p) {
  if (region.kind() == Region::Kind::Disk) {
    const double d = std::hypot(p.x - region.center().x, p.y - region.center().y);
    return d <= region.radius() * (1.0 + 1e-12);
  }
  const auto& v = region.vertices();
  const BoundingBox b = region.bounds();
  const double tol = 1e-12 * std::max(b.width(), b.height());
  if (p.x < b.xmin - tol || p.x > b.xmax + tol || p.y < b.ymin - tol || p.y > b.ymax + tol)
    return false;
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = v[j], c = v[i];
    if (segment_distance(a, c, p) <= tol) return true;
    if ((c.y > p.y) != (a.y > p.y)) {
      const double xc = (a.x - c.x) * (p.y - c.y) / (a.y - c.y) + c.x;
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

double boundary_distance(const Region& region, Point p) {
  if (region.kind() == Region::Kind::Disk)
    return std::abs(std::hypot(p.x - region.center().x, p.y - region.center().y) -
                    region.radius());
  const auto& v = region.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, segment_distance(v[i], v[(i + 1) % v.size()], p));
  return best;
}

std::vector<Interval> y_extents(const Region& region, double x) {
  const BoundingBox b = region.bounds();
  if (!(x >= b.xmin && x <= b.xmax)) return {};
  if (region.kind() == Region::Kind::Disk) {
    const double dx = x - region.center().x;
    const double r = region.radius();
    if (std::abs(dx) >= r) return {};
    const double s = std::sqrt((r - dx) * (r + dx));
    return {{region.center().y - s, region.center().y + s}};
  }
  const auto& v = region.vertices();
  const double nudge = 1e-12 * b.width();
  for (const Point& p : v) {
    if (std::abs(p.x - x) <= nudge * 0.5) {
      x = (x + nudge <= b.xmax) ? x + nudge : x - nudge;
      break;
    }
  }
  std::vector<double> ys;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i], c = v[(i + 1) % n];
    if ((a.x < x && c.x > x) || (c.x < x && a.x > x)) {
      ys.push_back(a.y + (x - a.x) * (c.y - a.y) / (c.x - a.x));
    }
  }
  std::sort(ys.begin(), ys.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < ys.size(); i += 2) out.push_back({ys[i], ys[i + 1]});
  return out;
}

Region spline_boundary(std::span<const Point> vertices, int n) {
  const std::vector<Point> v = dedupe(vertices);
  require(v.size() >= 4, ErrorCode::InvalidArgument, "spline_boundary needs at least 4 vertices");
  require(n >= static_cast<int>(v.size()), ErrorCode::InvalidArgument,
          "spline_boundary: n must be at least the number of vertices");
  const std::size_t m = v.size();
  std::vector<double> t(m + 1, 0.0), h(m);
  for (std::size_t i = 0; i < m; ++i) {
    h[i] = std::hypot(v[(i + 1) % m].x - v[i].x, v[(i + 1) % m].y - v[i].y);
    t[i + 1] = t[i] + h[i];
  }
  const double total = t[m];

  auto second_derivs = [&](auto coord) {
    std::vector<double> a(m), b(m), c(m), r(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t im = (i + m - 1) % m, ip = (i + 1) % m;
      a[i] = h[im];
      b[i] = 2.0 * (h[im] + h[i]);
      c[i] = h[i];
      r[i] = 6.0 * ((coord(v[ip]) - coord(v[i])) / h[i] - (coord(v[i]) - coord(v[im])) / h[im]);
    }
    return solve_cyclic(a, b, c, r);
  };
  const std::vector<double> mx = second_derivs([](const Point& p) { return p.x; });
  const std::vector<double> my = second_derivs([](const Point& p) { return p.y; });

  std::vector<Point> out;
  out.reserve(n);
  std::size_t seg = 0;
  for (int k = 0; k < n; ++k) {
    const double s = total * k / n;
    while (seg + 1 < m && t[seg + 1] <= s) ++seg;
    const std::size_t ip = (seg + 1) % m;
    const double hh = h[seg];
    const double A = (t[seg + 1] - s), B = (s - t[seg]);
    auto eval = [&](double y0, double y1, double m0, double m1) {
      return m0 * A * A * A / (6 * hh) + m1 * B * B * B / (6 * hh) + (y0 / hh - m0 * hh / 6) * A +
             (y1 / hh - m1 * hh / 6) * B;
    };
    out.push_back({eval(v[seg].x, v[ip].x, mx[seg], mx[ip]),
                   eval(v[seg].y, v[ip].y, my[seg], my[ip])});
  }
  try {
    return Region::polygon(std::move(out));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidRegion,
                std::string("spline resample with n = ") + std::to_string(n) + " is invalid: " +
                    e.what());
  }
}

std::pair<Region, double> scale_to_area(const Region& region, double target) {
  require(target > 0 && std::isfinite(target), ErrorCode::InvalidArgument,
          "target area must be positive");
  const double factor = std::sqrt(target / area(region));
  return {region.scaled(factor), factor};
}

SpectralDomain SpectralDomain::disk(double K) {
  require(std::isfinite(K) && K > 0, ErrorCode::InvalidArgument, "spectral disk radius must be > 0");
  SpectralDomain d;
  d.kind_ = Kind::Disk;
  d.K_ = K;
  return d;
}

SpectralDomain SpectralDomain::polygons(std::vector<Region> polygons) {
  require(!polygons.empty(), ErrorCode::InvalidArgument, "empty polygon set");
  SpectralDomain d;
  d.kind_ = Kind::PolygonSet;
  d.polygons_ = std::move(polygons);
  return d;
}

SpectralDomain SpectralDomain::grid_mask(WavenumberMask mask) {
  require(mask.nx > 0 && mask.ny > 0 && mask.dkx > 0 && mask.dky > 0 &&
              mask.cells.size() == static_cast<std::size_t>(mask.nx) * mask.ny,
          ErrorCode::InvalidArgument, "malformed wavenumber mask");
  SpectralDomain d;
  d.kind_ = Kind::GridMask;
  d.mask_ = std::move(mask);
  return d;
}

bool SpectralDomain::contains(Point k) const {
  switch (kind_) {
    case Kind::Disk:
      return std::hypot(k.x, k.y) <= K_;
    case Kind::PolygonSet:
      return std::any_of(polygons_.begin(), polygons_.end(),
                         [&](const Region& r) { return slepian::contains(r, k); });
    case Kind::GridMask: {
      const int i = static_cast<int>(std::lround(k.x / mask_.dkx)) + mask_.nx / 2;
      const int j = static_cast<int>(std::lround(k.y / mask_.dky)) + mask_.ny / 2;
      if (i < 0 || j < 0 || i >= mask_.nx || j >= mask_.ny) return false;
      return mask_.at(i, j);
    }
  }
  return false;
}

double SpectralDomain::extent() const {
  switch (kind_) {
    case Kind::Disk:
      return K_;
    case Kind::PolygonSet: {
      double e = 0.0;
      for (const Region& r : polygons_) {
        const BoundingBox b = r.bounds();
        e = std::max({e, std::abs(b.xmin), std::abs(b.xmax), std::abs(b.ymin), std::abs(b.ymax)});
      }
      return e;
    }
    case Kind::GridMask:
      return std::max((mask_.nx / 2 + 1) * mask_.dkx, (mask_.ny / 2 + 1) * mask_.dky);
  }
  return 0.0;
}

SpectralDomain hermitian_symmetrize(const SpectralDomain& domain) {
  switch (domain.kind()) {
    case SpectralDomain::Kind::Disk:
      return domain;
    case SpectralDomain::Kind::PolygonSet: {
      std::vector<Region> out = domain.polygon_set();
      for (const Region& r : domain.polygon_set()) {
        std::vector<Point> v = r.vertices();
        for (Point& p : v) p = {-p.x, -p.y};
        Region reflected = Region::polygon(std::move(v));
        // Skip reflections already present (this is what makes it idempotent).
        const bool present = std::any_of(out.begin(), out.end(), [&](const Region& q) {
          const auto& a = q.vertices();
          const auto& b = reflected.vertices();
          if (a.size() != b.size()) return false;
          for (std::size_t s = 0; s < a.size(); ++s) {
            bool same = true;
            for (std::size_t i = 0; i < a.size() && same; ++i) {
              const Point& pa = a[(i + s) % a.size()];
              same = std::abs(pa.x - b[i].x) <= 1e-12 * (1 + std::abs(b[i].x)) &&
                     std::abs(pa.y - b[i].y) <= 1e-12 * (1 + std::abs(b[i].y));
            }
            if (same) return true;
          }
          return false;
        });
        if (!present) out.push_back(std::move(reflected));
      }
      return SpectralDomain::polygons(std::move(out));
    }
    case SpectralDomain::Kind::GridMask: {
      WavenumberMask m = domain.mask();
      const WavenumberMask& src = domain.mask();
      for (int j = 0; j < m.ny; ++j) {
        const int jr = (2 * (m.ny / 2) - j + m.ny) % m.ny;
        for (int i = 0; i < m.nx; ++i) {
          const int ir = (2 * (m.nx / 2) - i + m.nx) % m.nx;
          if (src.at(ir, jr)) m.cells[static_cast<std::size_t>(j) * m.nx + i] = 1;
        }
      }
      return SpectralDomain::grid_mask(std::move(m));
    }
  }
  return domain;
}

SpectralDomain wedge_domain(double orientation, double half_angle, double k_max) {
  require(half_angle > 0 && half_angle < std::numbers::pi / 2, ErrorCode::InvalidArgument,
          "wedge half angle must lie in (0, pi/2)");
  require(k_max > 0 && std::isfinite(k_max), ErrorCode::InvalidArgument,
          "wedge k_max must be positive");
  std::vector<Point> tri{{0.0, 0.0},
                         {k_max * std::cos(orientation - half_angle),
                          k_max * std::sin(orientation - half_angle)},
                         {k_max * std::cos(orientation + half_angle),
                          k_max * std::sin(orientation + half_angle)}};
  return hermitian_symmetrize(SpectralDomain::polygons({Region::polygon(std::move(tri))}));
}

std::vector<Point> parse_boundary(std::istream& in, const std::string& source) {
  std::vector<Point> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorCode::Parse,
                  source + ":" + std::to_string(lineno) + ": expected two comma-separated values");
    }
    const double x = parse_number(trim(std::string_view(s).substr(0, comma)), source, lineno);
    const double y = parse_number(trim(std::string_view(s).substr(comma + 1)), source, lineno);
    out.push_back({x, y});
  }
  if (out.size() < 3)
    throw Error(ErrorCode::Parse, source + ": boundary needs at least 3 vertices");
  return out;
}

std::vector<Point> read_boundary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open boundary file '" + path + "'");
  return parse_boundary(in, path);
}

}  // namespace slepian
