#include "slepian/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "slepian/error.hpp"

namespace slepian {

QuadratureRule1D gauss_legendre(int n) {
  require(n >= 1, ErrorCode::InvalidArgument, "gauss_legendre: n must be >= 1");
  QuadratureRule1D rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 5e-16) {
        // one more evaluation of the derivative at the converged root
        p0 = 1.0;
        p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule1D map_rule(const QuadratureRule1D& rule, double a, double b) {
  require(a < b, ErrorCode::InvalidArgument, "map_rule: need a < b");
  QuadratureRule1D out;
  out.nodes.resize(rule.size());
  out.weights.resize(rule.size());
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out.nodes[i] = mid + half * rule.nodes[i];
    out.weights[i] = half * rule.weights[i];
  }
  return out;
}

QuadratureRule1D gauss_legendre(int n, double a, double b) { return map_rule(gauss_legendre(n), a, b); }

double RegionQuadrature::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

namespace {

struct Panel {
  double a, b;
  int n;
};

std::vector<Panel> outer_panels(const Region& region, int n) {
  const BoundingBox box = region.bounds();
  if (region.kind() == Region::Kind::Disk) return {{box.xmin, box.xmax, n}};
  std::vector<double> xs;
  for (const Point& p : region.vertices()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  const double tol = 1e-12 * box.width();
  std::vector<double> breaks;
  for (double x : xs)
    if (breaks.empty() || x - breaks.back() > tol) breaks.push_back(x);
  const int panels = static_cast<int>(breaks.size()) - 1;
  if (panels <= 1 || panels > n / 2) return {{box.xmin, box.xmax, n}};

  // Largest-remainder apportionment of n nodes by width, two at minimum.
  std::vector<Panel> out;
  const int spare = n - 2 * panels;
  std::vector<double> share(panels);
  int used = 0;
  for (int p = 0; p < panels; ++p) {
    share[p] = spare * (breaks[p + 1] - breaks[p]) / box.width();
    const int base = static_cast<int>(std::floor(share[p]));
    out.push_back({breaks[p], breaks[p + 1], 2 + base});
    used += base;
  }
  std::vector<int> order(panels);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    return share[l] - std::floor(share[l]) > share[r] - std::floor(share[r]);
  });
  for (int k = 0; k < spare - used; ++k) out[order[k]].n += 1;
  return out;
}

}  // namespace

RegionQuadrature region_quadrature(const Region& region, int n_per_dim) {
  require(n_per_dim >= 1, ErrorCode::InvalidArgument, "region_quadrature: n_per_dim must be >= 1");
  const QuadratureRule1D inner = gauss_legendre(n_per_dim);
  RegionQuadrature q;
  for (const Panel& panel : outer_panels(region, n_per_dim)) {
    const QuadratureRule1D outer = gauss_legendre(panel.n, panel.a, panel.b);
    for (std::size_t k = 0; k < outer.size(); ++k) {
      const double x = outer.nodes[k];
      for (const Interval& iv : y_extents(region, x)) {
        if (!(iv.hi > iv.lo)) continue;
        const QuadratureRule1D ys = map_rule(inner, iv.lo, iv.hi);
        for (std::size_t l = 0; l < ys.size(); ++l) {
          q.nodes.push_back({x, ys.nodes[l]});
          q.weights.push_back(outer.weights[k] * ys.weights[l]);
        }
      }
    }
  }
  require(!q.nodes.empty(), ErrorCode::InvalidRegion, "region has empty interior");
  return q;
}

}  // namespace slepian
