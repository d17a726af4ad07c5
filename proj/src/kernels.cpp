#include "slepian/kernels.hpp"

#include <cmath>
#include <utility>
#include <numbers>

#include "slepian/error.hpp"
#include "slepian/quadrature.hpp"
#include "slepian/specialfn.hpp"

namespace slepian {

double sinc_kernel(double tw, double x, double xp) {
  const double d = x - xp;
  if (std::abs(tw * d) < 1e-8) {
    const double z = tw * d;
    return tw / std::numbers::pi * (1.0 - z * z / 6.0);
  }
  return std::sin(tw * d) / (std::numbers::pi * d);
}

double disk_kernel(double K, Point a, Point b) {
  const double r = std::hypot(a.x - b.x, a.y - b.y);
  return K * K * bessel_j1_over_x(K * r) / (2.0 * std::numbers::pi);
}

double fixedm_kernel(int m, double n2d, double xi, double xip) {
  require(n2d >= 0.0 && std::isfinite(n2d), ErrorCode::InvalidArgument,
          "fixedm_kernel: Shannon number must be non-negative");
  require(m >= 0, ErrorCode::InvalidArgument, "fixedm_kernel: order must be non-negative");
  if (n2d == 0.0) return 0.0;
  if (xip < xi) std::swap(xi, xip);  // bitwise symmetric
  const double c = 2.0 * std::sqrt(n2d);
  const int nodes = static_cast<int>(std::ceil(4.0 * std::sqrt(n2d))) + 32;
  const QuadratureRule1D rule = gauss_legendre(nodes, 0.0, 1.0);
  double s = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double p = rule.nodes[k];
    s += rule.weights[k] * p * bessel_j(m, c * p * xi) * bessel_j(m, c * p * xip);
  }
  return 4.0 * n2d * s;
}

double sqrt_kernel(int m, double c, double xi, double xip) {
  const double z = c * (xi * xip);
  if (z == 0.0) return 0.0;
  return bessel_j(m, z) * std::sqrt(z);
}

double sqrt_kernel_half(HalfOrder order, double c, double xi, double xip) {
  const double z = c * (xi * xip);
  const double a = std::sqrt(2.0 / std::numbers::pi);
  return order == HalfOrder::Plus ? a * std::sin(z) : a * std::cos(z);
}

KernelSpec KernelSpec::sinc1d(double tw) {
  require(tw > 0, ErrorCode::InvalidArgument, "TW must be positive");
  return {Kind::Sinc1D, 0, tw};
}

KernelSpec KernelSpec::disk2d(double K) {
  require(K > 0, ErrorCode::InvalidArgument, "K must be positive");
  KernelSpec k{Kind::Disk2D};
  k.K = K;
  return k;
}

KernelSpec KernelSpec::fixed_m(int m, double n2d) {
  require(m >= 0 && n2d > 0, ErrorCode::InvalidArgument, "fixed-order kernel needs m >= 0, N2D > 0");
  KernelSpec k{Kind::FixedM, m};
  k.n2d = n2d;
  k.c = 2.0 * std::sqrt(n2d);
  return k;
}

KernelSpec KernelSpec::sqrt_bessel(int m, double c) {
  require(m >= 0 && c > 0, ErrorCode::InvalidArgument, "square-root kernel needs m >= 0, c > 0");
  KernelSpec k{Kind::SqrtBessel, m};
  k.c = c;
  k.n2d = c * c / 4.0;
  return k;
}

double KernelSpec::operator()(Point a, Point b) const {
  switch (kind) {
    case Kind::Sinc1D: return sinc_kernel(tw, a.x, b.x);
    case Kind::Disk2D: return disk_kernel(K, a, b);
    case Kind::FixedM: return fixedm_kernel(m, n2d, a.x, b.x);
    case Kind::SqrtBessel: return sqrt_kernel(m, c, a.x, b.x);
  }
  return 0.0;
}

}  // namespace slepian
