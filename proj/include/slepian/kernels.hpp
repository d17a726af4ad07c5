#pragma once

#include "slepian/geometry.hpp"

namespace slepian {

/// sin(TW (x - x')) / (pi (x - x')), TW/pi on the diagonal.
double sinc_kernel(double tw, double x, double xp);

/// K J_1(K |a - b|) / (2 pi |a - b|), K^2/(4 pi) on the diagonal.
double disk_kernel(double K, Point a, Point b);

/// 4 N2D int_0^1 J_m(c p xi) J_m(c p xi') p dp with c = 2 sqrt(N2D), by
/// Gauss-Legendre in p with ceil(4 sqrt(N2D)) + 32 nodes.
double fixedm_kernel(int m, double n2d, double xi, double xip);

/// J_m(c xi xi') sqrt(c xi xi'), zero when xi xi' = 0.
double sqrt_kernel(int m, double c, double xi, double xip);

/// Half-order square-root kernels in closed form: order +1/2 gives
/// sqrt(2/pi) sin(c xi xi'), order -1/2 gives sqrt(2/pi) cos(c xi xi').
enum class HalfOrder { Plus, Minus };
double sqrt_kernel_half(HalfOrder order, double c, double xi, double xip);

/// A concrete kernel with its parameters. One-dimensional kernels read the x
/// coordinate of their arguments.
struct KernelSpec {
  enum class Kind { Sinc1D, Disk2D, FixedM, SqrtBessel };

  Kind kind;
  int m = 0;
  double tw = 0.0;
  double K = 0.0;
  double n2d = 0.0;
  double c = 0.0;

  static KernelSpec sinc1d(double tw);
  static KernelSpec disk2d(double K);
  static KernelSpec fixed_m(int m, double n2d);
  static KernelSpec sqrt_bessel(int m, double c);

  double operator()(Point a, Point b) const;
};

}  // namespace slepian
