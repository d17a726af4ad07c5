#pragma once

#include <vector>

namespace slepian {

/// Order of a Bessel function of the first kind: any integer (negative orders
/// via J_{-m} = (-1)^m J_m) or the half-integer 1/2.
class BesselOrder {
 public:
  static constexpr BesselOrder integer(int m) { return BesselOrder(2 * m); }
  static constexpr BesselOrder half() { return BesselOrder(1); }

  constexpr bool is_half() const { return twice_ == 1; }
  constexpr int value() const { return twice_ / 2; }

 private:
  constexpr explicit BesselOrder(int twice) : twice_(twice) {}
  int twice_;
};

/// J_order(x) for x >= 0. Integer orders use the ascending series for small
/// arguments, Hankel asymptotics for J0/J1 at large arguments and Miller's
/// backward recurrence elsewhere.
double bessel_j(BesselOrder order, double x);
double bessel_j(int n, double x);

/// J_0(x) ... J_nmax(x) from a single backward recurrence.
std::vector<double> bessel_j_sequence(int nmax, double x);

/// J_1(x)/x with the removable singularity filled (1/2 at x = 0).
double bessel_j1_over_x(double x);

/// Jacobi polynomial P_l^{(m,0)}(x) by the three-term recurrence in l.
double jacobi_p(int l, int m, double x);

}  // namespace slepian
