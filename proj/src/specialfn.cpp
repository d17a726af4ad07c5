#include "slepian/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slepian/error.hpp"

namespace slepian {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBig = 1e250;
constexpr double kBigInv = 1e-250;

void check_argument(double x) {
  require(std::isfinite(x), ErrorCode::InvalidArgument, "Bessel argument must be finite");
  require(x >= 0.0, ErrorCode::InvalidArgument, "Bessel argument must be non-negative");
}

// Ascending series. Only used where the terms decrease from the start, so
// there is no cancellation beyond a small constant factor.
double series(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  if (term == 0.0) return 0.0;
  const double q = -half * half;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (n + k));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

bool series_ok(int n, double x) { return x * x < 4.0 * (n + 1); }

int miller_start(int n, double x) {
  const double top = std::max(static_cast<double>(n), x);
  int start = static_cast<int>(top + 20.0 + 12.0 * std::cbrt(top));
  return start + (start & 1);
}

// Miller backward recurrence normalized with J0 + 2 sum J_2k = 1.
double miller(int n, double x) {
  const int start = miller_start(n, x);
  const double tox = 2.0 / x;
  double bjp = 0.0, bj = 1.0, sum = 0.0, ans = 0.0;
  bool even = false;
  for (int j = start; j > 0; --j) {
    const double bjm = j * tox * bj - bjp;
    bjp = bj;
    bj = bjm;
    if (std::abs(bj) > kBig) {
      bj *= kBigInv;
      bjp *= kBigInv;
      ans *= kBigInv;
      sum *= kBigInv;
    }
    if (even) sum += bj;
    even = !even;
    if (j - 1 == n) ans = bj;
  }
  sum = 2.0 * sum - bj;
  if (n == 0) ans = bj;
  return ans / sum;
}

// Hankel asymptotic expansion for orders 0 and 1, x >= 25.
double hankel(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double a = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
    if (std::abs(a) > prev || a == 0.0) break;
    prev = std::abs(a);
    switch (k % 4) {
      case 1: q += a; break;
      case 2: p -= a; break;
      case 3: q -= a; break;
      case 0: p += a; break;
    }
    if (std::abs(a) < 1e-18) break;
  }
  const double c = std::cos(x), s = std::sin(x);
  const double r = std::numbers::sqrt2 / 2.0;
  double cw, sw;
  if (nu == 0) {
    cw = (c + s) * r;
    sw = (s - c) * r;
  } else {
    cw = (s - c) * r;
    sw = (-s - c) * r;
  }
  return std::sqrt(2.0 / (kPi * x)) * (p * cw - q * sw);
}

double bessel_nonneg(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (n <= 1 && x < 5.0) return series(n, x);
  if (n <= 1 && x >= 25.0) return hankel(n, x);
  if (n > 1 && series_ok(n, x)) return series(n, x);
  return miller(n, x);
}

}  // namespace

double bessel_j(int n, double x) {
  check_argument(x);
  if (n < 0) {
    const double v = bessel_nonneg(-n, x);
    return (n % 2 == 0) ? v : -v;
  }
  return bessel_nonneg(n, x);
}

double bessel_j(BesselOrder order, double x) {
  if (order.is_half()) {
    check_argument(x);
    if (x == 0.0) return 0.0;
    return std::sqrt(2.0 / (kPi * x)) * std::sin(x);
  }
  return bessel_j(order.value(), x);
}

std::vector<double> bessel_j_sequence(int nmax, double x) {
  check_argument(x);
  require(nmax >= 0, ErrorCode::InvalidArgument, "bessel_j_sequence: nmax must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (x < 2.0) {
    for (int n = 0; n <= nmax; ++n) {
      out[n] = series(n, x);
      if (out[n] == 0.0) break;
    }
    return out;
  }
  const int start = miller_start(nmax, x);
  const double tox = 2.0 / x;
  double bjp = 0.0, bj = 1.0, sum = 0.0;
  bool even = false;
  for (int j = start; j > 0; --j) {
    const double bjm = j * tox * bj - bjp;
    bjp = bj;
    bj = bjm;
    if (std::abs(bj) > kBig) {
      bj *= kBigInv;
      bjp *= kBigInv;
      sum *= kBigInv;
      for (int k = j; k <= nmax; ++k) out[k] *= kBigInv;
    }
    if (even) sum += bj;
    even = !even;
    if (j - 1 <= nmax) out[j - 1] = bj;
  }
  sum = 2.0 * sum - bj;
  for (double& v : out) v /= sum;
  if (x >= 25.0) {
    out[0] = hankel(0, x);
    if (nmax >= 1) out[1] = hankel(1, x);
  }
  return out;
}

double bessel_j1_over_x(double x) {
  check_argument(x);
  if (x < 5.0) {
    // sum_k (-1)^k (x/2)^{2k} / (2 k! (k+1)!)
    const double q = -0.25 * x * x;
    double term = 0.5, sum = 0.5;
    for (int k = 1; k < 60; ++k) {
      term *= q / (static_cast<double>(k) * (k + 1));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  return bessel_nonneg(1, x) / x;
}

double jacobi_p(int l, int m, double x) {
  require(l >= 0 && m >= 0, ErrorCode::InvalidArgument,
          "jacobi_p: degree and parameter must be non-negative");
  if (l == 0) return 1.0;
  const double a = m;
  double p0 = 1.0;
  double p1 = (a + 1.0) + (a + 2.0) * (x - 1.0) / 2.0;
  for (int n = 2; n <= l; ++n) {
    const double s = 2.0 * n + a;
    const double num1 = (s - 1.0) * (s * (s - 2.0) * x + a * a);
    const double num2 = 2.0 * (n + a - 1.0) * (n - 1.0) * s;
    const double den = 2.0 * n * (n + a) * (s - 2.0);
    const double p2 = (num1 * p1 - num2 * p0) / den;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace slepian
