#include "lyap/specfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lyap/error.hpp"

namespace lyap::specfn {
namespace {

// Below this argument Ei(-t) is summed from its power series, above it from
// the continued fraction. Both branches agree to ~1e-15 at the seam.
constexpr double kEiSeriesLimit = 2.0;

// Relative tolerance driving the Carlson duplication loops.
constexpr double kCarlsonTol = 1e-16;

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

// R_C(1, 1 + e) for |e| << 1.
double rc_near_unit(double e) { return 1.0 - e / 3.0 + e * e / 5.0; }

void check_legendre(const EllipticParams& p) {
  const double s2 = p.amplitude_sin_sq;
  if (!(s2 >= 0.0 && s2 <= 1.0))
    throw DomainError("elliptic: sin^2(phi) must lie in [0,1], got " + std::to_string(s2));
  if (!std::isfinite(p.modulus_sq) || !(p.modulus_sq * s2 < 1.0))
    throw DomainError("elliptic: k^2 sin^2(phi) must be < 1");
  if (!std::isfinite(p.characteristic))
    throw DomainError("elliptic: characteristic must be finite");
}

}  // namespace

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("digamma: argument must be positive and finite, got " + std::to_string(x));

  // Psi(x) = Psi(x + n) - sum_{j<n} 1/(x + j)
  double shift = 0.0;
  while (x < 8.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double r = 1.0 / (x * x);
  // -sum B_{2n} / (2n x^{2n}), n = 1..7
  const double tail =
      r * (-1.0 / 12 +
           r * (1.0 / 120 +
                r * (-1.0 / 252 +
                     r * (1.0 / 240 + r * (-1.0 / 132 + r * (691.0 / 32760 + r * (-1.0 / 12)))))));
  return (std::log(x) - 0.5 / x + tail) - shift;
}

double expint_ei_neg(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError("expint_ei_neg: argument must be positive and finite, got " + std::to_string(t));

  if (t < kEiSeriesLimit) {
    // E1(t) = -gamma - log t - sum_{k>=1} (-t)^k / (k k!)
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      term *= -t / k;
      const double add = term / k;
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    const double e1 = -kEulerGamma - std::log(t) - sum;
    return -e1;
  }

  // E1(t) = e^{-t} / (t + 1 - 1/(t + 3 - 4/(t + 5 - ...))), modified Lentz.
  constexpr double tiny = 1e-300;
  double b = t + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return -h * std::exp(-t);
}

double carlson_rc(double x, double y) {
  if (!finite_nonneg(x) || !(y > 0.0) || !std::isfinite(y))
    throw DomainError("carlson_rc: need x >= 0, y > 0");
  if (x == 0.0) return M_PI / (2.0 * std::sqrt(y));
  const double diff = y - x;
  if (std::abs(diff) < 1e-8 * x) return rc_near_unit(diff / x) / std::sqrt(x);
  if (diff > 0.0) return std::atan(std::sqrt(diff / x)) / std::sqrt(diff);
  // x > y: log((sqrt(x) + sqrt(x - y)) / sqrt(y)) / sqrt(x - y), with the
  // ratio written so that nothing cancels as y -> 0.
  const double w = std::sqrt(-diff);
  return std::log1p((-diff / (std::sqrt(x) + std::sqrt(y)) + w) / std::sqrt(y)) / w;
}

double carlson_rf(double x, double y, double z) {
  if (!finite_nonneg(x) || !finite_nonneg(y) || !finite_nonneg(z))
    throw DomainError("carlson_rf: arguments must be finite and nonnegative");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
    throw DomainError("carlson_rf: at most one argument may vanish");

  const double x0 = x, y0 = y;
  const double a0 = (x + y + z) / 3.0;
  double a = a0;
  const double q = std::pow(3.0 * kCarlsonTol, -1.0 / 6.0) *
                   std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double f4 = 1.0;
  while (f4 * q >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    a = 0.25 * (a + lam);
    f4 *= 0.25;
  }
  // A_m - x_m = 4^{-m} (A_0 - x_0)
  const double X = (a0 - x0) * f4 / a;
  const double Y = (a0 - y0) * f4 / a;
  const double Z = -(X + Y);
  const double e2 = X * Y - Z * Z;
  const double e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

double carlson_rj(double x, double y, double z, double p) {
  if (!finite_nonneg(x) || !finite_nonneg(y) || !finite_nonneg(z))
    throw DomainError("carlson_rj: x, y, z must be finite and nonnegative");
  if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
    throw DomainError("carlson_rj: at most one of x, y, z may vanish");
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("carlson_rj: p must be positive");

  const double x0 = x, y0 = y, z0 = z;
  const double a0 = (x + y + z + 2.0 * p) / 5.0;
  const double q = std::pow(0.25 * kCarlsonTol, -1.0 / 6.0) *
                   std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z), std::abs(a0 - p)});
  double a = a0;
  double f4 = 1.0;
  double sum = 0.0;
  while (f4 * q >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    // R_C(alpha, beta) with both arguments free of cancellation, which keeps
    // p << x, y, z accurate.
    const double root = p * (sx + sy + sz) + sx * sy * sz;
    const double alpha = root * root;
    const double beta = p * (p + lam) * (p + lam);
    sum += f4 * carlson_rc(alpha, beta);
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    p = 0.25 * (p + lam);
    a = 0.25 * (a + lam);
    f4 *= 0.25;
  }
  const double X = (a0 - x0) * f4 / a;
  const double Y = (a0 - y0) * f4 / a;
  const double Z = (a0 - z0) * f4 / a;
  const double P = -0.5 * (X + Y + Z);
  const double e2 = X * Y + X * Z + Y * Z - 3.0 * P * P;
  const double e3 = X * Y * Z + 2.0 * e2 * P + 4.0 * P * P * P;
  const double e4 = (2.0 * X * Y * Z + e2 * P + 3.0 * P * P * P) * P;
  const double e5 = X * Y * Z * P * P;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 -
                        9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return f4 * series / (a * std::sqrt(a)) + 3.0 * sum;
}

double legendre_f(const EllipticParams& p) {
  check_legendre(p);
  const double s2 = p.amplitude_sin_sq;
  if (s2 == 0.0) return 0.0;
  const double s = std::sqrt(s2);
  return s * carlson_rf(1.0 - s2, 1.0 - p.modulus_sq * s2, 1.0);
}

double legendre_pi(const EllipticParams& p) {
  check_legendre(p);
  const double s2 = p.amplitude_sin_sq;
  if (!(p.characteristic * s2 < 1.0))
    throw DomainError("legendre_pi: n sin^2(phi) >= 1 puts a pole on the integration path");
  if (s2 == 0.0) return 0.0;
  const double s = std::sqrt(s2);
  const double c2 = 1.0 - s2;
  const double delta2 = 1.0 - p.modulus_sq * s2;
  const double f = s * carlson_rf(c2, delta2, 1.0);
  if (p.characteristic == 0.0) return f;
  return f + p.characteristic / 3.0 * s2 * s * carlson_rj(c2, delta2, 1.0, 1.0 - p.characteristic * s2);
}

}  // namespace lyap::specfn
