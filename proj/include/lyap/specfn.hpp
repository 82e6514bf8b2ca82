#pragma once

// Real special functions used by the Lyapunov formulas: digamma, the
// exponential integral on the negative axis and incomplete elliptic integrals
// (Carlson symmetric forms with Legendre wrappers).
//
// Every function is pure; out-of-domain arguments raise lyap::DomainError.

namespace lyap::specfn {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Psi(x) = d/dx log Gamma(x), x > 0.
double digamma(double x);

// Ei(-t) = -E1(t) = -integral_t^inf e^{-u}/u du, t > 0. Always negative.
double expint_ei_neg(double t);

// Carlson symmetric integrals. R_F needs x, y, z >= 0 with at most one zero;
// R_J additionally needs p > 0; R_C needs x >= 0, y > 0.
double carlson_rf(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);
double carlson_rc(double x, double y);

// Amplitude is given as sin^2(phi) with phi in [0, pi/2].
struct EllipticParams {
  double amplitude_sin_sq = 0.0;
  double modulus_sq = 0.0;
  double characteristic = 0.0;
};

// F(phi, k^2) = integral_0^{sin phi} dt / sqrt((1 - t^2)(1 - k^2 t^2)).
double legendre_f(const EllipticParams& p);

// Pi(phi, n, k^2) = integral_0^{sin phi} dt / ((1 - n t^2) sqrt((1 - t^2)(1 - k^2 t^2))).
// Throws DomainError when n sin^2(phi) >= 1 (pole on the integration path).
double legendre_pi(const EllipticParams& p);

}  // namespace lyap::specfn
