#pragma once

// Largest Lyapunov exponent of products of i.i.d. Gaussian matrices
// A = Sigma^{1/2} G (real, complex or quaternion entries) via the real-axis
// integral
//
//   2 mu_1 = Psi(1) + log(2/beta)
//            + int_0^inf [1_{[0,1]}(x) - prod_i (1 + x/y_i)^{-beta/2}] dx/x,
//
// with y_i = 1/sigma_i^2.

#include <optional>
#include <string>

#include "lyap/gauss_kronrod.hpp"
#include "lyap/spectrum.hpp"

namespace lyap {

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  // Truncation point X of the [1, inf) piece. Zero selects it from abs_tol
  // and the x^{-beta d/2} decay of the integrand.
  double tail_cut = 0.0;

  void validate() const;
};

enum class Method { Quadrature, ClosedForm, Asymptotic, MonteCarlo };

std::string to_string(Method m);

// A value in nats per step (mu_1 or a partial sum of exponents).
// std_error is present exactly for Monte Carlo estimates.
struct ExponentEstimate {
  double value = 0.0;
  Method method = Method::Quadrature;
  std::optional<double> std_error;
  std::optional<double> quad_error;

  static ExponentEstimate analytic(double v, Method m) { return {v, m, std::nullopt, std::nullopt}; }
};

// [1_{[0,1]}(x) - prod (1 + x/y_i)^{-beta/2}] / x, evaluated in log space.
// The indicator includes x = 1. Throws DomainError unless x > 0.
double integrand(Beta beta, const Spectrum& s, double x);

// The integral term alone (split at x = 1, tail mapped by x = e^u).
quad::IntegrationResult exponent_integral(Beta beta, const Spectrum& s, const QuadConfig& cfg = {});

// mu_1 by adaptive quadrature. Throws ConvergenceError (with the achieved
// error) if the subdivision limit is hit first.
ExponentEstimate largest_exponent(Beta beta, const Spectrum& s, const QuadConfig& cfg = {});

// mu_1 + ... + mu_d from the closed-form sum rules.
ExponentEstimate sum_all_exponents(Beta beta, const Spectrum& s);

}  // namespace lyap
