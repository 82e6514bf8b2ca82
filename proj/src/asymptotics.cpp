#include "lyap/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lyap/error.hpp"
#include "lyap/gauss_kronrod.hpp"
#include "lyap/specfn.hpp"

namespace lyap::asym {
namespace {

void check_spike_args(int d, double t) {
  if (d < 2) throw DomainError("spike asymptotics need d >= 2, got " + std::to_string(d));
  if (!(t > 0.0) || !(t < d)) throw DomainError("spike asymptotics need 0 < t < d, got t = " + std::to_string(t));
}

}  // namespace

double spike_complex_asymptotic(int d, double t) {
  check_spike_args(d, t);
  return std::log(static_cast<double>(d)) - std::exp(t) * specfn::expint_ei_neg(t);
}

double spike_real_integral(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("spike_real_integral: t must be positive");
  // x = u^2: 2 int_1^inf e^{-t (u^2 - 1)/2} / (u + 1) du; stop once the exponent passes 745.
  const double u_max = std::sqrt(1.0 + 2.0 * 745.0 / t);
  const auto r = quad::integrate(
      [t](double u) { return 2.0 * std::exp(-0.5 * t * (u - 1.0) * (u + 1.0)) / (u + 1.0); }, 1.0, u_max, 1e-15,
      1e-13, 4000);
  if (!r.converged) throw ConvergenceError("spike_real_integral: quadrature did not converge", r.error);
  return r.value;
}

double spike_real_asymptotic(int d, double t) {
  check_spike_args(d, t);
  return std::log(static_cast<double>(d)) + spike_real_integral(t);
}

SpikeAsymptotics spike_asymptotics(Beta beta, int d, double t) {
  SpikeAsymptotics a;
  a.d = d;
  a.t = t;
  switch (beta) {
    case Beta::Real:
      a.value_2mu1 = spike_real_asymptotic(d, t);
      break;
    case Beta::Complex:
      a.value_2mu1 = spike_complex_asymptotic(d, t);
      break;
    case Beta::Quaternion:
      throw ValidationError("no spike expansion is available for beta = 4");
  }
  return a;
}

double f_d_series(double theta, int d) {
  if (!(theta > 1.0) || !std::isfinite(theta)) throw DomainError("f_d_series: theta must exceed 1");
  if (d < 1) throw DomainError("f_d_series: d must be at least 1");
  const double s = (theta - 1.0) / theta;
  // Terms shrink at least geometrically with ratio s, so the neglected tail
  // after term t_k is below t_k s / (1 - s).
  const double tail_factor = s / (1.0 - s);
  double power = s;
  double sum = 0.0;
  double comp = 0.0;
  for (long k = 0;; ++k) {
    const double term = power / (static_cast<double>(d) + static_cast<double>(k));
    const double y = term - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
    if (term * tail_factor < 1e-17 * sum || term == 0.0) break;
    power *= s;
  }
  return sum;
}

double spike_exact_complex(double theta, int d) {
  if (d < 2) throw DomainError("spike_exact_complex: d must be at least 2");
  return specfn::digamma(static_cast<double>(d)) + f_d_series(theta, d);
}

double free_limit(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("free_limit: lambda must be positive");
  return 0.5 * std::log(lambda);
}

double free_limit_error(Beta beta, std::span<const double> theta, const QuadConfig& cfg) {
  if (theta.empty()) throw ValidationError("free_limit_error: empty eigenvalue profile");
  const double d = static_cast<double>(theta.size());
  std::vector<double> sigma_sq(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) sigma_sq[i] = theta[i] / d;
  const Spectrum s(std::move(sigma_sq));
  const double mean = std::accumulate(theta.begin(), theta.end(), 0.0) / d;
  return largest_exponent(beta, s, cfg).value - free_limit(mean);
}

}  // namespace lyap::asym
