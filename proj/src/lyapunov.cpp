#include "lyap/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "lyap/error.hpp"
#include "lyap/specfn.hpp"

namespace lyap {
namespace {

// Distinct y values with multiplicities, ascending. Evaluating the product
// over this canonical form makes the integrand independent of caller order
// and costs O(#distinct) per point.
struct GroupedSpectrum {
  std::vector<double> y;
  std::vector<double> mult;
};

GroupedSpectrum group(const Spectrum& s) {
  std::vector<double> y(s.y().begin(), s.y().end());
  std::sort(y.begin(), y.end());
  GroupedSpectrum g;
  for (double v : y) {
    if (!g.y.empty() && g.y.back() == v) {
      g.mult.back() += 1.0;
    } else {
      g.y.push_back(v);
      g.mult.push_back(1.0);
    }
  }
  return g;
}

// -(beta/2) sum_i log1p(x / y_i), Neumaier-compensated.
double log_product(double half_beta, const GroupedSpectrum& g, double x) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < g.y.size(); ++i) {
    const double term = g.mult[i] * std::log1p(x / g.y[i]);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return -half_beta * (sum + comp);
}

double grouped_integrand(double half_beta, const GroupedSpectrum& g, double x) {
  const double lp = log_product(half_beta, g, x);
  if (x <= 1.0) return -std::expm1(lp) / x;
  return -std::exp(lp) / x;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw ValidationError("quadrature tolerances must be positive");
  if (max_subdivisions < 10) throw ValidationError("max_subdivisions must be at least 10");
  if (!(tail_cut >= 0.0) || (tail_cut > 0.0 && tail_cut <= 1.0))
    throw ValidationError("tail_cut must be 0 (automatic) or greater than 1");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Quadrature:
      return "quadrature";
    case Method::ClosedForm:
      return "closed_form";
    case Method::Asymptotic:
      return "asymptotic";
    case Method::MonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

double integrand(Beta beta, const Spectrum& s, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("integrand: x must be positive and finite");
  return grouped_integrand(0.5 * beta_value(beta), group(s), x);
}

quad::IntegrationResult exponent_integral(Beta beta, const Spectrum& s, const QuadConfig& cfg) {
  cfg.validate();
  const GroupedSpectrum g = group(s);
  const double half_beta = 0.5 * beta_value(beta);
  const double decay = half_beta * static_cast<double>(s.dim());  // P(x) ~ x^{-decay}

  // [0, 1]: bounded integrand with limit (beta/2) sum 1/y_i at 0.
  const auto left = quad::integrate([&](double x) { return grouped_integrand(half_beta, g, x); }, 0.0, 1.0,
                                    0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);

  // [1, inf) with x = e^u: int_0^U P(e^u) du, P decays like e^{-decay u}.
  double log_y_sum = 0.0;
  for (std::size_t i = 0; i < g.y.size(); ++i) log_y_sum += g.mult[i] * std::log(g.y[i]);
  double u_max;
  if (cfg.tail_cut > 0.0) {
    u_max = std::log(cfg.tail_cut);
  } else {
    const double log_target = std::log(1e-3 * cfg.abs_tol);
    u_max = (half_beta * log_y_sum - std::log(decay) - log_target) / decay;
    u_max = std::max(u_max, std::log(g.y.back()) + 10.0);
    u_max = std::max(u_max, 1.0);
  }
  auto right = quad::integrate([&](double u) { return std::exp(log_product(half_beta, g, std::exp(u))); }, 0.0,
                               u_max, 0.5 * cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
  // Analytic remainder: int_U^inf prod y_i^{beta/2} e^{-decay u} du.
  const double tail = std::exp(half_beta * log_y_sum - decay * u_max) / decay;

  quad::IntegrationResult r;
  r.value = left.value - (right.value + tail);
  r.error = left.error + right.error;
  r.intervals = left.intervals + right.intervals;
  r.converged = left.converged && right.converged;
  return r;
}

ExponentEstimate largest_exponent(Beta beta, const Spectrum& s, const QuadConfig& cfg) {
  const auto integral = exponent_integral(beta, s, cfg);
  const double two_mu = specfn::digamma(1.0) + std::log(2.0 / beta_value(beta)) + integral.value;
  if (!integral.converged) {
    std::ostringstream msg;
    msg << "largest_exponent: quadrature did not converge within " << cfg.max_subdivisions
        << " subdivisions (achieved error " << 0.5 * integral.error << ")";
    throw ConvergenceError(msg.str(), 0.5 * integral.error);
  }
  ExponentEstimate e = ExponentEstimate::analytic(0.5 * two_mu, Method::Quadrature);
  e.quad_error = 0.5 * integral.error;
  return e;
}

ExponentEstimate sum_all_exponents(Beta beta, const Spectrum& s) {
  const auto y = s.y();
  double total = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double i = static_cast<double>(k + 1);
    switch (beta) {
      case Beta::Real:
        total += std::log(2.0 / y[k]) + specfn::digamma(0.5 * i);
        break;
      case Beta::Complex:
        total += std::log(1.0 / y[k]) + specfn::digamma(i);
        break;
      case Beta::Quaternion:
        total += std::log(1.0 / (2.0 * y[k])) + specfn::digamma(2.0 * i);
        break;
    }
  }
  return ExponentEstimate::analytic(0.5 * total, Method::ClosedForm);
}

}  // namespace lyap
