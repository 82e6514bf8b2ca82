#include "lyap/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "lyap/error.hpp"
#include "lyap/specfn.hpp"

namespace lyap::closed {
namespace {

using specfn::digamma;

void require_distinct(std::span<const double> y, const char* who) {
  const double gap = relative_gap(y);
  if (gap < kDegeneracyThreshold) {
    std::ostringstream msg;
    msg << who << ": eigenvalues y_i = 1/sigma_i^2 must be distinct (relative gap " << gap << " < "
        << kDegeneracyThreshold << "); use the quadrature path";
    throw DegenerateSpectrumError(msg.str(), gap);
  }
}

void require_dim(int d) {
  if (d < 1) throw ValidationError("dimension must be at least 1, got " + std::to_string(d));
}

void require_sigma(double sigma_sq) {
  if (!std::isfinite(sigma_sq) || !(sigma_sq > 0.0))
    throw ValidationError("sigma^2 must be positive and finite");
}

std::vector<double> iso(int d, double sigma_sq, const std::function<double(int)>& term) {
  require_dim(d);
  require_sigma(sigma_sq);
  std::vector<double> mu(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) mu[static_cast<std::size_t>(i - 1)] = term(i);
  return mu;
}

// Elementary symmetric polynomial e_r of the values, excluding index skip.
long double elementary_symmetric(std::span<const double> v, std::size_t skip, std::size_t r) {
  std::vector<long double> e(r + 1, 0.0L);
  e[0] = 1.0L;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == skip) continue;
    for (std::size_t m = r; m >= 1; --m) e[m] += e[m - 1] * static_cast<long double>(v[i]);
  }
  return e[r];
}

// Exact-argument Carlson evaluation of alpha * Pi(phi(x), n, k^2) for the real
// amplitude sin^2(phi) = (y1 - y2)/(y1 + x).
double alpha_pi(const EllipticReduction& r, double x) {
  const double den = r.y1 + x;
  const double s2 = (r.y1 - r.y2) / den;
  const double s = std::sqrt(s2);
  const double c2 = (r.y2 + x) / den;
  const double delta2 = (r.y3 + x) / den;
  const double p = x / den;
  const double pi = s * specfn::carlson_rf(c2, delta2, 1.0) +
                    r.n / 3.0 * s2 * s * specfn::carlson_rj(c2, delta2, 1.0, p);
  return r.alpha * pi;
}

}  // namespace

std::vector<double> newman_exponents(int d, double sigma_sq) {
  return iso(d, sigma_sq, [&](int i) { return 0.5 * (std::log(2.0 * sigma_sq) + digamma(0.5 * (d - i + 1))); });
}

std::vector<double> complex_iso_exponents(int d, double sigma_sq) {
  return iso(d, sigma_sq, [&](int i) { return 0.5 * (std::log(sigma_sq) + digamma(d - i + 1.0)); });
}

std::vector<double> quaternion_iso_exponents(int d, double sigma_sq) {
  return iso(d, sigma_sq, [&](int i) {
    return 0.5 * (std::log(sigma_sq) - std::log(2.0) + digamma(2.0 * (d - i + 1)));
  });
}

std::vector<double> isotropic_exponents(Beta beta, int d, double sigma_sq) {
  switch (beta) {
    case Beta::Real:
      return newman_exponents(d, sigma_sq);
    case Beta::Complex:
      return complex_iso_exponents(d, sigma_sq);
    case Beta::Quaternion:
      return quaternion_iso_exponents(d, sigma_sq);
  }
  return {};
}

bool is_isotropic(const Spectrum& s) {
  const auto v = s.sigma_sq();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) <= 1e-12 * *hi;
}

double forrester_kth_complex(int k, const Spectrum& s) {
  const auto y = s.y();
  const std::size_t d = y.size();
  if (k < 1 || static_cast<std::size_t>(k) > d)
    throw ValidationError("forrester_kth_complex: k must lie in [1, d]");
  require_distinct(y, "forrester_kth_complex");

  const std::size_t r = d - static_cast<std::size_t>(k);
  const long double sign = (r % 2 == 0) ? 1.0L : -1.0L;
  long double ratio = 0.0L;
  for (std::size_t j = 0; j < d; ++j) {
    const long double yj = y[j];
    long double denom = 1.0L;
    for (std::size_t l = 0; l < d; ++l)
      if (l != j) denom *= yj - static_cast<long double>(y[l]);
    const long double coeff = sign * elementary_symmetric(y, j, r) / denom;
    ratio += std::log(yj) * std::pow(yj, static_cast<long double>(k - 1)) * coeff;
  }
  return 0.5 * digamma(static_cast<double>(k)) - 0.5 * static_cast<double>(ratio);
}

double mannion_2x2(const Spectrum& s) {
  if (s.dim() != 2) throw ValidationError("mannion_2x2 needs d = 2, got d = " + std::to_string(s.dim()));
  const double a = s.sigma_sq()[0];
  const double b = s.sigma_sq()[1];
  return 0.5 * (digamma(1.0) + std::log(0.5 * (a + b) + std::sqrt(a * b)));
}

EllipticReduction elliptic_reduction(const Spectrum& s) {
  if (s.dim() != 3) throw ValidationError("elliptic reduction needs d = 3, got d = " + std::to_string(s.dim()));
  std::vector<double> y(s.y().begin(), s.y().end());
  std::sort(y.begin(), y.end(), std::greater<>());
  if ((y[0] - y[1]) < kDegeneracyThreshold * y[0]) {
    std::ostringstream msg;
    msg << "elliptic reduction needs y1 > y2 strictly, got y = [" << y[0] << ", " << y[1] << ", " << y[2] << "]";
    throw DegenerateSpectrumError(msg.str(), (y[0] - y[1]) / y[0]);
  }
  EllipticReduction r;
  r.y1 = y[0];
  r.y2 = y[1];
  r.y3 = y[2];
  const double c = r.y1 - r.y2;
  r.k_sq = (r.y1 - r.y3) / c;
  r.n = r.y1 / c;
  r.alpha = 2.0 * std::sqrt(r.y2 * r.y3 / (r.y1 * c));
  return r;
}

double elliptic_3x3_expression(const Spectrum& s) {
  const EllipticReduction r = elliptic_reduction(s);

  // With phi = -asin(.), F and Pi are odd in phi: -alpha F(phi(0)) = +alpha F(|phi(0)|)
  // and alpha Pi(phi(x)) - log x = -(alpha Pi(|phi(x)|) + log x).
  const double f0 = std::sqrt((r.y1 - r.y2) / r.y1) * specfn::carlson_rf(r.y2 / r.y1, r.y3 / r.y1, 1.0);

  auto g = [&](double x) { return alpha_pi(r, x) + std::log(x); };
  // g(x) = L + c1 x + c2 x^2 + ...; eliminate the first two powers.
  const double h = 1e-4 * r.y3;
  const double g0 = g(h), g1 = g(h / 10.0), g2 = g(h / 100.0);
  const double r01 = (10.0 * g1 - g0) / 9.0;
  const double r12 = (10.0 * g2 - g1) / 9.0;
  const double limit = (100.0 * r12 - r01) / 99.0;

  return digamma(1.0) + std::log(2.0) + r.alpha * f0 - limit;
}

double real_3x3_elliptic(const Spectrum& s) { return 0.5 * elliptic_3x3_expression(s); }

double paired_f(std::span<const double> l, std::span<const double> y) {
  if (l.size() != y.size() || y.empty()) throw ValidationError("paired_f: l and y must be nonempty and equal length");
  long double total = 0.0L;
  for (std::size_t i = 0; i < y.size(); ++i) {
    long double w = 1.0L;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == i) continue;
      w *= static_cast<long double>(y[j]) / (static_cast<long double>(y[j]) - y[i]);
    }
    total += static_cast<long double>(l[i]) * w;
  }
  return static_cast<double>(total);
}

double real_paired_spectrum(std::span<const double> y_half) {
  if (y_half.empty()) throw ValidationError("real_paired_spectrum: need at least one value");
  for (std::size_t i = 0; i < y_half.size(); ++i)
    if (!std::isfinite(y_half[i]) || !(y_half[i] > 0.0))
      throw ValidationError("real_paired_spectrum: y values must be positive and finite", i);
  require_distinct(y_half, "real_paired_spectrum");
  std::vector<double> log_y(y_half.size());
  for (std::size_t i = 0; i < y_half.size(); ++i) log_y[i] = std::log(y_half[i]);
  return 0.5 * (digamma(1.0) + std::log(2.0) - paired_f(log_y, y_half));
}

std::vector<double> paired_halves(const Spectrum& s) {
  if (s.dim() % 2 != 0) return {};
  std::vector<double> y(s.y().begin(), s.y().end());
  std::sort(y.begin(), y.end());
  std::vector<double> half;
  for (std::size_t i = 0; i < y.size(); i += 2) {
    if (std::abs(y[i + 1] - y[i]) > 1e-12 * y[i + 1]) return {};
    half.push_back(y[i]);
  }
  if (relative_gap(half) < kDegeneracyThreshold) return {};
  return half;
}

double quaternion_residue_sum(const Spectrum& s) {
  const auto y = s.y();
  require_distinct(y, "quaternion_largest");
  long double total = 0.0L;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const long double yi = y[i];
    // (prod y)^2 / (y_i^2 prod_{j!=i} (y_i - y_j)^2) = prod_{j!=i} (y_j / (y_i - y_j))^2
    long double weight = 1.0L;
    long double inner = 1.0L;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == i) continue;
      const long double diff = yi - static_cast<long double>(y[j]);
      const long double ratio = static_cast<long double>(y[j]) / diff;
      weight *= ratio * ratio;
      inner += 2.0L * yi / diff;
    }
    total += weight * (1.0L - std::log(yi) * inner);
  }
  return static_cast<double>(total);
}

double quaternion_largest(const Spectrum& s) {
  return 0.5 * (digamma(1.0) - std::log(2.0) + quaternion_residue_sum(s));
}

}  // namespace lyap::closed
