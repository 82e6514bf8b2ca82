#include "lyap/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "json.hpp"
#include "lyap/error.hpp"

namespace lyap {

Beta beta_from_int(int value) {
  switch (value) {
    case 1:
      return Beta::Real;
    case 2:
      return Beta::Complex;
    case 4:
      return Beta::Quaternion;
    default:
      throw ValidationError("beta must be 1, 2 or 4, got " + std::to_string(value));
  }
}

Spectrum::Spectrum(std::vector<double> sigma_sq) : sigma_sq_(std::move(sigma_sq)) {
  if (sigma_sq_.empty()) throw ValidationError("spectrum must contain at least one eigenvalue");
  y_.reserve(sigma_sq_.size());
  for (std::size_t i = 0; i < sigma_sq_.size(); ++i) {
    const double v = sigma_sq_[i];
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw ValidationError("spectrum entry " + std::to_string(i) + " must be positive and finite, got " +
                                std::to_string(v),
                            i);
    }
    y_.push_back(1.0 / v);
  }
}

Spectrum make_spectrum(std::vector<double> sigma_sq) { return Spectrum(std::move(sigma_sq)); }

void SpikeModel::validate() const {
  if (d < 2) throw ValidationError("spike model needs d >= 2, got " + std::to_string(d));
  if (!std::isfinite(theta) || !(theta > 1.0))
    throw ValidationError("spike model needs theta > 1, got " + std::to_string(theta));
}

Spectrum spike_spectrum(const SpikeModel& m) {
  m.validate();
  std::vector<double> s(static_cast<std::size_t>(m.d), 1.0);
  s.back() = m.theta;
  return Spectrum(std::move(s));
}

double min_gap(const Spectrum& s) {
  if (s.dim() < 2) throw ValidationError("min_gap needs at least two eigenvalues");
  std::vector<double> y(s.y().begin(), s.y().end());
  std::sort(y.begin(), y.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < y.size(); ++i) gap = std::min(gap, y[i] - y[i - 1]);
  return gap;
}

double relative_gap(std::span<const double> y) {
  if (y.size() < 2) return std::numeric_limits<double>::infinity();
  std::vector<double> v(y.begin(), y.end());
  std::sort(v.begin(), v.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < v.size(); ++i) gap = std::min(gap, v[i] - v[i - 1]);
  return gap / v.back();
}

double relative_gap(const Spectrum& s) { return relative_gap(s.y()); }

Spectrum spectrum_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("spectrum JSON does not parse: ") + e.what());
  }
  if (!j.is_array()) throw ValidationError("spectrum JSON must be an array of sigma^2 values");
  std::vector<double> values;
  values.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw ValidationError("spectrum entry " + std::to_string(i) + " is not a number", i);
    values.push_back(j[i].get<double>());
  }
  return Spectrum(std::move(values));
}

std::string spectrum_to_json(const Spectrum& s) {
  nlohmann::json j = std::vector<double>(s.sigma_sq().begin(), s.sigma_sq().end());
  return j.dump();
}

}  // namespace lyap
