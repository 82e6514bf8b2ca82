#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lyap {

// Dyson index of the entry field: real, complex or quaternion.
enum class Beta : int { Real = 1, Complex = 2, Quaternion = 4 };

inline double beta_value(Beta b) noexcept { return static_cast<double>(static_cast<int>(b)); }

// Accepts exactly 1, 2 or 4; throws ValidationError otherwise.
Beta beta_from_int(int value);

// Eigenvalues sigma_i^2 of the covariance matrix, in caller order.
//
// The inverses y_i = 1 / sigma_i^2 are derived on construction and never set
// independently. Instances are immutable.
class Spectrum {
 public:
  // Throws ValidationError (carrying the index) for empty input or any entry
  // that is not positive and finite.
  explicit Spectrum(std::vector<double> sigma_sq);

  std::size_t dim() const noexcept { return sigma_sq_.size(); }
  std::span<const double> sigma_sq() const noexcept { return sigma_sq_; }
  std::span<const double> y() const noexcept { return y_; }

  bool operator==(const Spectrum& other) const { return sigma_sq_ == other.sigma_sq_; }

 private:
  std::vector<double> sigma_sq_;
  std::vector<double> y_;
};

Spectrum make_spectrum(std::vector<double> sigma_sq);

// One spike theta > 1 on top of a unit covariance of dimension d >= 2.
struct SpikeModel {
  int d = 2;
  double theta = 2.0;

  // Throws ValidationError unless d >= 2 and theta > 1.
  void validate() const;
  // t = d / theta, 0 < t < d.
  double t() const noexcept { return d / theta; }
};

// sigma^2 = [1, ..., 1, theta].
Spectrum spike_spectrum(const SpikeModel& m);

// min_{i<j} |y_i - y_j|; needs d >= 2.
double min_gap(const Spectrum& s);

// min_gap relative to max(y). Residue-type closed forms reject spectra below
// kDegeneracyThreshold.
double relative_gap(const Spectrum& s);
inline constexpr double kDegeneracyThreshold = 1e-8;

// Same as relative_gap but for a raw list of y values.
double relative_gap(std::span<const double> y);

// Interchange form: a JSON array of sigma_i^2 values.
Spectrum spectrum_from_json(const std::string& text);
std::string spectrum_to_json(const Spectrum& s);

}  // namespace lyap
