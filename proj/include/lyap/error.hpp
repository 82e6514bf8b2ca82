#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lyap {

// Root of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input data; carries the offending element index when one exists.
class ValidationError : public Error {
 public:
  static constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

  explicit ValidationError(const std::string& what, std::size_t index = kNoIndex)
      : Error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Residue / determinant formulas need distinct eigenvalues.
class DegenerateSpectrumError : public Error {
 public:
  DegenerateSpectrumError(const std::string& what, double relative_gap)
      : Error(what), relative_gap_(relative_gap) {}

  double relative_gap() const noexcept { return relative_gap_; }

 private:
  double relative_gap_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Numerical breakdown inside the Monte Carlo engine (rank collapse, overflow).
class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lyap
