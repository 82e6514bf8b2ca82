#pragma once

#include <functional>

namespace lyap::quad {

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;   // sum of per-interval |K15 - G7| estimates
  int intervals = 0;
  bool converged = false;
};

// Globally adaptive 7/15-point Gauss-Kronrod on a finite interval [a, b].
// Bisects the interval with the largest error estimate until the total
// estimate falls below max(abs_tol, rel_tol * |value|) or max_intervals is
// reached. Never throws; inspect `converged`.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                            double rel_tol, int max_intervals);

}  // namespace lyap::quad
