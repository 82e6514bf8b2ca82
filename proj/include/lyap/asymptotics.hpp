#pragma once

// Spike-model expansions and the free-probability limit.
//
// Spike model: sigma^2 = [1, ..., 1, theta], theta > 1, t = d / theta.

#include <span>
#include <string>

#include "lyap/lyapunov.hpp"
#include "lyap/spectrum.hpp"

namespace lyap::asym {

struct SpikeAsymptotics {
  int d = 0;
  double t = 0.0;
  double value_2mu1 = 0.0;
  std::string remainder_order = "O_t(1/d)";
};

// beta = 2: 2 mu_1 ~ log d - e^t Ei(-t).
double spike_complex_asymptotic(int d, double t);

// beta = 1: 2 mu_1 ~ log d + e^{t/2} int_1^inf e^{-t x/2} dx / (sqrt(x) (sqrt(x) + 1)).
double spike_real_asymptotic(int d, double t);

// The integral term of spike_real_asymptotic on its own.
double spike_real_integral(double t);

// Dispatches on beta; beta = 4 has no expansion and throws ValidationError.
SpikeAsymptotics spike_asymptotics(Beta beta, int d, double t);

// f_d = (theta - 1) int_0^inf dx / ((1 + x)^d (1 + theta x))
//     = s sum_{k>=0} s^k / (d + k),  s = (theta - 1) / theta.
double f_d_series(double theta, int d);

// beta = 2 spike model, exact: 2 mu_1 = Psi(d) + f_d.
double spike_exact_complex(double theta, int d);

// Free-probability prediction (1/2) log lambda.
double free_limit(double lambda);

// mu_1 (quadrature, sigma_i^2 = theta_i / d) minus (1/2) log(mean theta_i).
double free_limit_error(Beta beta, std::span<const double> theta, const QuadConfig& cfg = {});

}  // namespace lyap::asym
