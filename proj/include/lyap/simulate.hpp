#pragma once

// Monte Carlo oracle: actual products of Gaussian matrices A = Sigma^{1/2} G.
//
// Entries of G have real components N(0, 1/beta): real N(0,1) for beta = 1,
// real/imaginary N(0, 1/2) for beta = 2, four quaternion components N(0, 1/4)
// for beta = 4. Quaternion products run in the 2d x 2d complex representation
// phi, whose Lyapunov spectrum is the quaternion one with every exponent
// doubled in multiplicity.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lyap/lyapunov.hpp"
#include "lyap/quaternion.hpp"
#include "lyap/rng.hpp"
#include "lyap/spectrum.hpp"

namespace lyap::sim {

struct SimConfig {
  std::uint64_t seed = 1;
  long n_steps = 100000;  // matrices per product, after burn-in
  int n_reps = 32;        // independent products
  int renorm_every = 1;   // steps between re-orthonormalizations, 1..64
  int top_k = 1;
  int burn_in = 100;      // steps discarded before accumulation starts

  // Throws ValidationError on violated bounds; top_k is checked against d.
  void validate(std::size_t d) const;
};

// One draw of A = Sigma^{1/2} G: real d x d, complex d x d, or quaternion d x d.
using SampledMatrix = std::variant<Eigen::MatrixXd, Eigen::MatrixXcd, QuaternionMatrix>;
SampledMatrix sample_matrix(Beta beta, const Spectrum& s, Rng& rng);

// Growth rate of |P_n v| per replicate; std_error from the replicate spread.
ExponentEstimate mc_largest(Beta beta, const Spectrum& s, const SimConfig& cfg);

// QR (modified Gram-Schmidt) tracking of a top_k-dimensional frame.
// rates[rep][i] estimates mu_{i+1}. For beta = 4 the frame is 2 top_k wide in
// the phi representation and every other value is returned.
std::vector<std::vector<double>> mc_top_k_replicates(Beta beta, const Spectrum& s, const SimConfig& cfg);
std::vector<ExponentEstimate> mc_top_k(Beta beta, const Spectrum& s, const SimConfig& cfg);

// Mean and standard error (sample std / sqrt(n)) of replicate values, n >= 2.
ExponentEstimate summarize(std::span<const double> samples);

// Sample mean of (1/2) log det(G_k^* Sigma G_k) over n_samples draws of a
// d x k Gaussian G_k; for beta = 4 det is (det phi)^{1/2}.
ExponentEstimate logdet_oracle(Beta beta, const Spectrum& s, int k, long n_samples, Rng& rng);

}  // namespace lyap::sim
