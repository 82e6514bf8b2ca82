#pragma once

#include <array>
#include <cstdint>

namespace lyap {

// xoshiro256** seeded through splitmix64, with Box-Muller normals.
//
// Substreams are keyed by (seed, stream index) so that replicate r of a run
// draws the same numbers whether replicates execute serially or in parallel.
// Output is bit-reproducible for a given build.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

  std::uint64_t next_u64();
  // Uniform on (0, 1), never exactly 0 or 1.
  double uniform();
  // Standard normal N(0, 1).
  double normal();

 private:
  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace lyap
