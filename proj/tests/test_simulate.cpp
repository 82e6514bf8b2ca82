#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <variant>

#include "lyap/closed_forms.hpp"
#include "lyap/error.hpp"
#include "lyap/lyapunov.hpp"
#include "lyap/simulate.hpp"
#include "oracles.hpp"

using namespace lyap;

namespace {

sim::SimConfig small_config(std::uint64_t seed = 7) {
  sim::SimConfig c;
  c.seed = seed;
  c.n_steps = 20000;
  c.n_reps = 16;
  return c;
}

double z_score(const ExponentEstimate& mc, double truth) { return (mc.value - truth) / *mc.std_error; }

}  // namespace

TEST_CASE("Rng: ranges, moments and substream independence") {
  Rng r(42, 3);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    const double z = r.normal();
    sum += z;
    sum_sq += z * z;
  }
  CHECK(std::abs(sum / n) < 5.0 / std::sqrt(n));
  CHECK(std::abs(sum_sq / n - 1.0) < 5.0 * std::sqrt(2.0 / n));

  Rng a(1, 0), b(1, 0), c(1, 1), d(2, 0);
  const auto x = a.next_u64();
  CHECK(x == b.next_u64());
  CHECK(x != c.next_u64());
  CHECK(x != d.next_u64());
}

TEST_CASE("sample_matrix: shapes and row second moments") {
  const Spectrum s({0.5, 2.0, 4.0});
  Rng rng(9);
  for (Beta b : {Beta::Real, Beta::Complex, Beta::Quaternion}) {
    std::vector<double> second(3, 0.0);
    const int n = 20000;
    for (int t = 0; t < n; ++t) {
      const auto m = sim::sample_matrix(b, s, rng);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          double e2 = 0.0;
          if (const auto* r = std::get_if<Eigen::MatrixXd>(&m)) {
            e2 = (*r)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                 (*r)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
          } else if (const auto* c = std::get_if<Eigen::MatrixXcd>(&m)) {
            e2 = std::norm((*c)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
          } else {
            e2 = std::get<QuaternionMatrix>(m)(i, j).norm_sq();
          }
          second[i] += e2;
        }
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      // E|A_ij|^2 = sigma_i^2 for every beta.
      CHECK(second[i] / (3.0 * n) == doctest::Approx(s.sigma_sq()[i]).epsilon(0.03));
    }
  }
}

TEST_CASE("one-step oracle: k = 1 gives mu_1, k = d gives the exponent sum") {
  oracle::Gen g(12);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = g.integer(1, 4);
    std::vector<double> s2(static_cast<std::size_t>(d));
    for (auto& v : s2) v = g.log_uniform(0.2, 5.0);
    const Spectrum s(s2);
    for (Beta b : {Beta::Real, Beta::Complex, Beta::Quaternion}) {
      Rng rng(100 + static_cast<std::uint64_t>(trial));
      const auto k1 = sim::logdet_oracle(b, s, 1, 100000, rng);
      CHECK(std::abs(z_score(k1, largest_exponent(b, s).value)) < 4.5);
      const auto kd = sim::logdet_oracle(b, s, d, 50000, rng);
      CHECK(std::abs(z_score(kd, sum_all_exponents(b, s).value)) < 4.5);
    }
  }
}

TEST_CASE("Monte Carlo largest exponent agrees with quadrature") {
  const std::vector<std::vector<double>> spectra{{1.0}, {1.0, 3.0}, {0.5, 1.0, 2.5}};
  for (const auto& s2 : spectra) {
    const Spectrum s(s2);
    for (Beta b : {Beta::Real, Beta::Complex, Beta::Quaternion}) {
      const auto mc = sim::mc_largest(b, s, small_config());
      CAPTURE(s2.size());
      CAPTURE(static_cast<int>(b));
      CHECK(std::abs(z_score(mc, largest_exponent(b, s).value)) < 4.5);
    }
  }
}

TEST_CASE("top-k on isotropic spectra") {
  auto cfg = small_config(3);
  cfg.top_k = 3;
  for (Beta b : {Beta::Real, Beta::Complex, Beta::Quaternion}) {
    const auto mc = sim::mc_top_k(b, Spectrum({1.0, 1.0, 1.0}), cfg);
    const auto exact = closed::isotropic_exponents(b, 3, 1.0);
    REQUIRE(mc.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CAPTURE(static_cast<int>(b));
      CAPTURE(k);
      CHECK(std::abs(z_score(mc[k], exact[k])) < 4.5);
    }
  }
}

TEST_CASE("same seed gives identical results regardless of thread count") {
  const Spectrum s({1.0, 2.0});
  auto cfg = small_config(99);
  cfg.n_steps = 2000;
  cfg.top_k = 2;
  const auto a = sim::mc_top_k_replicates(Beta::Complex, s, cfg);
  setenv("LYAP_THREADS", "1", 1);
  const auto b = sim::mc_top_k_replicates(Beta::Complex, s, cfg);
  unsetenv("LYAP_THREADS");
  CHECK(a == b);
  cfg.seed = 100;
  CHECK(sim::mc_top_k_replicates(Beta::Complex, s, cfg) != a);
}

TEST_CASE("windowed renormalization and overflow recovery") {
  const Spectrum s({1.0, 2.0, 0.5});
  auto cfg = small_config(5);
  cfg.renorm_every = 16;
  const auto mc = sim::mc_largest(Beta::Real, s, cfg);
  CHECK(std::abs(z_score(mc, largest_exponent(Beta::Real, s).value)) < 4.5);

  // Each step multiplies norms by ~1e60; a 64-step window would overflow and
  // must be redone at a shorter cadence.
  const Spectrum huge({1e120, 3e120});
  cfg.renorm_every = 64;
  cfg.n_steps = 2000;
  const auto big = sim::mc_largest(Beta::Complex, huge, cfg);
  CHECK(std::isfinite(big.value));
  CHECK(std::abs(z_score(big, largest_exponent(Beta::Complex, huge).value)) < 4.5);
}

TEST_CASE("SimConfig validation") {
  const Spectrum s({1.0, 2.0});
  auto cfg = small_config();
  cfg.top_k = 3;
  CHECK_THROWS_AS(sim::mc_top_k(Beta::Real, s, cfg), ValidationError);
  cfg = small_config();
  cfg.n_reps = 1;
  CHECK_THROWS_AS(sim::mc_largest(Beta::Real, s, cfg), ValidationError);
  cfg = small_config();
  cfg.renorm_every = 65;
  CHECK_THROWS_AS(sim::mc_largest(Beta::Real, s, cfg), ValidationError);
  std::vector<double> one{1.0};
  CHECK_THROWS_AS(sim::summarize(one), ValidationError);
}
