#include <doctest.h>

#include <cmath>
#include <limits>

#include "lyap/error.hpp"
#include "lyap/spectrum.hpp"
#include "oracles.hpp"

using namespace lyap;

TEST_CASE("y is the reciprocal of sigma^2") {
  const Spectrum s({1.0, 0.5, 4.0});
  REQUIRE(s.dim() == 3);
  CHECK(s.y()[0] == 1.0);
  CHECK(s.y()[1] == 2.0);
  CHECK(s.y()[2] == 0.25);
}

TEST_CASE("invalid entries are reported with their index") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  for (double bad : {0.0, -1.0, nan, inf}) {
    try {
      Spectrum({1.0, 2.0, bad});
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.index() == 2);
    }
  }
  CHECK_THROWS_AS(Spectrum(std::vector<double>{}), ValidationError);
}

TEST_CASE("beta parsing") {
  CHECK(beta_from_int(1) == Beta::Real);
  CHECK(beta_from_int(2) == Beta::Complex);
  CHECK(beta_from_int(4) == Beta::Quaternion);
  CHECK_THROWS_AS(beta_from_int(3), ValidationError);
  CHECK(beta_value(Beta::Quaternion) == 4.0);
}

TEST_CASE("spike spectrum and t") {
  const SpikeModel m{5, 10.0};
  const Spectrum s = spike_spectrum(m);
  REQUIRE(s.dim() == 5);
  for (int i = 0; i < 4; ++i) CHECK(s.sigma_sq()[static_cast<std::size_t>(i)] == 1.0);
  CHECK(s.sigma_sq()[4] == 10.0);
  CHECK(m.t() == doctest::Approx(0.5));
  CHECK_THROWS_AS(spike_spectrum({1, 3.0}), ValidationError);
  CHECK_THROWS_AS(spike_spectrum({4, 1.0}), ValidationError);
}

TEST_CASE("gaps") {
  const Spectrum s({1.0, 0.5, 0.25});
  CHECK(min_gap(s) == doctest::Approx(1.0));
  CHECK(relative_gap(s) == doctest::Approx(0.25));
  CHECK(std::isinf(relative_gap(Spectrum({2.0}))));
  CHECK_THROWS_AS(min_gap(Spectrum({2.0})), ValidationError);
  CHECK(relative_gap(Spectrum({1.0, 1.0})) == 0.0);
}

TEST_CASE("JSON round trip preserves values exactly") {
  oracle::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> v(static_cast<std::size_t>(g.integer(1, 12)));
    for (auto& x : v) x = g.log_uniform(1e-6, 1e6);
    const Spectrum s(v);
    CHECK(spectrum_from_json(spectrum_to_json(s)) == s);
  }
}

TEST_CASE("JSON parsing errors") {
  CHECK_THROWS_AS(spectrum_from_json("[1, 2"), ValidationError);
  CHECK_THROWS_AS(spectrum_from_json("{\"a\": 1}"), ValidationError);
  try {
    spectrum_from_json("[1, \"x\", 3]");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.index() == 1);
  }
}
