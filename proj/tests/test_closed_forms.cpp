#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "lyap/closed_forms.hpp"
#include "lyap/error.hpp"
#include "lyap/lyapunov.hpp"
#include "lyap/specfn.hpp"
#include "oracles.hpp"

using namespace lyap;
using lyap::specfn::digamma;

namespace {

std::vector<double> reciprocal(const std::vector<double>& v) {
  std::vector<double> r;
  for (double x : v) r.push_back(1.0 / x);
  return r;
}

// mu_k = Psi(k)/2 - det(M_k) / (2 det V), V the Vandermonde matrix [y_j^{i-1}]
// and M_k equal to V with row k replaced by log(y_j) y_j^{k-1}.
double forrester_by_determinants(int k, const std::vector<double>& y) {
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const auto d = static_cast<Eigen::Index>(y.size());
  Mat v(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) v(i, j) = std::pow(static_cast<long double>(y[static_cast<std::size_t>(j)]), i);
  Mat m = v;
  for (Eigen::Index j = 0; j < d; ++j) m(k - 1, j) *= std::log(static_cast<long double>(y[static_cast<std::size_t>(j)]));
  const long double ratio = Eigen::FullPivLU<Mat>(m).determinant() / Eigen::FullPivLU<Mat>(v).determinant();
  return 0.5 * digamma(k) - static_cast<double>(ratio) / 2;
}

}  // namespace

TEST_CASE("isotropic forms: sums match the sum rules") {
  for (int d = 1; d <= 15; ++d) {
    for (double s2 : {0.3, 1.0, 7.0}) {
      const Spectrum s(std::vector<double>(static_cast<std::size_t>(d), s2));
      for (Beta b : {Beta::Real, Beta::Complex, Beta::Quaternion}) {
        const auto mu = closed::isotropic_exponents(b, d, s2);
        double total = 0.0;
        for (double m : mu) total += m;
        CHECK(std::abs(total - sum_all_exponents(b, s).value) < 1e-12 * std::max(1.0, std::abs(total)));
        for (std::size_t i = 1; i < mu.size(); ++i) CHECK(mu[i] < mu[i - 1]);
      }
    }
  }
}

TEST_CASE("isotropic forms at small d") {
  CHECK(closed::complex_iso_exponents(1, 1.0)[0] == doctest::Approx(-0.5 * specfn::kEulerGamma));
  // Real d = 1: mu = (log 2 + Psi(1/2))/2 = -(gamma + log 2)/2.
  CHECK(closed::newman_exponents(1, 1.0)[0] ==
        doctest::Approx(-0.5 * (specfn::kEulerGamma + std::numbers::ln2)).epsilon(1e-14));
  CHECK_THROWS_AS(closed::newman_exponents(0, 1.0), ValidationError);
  CHECK_THROWS_AS(closed::complex_iso_exponents(2, -1.0), ValidationError);
}

TEST_CASE("is_isotropic") {
  CHECK(closed::is_isotropic(Spectrum({2.0, 2.0, 2.0})));
  CHECK_FALSE(closed::is_isotropic(Spectrum({2.0, 2.0, 2.0001})));
}

TEST_CASE("Forrester: Lagrange evaluation matches the determinant form") {
  oracle::Gen g(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = g.integer(2, 7);
    const auto s2 = g.distinct(d, 0.2, 5.0, 1.1);
    const Spectrum s(s2);
    const auto y = reciprocal(s2);
    for (int k = 1; k <= d; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      CHECK(std::abs(closed::forrester_kth_complex(k, s) - forrester_by_determinants(k, y)) < 1e-9);
    }
  }
}

TEST_CASE("Forrester: ordering, sum rule and quadrature") {
  oracle::Gen g(32);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = g.integer(2, 8);
    const Spectrum s(g.distinct(d, 0.1, 10.0));
    double total = 0.0;
    double prev = INFINITY;
    for (int k = 1; k <= d; ++k) {
      const double mu = closed::forrester_kth_complex(k, s);
      CHECK(mu < prev);
      prev = mu;
      total += mu;
    }
    CHECK(std::abs(total - sum_all_exponents(Beta::Complex, s).value) < 1e-9);
    CHECK(std::abs(closed::forrester_kth_complex(1, s) - largest_exponent(Beta::Complex, s).value) < 1e-9);
  }
}

TEST_CASE("Forrester rejects degenerate spectra") {
  CHECK_THROWS_AS(closed::forrester_kth_complex(1, Spectrum({1.0, 1.0, 2.0})), DegenerateSpectrumError);
  CHECK_THROWS_AS(closed::forrester_kth_complex(4, Spectrum({1.0, 3.0, 2.0})), ValidationError);
}

TEST_CASE("Mannion 2x2 against quadrature and Newman") {
  CHECK(closed::mannion_2x2(Spectrum({1.0, 1.0})) == doctest::Approx(closed::newman_exponents(2, 1.0)[0]));
  oracle::Gen g(33);
  for (int i = 0; i < 50; ++i) {
    const Spectrum s({g.log_uniform(0.01, 100.0), g.log_uniform(0.01, 100.0)});
    CHECK(std::abs(closed::mannion_2x2(s) - largest_exponent(Beta::Real, s).value) < 1e-9);
  }
  CHECK_THROWS_AS(closed::mannion_2x2(Spectrum({1.0})), ValidationError);
}

TEST_CASE("3x3 elliptic reduction parameters") {
  const auto r = closed::elliptic_reduction(Spectrum({1.0, 0.5, 0.25}));  // y = 1, 2, 4
  CHECK(r.y1 == 4.0);
  CHECK(r.y2 == 2.0);
  CHECK(r.y3 == 1.0);
  CHECK(r.k_sq == doctest::Approx(1.5));
  CHECK(r.n == doctest::Approx(2.0));
  CHECK(r.alpha == doctest::Approx(2.0 * std::sqrt(2.0 / 8.0)));
  CHECK_THROWS_AS(closed::elliptic_reduction(Spectrum({1.0, 1.0, 2.0})), DegenerateSpectrumError);
  CHECK_THROWS_AS(closed::elliptic_reduction(Spectrum({1.0, 2.0})), ValidationError);
}

TEST_CASE("3x3 elliptic form against quadrature") {
  oracle::Gen g(34);
  for (int i = 0; i < 40; ++i) {
    std::vector<double> s2{g.log_uniform(0.1, 10.0), g.log_uniform(0.1, 10.0), g.log_uniform(0.1, 10.0)};
    std::sort(s2.begin(), s2.end());
    if (s2[1] < 1.01 * s2[0]) s2[1] = 1.2 * s2[0];  // keep y1 > y2
    const Spectrum s(s2);
    CAPTURE(s2[0]);
    CAPTURE(s2[1]);
    CAPTURE(s2[2]);
    CHECK(std::abs(closed::real_3x3_elliptic(s) - largest_exponent(Beta::Real, s).value) < 1e-8);
  }
  // y2 = y3 is admissible.
  const Spectrum s({0.5, 1.0, 1.0});
  CHECK(std::abs(closed::real_3x3_elliptic(s) - largest_exponent(Beta::Real, s).value) < 1e-8);
}

TEST_CASE("paired F: partition of unity and linearity") {
  oracle::Gen g(35);
  for (int i = 0; i < 50; ++i) {
    const int k = g.integer(1, 6);
    const auto y = g.distinct(k, 0.1, 10.0, 1.1);
    const std::vector<double> ones(y.size(), 1.0);
    CHECK(closed::paired_f(ones, y) == doctest::Approx(1.0).epsilon(1e-10));
    // Linear in l.
    std::vector<double> a(y.size()), b(y.size()), ab(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      a[j] = g.uniform(-1.0, 1.0);
      b[j] = g.uniform(-1.0, 1.0);
      ab[j] = 2.0 * a[j] - 3.0 * b[j];
    }
    CHECK(closed::paired_f(ab, y) ==
          doctest::Approx(2.0 * closed::paired_f(a, y) - 3.0 * closed::paired_f(b, y)).epsilon(1e-9));
  }
}

TEST_CASE("paired spectrum against quadrature") {
  oracle::Gen g(36);
  for (int i = 0; i < 30; ++i) {
    const int k = g.integer(1, 5);
    const auto half = g.distinct(k, 0.2, 5.0, 1.1);
    std::vector<double> s2;
    for (double v : half) {
      s2.push_back(v);
      s2.push_back(v);
    }
    const Spectrum s(s2);
    const auto halves = closed::paired_halves(s);
    REQUIRE(halves.size() == static_cast<std::size_t>(k));
    CHECK(std::abs(closed::real_paired_spectrum(halves) - largest_exponent(Beta::Real, s).value) < 1e-9);
  }
  CHECK(closed::paired_halves(Spectrum({1.0, 2.0, 3.0})).empty());
  CHECK(closed::paired_halves(Spectrum({1.0, 1.0, 2.0, 3.0})).empty());
}

TEST_CASE("quaternion residue formula") {
  // d = 1 reduces to the isotropic value.
  for (double s2 : {0.5, 1.0, 3.0})
    CHECK(closed::quaternion_largest(Spectrum({s2})) ==
          doctest::Approx(closed::quaternion_iso_exponents(1, s2)[0]).epsilon(1e-13));
  oracle::Gen g(37);
  for (int i = 0; i < 30; ++i) {
    const int d = g.integer(2, 6);
    const Spectrum s(g.distinct(d, 0.2, 5.0, 1.1));
    CHECK(std::abs(closed::quaternion_largest(s) - largest_exponent(Beta::Quaternion, s).value) < 1e-9);
  }
  CHECK_THROWS_AS(closed::quaternion_largest(Spectrum({1.0, 1.0})), DegenerateSpectrumError);
}
