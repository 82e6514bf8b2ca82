#include <doctest.h>

#include <cmath>

#include "lyap/quaternion.hpp"
#include "oracles.hpp"

using namespace lyap;

namespace {

Quaternion random_q(oracle::Gen& g) { return {g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1), g.uniform(-1, 1)}; }

QuaternionMatrix random_qmat(oracle::Gen& g, std::size_t r, std::size_t c) {
  QuaternionMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_q(g);
  return m;
}

}  // namespace

TEST_CASE("Hamilton units") {
  const Quaternion one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  const Quaternion minus_one{-1, 0, 0, 0};
  CHECK(i * i == minus_one);
  CHECK(j * j == minus_one);
  CHECK(k * k == minus_one);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == Quaternion{0, 0, 0, -1});
  CHECK(one * i == i);
}

TEST_CASE("phi is a multiplicative, norm-preserving representation") {
  oracle::Gen g(1);
  for (int n = 0; n < 200; ++n) {
    const Quaternion p = random_q(g), q = random_q(g);
    CHECK((quaternion_phi(p * q) - quaternion_phi(p) * quaternion_phi(q)).norm() < 1e-14);
    CHECK((quaternion_phi(p.conj()) - quaternion_phi(p).adjoint()).norm() < 1e-15);
    CHECK(std::abs(quaternion_phi(p).determinant().real() - p.norm_sq()) < 1e-14);
    CHECK(std::abs(quaternion_phi(p).determinant().imag()) < 1e-15);
    CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-13));
  }
}

TEST_CASE("matrix representation: products, duals, determinants") {
  oracle::Gen g(2);
  for (int n = 0; n < 30; ++n) {
    const std::size_t d = static_cast<std::size_t>(g.integer(1, 5));
    const QuaternionMatrix a = random_qmat(g, d, d), b = random_qmat(g, d, d);
    CHECK((qmat_phi(a * b) - qmat_phi(a) * qmat_phi(b)).norm() < 1e-12);
    CHECK((qmat_phi(a.dual()) - qmat_phi(a).adjoint()).norm() < 1e-14);
    CHECK(qdet(a * b) == doctest::Approx(qdet(a) * qdet(b)).epsilon(1e-9));
  }
  CHECK(qdet(QuaternionMatrix::identity(4)) == doctest::Approx(1.0));
  QuaternionMatrix one(1, 1);
  one(0, 0) = {1, 2, 3, 4};
  CHECK(qdet(one) == doctest::Approx(std::sqrt(30.0)));
}
