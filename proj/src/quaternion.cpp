#include "lyap/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "lyap/error.hpp"

namespace lyap {

double Quaternion::norm() const { return std::sqrt(norm_sq()); }

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {s * o.s - x * o.x - y * o.y - z * o.z,
          s * o.x + x * o.s + y * o.z - z * o.y,
          s * o.y - x * o.z + y * o.s + z * o.x,
          s * o.z + x * o.y - y * o.x + z * o.s};
}

Eigen::Matrix2cd quaternion_phi(const Quaternion& q) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  m << C(q.s, q.z), C(-q.y, q.x), C(q.y, q.x), C(q.s, -q.z);
  return m;
}

QuaternionMatrix QuaternionMatrix::identity(std::size_t n) {
  QuaternionMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i).s = 1.0;
  return m;
}

QuaternionMatrix QuaternionMatrix::operator*(const QuaternionMatrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("quaternion matrix product: shape mismatch");
  QuaternionMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Quaternion a = (*this)(r, k);
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

QuaternionMatrix QuaternionMatrix::dual() const {
  QuaternionMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

Eigen::MatrixXcd qmat_phi(const QuaternionMatrix& X) {
  Eigen::MatrixXcd m(2 * X.rows(), 2 * X.cols());
  for (std::size_t r = 0; r < X.rows(); ++r)
    for (std::size_t c = 0; c < X.cols(); ++c)
      m.block<2, 2>(2 * static_cast<Eigen::Index>(r), 2 * static_cast<Eigen::Index>(c)) = quaternion_phi(X(r, c));
  return m;
}

double qdet(const QuaternionMatrix& X) {
  if (X.rows() != X.cols()) throw ValidationError("qdet needs a square matrix");
  const std::complex<double> det = qmat_phi(X).determinant();
  // det phi(X) is real and nonnegative; drop the rounding-level imaginary part.
  return std::sqrt(std::max(det.real(), 0.0));
}

}  // namespace lyap
