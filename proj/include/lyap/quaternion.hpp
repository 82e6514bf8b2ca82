#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace lyap {

// q = s + x i + y j + z k
struct Quaternion {
  double s = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion conj() const { return {s, -x, -y, -z}; }
  double norm_sq() const { return s * s + x * x + y * y + z * z; }
  double norm() const;

  Quaternion operator+(const Quaternion& o) const { return {s + o.s, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {s - o.s, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator*(const Quaternion& o) const;
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  bool operator==(const Quaternion&) const = default;
};

// 2x2 complex image of q under the unit matrices
//   i = [[0, i], [i, 0]], j = [[0, -1], [1, 0]], k = [[i, 0], [0, -i]]:
//   phi(q) = [[s + iz, -y + ix], [y + ix, s - iz]].
Eigen::Matrix2cd quaternion_phi(const Quaternion& q);

class QuaternionMatrix {
 public:
  QuaternionMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QuaternionMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QuaternionMatrix operator*(const QuaternionMatrix& o) const;
  // (X*)_{lk} = (X_{kl})*
  QuaternionMatrix dual() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Quaternion> data_;
};

// 2r x 2c complex representation; multiplicative and dual-compatible.
Eigen::MatrixXcd qmat_phi(const QuaternionMatrix& X);

// det(X) := (det phi(X))^{1/2} for square X.
double qdet(const QuaternionMatrix& X);

}  // namespace lyap
