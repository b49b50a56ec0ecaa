#pragma once

#include <array>
#include <complex>

namespace lhm {

using cplx = std::complex<double>;

// Dense 4x4 complex matrix, row-major, 0-based storage. Level |k> of the atom
// lives at index k-1.
class Matrix4 {
 public:
  static constexpr int kDim = 4;

  constexpr Matrix4() = default;

  static Matrix4 zero() { return Matrix4{}; }
  static Matrix4 identity();
  // |level><level| with 1-based level.
  static Matrix4 projector(int level);

  cplx& operator()(int row, int col) { return data_[row * kDim + col]; }
  const cplx& operator()(int row, int col) const { return data_[row * kDim + col]; }

  // Row-major flat view, used for vec(rho) in the Liouvillian.
  std::array<cplx, 16>& flat() { return data_; }
  const std::array<cplx, 16>& flat() const { return data_; }

  Matrix4 adjoint() const;
  cplx trace() const;
  double max_abs() const;
  // max |A_ij - conj(A_ji)|
  double hermiticity_error() const;

  Matrix4& operator+=(const Matrix4& other);
  Matrix4& operator-=(const Matrix4& other);
  Matrix4& operator*=(cplx scale);

  friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
  friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
  friend Matrix4 operator*(Matrix4 a, cplx s) { return a *= s; }
  friend Matrix4 operator*(cplx s, Matrix4 a) { return a *= s; }
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);

  bool operator==(const Matrix4&) const = default;

 private:
  std::array<cplx, 16> data_{};
};

double max_abs_diff(const Matrix4& a, const Matrix4& b);

}  // namespace lhm
