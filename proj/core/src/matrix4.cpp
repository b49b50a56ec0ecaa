#include "lhm/matrix4.hpp"

#include <algorithm>
#include <cmath>

#include "lhm/errors.hpp"

namespace lhm {

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix4 Matrix4::projector(int level) {
  if (level < 1 || level > kDim) {
    raise(ErrorKind::ValidationError, "level must be in 1..4, got " + std::to_string(level));
  }
  Matrix4 m;
  m(level - 1, level - 1) = 1.0;
  return m;
}

Matrix4 Matrix4::adjoint() const {
  Matrix4 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

cplx Matrix4::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

double Matrix4::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix4::hermiticity_error() const {
  double m = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

Matrix4& Matrix4::operator+=(const Matrix4& other) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& other) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix4& Matrix4::operator*=(cplx scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (int i = 0; i < Matrix4::kDim; ++i)
    for (int k = 0; k < Matrix4::kDim; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < Matrix4::kDim; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).max_abs(); }

}  // namespace lhm
