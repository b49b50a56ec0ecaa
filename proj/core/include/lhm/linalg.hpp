#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>

namespace lhm::linalg {

template <std::size_t N>
using Vector = std::array<std::complex<double>, N>;

// Row-major dense N x N complex matrix.
template <std::size_t N>
struct Matrix {
  std::array<std::complex<double>, N * N> a{};

  std::complex<double>& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

  double norm1() const {
    double best = 0.0;
    for (std::size_t c = 0; c < N; ++c) {
      double col = 0.0;
      for (std::size_t r = 0; r < N; ++r) col += std::abs((*this)(r, c));
      best = std::max(best, col);
    }
    return best;
  }

  Vector<N> operator*(const Vector<N>& x) const {
    Vector<N> y{};
    for (std::size_t r = 0; r < N; ++r) {
      std::complex<double> acc = 0.0;
      for (std::size_t c = 0; c < N; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }
};

// Gaussian elimination with partial (row) pivoting. The pivot chosen in each
// column is the first row of maximal modulus, so the factorization is
// reproducible for a given row order.
template <std::size_t N>
class LuDecomposition {
 public:
  explicit LuDecomposition(const Matrix<N>& m) : lu_(m), norm1_(m.norm1()) {
    for (std::size_t i = 0; i < N; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < N; ++k) {
      std::size_t piv = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t r = k + 1; r < N; ++r) {
        const double v = std::abs(lu_(r, k));
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (best == 0.0) {
        singular_ = true;
        return;
      }
      if (piv != k) {
        for (std::size_t c = 0; c < N; ++c) std::swap(lu_(k, c), lu_(piv, c));
        std::swap(perm_[k], perm_[piv]);
      }
      const std::complex<double> inv = 1.0 / lu_(k, k);
      for (std::size_t r = k + 1; r < N; ++r) {
        const std::complex<double> f = lu_(r, k) * inv;
        lu_(r, k) = f;
        if (f == std::complex<double>{}) continue;
        for (std::size_t c = k + 1; c < N; ++c) lu_(r, c) -= f * lu_(k, c);
      }
    }
  }

  bool singular() const { return singular_; }

  Vector<N> solve(const Vector<N>& b) const {
    Vector<N> y{};
    for (std::size_t i = 0; i < N; ++i) {
      std::complex<double> acc = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * y[j];
      y[i] = acc;
    }
    for (std::size_t ii = N; ii-- > 0;) {
      std::complex<double> acc = y[ii];
      for (std::size_t j = ii + 1; j < N; ++j) acc -= lu_(ii, j) * y[j];
      y[ii] = acc / lu_(ii, ii);
    }
    return y;
  }

  // 1 / (||A||_1 ||A^-1||_1), with the inverse formed column by column.
  double reciprocal_condition() const {
    if (singular_) return 0.0;
    double inv_norm = 0.0;
    for (std::size_t c = 0; c < N; ++c) {
      Vector<N> e{};
      e[c] = 1.0;
      const Vector<N> col = solve(e);
      double s = 0.0;
      for (const auto& z : col) s += std::abs(z);
      inv_norm = std::max(inv_norm, s);
    }
    if (norm1_ == 0.0 || inv_norm == 0.0 || !std::isfinite(inv_norm)) return 0.0;
    return 1.0 / (norm1_ * inv_norm);
  }

 private:
  Matrix<N> lu_;
  std::array<std::size_t, N> perm_{};
  double norm1_ = 0.0;
  bool singular_ = false;
};

}  // namespace lhm::linalg
