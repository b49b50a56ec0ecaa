#pragma once

// Test-side reference implementations. Nothing here calls the library's
// RHS or Liouvillian code.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lhm/matrix4.hpp"
#include "lhm/params.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Dense = std::array<std::array<cplx, 4>, 4>;
using Super = std::array<std::array<cplx, 16>, 16>;

inline Dense zero4() { return Dense{}; }

inline Dense hamiltonian(const lhm::SystemParams& p) {
  Dense h = zero4();
  h[0][0] = p.delta1 + p.delta2;
  h[1][1] = p.delta2;
  h[3][3] = p.delta4 + p.delta2;
  h[0][1] = h[1][0] = -p.omega1;
  h[1][2] = h[2][1] = -p.omega2;
  h[0][3] = -p.omega3 * std::exp(cplx(0.0, p.phi3));
  h[3][0] = std::conj(h[0][3]);
  return h;
}

inline Dense jump(int to, int from, double rate) {
  Dense l = zero4();
  l[to - 1][from - 1] = std::sqrt(rate);
  return l;
}

inline Dense product(const Dense& a, const Dense& b) {
  Dense c = zero4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense dagger(const Dense& a) {
  Dense c = zero4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

// Row-major vec: vec(A X B) = (A kron B^T) vec(X).
inline Super kron(const Dense& a, const Dense& bt) {
  Super s{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) s[4 * i + k][4 * j + l] = a[i][j] * bt[k][l];
  return s;
}

inline Dense transpose(const Dense& a) {
  Dense c = zero4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[j][i];
  return c;
}

inline Dense identity4() {
  Dense c = zero4();
  for (int i = 0; i < 4; ++i) c[i][i] = 1.0;
  return c;
}

inline void add_scaled(Super& acc, const Super& term, cplx scale) {
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) acc[r][c] += scale * term[r][c];
}

// Superoperator of -i[H, rho] + sum_k D[L_k] rho.
inline Super liouvillian(const lhm::SystemParams& p) {
  const Dense id = identity4();
  const Dense h = hamiltonian(p);
  Super s{};
  add_scaled(s, kron(h, id), cplx(0.0, -1.0));
  add_scaled(s, kron(id, transpose(h)), cplx(0.0, 1.0));
  for (const Dense& l : {jump(2, 1, 2.0 * p.gamma1), jump(2, 4, 2.0 * p.gamma4), jump(3, 2, 2.0 * p.gamma2)}) {
    const Dense ldl = product(dagger(l), l);
    add_scaled(s, kron(l, transpose(dagger(l))), 1.0);
    add_scaled(s, kron(ldl, id), -0.5);
    add_scaled(s, kron(id, transpose(ldl)), -0.5);
  }
  return s;
}

inline lhm::Matrix4 apply(const Super& s, const lhm::Matrix4& rho) {
  lhm::Matrix4 out = lhm::Matrix4::zero();
  for (int r = 0; r < 16; ++r) {
    cplx acc = 0.0;
    for (int c = 0; c < 16; ++c) acc += s[r][c] * rho.flat()[c];
    out.flat()[r] = acc;
  }
  return out;
}

// Random mixed state from a Gaussian Ginibre matrix, built without library helpers.
inline lhm::Matrix4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Dense a = zero4();
  for (auto& row : a)
    for (auto& z : row) z = cplx(g(rng), g(rng));
  const Dense m = product(a, dagger(a));
  double tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += m[i][i].real();
  lhm::Matrix4 rho = lhm::Matrix4::zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho(i, j) = m[i][j] / tr;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) rho(j, i) = std::conj(rho(i, j));
  for (int i = 0; i < 4; ++i) rho(i, i) = rho(i, i).real();
  rho(0, 0) = 1.0 - rho(1, 1).real() - rho(2, 2).real() - rho(3, 3).real();
  return rho;
}

// Parameters inside the studied regime: drives up to 5, probe detuning up to 150.
inline lhm::SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  lhm::SystemParams p;
  p.omega1 = 0.1 + 4.9 * u(rng);
  p.omega2 = 0.05 + 4.95 * u(rng);
  p.omega3 = 0.1 + 4.9 * u(rng);
  p.phi3 = 2.0 * 3.141592653589793 * u(rng);
  p.delta1 = -150.0 + 300.0 * u(rng);
  p.delta2 = -0.5 + u(rng);
  p.delta4 = 0.0;
  p.gamma1 = 0.001 + 0.009 * u(rng);
  p.gamma2 = 0.005 + 0.045 * u(rng);
  p.gamma4 = 0.001 + 0.009 * u(rng);
  return p;
}

inline double max_abs_diff(const lhm::Matrix4& a, const lhm::Matrix4& b) {
  double m = 0.0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(a.flat()[i] - b.flat()[i]));
  return m;
}

}  // namespace oracle
