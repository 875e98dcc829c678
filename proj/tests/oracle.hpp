#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the bakersim library: matrices are plain row-major vectors and every
// operator is built straight from its textbook definition.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Mat {
  std::size_t n = 0;
  std::vector<C> a;

  explicit Mat(std::size_t dim = 0) : n(dim), a(dim * dim) {}
  C &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  C operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline Mat identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

inline Mat mul(const Mat &x, const Mat &y) {
  Mat r(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) {
      C s = 0.0;
      for (std::size_t k = 0; k < x.n; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Mat adj(const Mat &x) {
  Mat r(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

inline Mat kron(const Mat &x, const Mat &y) {
  Mat r(x.n * y.n);
  for (std::size_t i1 = 0; i1 < x.n; ++i1)
    for (std::size_t j1 = 0; j1 < x.n; ++j1)
      for (std::size_t i2 = 0; i2 < y.n; ++i2)
        for (std::size_t j2 = 0; j2 < y.n; ++j2) r(i1 * y.n + i2, j1 * y.n + j2) = x(i1, j1) * y(i2, j2);
  return r;
}

/// e^{sign 2 pi i x y / d} / sqrt(d), evaluated directly.
inline Mat dft(std::size_t d, int sign) {
  Mat f(d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      f(x, y) = std::exp(C(0.0, sign * 2.0 * std::numbers::pi * double(x) * double(y) / double(d))) / std::sqrt(double(d));
  return f;
}

/// F_N^{-1} (I_2 (x) F_{N/2}).
inline Mat baker(std::size_t dim) { return mul(dft(dim, -1), kron(identity(2), dft(dim / 2, +1))); }

/// exp(-i theta X / 2) on the least significant qubit of a dim-dimensional register.
inline Mat rotx_lsb(std::size_t dim, double theta) {
  Mat r(2);
  r(0, 0) = r(1, 1) = std::cos(theta / 2);
  r(0, 1) = r(1, 0) = C(0.0, -std::sin(theta / 2));
  return kron(identity(dim / 2), r);
}

/// |x> -> |x + s mod dim>, by enumeration.
inline Mat cyclic_shift(std::size_t dim, long s) {
  Mat m(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const long y = ((long(x) + s) % long(dim) + long(dim)) % long(dim);
    m(std::size_t(y), x) = 1.0;
  }
  return m;
}

inline Mat projector(std::size_t dim, std::size_t x) {
  Mat m(dim);
  m(x, x) = 1.0;
  return m;
}

inline Mat conj_by(const Mat &u, const Mat &rho) { return mul(mul(u, rho), adj(u)); }

inline double trace_product(const Mat &x, const Mat &y) { return std::real([&] {
  C s = 0.0;
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) s += x(i, k) * y(k, i);
  return s;
}()); }

/// Tr(rho_f rho_f') for forward map, unitary perturbation, inverse map.
inline double echo_overlap(const Mat &map, const Mat &perturbation, const Mat &rho) {
  const Mat inv = adj(map);
  const Mat rho_f = conj_by(inv, conj_by(map, rho));
  const Mat rho_fp = conj_by(inv, conj_by(perturbation, conj_by(map, rho)));
  return trace_product(rho_f, rho_fp);
}

/// Complete dephasing of the least significant qubit: keep only entries whose
/// row and column agree on that bit.
inline Mat dephase_lsb_completely(const Mat &rho) {
  Mat r = rho;
  for (std::size_t i = 0; i < rho.n; ++i)
    for (std::size_t j = 0; j < rho.n; ++j)
      if ((i & 1U) != (j & 1U)) r(i, j) = 0.0;
  return r;
}

}  // namespace oracle
