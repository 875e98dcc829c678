#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bakersim/baker.hpp"
#include "bakersim/qmat.hpp"
#include "oracle.hpp"

using namespace bakersim;

namespace {

CMatrix sigma_x() { return CMatrix(2, 2, {0, 1, 1, 0}); }
CMatrix hadamard() {
  const double r = 1 / std::numbers::sqrt2;
  return CMatrix(2, 2, {r, r, r, -r});
}

CMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = Complex(g(rng), g(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

}  // namespace

TEST_CASE("kron") {
  CHECK(approx_equal(kron(CMatrix::identity(2), CMatrix::identity(2)), CMatrix::identity(4), 0.0));

  const CMatrix xi = kron(sigma_x(), CMatrix::identity(2));
  CMatrix expected(4, 4);
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
  CHECK(approx_equal(xi, expected, 0.0));

  const CMatrix hh = kron(hadamard(), hadamard());
  CMatrix ket00(4, 1);
  ket00(0, 0) = 1.0;
  const CMatrix out = hh * ket00;
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(out(i, 0) - 0.5) < 1e-15);

  SUBCASE("entry layout") {
    CMatrix a(2, 3), b(3, 2);
    for (std::size_t i = 0; i < 6; ++i) a.entries()[i] = Complex(double(i + 1), 0);
    for (std::size_t i = 0; i < 6; ++i) b.entries()[i] = Complex(0, double(i + 1));
    const CMatrix k = kron(a, b);
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 6);
    CHECK(k(1 * 3 + 2, 2 * 2 + 1) == a(1, 2) * b(2, 1));
  }

  SUBCASE("associative on integer inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rand_int = [&](std::size_t r, std::size_t c) {
      CMatrix m(r, c);
      for (auto &z : m.entries()) z = Complex(d(rng), d(rng));
      return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix a = rand_int(2, 3), b = rand_int(3, 2), c = rand_int(2, 2);
      CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
    }
  }
}

TEST_CASE("dagger") {
  CHECK(approx_equal(dagger(CMatrix::identity(3)), CMatrix::identity(3), 0.0));
  const double theta = 0.37;
  const std::vector<Complex> d{1, 1, 1, std::polar(1.0, theta)};
  const std::vector<Complex> dc{1, 1, 1, std::polar(1.0, -theta)};
  CHECK(approx_equal(dagger(CMatrix::diagonal(d)), CMatrix::diagonal(dc), 1e-16));

  std::mt19937_64 rng(3);
  CMatrix a(3, 5);
  std::normal_distribution<double> g;
  for (auto &z : a.entries()) z = Complex(g(rng), g(rng));
  CHECK(max_abs_diff(dagger(dagger(a)), a) == 0.0);
}

TEST_CASE("matrix construction rejects bad input") {
  CHECK_THROWS_AS(CMatrix(2, 2, std::vector<Complex>(3)), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(1, 1, {Complex(std::nan(""), 0)}), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(1, 1, {Complex(0, INFINITY)}), std::invalid_argument);
  CHECK_THROWS_AS(require_unitary(CMatrix(2, 2, {1, 1, 0, 1})), std::invalid_argument);
  CHECK_NOTHROW(require_unitary(hadamard()));
  CHECK_THROWS(CMatrix::identity(2) * CMatrix(3, 3));
}

TEST_CASE("products of unitaries stay unitary") {
  const CMatrix u = qft_matrix(8) * kron(hadamard(), qft_matrix(4)) * dagger(qft_matrix(8));
  CHECK(unitarity_error(u) < 1e-10);
}

TEST_CASE("global phase comparator") {
  const CMatrix h = hadamard();
  CHECK(equal_up_to_global_phase(h * std::polar(1.0, 1.1), h));
  CHECK_FALSE(approx_equal(h * std::polar(1.0, 1.1), h));
  CHECK_FALSE(equal_up_to_global_phase(sigma_x(), h));
  CHECK(equal_up_to_global_phase(CMatrix(2, 2), CMatrix(2, 2)));
}

TEST_CASE("hermitian_eigen small cases") {
  const std::vector<Complex> d{0.25, 0.75};
  auto r = hermitian_eigen(CMatrix::diagonal(d));
  CHECK(r.eigenvalues[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(r.eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-14));

  r = hermitian_eigen(sigma_x());
  CHECK(std::abs(r.eigenvalues[0] + 1.0) < 1e-14);
  CHECK(std::abs(r.eigenvalues[1] - 1.0) < 1e-14);

  const CMatrix y(2, 2, {0, Complex(0, -1), Complex(0, 1), 0});
  r = hermitian_eigen(y);
  CHECK(std::abs(r.eigenvalues[0] + 1.0) < 1e-14);
  CHECK(std::abs(r.eigenvalues[1] - 1.0) < 1e-14);

  CHECK_THROWS_AS(hermitian_eigen(CMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_eigen(CMatrix(2, 2, {0, 1, 0, 0})), std::invalid_argument);
}

TEST_CASE("hermitian_eigen of the dephased post-map state") {
  // Oracle: QB|000> by direct Fourier sums, then drop coherences between
  // values of the least significant bit.
  const oracle::Mat qb = oracle::baker(8);
  oracle::Mat rho(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) rho(i, j) = qb(i, 0) * std::conj(qb(j, 0));
  rho = oracle::dephase_lsb_completely(rho);
  CMatrix m(8, 8, rho.a);

  const auto r = hermitian_eigen(m);
  for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(r.eigenvalues[k]) < 1e-12);
  CHECK(std::abs(r.eigenvalues[6] - 0.5) < 1e-12);
  CHECK(std::abs(r.eigenvalues[7] - 0.5) < 1e-12);
}

TEST_CASE("hermitian_eigen random matrices") {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1, 2, 3, 5, 8, 16, 33, 64}) {
    const CMatrix a = random_hermitian(n, rng);
    const auto r = hermitian_eigen(a);
    CAPTURE(n);
    CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
    CHECK(unitarity_error(r.eigenvectors) < 1e-9);
    double sum = 0.0;
    for (double l : r.eigenvalues) sum += l;
    CHECK(std::abs(sum - a.trace().real()) < 1e-9);

    const CMatrix av = a * r.eigenvectors;
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        residual = std::max(residual, std::abs(av(i, k) - r.eigenvalues[k] * r.eigenvectors(i, k)));
    CHECK(residual < 1e-9);

    std::vector<Complex> lambda(r.eigenvalues.begin(), r.eigenvalues.end());
    const CMatrix rebuilt = r.eigenvectors * CMatrix::diagonal(lambda) * dagger(r.eigenvectors);
    CHECK(max_abs_diff(rebuilt, a) < 1e-9);
  }
}

TEST_CASE("hermitian_eigen degenerate spectrum") {
  // Unitary conjugation of diag(1,1,1,-1,-1,0,0,0).
  const std::vector<Complex> d{1, 1, 1, -1, -1, 0, 0, 0};
  const CMatrix u = qft_matrix(8);
  const CMatrix a = u * CMatrix::diagonal(d) * dagger(u);
  const auto r = hermitian_eigen(a);
  const double expected[] = {-1, -1, 0, 0, 0, 1, 1, 1};
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(r.eigenvalues[k] - expected[k]) < 1e-12);
}

TEST_CASE("expi_hermitian") {
  // exp(i pi/2 (1 - X)) = X exactly.
  const CMatrix a = (CMatrix::identity(2) - sigma_x()) * (std::numbers::pi / 2);
  CHECK(max_abs_diff(expi_hermitian(a), sigma_x()) < 1e-14);
  CHECK(max_abs_diff(expi_hermitian(CMatrix(3, 3)), CMatrix::identity(3)) < 1e-15);
}

TEST_CASE("json round trip") {
  const CMatrix f = qft_matrix(4);
  const nlohmann::json j = to_json(f);
  CHECK(j.size() == 4);
  CHECK(j[1][1][0].get<double>() == f(1, 1).real());
  const CMatrix back = cmatrix_from_json(nlohmann::json::parse(j.dump()));
  CHECK(max_abs_diff(back, f) == 0.0);
  CHECK_THROWS(cmatrix_from_json(nlohmann::json::parse("[[[1,0]],[[1,0],[2,0]]]")));
  CHECK_THROWS(cmatrix_from_json(nlohmann::json::parse("[[1]]")));
}
