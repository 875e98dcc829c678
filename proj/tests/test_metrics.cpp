#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bakersim/metrics.hpp"
#include "oracle.hpp"

using namespace bakersim;

namespace {

const QubitIndex q3{3};

CMatrix random_density(std::size_t dim, std::mt19937_64 &rng, std::size_t rank = 0) {
  std::normal_distribution<double> g;
  const std::size_t k = rank == 0 ? dim : rank;
  CMatrix a(dim, k);
  for (auto &z : a.entries()) z = Complex(g(rng), g(rng));
  CMatrix rho = a * dagger(a);
  return rho * (1.0 / rho.trace().real());
}

CMatrix random_pure(std::size_t dim, std::mt19937_64 &rng, std::vector<Complex> &psi) {
  std::normal_distribution<double> g;
  psi.assign(dim, 0.0);
  double norm = 0.0;
  for (auto &z : psi) {
    z = Complex(g(rng), g(rng));
    norm += std::norm(z);
  }
  for (auto &z : psi) z /= std::sqrt(norm);
  CMatrix rho(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return rho;
}

}  // namespace

TEST_CASE("pseudo_pure") {
  CHECK(max_abs_diff(pseudo_pure(3, 1.0, 0), CMatrix::basis_projector(8, 0)) == 0.0);
  CHECK(max_abs_diff(pseudo_pure(3, 0.0, 0), CMatrix::identity(8) * 0.125) == 0.0);
  const CMatrix half = pseudo_pure(3, 0.5, 0);
  CHECK(half(0, 0).real() == doctest::Approx(0.5625));
  for (std::size_t i = 1; i < 8; ++i) CHECK(half(i, i).real() == doctest::Approx(0.0625));
  CHECK_THROWS_AS(pseudo_pure(3, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_pure(3, -0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_pure(3, 1.0, 8), std::out_of_range);
}

TEST_CASE("deviation") {
  const auto mixed = deviation(CMatrix::identity(8) * 0.125);
  CHECK(max_abs_diff(mixed.matrix(), CMatrix(8, 8)) == 0.0);
  CHECK(mixed.identity_offset() == 0.125);

  const auto pure = deviation(pseudo_pure(3, 1.0, 0));
  CHECK(pure.matrix()(0, 0).real() == doctest::Approx(7.0 / 8));
  for (std::size_t i = 1; i < 8; ++i) CHECK(pure.matrix()(i, i).real() == doctest::Approx(-1.0 / 8));

  for (double eps : {0.0, 0.1, 0.5, 1.0}) {
    const auto d = deviation(pseudo_pure(3, eps, 0));
    CHECK(max_abs_diff(d.matrix(), pure.matrix() * eps) < 1e-15);
  }

  CHECK_THROWS(DeviationMatrix(CMatrix::identity(2)));
  CHECK_THROWS(DeviationMatrix(CMatrix(2, 2, {0, 1, 0, 0})));
}

TEST_CASE("overlap") {
  const CMatrix p0 = pseudo_pure(3, 1.0, 0), p1 = pseudo_pure(3, 1.0, 1);
  CHECK(overlap(p0, p0) == 1.0);
  CHECK(overlap(p0, p1) == 0.0);
  CHECK_THROWS_AS(overlap(p0, CMatrix::identity(4)), std::invalid_argument);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_density(8, rng), b = random_density(8, rng);
    CHECK(std::abs(overlap(a, b) - overlap(b, a)) < 1e-12);
    CHECK(std::abs(trace_of_product(a, b).imag()) < 1e-12);

    std::vector<Complex> psi, phi;
    const CMatrix rp = random_pure(8, rng, psi), rf = random_pure(8, rng, phi);
    Complex inner = 0.0;
    for (std::size_t i = 0; i < 8; ++i) inner += std::conj(psi[i]) * phi[i];
    CHECK(std::abs(overlap(rp, rf) - std::norm(inner)) < 1e-12);
  }

  // |<000| QB^dag Rx(pi/4)_3 QB |000>|^2 by direct matrix products.
  const auto map = baker_map(3);
  const auto echo = perturbed_echo(map, p0, perturbation::RotX{q3, std::numbers::pi / 4});
  const oracle::Mat m =
      oracle::mul(oracle::adj(oracle::baker(8)), oracle::mul(oracle::rotx_lsb(8, std::numbers::pi / 4), oracle::baker(8)));
  CHECK(std::abs(overlap(echo.unperturbed, echo.perturbed) - std::norm(m(0, 0))) < 1e-12);
}

TEST_CASE("correlation_C") {
  const auto th = deviation(pseudo_pure(3, 1.0, 0));
  CHECK(std::abs(correlation_C(th, th, th) - 1.0) < 1e-12);
  CHECK(std::abs(correlation_C(th, th.scaled(-1.0), th) + 1.0) < 1e-12);
  for (double alpha : {0.25, 0.5, 0.9}) {
    CHECK(std::abs(correlation_C(th, th.scaled(alpha), th) - alpha) < 1e-12);
    CHECK(std::abs(correlation_unattenuated(th, th.scaled(alpha)) - 1.0) < 1e-12);
  }

  const DeviationMatrix zero(CMatrix(8, 8));
  CHECK_THROWS_AS(correlation_C(zero, th, th), std::invalid_argument);
  CHECK_THROWS_AS(correlation_C(th, zero, th), std::invalid_argument);
  CHECK_THROWS_AS(correlation_C(th, th, zero), std::invalid_argument);

  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = deviation(random_density(8, rng));
    const auto b = deviation(random_density(8, rng));
    const auto c = deviation(random_density(8, rng));
    const double r = correlation_unattenuated(a, b);
    CHECK(r <= 1.0 + 1e-12);
    CHECK(r >= -1.0 - 1e-12);
    const double s = scale(rng);
    CHECK(std::abs(correlation_C(a.scaled(s), b.scaled(s), c.scaled(s)) - correlation_C(a, b, c)) < 1e-12);
  }
}

TEST_CASE("von_neumann_entropy") {
  CHECK(std::abs(von_neumann_entropy(pseudo_pure(3, 1.0, 5))) < 1e-12);
  const CMatrix half = pseudo_pure(3, 1.0, 0) * 0.5 + pseudo_pure(3, 1.0, 1) * 0.5;
  CHECK(std::abs(von_neumann_entropy(half) - 1.0) < 1e-12);
  CHECK(std::abs(diagonal_entropy(half) - 1.0) < 1e-12);
  CHECK(std::abs(von_neumann_entropy(CMatrix::identity(8) * 0.125) - 3.0) < 1e-12);

  const auto map = baker_map(3);
  const auto echo = perturbed_echo(map, pseudo_pure(3, 1.0, 0), perturbation::Dephase{q3, 0.5});
  CHECK(std::abs(von_neumann_entropy(echo.perturbed) - 1.0) < 1e-9);

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix rho = random_density(8, rng, 1 + trial % 8);
    const double s = von_neumann_entropy(rho);
    CHECK(s >= -1e-12);
    CHECK(s <= 3.0 + 1e-12);
    const CMatrix u = map.matrix * circuit_unitary(Circuit(3, {gate::RotX{q3, 0.3 * trial}}));
    CHECK(std::abs(von_neumann_entropy(conjugate_by(u, rho)) - s) < 1e-9);
    // A pure state has zero entropy even when its populations are spread.
    CHECK(diagonal_entropy(rho) >= s - 1e-9);
  }

  CHECK_THROWS_AS(von_neumann_entropy(CMatrix::identity(8)), std::invalid_argument);
  CMatrix negative = CMatrix::diagonal(std::vector<Complex>{1.5, -0.5});
  CHECK_THROWS_AS(von_neumann_entropy(negative), std::domain_error);
}

TEST_CASE("basis_averaged_overlap") {
  const auto map = baker_map(3);
  auto rot = [](double theta) -> Perturbation { return perturbation::RotX{QubitIndex{3}, theta}; };

  const auto flat = basis_averaged_overlap(map, rot, {0.0, 0.0}, "theta");
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(flat.overlap_000[i] - 1.0) < 1e-12);
    CHECK(std::abs(flat.overlap_avg[i] - 1.0) < 1e-12);
  }

  // Oracle: average of |<x| QB^dag R QB |x>|^2 over all basis states.
  const double theta = std::numbers::pi / 32;
  const oracle::Mat m =
      oracle::mul(oracle::adj(oracle::baker(8)), oracle::mul(oracle::rotx_lsb(8, theta), oracle::baker(8)));
  double avg = 0.0;
  for (std::size_t x = 0; x < 8; ++x) avg += std::norm(m(x, x)) / 8;
  const auto small = basis_averaged_overlap(map, rot, {theta}, "theta");
  CHECK(std::abs(small.overlap_000[0] - std::norm(m(0, 0))) < 1e-12);
  CHECK(std::abs(small.overlap_avg[0] - avg) < 1e-12);
  CHECK(std::abs(small.overlap_000[0] - small.overlap_avg[0]) < 1e-3);

  auto shift = [](double s) -> Perturbation { return perturbation::Shift{static_cast<int>(s)}; };
  const auto inset = basis_averaged_overlap(map, shift, {1, 2, 3, 4}, "shift");
  REQUIRE(inset.overlap_000.size() == 4);
  for (int s = 1; s <= 4; ++s) {
    const double expected =
        oracle::echo_overlap(oracle::baker(8), oracle::cyclic_shift(8, s), oracle::projector(8, 0));
    CHECK(std::abs(inset.overlap_000[s - 1] - expected) < 1e-12);
  }

  CHECK_THROWS(basis_averaged_overlap(map, rot, {}, "theta"));
}
