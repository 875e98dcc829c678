#include "bakersim/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bakersim {

namespace {

constexpr double kStateTol = 1e-12;

double squared_norm(const DeviationMatrix &d) { return trace_of_product(d.matrix(), d.matrix()).real(); }

}  // namespace

DensityMatrix pseudo_pure(int n, double epsilon, std::size_t index) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("pseudo_pure: epsilon must lie in [0, 1]");
  const std::size_t dim = register_dim(n);
  if (index >= dim) throw std::out_of_range("pseudo_pure: basis index out of range");
  DensityMatrix rho = CMatrix::identity(dim) * ((1.0 - epsilon) / static_cast<double>(dim));
  rho(index, index) += epsilon;
  return rho;
}

DeviationMatrix::DeviationMatrix(CMatrix m, double identity_offset) : m_(std::move(m)), offset_(identity_offset) {
  if (!m_.square()) throw std::invalid_argument("DeviationMatrix: matrix is not square");
  if (std::abs(m_.trace()) > kStateTol) throw std::invalid_argument("DeviationMatrix: matrix is not traceless");
  if (hermiticity_error(m_) > kStateTol) throw std::invalid_argument("DeviationMatrix: matrix is not Hermitian");
}

DeviationMatrix DeviationMatrix::scaled(double factor) const { return DeviationMatrix(m_ * factor, offset_ * factor); }

DeviationMatrix deviation(const DensityMatrix &rho) {
  if (hermiticity_error(rho) > kMatrixTol) throw std::invalid_argument("deviation: matrix is not Hermitian");
  const double offset = rho.trace().real() / static_cast<double>(rho.rows());
  CMatrix m = rho;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= offset;
  return DeviationMatrix(std::move(m), offset);
}

double overlap(const DensityMatrix &a, const DensityMatrix &b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) throw std::invalid_argument("overlap: dimension mismatch");
  return trace_of_product(a, b).real();
}

double correlation_unattenuated(const DeviationMatrix &theory, const DeviationMatrix &experiment) {
  if (theory.matrix().rows() != experiment.matrix().rows()) {
    throw std::invalid_argument("correlation: dimension mismatch");
  }
  const double tt = squared_norm(theory);
  const double ee = squared_norm(experiment);
  if (tt <= 0.0 || ee <= 0.0) throw std::invalid_argument("correlation: zero-norm deviation matrix");
  return trace_of_product(theory.matrix(), experiment.matrix()).real() / (std::sqrt(tt) * std::sqrt(ee));
}

double correlation_C(const DeviationMatrix &theory, const DeviationMatrix &experiment, const DeviationMatrix &initial) {
  const double ii = squared_norm(initial);
  if (ii <= 0.0) throw std::invalid_argument("correlation: zero-norm initial deviation matrix");
  if (initial.matrix().rows() != theory.matrix().rows()) throw std::invalid_argument("correlation: dimension mismatch");
  const double ee = squared_norm(experiment);
  return correlation_unattenuated(theory, experiment) * std::sqrt(ee / ii);
}

double von_neumann_entropy(const DensityMatrix &rho) {
  if (std::abs(rho.trace() - 1.0) > 1e-9) throw std::invalid_argument("von_neumann_entropy: trace is not 1");
  const auto eig = hermitian_eigen(rho);
  double s = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda < -1e-9) {
      throw std::domain_error("von_neumann_entropy: eigenvalue " + std::to_string(lambda) + " is negative");
    }
    if (lambda <= 0.0) continue;
    s -= lambda * std::log2(lambda);
  }
  return s;
}

std::vector<double> populations(const DensityMatrix &rho) {
  std::vector<double> p;
  p.reserve(rho.rows());
  for (const auto &z : rho.diag()) p.push_back(z.real());
  return p;
}

double diagonal_entropy(const DensityMatrix &rho) {
  double s = 0.0;
  for (double p : populations(rho)) {
    if (p < -1e-9) throw std::domain_error("diagonal_entropy: negative population");
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double basis_averaged_echo_overlap(const BakerMap &map, const Perturbation &pert, double epsilon) {
  double total = 0.0;
  for (std::size_t x = 0; x < map.dim(); ++x) {
    const auto echo = perturbed_echo(map, pseudo_pure(map.n, epsilon, x), pert);
    total += overlap(echo.unperturbed, echo.perturbed);
  }
  return total / static_cast<double>(map.dim());
}

OverlapCurve basis_averaged_overlap(const BakerMap &map, const PerturbationFamily &family,
                                    const std::vector<double> &grid, std::string parameter_name) {
  if (grid.empty()) throw std::invalid_argument("basis_averaged_overlap: empty grid");
  OverlapCurve curve{std::move(parameter_name), grid, {}, {}};
  const DensityMatrix ground = pseudo_pure(map.n, 1.0, 0);
  for (double value : grid) {
    const Perturbation pert = family(value);
    const auto echo = perturbed_echo(map, ground, pert);
    curve.overlap_000.push_back(overlap(echo.unperturbed, echo.perturbed));
    curve.overlap_avg.push_back(basis_averaged_echo_overlap(map, pert));
  }
  return curve;
}

}  // namespace bakersim
