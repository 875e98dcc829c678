#include "bakersim/perturb.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bakersim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class Pauli { I, X, Z };

/// Pauli string on three qubits, ordered qubit 1..3.
CMatrix pauli_string(std::array<Pauli, 3> p) {
  const CMatrix id = CMatrix::identity(2);
  const CMatrix x(2, 2, {0, 1, 1, 0});
  const CMatrix z(2, 2, {1, 0, 0, -1});
  CMatrix acc = CMatrix::identity(1);
  for (auto f : p) acc = kron(acc, f == Pauli::X ? x : f == Pauli::Z ? z : id);
  return acc;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  const std::size_t d = ops_.front().rows();
  for (const auto &a : ops_)
    if (a.rows() != d || a.cols() != d) throw std::invalid_argument("KrausChannel: operators must be square and equal size");
  const double err = completeness_error();
  if (err > kMatrixTol) {
    throw std::invalid_argument("KrausChannel: not trace preserving, |sum A^dag A - I| = " + std::to_string(err));
  }
}

KrausChannel KrausChannel::unitary(CMatrix u) { return KrausChannel({std::move(u)}); }

double KrausChannel::completeness_error() const {
  CMatrix sum(dim(), dim());
  for (const auto &a : ops_) sum += dagger(a) * a;
  return max_abs_diff(sum, CMatrix::identity(dim()));
}

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho) {
  if (!rho.square() || rho.rows() != ch.dim()) throw std::invalid_argument("apply_channel: dimension mismatch");
  DensityMatrix out(rho.rows(), rho.cols());
  for (const auto &a : ch.operators()) out += conjugate_by(a, rho);
  return out;
}

Circuit shift_circuit(int s, int n) {
  if (s != 1 && s != -1) throw std::invalid_argument("shift_circuit: s must be +1 or -1");
  Circuit inc(n);
  for (int j = 1; j < n; ++j) {
    std::set<QubitIndex> controls;
    for (int c = j + 1; c <= n; ++c) controls.insert(QubitIndex{c});
    inc.append(gate::MultiControlledX{QubitIndex{j}, std::move(controls)});
  }
  inc.append(gate::PauliX{QubitIndex{n}});
  return s == 1 ? inc : inverse_circuit(inc);
}

Circuit shift_circuit_repeated(int s, int n) {
  Circuit c(n);
  if (s == 0) return c;
  const Circuit unit = shift_circuit(s > 0 ? 1 : -1, n);
  for (int i = 0; i < std::abs(s); ++i) c.append(unit);
  return c;
}

CMatrix shift_matrix(int s, int n) {
  const std::size_t dim = register_dim(n);
  const auto d = static_cast<long long>(dim);
  const long long shift = ((static_cast<long long>(s) % d) + d) % d;
  CMatrix u(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) u(static_cast<std::size_t>((static_cast<long long>(x) + shift) % d), x) = 1.0;
  return u;
}

std::array<CMatrix, 3> shift_exponential_factors_3bit() {
  using P = Pauli;
  const double pi = std::numbers::pi;
  // (1 - X1)(1 - Z2)(1 - Z3) expanded; the cross term is Z2 Z3.
  CMatrix toffoli_exponent = pauli_string({P::I, P::I, P::I}) - pauli_string({P::X, P::I, P::I}) -
                             pauli_string({P::I, P::Z, P::I}) - pauli_string({P::I, P::I, P::Z}) +
                             pauli_string({P::X, P::Z, P::I}) + pauli_string({P::X, P::I, P::Z}) +
                             pauli_string({P::I, P::Z, P::Z}) - pauli_string({P::X, P::Z, P::Z});
  CMatrix cnot_exponent = pauli_string({P::I, P::I, P::I}) - pauli_string({P::I, P::X, P::I}) -
                          pauli_string({P::I, P::I, P::Z}) + pauli_string({P::I, P::X, P::Z});
  CMatrix x_exponent = pauli_string({P::I, P::I, P::I}) - pauli_string({P::I, P::I, P::X});

  toffoli_exponent *= pi / 8.0;
  cnot_exponent *= pi / 4.0;
  x_exponent *= pi / 2.0;
  return {expi_hermitian(toffoli_exponent), expi_hermitian(cnot_exponent), expi_hermitian(x_exponent)};
}

CMatrix shift_exponential_form_3bit() {
  const auto f = shift_exponential_factors_3bit();
  return f[0] * f[1] * f[2];
}

CMatrix rotx_perturbation(QubitIndex q, double theta, int n) { return embed_gate(gate::RotX{q, theta}, n); }

KrausChannel dephase_channel(QubitIndex q, double p, int n) {
  if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("dephase_channel: p must lie in [0, 1/2]");
  if (q.value < 1 || q.value > n) throw std::out_of_range("dephase_channel: qubit outside register");
  const std::size_t dim = register_dim(n);
  const std::size_t mask = std::size_t{1} << bit_position(q, n);
  CMatrix keep = CMatrix::identity(dim) * std::sqrt(1.0 - p);
  CMatrix flip(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) flip(i, i) = (i & mask) ? -std::sqrt(p) : std::sqrt(p);
  return KrausChannel({std::move(keep), std::move(flip)});
}

double gradient_dephasing_probability(double spread) {
  if (!std::isfinite(spread) || spread < 0.0) throw std::invalid_argument("gradient spread must be finite and >= 0");
  const double c = spread == 0.0 ? 1.0 : std::sin(spread) / spread;
  return (1.0 - c) / 2.0;
}

KrausChannel perturbation_channel(const Perturbation &pert, int n) {
  return std::visit(overloaded{
                        [n](const perturbation::Shift &s) {
                          return KrausChannel::unitary(circuit_unitary(shift_circuit_repeated(s.s, n)));
                        },
                        [n](const perturbation::RotX &r) { return KrausChannel::unitary(rotx_perturbation(r.q, r.theta, n)); },
                        [n](const perturbation::Dephase &d) { return dephase_channel(d.q, d.p, n); },
                    },
                    pert);
}

EchoResult perturbed_echo(const BakerMap &map, const DensityMatrix &rho_init, const Perturbation &pert) {
  if (!rho_init.square() || rho_init.rows() != map.dim()) throw std::invalid_argument("perturbed_echo: dimension mismatch");
  // map.circuit is checked against map.matrix when the map is built; running
  // the gates keeps each step O(dim^2) per gate instead of dense products.
  const Circuit inverse = inverse_circuit(map.circuit);
  const DensityMatrix forward = apply_to_density(map.circuit, rho_init);
  DensityMatrix unperturbed = apply_to_density(inverse, forward);
  DensityMatrix perturbed = apply_to_density(inverse, apply_channel(perturbation_channel(pert, map.n), forward));
  return {std::move(unperturbed), std::move(perturbed)};
}

std::string describe(const Perturbation &pert) {
  char buf[96];
  std::visit(overloaded{
                 [&](const perturbation::Shift &s) { std::snprintf(buf, sizeof buf, "shift(%+d)", s.s); },
                 [&](const perturbation::RotX &r) { std::snprintf(buf, sizeof buf, "rotx(q%d, %.12g)", r.q.value, r.theta); },
                 [&](const perturbation::Dephase &d) { std::snprintf(buf, sizeof buf, "dephase(q%d, p=%.12g)", d.q.value, d.p); },
             },
             pert);
  return buf;
}

}  // namespace bakersim
