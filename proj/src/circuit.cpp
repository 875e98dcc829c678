#include "bakersim/circuit.hpp"

#include <algorithm>
#include <cmath>
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

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) { return CMatrix(2, 2, {a, b, c, d}); }

const CMatrix &pauli_x() {
  static const CMatrix m = mat2(0, 1, 1, 0);
  return m;
}
const CMatrix &proj0() {
  static const CMatrix m = mat2(1, 0, 0, 0);
  return m;
}
const CMatrix &proj1() {
  static const CMatrix m = mat2(0, 0, 0, 1);
  return m;
}
const CMatrix &ket0bra1() {
  static const CMatrix m = mat2(0, 1, 0, 0);
  return m;
}
const CMatrix &ket1bra0() {
  static const CMatrix m = mat2(0, 0, 1, 0);
  return m;
}

CMatrix hadamard_2x2() {
  const double r = 1.0 / std::numbers::sqrt2;
  return mat2(r, r, r, -r);
}

CMatrix rotx_2x2(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return mat2(c, Complex(0, -s), Complex(0, -s), c);
}

/// coefficient * (factor_1 (x) factor_2 (x) ... (x) factor_n); unset factors
/// are the identity.
struct KronTerm {
  Complex coefficient;
  std::vector<const CMatrix *> factors;
};

KronTerm term(int n, Complex coef) { return {coef, std::vector<const CMatrix *>(n, nullptr)}; }

CMatrix realize(const std::vector<KronTerm> &terms, int n) {
  const std::size_t dim = register_dim(n);
  CMatrix total(dim, dim);
  const CMatrix id2 = CMatrix::identity(2);
  for (const auto &t : terms) {
    CMatrix acc = CMatrix::identity(1);
    for (int q = 0; q < n; ++q) acc = kron(acc, t.factors[q] ? *t.factors[q] : id2);
    total += acc * t.coefficient;
  }
  return total;
}

// Single-qubit gate kernel acting on the row index of a row-major matrix.
void apply_single_rows(const CMatrix &m, std::size_t bit, CMatrix &target) {
  const std::size_t dim = target.rows(), cols = target.cols();
  const std::size_t mask = std::size_t{1} << bit;
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    Complex *r0 = &target(i, 0);
    Complex *r1 = &target(i | mask, 0);
    for (std::size_t k = 0; k < cols; ++k) {
      const Complex a = r0[k], b = r1[k];
      r0[k] = m00 * a + m01 * b;
      r1[k] = m10 * a + m11 * b;
    }
  }
}

void swap_rows(CMatrix &target, std::size_t i, std::size_t j) {
  Complex *ri = &target(i, 0);
  Complex *rj = &target(j, 0);
  std::swap_ranges(ri, ri + target.cols(), rj);
}

/// target <- G * target.
void apply_gate_rows(const Gate &g, int n, CMatrix &target) {
  const std::size_t dim = target.rows();
  std::visit(
      overloaded{
          [&](const gate::Hadamard &h) { apply_single_rows(hadamard_2x2(), bit_position(h.q, n), target); },
          [&](const gate::PauliX &x) { apply_single_rows(pauli_x(), bit_position(x.q, n), target); },
          [&](const gate::RotX &r) { apply_single_rows(rotx_2x2(r.theta), bit_position(r.q, n), target); },
          [&](const gate::CondPhase &p) {
            const std::size_t mask = (std::size_t{1} << bit_position(p.a, n)) | (std::size_t{1} << bit_position(p.b, n));
            const Complex phase = std::polar(1.0, p.theta);
            for (std::size_t i = 0; i < dim; ++i) {
              if ((i & mask) != mask) continue;
              Complex *row = &target(i, 0);
              for (std::size_t k = 0; k < target.cols(); ++k) row[k] *= phase;
            }
          },
          [&](const gate::Swap &s) {
            const std::size_t ma = std::size_t{1} << bit_position(s.a, n);
            const std::size_t mb = std::size_t{1} << bit_position(s.b, n);
            for (std::size_t i = 0; i < dim; ++i)
              if ((i & ma) && !(i & mb)) swap_rows(target, i, (i & ~ma) | mb);
          },
          [&](const gate::MultiControlledX &x) {
            std::size_t cmask = 0;
            for (auto c : x.controls) cmask |= std::size_t{1} << bit_position(c, n);
            const std::size_t tmask = std::size_t{1} << bit_position(x.target, n);
            for (std::size_t i = 0; i < dim; ++i)
              if ((i & cmask) == cmask && !(i & tmask)) swap_rows(target, i, i | tmask);
          },
      },
      g);
}

}  // namespace

std::size_t register_dim(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("register size out of range: " + std::to_string(n));
  return std::size_t{1} << n;
}

std::vector<QubitIndex> gate_qubits(const Gate &g) {
  return std::visit(overloaded{
                        [](const gate::Hadamard &h) { return std::vector{h.q}; },
                        [](const gate::PauliX &x) { return std::vector{x.q}; },
                        [](const gate::RotX &r) { return std::vector{r.q}; },
                        [](const gate::CondPhase &p) { return std::vector{p.a, p.b}; },
                        [](const gate::Swap &s) { return std::vector{s.a, s.b}; },
                        [](const gate::MultiControlledX &x) {
                          std::vector<QubitIndex> qs{x.target};
                          qs.insert(qs.end(), x.controls.begin(), x.controls.end());
                          return qs;
                        },
                    },
                    g);
}

std::string gate_name(const Gate &g) {
  static const char *names[] = {"H", "B", "Swap", "X", "Rx", "MCX"};
  return names[g.index()];
}

Gate adjoint(const Gate &g) {
  return std::visit(overloaded{
                        [](const gate::CondPhase &p) -> Gate { return gate::CondPhase{p.a, p.b, -p.theta}; },
                        [](const gate::RotX &r) -> Gate { return gate::RotX{r.q, -r.theta}; },
                        [](const auto &self_adjoint) -> Gate { return self_adjoint; },
                    },
                    g);
}

void validate_gate(const Gate &g, int n) {
  const auto qs = gate_qubits(g);
  for (auto q : qs) {
    if (q.value < 1 || q.value > n) {
      throw std::out_of_range(gate_name(g) + ": qubit " + std::to_string(q.value) + " outside register of " +
                              std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (qs[i] == qs[j]) throw std::invalid_argument(gate_name(g) + ": repeated qubit " + std::to_string(qs[i].value));
  if (const auto *x = std::get_if<gate::MultiControlledX>(&g); x && x->controls.count(x->target)) {
    throw std::invalid_argument("MCX: target is also a control");
  }
  auto finite = [](double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("gate angle is not finite");
  };
  if (const auto *p = std::get_if<gate::CondPhase>(&g)) finite(p->theta);
  if (const auto *r = std::get_if<gate::RotX>(&g)) finite(r->theta);
}

Circuit::Circuit(int n, std::vector<Gate> gates) : n_(n), gates_(std::move(gates)) {
  if (n < 1) throw std::invalid_argument("Circuit: register needs at least one qubit");
  register_dim(n);
  for (const auto &g : gates_) validate_gate(g, n_);
}

Circuit Circuit::from_operator_string_order(int n, std::vector<Gate> operator_order) {
  std::reverse(operator_order.begin(), operator_order.end());
  return Circuit(n, std::move(operator_order));
}

Circuit &Circuit::append(Gate g) {
  validate_gate(g, n_);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit &Circuit::append(const Circuit &later) {
  if (later.n_ != n_) throw std::invalid_argument("Circuit::append: register size mismatch");
  gates_.insert(gates_.end(), later.gates_.begin(), later.gates_.end());
  return *this;
}

CMatrix embed_gate(const Gate &g, int n) {
  validate_gate(g, n);
  auto slot = [n](QubitIndex q) { return static_cast<std::size_t>(q.value - 1); };
  return std::visit(
      overloaded{
          [&](const gate::Hadamard &h) {
            const CMatrix m = hadamard_2x2();
            auto t = term(n, 1.0);
            t.factors[slot(h.q)] = &m;
            return realize({t}, n);
          },
          [&](const gate::PauliX &x) {
            auto t = term(n, 1.0);
            t.factors[slot(x.q)] = &pauli_x();
            return realize({t}, n);
          },
          [&](const gate::RotX &r) {
            const CMatrix m = rotx_2x2(r.theta);
            auto t = term(n, 1.0);
            t.factors[slot(r.q)] = &m;
            return realize({t}, n);
          },
          [&](const gate::CondPhase &p) {
            // I + (e^{i theta} - 1) |1><1|_a |1><1|_b
            auto t = term(n, std::polar(1.0, p.theta) - 1.0);
            t.factors[slot(p.a)] = &proj1();
            t.factors[slot(p.b)] = &proj1();
            return realize({term(n, 1.0), t}, n);
          },
          [&](const gate::Swap &s) {
            // sum_{u,v} |u><v|_a |v><u|_b
            std::vector<KronTerm> terms;
            const CMatrix *outer[2][2] = {{&proj0(), &ket0bra1()}, {&ket1bra0(), &proj1()}};
            for (int u = 0; u < 2; ++u)
              for (int v = 0; v < 2; ++v) {
                auto t = term(n, 1.0);
                t.factors[slot(s.a)] = outer[u][v];
                t.factors[slot(s.b)] = outer[v][u];
                terms.push_back(t);
              }
            return realize(terms, n);
          },
          [&](const gate::MultiControlledX &x) {
            // I + (prod_c |1><1|_c) (x) (X - I)_t
            const CMatrix x_minus_i = pauli_x() - CMatrix::identity(2);
            auto t = term(n, 1.0);
            for (auto c : x.controls) t.factors[slot(c)] = &proj1();
            t.factors[slot(x.target)] = &x_minus_i;
            return realize({term(n, 1.0), t}, n);
          },
      },
      g);
}

CMatrix circuit_unitary(const Circuit &c) {
  CMatrix u = CMatrix::identity(c.dim());
  for (const auto &g : c.gates()) apply_gate_rows(g, c.qubits(), u);
  return u;
}

CMatrix circuit_unitary_by_embedding(const Circuit &c) {
  CMatrix u = CMatrix::identity(c.dim());
  for (const auto &g : c.gates()) u = embed_gate(g, c.qubits()) * u;
  return u;
}

Circuit inverse_circuit(const Circuit &c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) gates.push_back(adjoint(*it));
  return Circuit(c.qubits(), std::move(gates));
}

CompressedCircuit relabel_compress(const Circuit &c) {
  const int n = c.qubits();
  std::vector<QubitIndex> wire(n);
  for (int q = 1; q <= n; ++q) wire[q - 1] = QubitIndex{q};
  auto route = [&](QubitIndex q) { return wire[q.value - 1]; };

  std::vector<Gate> out;
  for (const auto &g : c.gates()) {
    if (const auto *s = std::get_if<gate::Swap>(&g)) {
      std::swap(wire[s->a.value - 1], wire[s->b.value - 1]);
      continue;
    }
    out.push_back(std::visit(overloaded{
                                 [&](const gate::Hadamard &h) -> Gate { return gate::Hadamard{route(h.q)}; },
                                 [&](const gate::PauliX &x) -> Gate { return gate::PauliX{route(x.q)}; },
                                 [&](const gate::RotX &r) -> Gate { return gate::RotX{route(r.q), r.theta}; },
                                 [&](const gate::CondPhase &p) -> Gate {
                                   return gate::CondPhase{route(p.a), route(p.b), p.theta};
                                 },
                                 [&](const gate::MultiControlledX &x) -> Gate {
                                   std::set<QubitIndex> controls;
                                   for (auto q : x.controls) controls.insert(route(q));
                                   return gate::MultiControlledX{route(x.target), std::move(controls)};
                                 },
                                 [&](const gate::Swap &s) -> Gate { return s; },
                             },
                             g));
  }
  return {Circuit(n, std::move(out)), std::move(wire)};
}

CMatrix permutation_unitary(const std::vector<QubitIndex> &wire) {
  const int n = static_cast<int>(wire.size());
  const std::size_t dim = register_dim(n);
  std::vector<bool> seen(n, false);
  for (auto w : wire) {
    if (w.value < 1 || w.value > n || seen[w.value - 1]) {
      throw std::invalid_argument("permutation_unitary: not a permutation of 1..n");
    }
    seen[w.value - 1] = true;
  }
  CMatrix p(dim, dim);
  for (std::size_t in = 0; in < dim; ++in) {
    std::size_t out = 0;
    for (int q = 1; q <= n; ++q) {
      const std::size_t b = (in >> bit_position(wire[q - 1], n)) & 1U;
      out |= b << bit_position(QubitIndex{q}, n);
    }
    p(out, in) = 1.0;
  }
  return p;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  for (const auto &z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("StateVector: non-finite amplitude");
}

StateVector StateVector::basis(int n, std::size_t index) {
  const std::size_t dim = register_dim(n);
  if (index >= dim) throw std::out_of_range("StateVector::basis: index out of range");
  std::vector<Complex> a(dim);
  a[index] = 1.0;
  return StateVector(std::move(a));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &z : amps_) s += std::norm(z);
  return std::sqrt(s);
}

StateVector apply_to_state(const CMatrix &u, const StateVector &psi) {
  if (u.cols() != psi.dim()) throw std::invalid_argument("apply_to_state: dimension mismatch");
  const CMatrix col = u * CMatrix(psi.dim(), 1, psi.amplitudes());
  return StateVector(std::vector<Complex>(col.entries().begin(), col.entries().end()));
}

DensityMatrix apply_to_density(const CMatrix &u, const DensityMatrix &rho) {
  if (!u.square() || !rho.square() || u.cols() != rho.rows()) {
    throw std::invalid_argument("apply_to_density: dimension mismatch");
  }
  return conjugate_by(u, rho);
}

DensityMatrix apply_to_density(const Circuit &c, const DensityMatrix &rho) {
  if (!rho.square() || rho.rows() != c.dim()) throw std::invalid_argument("apply_to_density: dimension mismatch");
  // U rho U^dagger = U (U rho^dagger)^dagger
  DensityMatrix m = dagger(rho);
  for (const auto &g : c.gates()) apply_gate_rows(g, c.qubits(), m);
  m = dagger(m);
  for (const auto &g : c.gates()) apply_gate_rows(g, c.qubits(), m);
  return m;
}

nlohmann::json to_json(const Gate &g) {
  nlohmann::json j;
  j["gate"] = gate_name(g);
  std::visit(overloaded{
                 [&](const gate::Hadamard &h) { j["qubits"] = {h.q.value}; },
                 [&](const gate::PauliX &x) { j["qubits"] = {x.q.value}; },
                 [&](const gate::RotX &r) {
                   j["qubits"] = {r.q.value};
                   j["angle"] = r.theta;
                 },
                 [&](const gate::CondPhase &p) {
                   j["qubits"] = {p.a.value, p.b.value};
                   j["angle"] = p.theta;
                 },
                 [&](const gate::Swap &s) { j["qubits"] = {s.a.value, s.b.value}; },
                 [&](const gate::MultiControlledX &x) {
                   j["target"] = x.target.value;
                   auto controls = nlohmann::json::array();
                   for (auto c : x.controls) controls.push_back(c.value);
                   j["controls"] = controls;
                 },
             },
             g);
  return j;
}

nlohmann::json to_json(const Circuit &c) {
  nlohmann::json j;
  j["qubits"] = c.qubits();
  auto gates = nlohmann::json::array();
  for (const auto &g : c.gates()) gates.push_back(to_json(g));
  j["gates"] = gates;
  return j;
}

}  // namespace bakersim
