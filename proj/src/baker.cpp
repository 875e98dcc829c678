#include "bakersim/baker.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bakersim {

namespace {

CMatrix fourier(std::size_t dim, double sign) {
  if (dim == 0) throw std::invalid_argument("qft_matrix: dimension must be positive");
  CMatrix f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      // Reduce x*y mod dim first so the angle stays small and exact.
      const std::size_t k = (x * y) % dim;
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim);
      f(x, y) = std::polar(norm, angle);
    }
  return f;
}

}  // namespace

CMatrix qft_matrix(std::size_t dim) { return fourier(dim, +1.0); }
CMatrix inverse_qft_matrix(std::size_t dim) { return fourier(dim, -1.0); }

Circuit qft_circuit(QubitIndex first, QubitIndex last, int n, bool emit_swaps, FourierDirection direction) {
  if (first.value < 1 || last.value > n || first.value > last.value) {
    throw std::invalid_argument("qft_circuit: targets must be a non-empty contiguous range inside 1.." +
                                std::to_string(n));
  }
  const double sign = direction == FourierDirection::Forward ? 1.0 : -1.0;
  Circuit c(n);
  for (int k = first.value; k <= last.value; ++k) {
    for (int j = first.value; j < k; ++j) {
      c.append(gate::CondPhase{QubitIndex{j}, QubitIndex{k}, sign * std::numbers::pi / std::ldexp(1.0, k - j)});
    }
    c.append(gate::Hadamard{QubitIndex{k}});
  }
  if (emit_swaps) {
    for (int lo = first.value, hi = last.value; lo < hi; ++lo, --hi) c.append(gate::Swap{QubitIndex{lo}, QubitIndex{hi}});
  }
  return c;
}

CMatrix embedded_qft_matrix(QubitIndex first, QubitIndex last, int n, FourierDirection direction) {
  if (first.value < 1 || last.value > n || first.value > last.value) {
    throw std::invalid_argument("embedded_qft_matrix: bad target range");
  }
  const std::size_t block = register_dim(last.value - first.value + 1);
  const CMatrix f = direction == FourierDirection::Forward ? qft_matrix(block) : inverse_qft_matrix(block);
  return kron(kron(CMatrix::identity(register_dim(first.value - 1)), f),
              CMatrix::identity(register_dim(n - last.value)));
}

Circuit baker_circuit(int n) {
  if (n < 1) throw std::invalid_argument("baker_circuit: need at least one qubit");
  Circuit circuit(n);
  if (n >= 2) circuit.append(qft_circuit(QubitIndex{2}, QubitIndex{n}, n, true));
  circuit.append(qft_circuit(QubitIndex{1}, QubitIndex{n}, n, true, FourierDirection::Inverse));
  return circuit;
}

CMatrix baker_matrix(int n) {
  if (n < 1) throw std::invalid_argument("baker_matrix: need at least one qubit");
  const std::size_t dim = register_dim(n);
  return inverse_qft_matrix(dim) * kron(CMatrix::identity(2), qft_matrix(dim / 2));
}

BakerMap baker_map(int n) {
  Circuit circuit = baker_circuit(n);
  CMatrix matrix = baker_matrix(n);
  const double err = max_abs_diff(circuit_unitary(circuit), matrix);
  if (err > kMatrixTol) {
    throw std::logic_error("baker_map: circuit and matrix disagree by " + std::to_string(err));
  }
  return BakerMap{n, std::move(circuit), std::move(matrix)};
}

Circuit baker_circuit_three_qubit_transcribed() {
  using namespace gate;
  const QubitIndex q1{1}, q2{2}, q3{3};
  const double half = std::numbers::pi / 2.0, quarter = std::numbers::pi / 4.0;
  // Swap13 H3 B+23 B+13 H2 B+12 H1 Swap23 H3 B23 H2
  return Circuit::from_operator_string_order(3, {
                                                    Swap{q1, q3},
                                                    Hadamard{q3},
                                                    CondPhase{q2, q3, -half},
                                                    CondPhase{q1, q3, -quarter},
                                                    Hadamard{q2},
                                                    CondPhase{q1, q2, -half},
                                                    Hadamard{q1},
                                                    Swap{q2, q3},
                                                    Hadamard{q3},
                                                    CondPhase{q2, q3, half},
                                                    Hadamard{q2},
                                                });
}

DensityMatrix iterate(const BakerMap &map, const DensityMatrix &rho, int k) {
  if (!rho.square() || rho.rows() != map.dim()) throw std::invalid_argument("iterate: dimension mismatch");
  const CMatrix step = k >= 0 ? map.matrix : dagger(map.matrix);
  DensityMatrix out = rho;
  for (int i = 0; i < std::abs(k); ++i) out = apply_to_density(step, out);
  return out;
}

}  // namespace bakersim
