#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bakersim/qmat.hpp"

namespace bakersim {

/// 1-based qubit label. Qubit 1 is the most significant bit of a basis index:
/// |b1 b2 ... bn> has index sum_j b_j 2^(n-j).
struct QubitIndex {
  int value = 1;
  constexpr QubitIndex() = default;
  constexpr explicit QubitIndex(int v) : value(v) {}
  friend constexpr auto operator<=>(QubitIndex, QubitIndex) = default;
};

/// Bit position (0 = least significant) of qubit q in an n-qubit index.
constexpr std::size_t bit_position(QubitIndex q, int n) { return static_cast<std::size_t>(n - q.value); }

std::size_t register_dim(int n);

namespace gate {

struct Hadamard {
  QubitIndex q;
  friend bool operator==(const Hadamard &, const Hadamard &) = default;
};

/// Phase e^{i theta} iff both qubits are 1.
struct CondPhase {
  QubitIndex a, b;
  double theta;
  friend bool operator==(const CondPhase &x, const CondPhase &y) {
    return x.theta == y.theta && ((x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a));
  }
};

struct Swap {
  QubitIndex a, b;
  friend bool operator==(const Swap &, const Swap &) = default;
};

struct PauliX {
  QubitIndex q;
  friend bool operator==(const PauliX &, const PauliX &) = default;
};

/// exp(-i theta sigma_x / 2).
struct RotX {
  QubitIndex q;
  double theta;
  friend bool operator==(const RotX &, const RotX &) = default;
};

/// Flips target iff every control is 1.
struct MultiControlledX {
  QubitIndex target;
  std::set<QubitIndex> controls;
  friend bool operator==(const MultiControlledX &, const MultiControlledX &) = default;
};

}  // namespace gate

using Gate = std::variant<gate::Hadamard, gate::CondPhase, gate::Swap, gate::PauliX, gate::RotX,
                          gate::MultiControlledX>;

std::vector<QubitIndex> gate_qubits(const Gate &g);
std::string gate_name(const Gate &g);
Gate adjoint(const Gate &g);

/// Throws std::out_of_range / std::invalid_argument if g does not fit an
/// n-qubit register or repeats a qubit.
void validate_gate(const Gate &g, int n);

/// Gates in temporal order: gates()[0] acts first.
class Circuit {
public:
  explicit Circuit(int n, std::vector<Gate> gates = {});

  /// Builds a circuit from a product written in operator order (rightmost
  /// factor acts first), e.g. transcribed directly from an equation.
  static Circuit from_operator_string_order(int n, std::vector<Gate> operator_order);

  int qubits() const { return n_; }
  std::size_t dim() const { return register_dim(n_); }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  Circuit &append(Gate g);
  Circuit &append(const Circuit &later);

  friend bool operator==(const Circuit &, const Circuit &) = default;

private:
  int n_;
  std::vector<Gate> gates_;
};

/// Lifts g to the full 2^n x 2^n register as a sum of Kronecker products of
/// single-qubit factors.
CMatrix embed_gate(const Gate &g, int n);

/// Product of embedded gates, later gates on the left. Applies each gate
/// directly to the accumulated matrix rows.
CMatrix circuit_unitary(const Circuit &c);

/// Same product, formed by multiplying Kronecker-embedded gate matrices.
CMatrix circuit_unitary_by_embedding(const Circuit &c);

Circuit inverse_circuit(const Circuit &c);

struct CompressedCircuit {
  Circuit circuit;
  /// wire[q-1] is the physical wire holding logical qubit q at the end.
  std::vector<QubitIndex> wire;
};

/// Removes every Swap by relabeling the qubits of subsequent gates.
/// permutation_unitary(wire) * circuit_unitary(compressed) == circuit_unitary(c).
CompressedCircuit relabel_compress(const Circuit &c);

/// Unitary that moves the contents of physical wire[q-1] onto qubit q.
CMatrix permutation_unitary(const std::vector<QubitIndex> &wire);

class StateVector {
public:
  explicit StateVector(std::vector<Complex> amplitudes);
  static StateVector basis(int n, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex> &amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

private:
  std::vector<Complex> amps_;
};

using DensityMatrix = CMatrix;

StateVector apply_to_state(const CMatrix &u, const StateVector &psi);
DensityMatrix apply_to_density(const CMatrix &u, const DensityMatrix &rho);
// U rho U^dagger for U = circuit_unitary(c), gate by gate; never forms U.
DensityMatrix apply_to_density(const Circuit &c, const DensityMatrix &rho);

nlohmann::json to_json(const Gate &g);
nlohmann::json to_json(const Circuit &c);

}  // namespace bakersim
