#pragma once

#include "bakersim/circuit.hpp"
#include "bakersim/qmat.hpp"

namespace bakersim {

/// F(x, y) = e^{2 pi i x y / dim} / sqrt(dim).
CMatrix qft_matrix(std::size_t dim);

/// F^{-1}(x, y) = e^{-2 pi i x y / dim} / sqrt(dim).
CMatrix inverse_qft_matrix(std::size_t dim);

enum class FourierDirection { Forward, Inverse };

/// Hadamard / conditional-phase ladder on the contiguous block first..last.
///
/// For each target k in order, the phases B_{jk} with theta = pi/2^{k-j}
/// (negated for the inverse transform) are applied from every earlier qubit j
/// of the block, then H_k. With emit_swaps the block is bit-reversed at the
/// end; otherwise the caller owns the reversal.
Circuit qft_circuit(QubitIndex first, QubitIndex last, int n, bool emit_swaps,
                    FourierDirection direction = FourierDirection::Forward);

/// qft_matrix on the block first..last, identity elsewhere.
CMatrix embedded_qft_matrix(QubitIndex first, QubitIndex last, int n,
                            FourierDirection direction = FourierDirection::Forward);

/// Quantum baker's map on n qubits: a QFT on qubits 2..n followed by an
/// inverse QFT on the whole register.
struct BakerMap {
  int n;
  Circuit circuit;
  CMatrix matrix;  // F_N^{-1} (I_2 (x) F_{N/2})

  std::size_t dim() const { return matrix.rows(); }
};

/// Gate sequence alone: QFT (with swaps) on 2..n, then inverse QFT on 1..n.
Circuit baker_circuit(int n);

/// Direct matrix F_N^{-1} (I_2 (x) F_{N/2}).
CMatrix baker_matrix(int n);

/// Builds the circuit and the direct matrix, and checks they agree to
/// kMatrixTol; throws std::logic_error otherwise.
BakerMap baker_map(int n);

/// The n = 3 circuit, transcribed verbatim as a right-to-left operator string.
Circuit baker_circuit_three_qubit_transcribed();

/// Applies map.matrix (k > 0) or its adjoint (k < 0) |k| times.
DensityMatrix iterate(const BakerMap &map, const DensityMatrix &rho, int k);

}  // namespace bakersim
