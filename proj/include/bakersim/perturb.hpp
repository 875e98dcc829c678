#pragma once

#include <array>
#include <variant>
#include <vector>

#include "bakersim/baker.hpp"
#include "bakersim/circuit.hpp"
#include "bakersim/qmat.hpp"

namespace bakersim {

/// rho -> sum_k A_k rho A_k^dagger. Construction rejects operator sets that
/// are not trace preserving to kMatrixTol.
class KrausChannel {
public:
  explicit KrausChannel(std::vector<CMatrix> operators);
  static KrausChannel unitary(CMatrix u);

  const std::vector<CMatrix> &operators() const { return ops_; }
  std::size_t dim() const { return ops_.front().rows(); }

  /// max |sum_k A_k^dagger A_k - I|.
  double completeness_error() const;

private:
  std::vector<CMatrix> ops_;
};

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho);

namespace perturbation {

/// Position shift x -> x + s (mod 2^n).
struct Shift {
  int s;
};

struct RotX {
  QubitIndex q;
  double theta;
};

/// Phase damping of one qubit with Kraus weight p in [0, 1/2].
struct Dephase {
  QubitIndex q;
  double p;
};

}  // namespace perturbation

using Perturbation = std::variant<perturbation::Shift, perturbation::RotX, perturbation::Dephase>;

/// Increment (s = +1) or decrement (s = -1) as a cascade of multi-controlled
/// NOTs. The increment flips qubit j under control of every less significant
/// qubit, most significant target first, ending with a bare X on qubit n.
Circuit shift_circuit(int s, int n);

/// Circuit for an arbitrary shift: |s| copies of the unit-shift circuit.
Circuit shift_circuit_repeated(int s, int n);

/// Permutation |x> -> |x + s mod 2^n>.
CMatrix shift_matrix(int s, int n);

/// The three exponential factors of the three-qubit shift written in Pauli
/// form, in operator order (factors[0] leftmost, acts last).
///   factors[0] = exp(i pi/8 (1 - X1)(1 - Z2)(1 - Z3))   Toffoli onto qubit 1
///   factors[1] = exp(i pi/4 (1 - X2)(1 - Z3))           CNOT 3 -> 2
///   factors[2] = exp(i pi/2 (1 - X3))                   X on qubit 3
/// Each exponent is assembled as a sum of Pauli strings and exponentiated
/// through its spectral decomposition.
std::array<CMatrix, 3> shift_exponential_factors_3bit();

/// factors[0] * factors[1] * factors[2]. The rightmost X acts first, so the
/// controls read post-flip values and the product is the DECREMENT,
/// shift_matrix(-1, 3).
CMatrix shift_exponential_form_3bit();

/// Shift realized by shift_exponential_form_3bit(): -1.
inline constexpr int kExponentialFormShift = -1;

CMatrix rotx_perturbation(QubitIndex q, double theta, int n);

/// {sqrt(1-p) I, sqrt(p) Z_q}: coherences of qubit q scale by (1 - 2p).
KrausChannel dephase_channel(QubitIndex q, double p, int n);

/// Kraus weight of a gradient whose rotation angle is spread uniformly over
/// [-spread, spread] across the sample: coherence factor c = sin(spread)/spread,
/// p = (1 - c)/2. Values beyond the first zero of sin(x)/x give p > 1/2, which
/// dephase_channel rejects.
double gradient_dephasing_probability(double spread);

KrausChannel perturbation_channel(const Perturbation &pert, int n);

struct EchoResult {
  DensityMatrix unperturbed;  // QB^dag QB rho QB^dag QB
  DensityMatrix perturbed;    // QB^dag Channel(QB rho QB^dag) QB
};

/// Forward map, perturbation, inverse map. The unperturbed branch is computed
/// through the same forward/inverse products.
EchoResult perturbed_echo(const BakerMap &map, const DensityMatrix &rho_init, const Perturbation &pert);

std::string describe(const Perturbation &pert);

}  // namespace bakersim
