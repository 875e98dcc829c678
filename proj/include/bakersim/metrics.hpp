#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bakersim/baker.hpp"
#include "bakersim/perturb.hpp"

namespace bakersim {

/// (1 - epsilon) I / 2^n + epsilon |index><index|.
DensityMatrix pseudo_pure(int n, double epsilon, std::size_t index);

/// Traceless Hermitian part of a density matrix, with the amount of identity
/// that was removed.
class DeviationMatrix {
public:
  /// Throws unless m is Hermitian and traceless to 1e-12.
  explicit DeviationMatrix(CMatrix m, double identity_offset = 0.0);

  const CMatrix &matrix() const { return m_; }
  double identity_offset() const { return offset_; }

  DeviationMatrix scaled(double factor) const;

private:
  CMatrix m_;
  double offset_;
};

DeviationMatrix deviation(const DensityMatrix &rho);

/// Tr(a b). Real for Hermitian inputs.
double overlap(const DensityMatrix &a, const DensityMatrix &b);

/// Tr(th exp) / sqrt(Tr(th^2) Tr(exp^2)).
double correlation_unattenuated(const DeviationMatrix &theory, const DeviationMatrix &experiment);

/// Attenuated correlation: the unattenuated correlation times
/// sqrt(Tr(exp^2) / Tr(initial^2)). Throws on a zero-norm argument.
double correlation_C(const DeviationMatrix &theory, const DeviationMatrix &experiment,
                     const DeviationMatrix &initial);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix &rho);

/// Shannon entropy (bits) of the computational-basis populations.
double diagonal_entropy(const DensityMatrix &rho);

std::vector<double> populations(const DensityMatrix &rho);

struct OverlapCurve {
  std::string parameter_name;
  std::vector<double> grid;
  std::vector<double> overlap_000;
  std::vector<double> overlap_avg;  // empty unless requested
};

using PerturbationFamily = std::function<Perturbation(double)>;

/// Mean echo overlap over the computational basis of pseudo-pure initial
/// states with purity epsilon.
double basis_averaged_echo_overlap(const BakerMap &map, const Perturbation &pert, double epsilon = 1.0);

/// For each grid value: overlap from |0...0> and the computational-basis
/// average.
OverlapCurve basis_averaged_overlap(const BakerMap &map, const PerturbationFamily &family,
                                    const std::vector<double> &grid, std::string parameter_name);

}  // namespace bakersim
