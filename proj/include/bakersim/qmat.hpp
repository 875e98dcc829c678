#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

namespace bakersim {

using Complex = std::complex<double>;

/// Default tolerance for matrix-equality checks (max absolute element).
inline constexpr double kMatrixTol = 1e-10;

/// Dense complex matrix stored row-major.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; throws if the count is wrong or
  /// any entry is not finite.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t dim);
  static CMatrix diagonal(std::span<const Complex> diag);
  /// |index><index| on a dim-dimensional space.
  static CMatrix basis_projector(std::size_t dim, std::size_t index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  Complex trace() const;
  std::vector<Complex> diag() const;

  CMatrix &operator+=(const CMatrix &other);
  CMatrix &operator-=(const CMatrix &other);
  CMatrix &operator*=(Complex s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(CMatrix a, Complex s);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix dagger(const CMatrix &a);

/// Tr(a * b) without forming the product.
Complex trace_of_product(const CMatrix &a, const CMatrix &b);

/// a * b * a^dagger.
CMatrix conjugate_by(const CMatrix &a, const CMatrix &b);

double max_abs_diff(const CMatrix &a, const CMatrix &b);
bool approx_equal(const CMatrix &a, const CMatrix &b, double tol = kMatrixTol);

/// Compares after removing the phase of b's largest-magnitude entry relative
/// to the same entry of a.
bool equal_up_to_global_phase(const CMatrix &a, const CMatrix &b, double tol = kMatrixTol);

/// max |a - a^dagger|.
double hermiticity_error(const CMatrix &a);
/// max |U^dagger U - I|.
double unitarity_error(const CMatrix &u);

bool is_hermitian(const CMatrix &a, double tol = kMatrixTol);
bool is_unitary(const CMatrix &u, double tol = kMatrixTol);

/// Throws std::invalid_argument when u is not unitary to tol. Returns u.
const CMatrix &require_unitary(const CMatrix &u, double tol = kMatrixTol);

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // columns
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
HermitianEigenResult hermitian_eigen(const CMatrix &a);

/// exp(i * a) for Hermitian a, via its spectral decomposition.
CMatrix expi_hermitian(const CMatrix &a);

/// Nested row-major arrays of [re, im] pairs.
nlohmann::json to_json(const CMatrix &m);
CMatrix cmatrix_from_json(const nlohmann::json &j);

}  // namespace bakersim
