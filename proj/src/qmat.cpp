#include "bakersim/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bakersim {

namespace {

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMatrix: expected " + std::to_string(rows_ * cols_) +
                                " entries, got " + std::to_string(data_.size()));
  }
  for (const auto &z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("CMatrix: non-finite entry");
    }
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::basis_projector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis_projector: index out of range");
  CMatrix m(dim, dim);
  m(index, index) = 1.0;
  return m;
}

Complex CMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace: matrix is not square");
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Complex> CMatrix::diag() const {
  std::vector<Complex> d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix &CMatrix::operator*=(Complex s) {
  for (auto &z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  }
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  CMatrix c(n, p);
  // i-k-j order keeps the inner loop contiguous in both b and c; tiles over
  // k and j keep the touched part of b in cache for large registers.
  // Plain real arithmetic: std::complex multiply carries the NaN/inf
  // recovery path and does not vectorize.
  constexpr std::size_t kTileK = 64, kTileJ = 256;
  for (std::size_t k0 = 0; k0 < m; k0 += kTileK) {
    const std::size_t k1 = std::min(m, k0 + kTileK);
    for (std::size_t j0 = 0; j0 < p; j0 += kTileJ) {
      const std::size_t j1 = std::min(p, j0 + kTileJ);
      for (std::size_t i = 0; i < n; ++i) {
        double *crow = reinterpret_cast<double *>(&c(i, 0));
        for (std::size_t k = k0; k < k1; ++k) {
          const Complex aik = a(i, k);
          if (aik == Complex{0.0, 0.0}) continue;
          const double ar = aik.real(), ai = aik.imag();
          const double *brow = reinterpret_cast<const double *>(&b(k, 0));
          for (std::size_t j = 2 * j0; j < 2 * j1; j += 2) {
            const double br = brow[j], bi = brow[j + 1];
            crow[j] += ar * br - ai * bi;
            crow[j + 1] += ar * bi + ai * br;
          }
        }
      }
    }
  }
  return c;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex s = a(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          r(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
    }
  return r;
}

CMatrix dagger(const CMatrix &a) {
  CMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

Complex trace_of_product(const CMatrix &a, const CMatrix &b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw std::invalid_argument("trace_of_product: dimension mismatch");
  }
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

// a b a^dagger written as a (a b^dagger)^dagger so that a is always the left
// factor; the product skips zeros of its left operand, so sparse a is cheap.
CMatrix conjugate_by(const CMatrix &a, const CMatrix &b) { return a * dagger(a * dagger(b)); }

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  require_same_shape(a, b, "max_abs_diff");
  double d = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) d = std::max(d, std::abs(ea[i] - eb[i]));
  return d;
}

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

bool equal_up_to_global_phase(const CMatrix &a, const CMatrix &b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto eb = b.entries();
  if (eb.empty()) return true;
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < eb.size(); ++i)
    if (std::abs(eb[i]) > std::abs(eb[pivot])) pivot = i;
  const Complex ap = a.entries()[pivot];
  const Complex bp = eb[pivot];
  if (std::abs(bp) <= tol || std::abs(ap) <= tol) return max_abs_diff(a, b) <= tol;
  const Complex phase = (ap / std::abs(ap)) / (bp / std::abs(bp));
  return max_abs_diff(a, b * phase) <= tol;
}

double hermiticity_error(const CMatrix &a) {
  if (!a.square()) throw std::invalid_argument("hermiticity_error: matrix is not square");
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

double unitarity_error(const CMatrix &u) {
  if (!u.square()) throw std::invalid_argument("unitarity_error: matrix is not square");
  return max_abs_diff(dagger(u) * u, CMatrix::identity(u.rows()));
}

bool is_hermitian(const CMatrix &a, double tol) { return a.square() && hermiticity_error(a) <= tol; }
bool is_unitary(const CMatrix &u, double tol) { return u.square() && unitarity_error(u) <= tol; }

const CMatrix &require_unitary(const CMatrix &u, double tol) {
  if (!u.square()) throw std::invalid_argument("require_unitary: matrix is not square");
  const double err = unitarity_error(u);
  if (err > tol) {
    throw std::invalid_argument("require_unitary: |U^dagger U - I| = " + std::to_string(err));
  }
  return u;
}

HermitianEigenResult hermitian_eigen(const CMatrix &input) {
  if (!input.square()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  if (hermiticity_error(input) > kMatrixTol) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  }
  const std::size_t n = input.rows();
  CMatrix a = input;
  CMatrix v = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  double scale = 0.0;
  for (const auto &z : a.entries()) scale += std::norm(z);
  scale = std::sqrt(scale);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  const double target = 1e-15 * std::max(scale, 1e-300);
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Skip entries already negligible against both diagonal entries.
        if (sweep > 3 && std::abs(app) + 1e3 * mag == std::abs(app) &&
            std::abs(aqq) + 1e3 * mag == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const Complex phase = apq / mag;  // e^{i phi}
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phase_c = std::conj(phase);

        // A <- A G with G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q) * phase_c;
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q) * phase_c;
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        // A <- G^dagger A.
        Complex *rp = &a(p, 0);
        Complex *rq = &a(q, 0);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = rp[k];
          const Complex aqk = rq[k] * phase;
          rp[k] = c * apk - s * aqk;
          rq[k] = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigenResult out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.eigenvalues[col] = a(order[col], order[col]).real();
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, col) = v(k, order[col]);
  }
  return out;
}

CMatrix expi_hermitian(const CMatrix &a) {
  const auto eig = hermitian_eigen(a);
  const std::size_t n = a.rows();
  CMatrix scaled = eig.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, eig.eigenvalues[k]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= phase;
  }
  return scaled * dagger(eig.eigenvectors);
}

nlohmann::json to_json(const CMatrix &m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const nlohmann::json &j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw std::invalid_argument("cmatrix_from_json: expected a nested array");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto &row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument("cmatrix_from_json: ragged rows");
    }
    for (const auto &z : row) {
      if (!z.is_array() || z.size() != 2) {
        throw std::invalid_argument("cmatrix_from_json: entry is not an [re, im] pair");
      }
      entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return CMatrix(rows, cols, std::move(entries));
}

}  // namespace bakersim
