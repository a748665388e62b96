// Dense matrix/vector value types and the shared tolerance knobs.
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjulin {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

// --- errors ----------------------------------------------------------------

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};
class NotHermitian : public Error {
public:
  using Error::Error;
};
class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};
class SingularTriangular : public Error {
public:
  using Error::Error;
};
class RankExceedsK : public Error {
public:
  using Error::Error;
};
class NotReducible : public Error {
public:
  using Error::Error;
};
class SingularMatrix : public Error {
public:
  using Error::Error;
};
class OddDimension : public Error {
public:
  using Error::Error;
};
class ParseError : public Error {
public:
  using Error::Error;
};

// --- tolerances --------------------------------------------------------------

/// Numerical decision thresholds used across the library:
/// rank_tol for rank/pivot decisions, residual_tol for feasibility and
/// verification checks, eig_tol for the Jacobi eigensolver's off-diagonal
/// convergence test. All must be strictly positive.
struct Tolerance {
  double rank_tol = 1e-10;
  double residual_tol = 1e-8;
  double eig_tol = 1e-12;

  void validate() const {
    if (!(rank_tol > 0.0) || !(residual_tol > 0.0) || !(eig_tol > 0.0)) {
      throw Error("Tolerance: all thresholds must be strictly positive");
    }
  }

  /// One-knob scaling: multiplies rank_tol and residual_tol by `factor`,
  /// leaving the eigensolver convergence threshold alone.
  static Tolerance scaled(double factor) {
    Tolerance t;
    t.rank_tol *= factor;
    t.residual_tol *= factor;
    t.validate();
    return t;
  }
};

// --- dense matrix ------------------------------------------------------------

/// Dense row-major matrix over double or std::complex<double>.
/// Entries are validated to be finite when constructed from data.
template <class T>
class Matrix {
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T{}) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("Matrix: entry count " +
                              std::to_string(entries_.size()) +
                              " does not match " + std::to_string(rows_) +
                              "x" + std::to_string(cols_));
    }
    for (const T& v : entries_) {
      if (!is_finite(v)) throw Error("Matrix: non-finite entry");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<T>& entries() const { return entries_; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const T& v : entries_) s += std::norm(v);
    return std::sqrt(s);
  }

  T trace() const {
    T s{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

private:
  static bool is_finite(double v) { return std::isfinite(v); }
  static bool is_finite(const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

// --- matrix arithmetic -------------------------------------------------------

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("operator+: shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("operator-: shape mismatch");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("operator*: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> operator*(const T& s, const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix*vector: shape mismatch");
  std::vector<T> out(a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);
RealMatrix real_part(const ComplexMatrix& a);
RealMatrix imag_part(const ComplexMatrix& a);
ComplexMatrix to_complex(const RealMatrix& a);

/// Real 2r x 2c representation [[Re, -Im], [Im, Re]] of a complex matrix;
/// its real rank is exactly twice the complex rank.
RealMatrix realified(const ComplexMatrix& a);

// --- vector helpers ----------------------------------------------------------

ComplexVector conjugate(const ComplexVector& v);
ComplexVector to_complex(const RealVector& v);

double norm2(const ComplexVector& v);
double norm2(const RealVector& v);

/// Hermitian inner product <u, v> = sum_k u_k * conj(v_k), linear in the
/// first argument.
Complex inner(const ComplexVector& u, const ComplexVector& v);
double inner(const RealVector& u, const RealVector& v);

}  // namespace conjulin
