// Row reduction with partial pivoting over double or std::complex<double>:
// rank, reduced row echelon form, kernel bases, affine solves, inverses and
// normal-equation least squares. These are the elimination primitives behind
// the realification oracle and the complex-system solver.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "conjulin/types.hpp"

namespace conjulin::gauss {

template <class T>
T conj_of(const T& v) {
  if constexpr (std::is_same_v<T, Complex>) {
    return std::conj(v);
  } else {
    return v;
  }
}

template <class T>
struct Echelon {
  Matrix<T> reduced;                   // RREF of the input
  std::vector<std::size_t> pivot_cols; // one per pivot row, ascending
};

/// Reduced row echelon form with partial (max-magnitude) pivoting.
/// A column yields a pivot iff its best remaining entry exceeds
/// rank_tol * ||A||_F.
template <class T>
Echelon<T> rref(Matrix<T> a, double rank_tol) {
  const std::size_t m = a.rows(), n = a.cols();
  const double scale = a.frobenius_norm();
  const double threshold = rank_tol * (scale > 0.0 ? scale : 1.0);

  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = row;
    double best_mag = std::abs(a(row, col));
    for (std::size_t r = row + 1; r < m; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (best_mag <= threshold) continue;

    if (best != row)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(row, c), a(best, c));

    const T pivot = a(row, col);
    for (std::size_t c = col; c < n; ++c) a(row, c) = a(row, c) / pivot;
    a(row, col) = T{1};

    for (std::size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      const T factor = a(r, col);
      if (factor == T{}) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(row, c);
      a(r, col) = T{};
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a, double rank_tol) {
  return rref(a, rank_tol).pivot_cols.size();
}

/// Modified Gram-Schmidt orthonormalization of a set of vectors (over the
/// vectors' own field), dropping near-dependent ones.
template <class T>
std::vector<std::vector<T>> orthonormalize(std::vector<std::vector<T>> vectors,
                                           double drop_tol) {
  std::vector<std::vector<T>> basis;
  for (auto& v : vectors) {
    double input_norm = 0.0;
    for (const T& x : v) input_norm += std::norm(x);
    input_norm = std::sqrt(input_norm);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        T coeff{};
        for (std::size_t i = 0; i < v.size(); ++i) coeff += v[i] * conj_of(q[i]);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * q[i];
      }
    }
    double nrm = 0.0;
    for (const T& x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm > drop_tol * (1.0 + input_norm)) {
      for (T& x : v) x = x / T{nrm};
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

/// Orthonormal basis of the null space of `a`, from the RREF free columns.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a, double rank_tol) {
  const std::size_t n = a.cols();
  const Echelon<T> ech = rref(a, rank_tol);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<T> v(n, T{});
    v[free_col] = T{1};
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v[ech.pivot_cols[r]] = -ech.reduced(r, free_col);
    }
    basis.push_back(std::move(v));
  }
  return orthonormalize(std::move(basis), rank_tol);
}

template <class T>
struct AffineSolve {
  bool feasible = false;
  std::vector<T> particular;               // free variables set to zero
  std::vector<std::vector<T>> kernel;      // orthonormal null-space basis
};

/// Solves a x = b by row reduction of the augmented matrix. Feasibility is
/// decided by the residual of the candidate solution, not by zero-row
/// bookkeeping.
template <class T>
AffineSolve<T> affine_solve(const Matrix<T>& a, const std::vector<T>& b,
                            const Tolerance& tol) {
  if (a.rows() != b.size()) throw DimensionMismatch("affine_solve: rhs size");
  const std::size_t m = a.rows(), n = a.cols();

  Matrix<T> aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const Echelon<T> ech = rref(aug, tol.rank_tol);

  AffineSolve<T> out;
  out.particular.assign(n, T{});
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const std::size_t c = ech.pivot_cols[r];
    if (c < n) out.particular[c] = ech.reduced(r, n);
  }

  std::vector<T> res = a * out.particular;
  double rnorm = 0.0, bnorm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    rnorm += std::norm(res[i] - b[i]);
    bnorm += std::norm(b[i]);
  }
  out.feasible = std::sqrt(rnorm) <= tol.residual_tol * (1.0 + std::sqrt(bnorm));
  out.kernel = kernel_basis(a, tol.rank_tol);
  if (!out.feasible) out.particular.clear();
  return out;
}

/// Gauss-Jordan inverse with partial pivoting.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, double rank_tol) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T{1};
  }
  const Echelon<T> ech = rref(aug, rank_tol);
  if (ech.pivot_cols.size() != n) throw SingularMatrix("inverse: matrix is singular");
  for (std::size_t r = 0; r < n; ++r) {
    if (ech.pivot_cols[r] != r) throw SingularMatrix("inverse: matrix is singular");
  }
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  return out;
}

/// Least-squares solution via the normal equations; any solution of
/// A* A x = A* b minimizes ||Ax - b||.
template <class T>
std::vector<T> least_squares(const Matrix<T>& a, const std::vector<T>& b,
                             const Tolerance& tol) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DimensionMismatch("least_squares: rhs size");
  Matrix<T> ata(n, n);
  std::vector<T> atb(n, T{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T s{};
      for (std::size_t k = 0; k < m; ++k) s += conj_of(a(k, i)) * a(k, j);
      ata(i, j) = s;
    }
    T s{};
    for (std::size_t k = 0; k < m; ++k) s += conj_of(a(k, i)) * b[k];
    atb[i] = s;
  }
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = ata(i, j);
    aug(i, n) = atb[i];
  }
  const Echelon<T> ech = rref(aug, tol.rank_tol);
  std::vector<T> x(n, T{});
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    const std::size_t c = ech.pivot_cols[r];
    if (c < n) x[c] = ech.reduced(r, n);
  }
  return x;
}

}  // namespace conjulin::gauss
