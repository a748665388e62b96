// Self-contained oracles for the test suites. These deliberately avoid the
// library's elimination and projector code paths: rank comes from a local
// echelon reduction, real SPD solves from a local LL^T factorization.
#pragma once

#include <cmath>
#include <vector>

#include "conjulin/conjsys.hpp"
#include "conjulin/types.hpp"

namespace oracles {

using conjulin::Complex;
using conjulin::ComplexMatrix;
using conjulin::ComplexVector;
using conjulin::RealMatrix;
using conjulin::RealVector;

/// Rank of a real matrix by plain row-echelon elimination with partial
/// pivoting (no reuse of library code).
inline std::size_t echelon_rank(RealMatrix a, double tol = 1e-9) {
  const std::size_t m = a.rows(), n = a.cols();
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  if (scale == 0.0) return 0;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank + 1; r < m; ++r)
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    if (std::abs(a(best, col)) <= tol * scale) continue;
    if (best != rank)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(rank, c), a(best, c));
    for (std::size_t r = rank + 1; r < m; ++r) {
      const double f = a(r, col) / a(rank, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

/// Complex rank through the real 2r x 2c representation.
inline std::size_t complex_rank(const ComplexMatrix& a, double tol = 1e-9) {
  return echelon_rank(conjulin::realified(a), tol) / 2;
}

/// Real Cholesky A = L L^T; returns false when a pivot is not positive.
inline bool real_cholesky(const RealMatrix& a, RealMatrix& l) {
  const std::size_t n = a.rows();
  l = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= 0.0) return false;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return true;
}

/// Direct real SPD solve used as the reference for the embedding pipeline.
inline RealVector real_spd_solve(const RealMatrix& a, const RealVector& b) {
  RealMatrix l;
  if (!real_cholesky(a, l)) throw conjulin::NotPositiveDefinite("oracle: not SPD");
  const std::size_t n = a.rows();
  RealVector y(n), x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= l(i, j) * y[j];
    y[i] = s / l(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= l(j, ii) * x[j];
    x[ii] = s / l(ii, ii);
  }
  return x;
}

/// Real-linear span membership: distance from v to span(basis) in the
/// realified geometry, after Gram-Schmidt on the basis.
inline double distance_to_real_span(const std::vector<ComplexVector>& basis,
                                    const ComplexVector& v) {
  auto to_real = [](const ComplexVector& z) {
    RealVector r(2 * z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      r[i] = z[i].real();
      r[i + z.size()] = z[i].imag();
    }
    return r;
  };

  std::vector<RealVector> ortho;
  for (const ComplexVector& bvec : basis) {
    RealVector w = to_real(bvec);
    for (int pass = 0; pass < 2; ++pass)
      for (const RealVector& q : ortho) {
        const double coeff = conjulin::inner(w, q);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coeff * q[i];
      }
    const double nrm = conjulin::norm2(w);
    if (nrm > 1e-12) {
      for (double& x : w) x /= nrm;
      ortho.push_back(std::move(w));
    }
  }

  RealVector r = to_real(v);
  for (const RealVector& q : ortho) {
    const double coeff = conjulin::inner(r, q);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coeff * q[i];
  }
  return conjulin::norm2(r);
}

/// Distance from v to the complex span of `basis` (Gram-Schmidt over C).
inline double distance_to_complex_span(const std::vector<ComplexVector>& basis,
                                       const ComplexVector& v) {
  std::vector<ComplexVector> ortho;
  for (ComplexVector w : basis) {
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexVector& q : ortho) {
        const Complex coeff = conjulin::inner(w, q);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coeff * q[i];
      }
    const double nrm = conjulin::norm2(w);
    if (nrm > 1e-12) {
      for (Complex& x : w) x /= nrm;
      ortho.push_back(std::move(w));
    }
  }
  ComplexVector r = v;
  for (const ComplexVector& q : ortho) {
    const Complex coeff = conjulin::inner(r, q);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coeff * q[i];
  }
  return conjulin::norm2(r);
}

/// The real span of a complex-basis kernel is span{w_j, i w_j}.
inline std::vector<ComplexVector> complex_basis_real_span(
    const std::vector<ComplexVector>& basis) {
  std::vector<ComplexVector> out;
  for (const ComplexVector& w : basis) {
    out.push_back(w);
    ComplexVector iw(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) iw[k] = Complex(0, 1) * w[k];
    out.push_back(std::move(iw));
  }
  return out;
}

/// Whether the homogeneous solution set (given by a real-span basis) is
/// closed under multiplication by i, to tolerance `tol` per vector.
inline bool i_closed(const std::vector<ComplexVector>& kernel, double tol = 1e-8) {
  for (const ComplexVector& v : kernel) {
    ComplexVector iv(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) iv[k] = Complex(0, 1) * v[k];
    if (distance_to_real_span(kernel, iv) > tol) return false;
  }
  return true;
}

/// Angle-like distance between one-dimensional complex directions:
/// 1 - |<u, v>| / (||u|| ||v||), zero iff parallel over C.
inline double direction_mismatch(const ComplexVector& u, const ComplexVector& v) {
  const double nu = conjulin::norm2(u), nv = conjulin::norm2(v);
  if (nu == 0.0 || nv == 0.0) return 1.0;
  return 1.0 - std::abs(conjulin::inner(u, v)) / (nu * nv);
}

}  // namespace oracles
