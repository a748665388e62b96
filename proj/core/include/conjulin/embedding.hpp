// Solving real symmetric positive-definite systems through the complex
// Schur-complement embedding, plus the eigenvalue interlacing and
// conditioning analysis that justifies it.
#pragma once

#include <utility>
#include <vector>

#include "conjulin/types.hpp"

namespace conjulin {

/// A x = b with A real symmetric (checked on construction to 1e-12 * ||A||_F);
/// positive definiteness is only decided at solve time.
struct RealSystem {
  RealMatrix A;
  RealVector b;

  RealSystem(RealMatrix a, RealVector rhs);
  std::size_t m() const { return A.rows(); }
};

/// The conjugate-linear image of an even-dimensional real system: M Hermitian
/// (positive definite when A is), N symmetric, p = b_head + i b_tail.
struct EmbeddedSystem {
  ComplexMatrix M;
  ComplexMatrix N;
  ComplexVector p;
  bool padded = false;

  std::size_t n() const { return M.rows(); }
};

/// Eigenvalues of A, of M, and of the Schur complement S, the two interlacing
/// verdicts, and the three condition numbers with their contraction verdicts.
/// When the input had odd dimension, eig_A and cond_A describe the original
/// matrix (the padding artifact eigenvalue is excluded) while the interlacing
/// checks are made against the padded spectrum, where they are theorems.
struct SpectralReport {
  std::vector<double> eig_A;
  std::vector<double> eig_M;
  std::vector<double> eig_S;
  bool cauchy_ok = false;
  bool schur_ok = false;
  double cond_A = 0.0;
  double cond_M = 0.0;
  double cond_S = 0.0;
  bool cond_M_contracts = false;
  bool cond_S_contracts = false;
  bool padded = false;
};

/// Appends one unit diagonal row/column (and a zero rhs entry) when m is odd;
/// identity otherwise. The appended coordinate solves to 0.
RealSystem pad_to_even(const RealSystem& sys);

/// Splits A into n x n blocks [[B, C], [C^T, D]] and forms
/// M = (B + D - i (C - C^T)) / 2, N = (B - D + i (C + C^T)) / 2,
/// p = (b_1..b_n) + i (b_{n+1}..b_{2n}). Requires even m.
EmbeddedSystem complexify(const RealSystem& sys);

/// Schur-complement system (S, q): S = M - N conj(M)^{-1} conj(N) and
/// q = p - N conj(M)^{-1} conj(p), with conj(M)^{-1} applied through
/// triangular solves against its Cholesky factor, never formed explicitly.
/// S is symmetrized before return.
std::pair<ComplexMatrix, ComplexVector> schur_system(const EmbeddedSystem& emb,
                                                     const Tolerance& tol);

/// Full pipeline: pad, complexify, form the Schur system, Cholesky-solve
/// S z = q, and read x = (Re z; Im z) (padding stripped).
RealVector solve_real_via_complex(const RealSystem& sys, const Tolerance& tol);

/// Spectral analysis of the embedding: both interlacing chains checked with
/// additive tolerance 1e-8 * lambda_max(A), and all three condition numbers.
SpectralReport interlacing_report(const RealSystem& sys, const Tolerance& tol);

}  // namespace conjulin
