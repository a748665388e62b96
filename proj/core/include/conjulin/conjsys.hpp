// Conjugate-linear systems M z + N conj(z) = p: data model, realification,
// the row-reduction oracle solver, residuals and range membership.
#pragma once

#include <utility>
#include <vector>

#include "conjulin/types.hpp"

namespace conjulin {

enum class SpanField { Real, Complex };

/// The system M z + N conj(z) = p over C^n. Linear over R; linear over C
/// only when N = 0.
struct ConjugateSystem {
  ComplexMatrix M;
  ComplexMatrix N;
  ComplexVector p;

  ConjugateSystem(ComplexMatrix m, ComplexMatrix n_mat, ComplexVector rhs);
  std::size_t n() const { return M.rows(); }
};

/// Solution set particular + span(kernel_basis), where the span is over R or
/// over C according to span_field. Empty/meaningless fields when infeasible.
struct AffineSolutionSet {
  bool feasible = false;
  ComplexVector particular;
  std::vector<ComplexVector> kernel_basis;
  SpanField span_field = SpanField::Real;
};

/// Real 2n x 2n system (F, g) with F (x; y) = g iff M z + N conj(z) = p for
/// z = x + i y:
///   F = [[Re M + Re N, Im N - Im M], [Im M + Im N, Re M - Re N]],
///   g = (Re p; Im p).
std::pair<RealMatrix, RealVector> realify(const ConjugateSystem& sys);

/// Oracle solver: row reduction with partial pivoting on the realified
/// system. The particular solution is minimum-norm (free variables zero,
/// then the kernel component is projected out); span_field is always Real.
AffineSolutionSet solve_via_realification(const ConjugateSystem& sys,
                                          const Tolerance& tol);

/// ||M z + N conj(z) - p||_2.
double residual(const ConjugateSystem& sys, const ComplexVector& z);

/// Whether p lies in the range { M z + N conj(z) : z in C^n }, decided by
/// the residual of a least-squares solution of the realified system.
bool range_membership(const ConjugateSystem& sys, const Tolerance& tol);

}  // namespace conjulin
