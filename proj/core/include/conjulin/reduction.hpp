// Deciding when M z + N conj(z) = p reduces to a purely complex system
// A z = b, constructing the reduction, and the end-to-end solver with
// feasibility verification.
#pragma once

#include <optional>
#include <vector>

#include "conjulin/conjsys.hpp"
#include "conjulin/types.hpp"

namespace conjulin {

/// Certificate of a constructed reduction: U, V are row extractions of the
/// orthogonal-complement projector's left/right column blocks. It satisfies
/// projector * [N; conj(M)] ~ 0, and the rows of projector * [M; conj(N)]
/// indexed by row_set span that matrix's row space.
struct ReductionCertificate {
  ComplexMatrix U;
  ComplexMatrix V;
  std::vector<std::size_t> row_set;  // 0-based, ascending
  ComplexMatrix projector;           // 2n x 2n
};

struct ReducedSystem {
  ComplexMatrix A;
  ComplexVector b;
};

/// What the end-to-end solver reports: the reducibility verdict, the reduced
/// system and certificate when one exists, the solution set, and the
/// residual of the verified solution against the original system.
struct SolutionReport {
  bool reducible = false;
  std::optional<ReducedSystem> reduced;
  std::optional<ReductionCertificate> certificate;
  AffineSolutionSet solutions;
  double verification_residual = 0.0;
};

/// The 2n x n vertical stack [N; conj(M)] whose range the projector
/// annihilates.
ComplexMatrix stacked_range_matrix(const ComplexMatrix& M, const ComplexMatrix& N);

/// True iff the solution set of the homogeneous system is a complex vector
/// space: the real 4n x 2n realification of z -> P(z; conj(z)) has trivial
/// kernel, with P the orthogonal-complement projector of [N; conj(M)].
bool is_reducible(const ComplexMatrix& M, const ComplexMatrix& N, const Tolerance& tol);

/// Builds the reduction certificate. Requires is_reducible(M, N).
ReductionCertificate reduction_matrices(const ComplexMatrix& M, const ComplexMatrix& N,
                                        const Tolerance& tol);

/// A = U M + V conj(N), b = U p + V conj(p).
ReducedSystem reduce(const ConjugateSystem& sys, const ReductionCertificate& cert);

/// Row reduction over C with partial pivoting; particular solution has free
/// variables zero; kernel basis is orthonormal over C; span_field = Complex.
AffineSolutionSet solve_complex(const ComplexMatrix& A, const ComplexVector& b,
                                const Tolerance& tol);

/// End-to-end solve: reduce and solve over C when possible, verifying one
/// reduced-system solution against the original system (a verification
/// failure means the original system is infeasible); otherwise fall back to
/// the realification oracle. Infeasibility is a report state, not an error.
SolutionReport solve(const ConjugateSystem& sys, const Tolerance& tol);

}  // namespace conjulin
