// Unique-solvability characterization via the block matrix
// [[M, N], [conj(N), conj(M)]], the closed-form (U, V) reduction when M is
// invertible, and the block/realified spectrum identity.
#pragma once

#include <utility>

#include "conjulin/types.hpp"

namespace conjulin {

/// The 2n x 2n block matrix [[M, N], [conj(N), conj(M)]]; it is invertible
/// iff M z + N conj(z) = p has exactly one solution for every p.
struct BlockEmbedding {
  ComplexMatrix block;
};

BlockEmbedding block_matrix(const ComplexMatrix& M, const ComplexMatrix& N);

/// True iff the block matrix has full numerical rank (checked on its
/// realification).
bool has_unique_solution(const ComplexMatrix& M, const ComplexMatrix& N,
                         const Tolerance& tol);

/// Closed-form reduction for uniquely solvable systems:
/// U = I, V = -N conj(M)^{-1} (default, needs M invertible), or the variant
/// U = N^{-1}, V = -conj(M)^{-1} (needs N invertible too). Either pair
/// satisfies U N + V conj(M) = 0 with z -> U z + V conj(z) injective.
std::pair<ComplexMatrix, ComplexMatrix> analytic_reduction(
    const ComplexMatrix& M, const ComplexMatrix& N, const Tolerance& tol,
    bool use_n_inverse_variant = false);

/// For Hermitian M and symmetric N: whether the ascending spectra of the
/// block matrix and of the real symmetric realification
/// [[Re M + Re N, Im N - Im M], [Im M + Im N, Re M - Re N]] coincide.
bool spectra_match(const ComplexMatrix& M, const ComplexMatrix& N, const Tolerance& tol);

}  // namespace conjulin
