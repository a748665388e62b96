// Dense complex/real kernels: orthonormalization, orthogonal-complement
// projectors, null spaces, Hermitian eigenvalues (cyclic Jacobi), Cholesky
// factorization and solves, condition numbers, row-space generator selection.
#pragma once

#include <vector>

#include "conjulin/types.hpp"

namespace conjulin {

/// Orthonormal basis Q of the column space of B, by modified Gram-Schmidt
/// with one re-orthogonalization pass. A column is dropped when its component
/// orthogonal to the basis so far has norm <= rank_tol * (1 + its input
/// norm); the number of columns of Q is the numerical rank of B.
ComplexMatrix orthonormal_range_basis(const ComplexMatrix& B, const Tolerance& tol);

/// P = I - Q Q* where Q spans the column space of B: the Hermitian idempotent
/// projecting onto the orthogonal complement of that range.
ComplexMatrix orthogonal_complement_projector(const ComplexMatrix& B,
                                              const Tolerance& tol);

/// Orthonormal basis (possibly empty) of the real null space of F.
std::vector<RealVector> real_kernel_basis(const RealMatrix& F, const Tolerance& tol);

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic complex
/// Jacobi sweeps until the off-diagonal Frobenius norm falls below
/// eig_tol * ||H||_F (at most 100 sweeps). H is symmetrized to (H + H*)/2
/// after a relative Hermitian-ness check.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H, const Tolerance& tol);

/// Lower-triangular L with strictly positive real diagonal and L L* = H.
/// The input is symmetrized defensively; a pivot <= rank_tol * ||H||_F
/// means H is not numerically positive definite.
ComplexMatrix cholesky(const ComplexMatrix& H, const Tolerance& tol);

/// Solves L L* x = rhs by forward then adjoint back substitution.
ComplexVector cholesky_solve(const ComplexMatrix& L, const ComplexVector& rhs,
                             const Tolerance& tol = {});

/// lambda_max / lambda_min of a Hermitian positive definite matrix.
double condition_number(const ComplexMatrix& H, const Tolerance& tol);

/// Deterministic greedy selection (ascending row index) of at most k rows
/// spanning the row space of G; a row is kept iff its component orthogonal
/// to the rows already kept has norm > rank_tol * ||G||_F. If fewer than k
/// rows are kept, the set is padded with the smallest unused indices. The
/// returned indices are 0-based and ascending.
std::vector<std::size_t> row_space_generators(const ComplexMatrix& G, std::size_t k,
                                              const Tolerance& tol);

}  // namespace conjulin
