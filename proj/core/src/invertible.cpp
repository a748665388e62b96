#include "conjulin/invertible.hpp"

#include <cmath>

#include "conjulin/conjsys.hpp"
#include "conjulin/gauss.hpp"
#include "conjulin/numkernel.hpp"

namespace conjulin {

BlockEmbedding block_matrix(const ComplexMatrix& M, const ComplexMatrix& N) {
  if (M.rows() != M.cols() || N.rows() != N.cols() || M.rows() != N.rows())
    throw DimensionMismatch("block_matrix: expected square M, N of equal size");
  const std::size_t n = M.rows();
  ComplexMatrix blk(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      blk(i, j) = M(i, j);
      blk(i, j + n) = N(i, j);
      blk(i + n, j) = std::conj(N(i, j));
      blk(i + n, j + n) = std::conj(M(i, j));
    }
  return {std::move(blk)};
}

bool has_unique_solution(const ComplexMatrix& M, const ComplexMatrix& N,
                         const Tolerance& tol) {
  const BlockEmbedding emb = block_matrix(M, N);
  const std::size_t n2 = emb.block.rows();
  return gauss::rank(realified(emb.block), tol.rank_tol) == 2 * n2;
}

std::pair<ComplexMatrix, ComplexMatrix> analytic_reduction(
    const ComplexMatrix& M, const ComplexMatrix& N, const Tolerance& tol,
    bool use_n_inverse_variant) {
  if (!has_unique_solution(M, N, tol))
    throw SingularMatrix("analytic_reduction: block matrix is singular");
  const std::size_t n = M.rows();
  if (gauss::rank(realified(M), tol.rank_tol) != 2 * n)
    throw SingularMatrix("analytic_reduction: M is singular; use the projector path");

  const ComplexMatrix m_bar_inv = gauss::inverse(conjugate(M), tol.rank_tol);
  if (!use_n_inverse_variant) {
    ComplexMatrix v = Complex{-1.0} * (N * m_bar_inv);
    return {ComplexMatrix::identity(n), std::move(v)};
  }
  const ComplexMatrix n_inv = gauss::inverse(N, tol.rank_tol);
  ComplexMatrix v = Complex{-1.0} * m_bar_inv;
  return {n_inv, std::move(v)};
}

bool spectra_match(const ComplexMatrix& M, const ComplexMatrix& N, const Tolerance& tol) {
  const BlockEmbedding emb = block_matrix(M, N);
  const double norm_f = emb.block.frobenius_norm();
  double skew = 0.0;
  for (std::size_t i = 0; i < emb.block.rows(); ++i)
    for (std::size_t j = 0; j < emb.block.cols(); ++j)
      skew += std::norm(emb.block(i, j) - std::conj(emb.block(j, i)));
  if (std::sqrt(skew) > tol.residual_tol * (norm_f > 0.0 ? norm_f : 1.0))
    throw NotHermitian("spectra_match: block matrix is not Hermitian");

  const ConjugateSystem sys(M, N, ComplexVector(M.rows(), Complex{}));
  const auto [f, g] = realify(sys);
  (void)g;

  const std::vector<double> block_eigs = hermitian_eigenvalues(emb.block, tol);
  const std::vector<double> real_eigs = hermitian_eigenvalues(to_complex(f), tol);

  const double compare_tol = 1e-8 * (norm_f > 0.0 ? norm_f : 1.0);
  for (std::size_t k = 0; k < block_eigs.size(); ++k)
    if (std::abs(block_eigs[k] - real_eigs[k]) > compare_tol) return false;
  return true;
}

}  // namespace conjulin
