#include "conjulin/reduction.hpp"

#include <cmath>

#include "conjulin/gauss.hpp"
#include "conjulin/numkernel.hpp"

namespace conjulin {

namespace {

void require_square_pair(const ComplexMatrix& M, const ComplexMatrix& N) {
  if (M.rows() != M.cols() || N.rows() != N.cols() || M.rows() != N.rows())
    throw DimensionMismatch("expected square M, N of equal size");
}

// Real 4n x 2n matrix of the map (x, y) -> P (z; conj(z)), z = x + i y,
// stacking real parts over imaginary parts of the two block rows of P.
RealMatrix injectivity_matrix(const ComplexMatrix& proj) {
  const std::size_t n = proj.rows() / 2;
  RealMatrix out(4 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex left = proj(i, j);        // P11 / P21 entry
      const Complex right = proj(i, j + n);   // P12 / P22 entry
      out(i, j) = left.real() + right.real();
      out(i, j + n) = right.imag() - left.imag();
      out(i + 2 * n, j) = left.imag() + right.imag();
      out(i + 2 * n, j + n) = left.real() - right.real();
    }
  }
  return out;
}

}  // namespace

ComplexMatrix stacked_range_matrix(const ComplexMatrix& M, const ComplexMatrix& N) {
  require_square_pair(M, N);
  const std::size_t n = M.rows();
  ComplexMatrix out(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = N(i, j);
      out(i + n, j) = std::conj(M(i, j));
    }
  return out;
}

bool is_reducible(const ComplexMatrix& M, const ComplexMatrix& N, const Tolerance& tol) {
  require_square_pair(M, N);
  const ComplexMatrix proj =
      orthogonal_complement_projector(stacked_range_matrix(M, N), tol);
  return real_kernel_basis(injectivity_matrix(proj), tol).empty();
}

ReductionCertificate reduction_matrices(const ComplexMatrix& M, const ComplexMatrix& N,
                                        const Tolerance& tol) {
  require_square_pair(M, N);
  if (!is_reducible(M, N, tol))
    throw NotReducible("reduction_matrices: system does not reduce over C");

  const std::size_t n = M.rows();
  const ComplexMatrix proj =
      orthogonal_complement_projector(stacked_range_matrix(M, N), tol);

  // Left/right column blocks of the projector, then the 2n x n row system
  // proj * [M; conj(N)] whose generating rows define U and V.
  ComplexMatrix left(2 * n, n), right(2 * n, n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      left(i, j) = proj(i, j);
      right(i, j) = proj(i, j + n);
    }
  const ComplexMatrix g = left * M + right * conjugate(N);
  const std::vector<std::size_t> rows = row_space_generators(g, n, tol);

  ReductionCertificate cert;
  cert.row_set = rows;
  cert.projector = proj;
  cert.U = ComplexMatrix(n, n);
  cert.V = ComplexMatrix(n, n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      cert.U(r, j) = left(rows[r], j);
      cert.V(r, j) = right(rows[r], j);
    }
  return cert;
}

ReducedSystem reduce(const ConjugateSystem& sys, const ReductionCertificate& cert) {
  ReducedSystem out;
  out.A = cert.U * sys.M + cert.V * conjugate(sys.N);
  const ComplexVector up = cert.U * sys.p;
  const ComplexVector vp = cert.V * conjugate(sys.p);
  out.b.resize(sys.n());
  for (std::size_t i = 0; i < sys.n(); ++i) out.b[i] = up[i] + vp[i];
  return out;
}

AffineSolutionSet solve_complex(const ComplexMatrix& A, const ComplexVector& b,
                                const Tolerance& tol) {
  gauss::AffineSolve<Complex> sol = gauss::affine_solve(A, b, tol);
  AffineSolutionSet out;
  out.feasible = sol.feasible;
  out.particular = std::move(sol.particular);
  out.kernel_basis = std::move(sol.kernel);
  out.span_field = SpanField::Complex;
  return out;
}

SolutionReport solve(const ConjugateSystem& sys, const Tolerance& tol) {
  SolutionReport report;
  report.reducible = is_reducible(sys.M, sys.N, tol);

  if (!report.reducible) {
    report.solutions = solve_via_realification(sys, tol);
    report.verification_residual =
        report.solutions.feasible ? residual(sys, report.solutions.particular) : 0.0;
    return report;
  }

  report.certificate = reduction_matrices(sys.M, sys.N, tol);
  report.reduced = reduce(sys, *report.certificate);
  AffineSolutionSet sol = solve_complex(report.reduced->A, report.reduced->b, tol);

  if (!sol.feasible) {
    report.solutions = std::move(sol);
    report.verification_residual = 0.0;
    return report;
  }

  // One arbitrary reduced-system solution is checked against the original
  // system; failure means the original system has no solutions.
  const double vres = residual(sys, sol.particular);
  report.verification_residual = vres;
  if (vres > tol.residual_tol * (1.0 + norm2(sys.p))) {
    sol.feasible = false;
    sol.particular.clear();
  }
  report.solutions = std::move(sol);
  return report;
}

}  // namespace conjulin
