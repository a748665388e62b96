#include "conjulin/embedding.hpp"

#include <cmath>

#include "conjulin/numkernel.hpp"

namespace conjulin {

namespace {

ComplexVector matrix_column(const ComplexMatrix& a, std::size_t j) {
  ComplexVector v(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j);
  return v;
}

bool interlaces(const std::vector<double>& outer, const std::vector<double>& inner_eigs,
                double tol) {
  const std::size_t n = inner_eigs.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (inner_eigs[k] < outer[k] - tol) return false;
    if (inner_eigs[k] > outer[k + n] + tol) return false;
  }
  return true;
}

double cond_from_eigs(const std::vector<double>& eigs) {
  if (eigs.empty()) throw DimensionMismatch("condition number of empty spectrum");
  if (eigs.front() <= 0.0)
    throw NotPositiveDefinite("spectrum is not positive definite");
  return eigs.back() / eigs.front();
}

}  // namespace

RealSystem::RealSystem(RealMatrix a, RealVector rhs) : A(std::move(a)), b(std::move(rhs)) {
  if (A.rows() != A.cols()) throw DimensionMismatch("RealSystem: A must be square");
  if (b.size() != A.rows()) throw DimensionMismatch("RealSystem: b size mismatch");
  double skew = 0.0;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const double d = A(i, j) - A(j, i);
      skew += d * d;
    }
  const double norm_f = A.frobenius_norm();
  if (std::sqrt(skew) > 1e-12 * (norm_f > 0.0 ? norm_f : 1.0))
    throw NotHermitian("RealSystem: A is not symmetric");
}

RealSystem pad_to_even(const RealSystem& sys) {
  const std::size_t m = sys.m();
  if (m % 2 == 0) return sys;
  RealMatrix a(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = sys.A(i, j);
  a(m, m) = 1.0;
  RealVector b = sys.b;
  b.push_back(0.0);
  return RealSystem(std::move(a), std::move(b));
}

EmbeddedSystem complexify(const RealSystem& sys) {
  const std::size_t m = sys.m();
  if (m % 2 != 0) throw OddDimension("complexify: dimension must be even; pad first");
  const std::size_t n = m / 2;

  EmbeddedSystem emb;
  emb.M = ComplexMatrix(n, n);
  emb.N = ComplexMatrix(n, n);
  emb.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double b_ij = sys.A(i, j);
      const double c_ij = sys.A(i, j + n);
      const double ct_ij = sys.A(i + n, j);  // (C^T)_{ij} = C_{ji}
      const double d_ij = sys.A(i + n, j + n);
      emb.M(i, j) = Complex(b_ij + d_ij, -(c_ij - ct_ij)) * 0.5;
      emb.N(i, j) = Complex(b_ij - d_ij, c_ij + ct_ij) * 0.5;
    }
    emb.p[i] = Complex(sys.b[i], sys.b[i + n]);
  }
  return emb;
}

std::pair<ComplexMatrix, ComplexVector> schur_system(const EmbeddedSystem& emb,
                                                     const Tolerance& tol) {
  const std::size_t n = emb.n();
  const ComplexMatrix m_bar = conjugate(emb.M);
  const ComplexMatrix l = cholesky(m_bar, tol);

  // X = conj(M)^{-1} conj(N), one triangular solve pair per column.
  const ComplexMatrix n_bar = conjugate(emb.N);
  ComplexMatrix x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const ComplexVector col = cholesky_solve(l, matrix_column(n_bar, j), tol);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
  }

  ComplexMatrix s = emb.M - emb.N * x;
  // Scrub the O(eps) skew part so downstream Hermitian preconditions hold.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex sym = 0.5 * (s(i, j) + std::conj(s(j, i)));
      s(i, j) = sym;
    }

  const ComplexVector mp = cholesky_solve(l, conjugate(emb.p), tol);
  const ComplexVector nmp = emb.N * mp;
  ComplexVector q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = emb.p[i] - nmp[i];
  return {std::move(s), std::move(q)};
}

RealVector solve_real_via_complex(const RealSystem& sys, const Tolerance& tol) {
  const RealSystem padded = pad_to_even(sys);
  EmbeddedSystem emb = complexify(padded);
  emb.padded = padded.m() != sys.m();

  const auto [s, q] = schur_system(emb, tol);
  const ComplexMatrix l = cholesky(s, tol);
  const ComplexVector z = cholesky_solve(l, q, tol);

  RealVector x(sys.m());
  const std::size_t n = emb.n();
  for (std::size_t i = 0; i < sys.m(); ++i)
    x[i] = i < n ? z[i].real() : z[i - n].imag();
  return x;
}

SpectralReport interlacing_report(const RealSystem& sys, const Tolerance& tol) {
  const RealSystem padded = pad_to_even(sys);
  EmbeddedSystem emb = complexify(padded);
  emb.padded = padded.m() != sys.m();

  const auto [s, q] = schur_system(emb, tol);
  (void)q;

  SpectralReport report;
  report.padded = emb.padded;
  const std::vector<double> eig_padded =
      hermitian_eigenvalues(to_complex(padded.A), tol);
  report.eig_M = hermitian_eigenvalues(emb.M, tol);
  report.eig_S = hermitian_eigenvalues(s, tol);
  report.eig_A =
      emb.padded ? hermitian_eigenvalues(to_complex(sys.A), tol) : eig_padded;

  if (eig_padded.front() <= 0.0)
    throw NotPositiveDefinite("interlacing_report: A is not positive definite");

  const double chain_tol = 1e-8 * eig_padded.back();
  report.cauchy_ok = interlaces(eig_padded, report.eig_M, chain_tol);
  report.schur_ok = interlaces(eig_padded, report.eig_S, chain_tol);

  report.cond_A = cond_from_eigs(report.eig_A);
  report.cond_M = cond_from_eigs(report.eig_M);
  report.cond_S = cond_from_eigs(report.eig_S);
  report.cond_M_contracts = report.cond_M <= report.cond_A * (1.0 + 1e-8);
  report.cond_S_contracts = report.cond_S <= report.cond_A * (1.0 + 1e-8);
  return report;
}

}  // namespace conjulin
