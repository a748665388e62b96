#include "conjulin/numkernel.hpp"

#include <algorithm>
#include <cmath>

#include "conjulin/gauss.hpp"

namespace conjulin {

namespace {

ComplexVector column(const ComplexMatrix& a, std::size_t j) {
  ComplexVector v(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j);
  return v;
}

// v -= sum_q q <v, q>, one modified Gram-Schmidt pass.
void project_out(ComplexVector& v, const std::vector<ComplexVector>& basis) {
  for (const ComplexVector& q : basis) {
    const Complex coeff = inner(v, q);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * q[i];
  }
}

double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

ComplexMatrix symmetrized(const ComplexMatrix& h) {
  ComplexMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      out(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  return out;
}

}  // namespace

ComplexMatrix orthonormal_range_basis(const ComplexMatrix& B, const Tolerance& tol) {
  if (B.rows() == 0) throw DimensionMismatch("orthonormal_range_basis: empty input");
  std::vector<ComplexVector> basis;
  for (std::size_t j = 0; j < B.cols(); ++j) {
    ComplexVector v = column(B, j);
    const double input_norm = norm2(v);
    project_out(v, basis);
    project_out(v, basis);  // twice is enough
    const double nrm = norm2(v);
    if (nrm > tol.rank_tol * (1.0 + input_norm)) {
      for (Complex& x : v) x /= nrm;
      basis.push_back(std::move(v));
    }
  }
  ComplexMatrix q(B.rows(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < B.rows(); ++i) q(i, j) = basis[j][i];
  return q;
}

ComplexMatrix orthogonal_complement_projector(const ComplexMatrix& B,
                                              const Tolerance& tol) {
  const ComplexMatrix q = orthonormal_range_basis(B, tol);
  ComplexMatrix p = ComplexMatrix::identity(B.rows());
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.rows(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < q.cols(); ++k) s += q(i, k) * std::conj(q(j, k));
      p(i, j) -= s;
    }
  return p;
}

std::vector<RealVector> real_kernel_basis(const RealMatrix& F, const Tolerance& tol) {
  return gauss::kernel_basis(F, tol.rank_tol);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H, const Tolerance& tol) {
  if (H.rows() != H.cols())
    throw DimensionMismatch("hermitian_eigenvalues: matrix not square");
  const std::size_t n = H.rows();
  const double norm_f = H.frobenius_norm();

  double skew = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      skew += std::norm(H(i, j) - std::conj(H(j, i)));
  if (std::sqrt(skew) > tol.residual_tol * (norm_f > 0.0 ? norm_f : 1.0))
    throw NotHermitian("hermitian_eigenvalues: ||H - H*|| exceeds tolerance");

  ComplexMatrix a = symmetrized(H);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol.eig_tol * norm_f) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // Unitary 2x2 rotation zeroing the (p,q) entry: phase alignment
        // followed by a real Jacobi rotation.
        const Complex phase = apq / mag;  // e^{i arg(apq)}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex s_phase = s * phase;  // s e^{i phi}

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex hkp = a(k, p);
          const Complex hkq = a(k, q);
          a(k, p) = c * hkp - std::conj(s_phase) * hkq;
          a(k, q) = s * hkp + std::conj(phase) * (c * hkq);
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = Complex{};
        a(q, p) = Complex{};
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

ComplexMatrix cholesky(const ComplexMatrix& H, const Tolerance& tol) {
  if (H.rows() != H.cols()) throw DimensionMismatch("cholesky: matrix not square");
  const std::size_t n = H.rows();
  const ComplexMatrix a = symmetrized(H);
  const double norm_f = a.frobenius_norm();

  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
    if (diag <= tol.rank_tol * (norm_f > 0.0 ? norm_f : 1.0))
      throw NotPositiveDefinite("cholesky: pivot " + std::to_string(j) +
                                " is not positive");
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

ComplexVector cholesky_solve(const ComplexMatrix& L, const ComplexVector& rhs,
                             const Tolerance& tol) {
  const std::size_t n = L.rows();
  if (L.cols() != n || rhs.size() != n)
    throw DimensionMismatch("cholesky_solve: shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(L(i, i)) <= tol.rank_tol)
      throw SingularTriangular("cholesky_solve: zero diagonal at " + std::to_string(i));

  ComplexVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = rhs[i];
    for (std::size_t j = 0; j < i; ++j) s -= L(i, j) * y[j];
    y[i] = s / L(i, i);
  }
  ComplexVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Complex s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= std::conj(L(j, ii)) * x[j];
    x[ii] = s / std::conj(L(ii, ii));
  }
  return x;
}

double condition_number(const ComplexMatrix& H, const Tolerance& tol) {
  const std::vector<double> eigs = hermitian_eigenvalues(H, tol);
  if (eigs.empty()) throw DimensionMismatch("condition_number: empty matrix");
  if (eigs.front() <= 0.0)
    throw NotPositiveDefinite("condition_number: smallest eigenvalue is not positive");
  return eigs.back() / eigs.front();
}

std::vector<std::size_t> row_space_generators(const ComplexMatrix& G, std::size_t k,
                                              const Tolerance& tol) {
  const double threshold = tol.rank_tol * G.frobenius_norm();
  std::vector<std::size_t> kept;
  std::vector<ComplexVector> basis;
  for (std::size_t r = 0; r < G.rows(); ++r) {
    ComplexVector v = G.row(r);
    project_out(v, basis);
    project_out(v, basis);
    const double nrm = norm2(v);
    if (nrm > threshold) {
      if (kept.size() == k)
        throw RankExceedsK("row_space_generators: rank exceeds " + std::to_string(k));
      kept.push_back(r);
      for (Complex& x : v) x /= nrm;
      basis.push_back(std::move(v));
    }
  }
  for (std::size_t r = 0; r < G.rows() && kept.size() < k; ++r) {
    if (std::find(kept.begin(), kept.end(), r) == kept.end()) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace conjulin
