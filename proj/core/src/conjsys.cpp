#include "conjulin/conjsys.hpp"

#include <cmath>

#include "conjulin/gauss.hpp"

namespace conjulin {

namespace {

ComplexVector from_real_parts(const RealVector& xy) {
  const std::size_t n = xy.size() / 2;
  ComplexVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = Complex(xy[i], xy[n + i]);
  return z;
}

}  // namespace

ConjugateSystem::ConjugateSystem(ComplexMatrix m, ComplexMatrix n_mat, ComplexVector rhs)
    : M(std::move(m)), N(std::move(n_mat)), p(std::move(rhs)) {
  if (M.rows() != M.cols() || N.rows() != N.cols())
    throw DimensionMismatch("ConjugateSystem: M and N must be square");
  if (M.rows() != N.rows() || p.size() != M.rows())
    throw DimensionMismatch("ConjugateSystem: M, N, p sizes disagree");
}

std::pair<RealMatrix, RealVector> realify(const ConjugateSystem& sys) {
  const std::size_t n = sys.n();
  const RealMatrix re_m = real_part(sys.M), im_m = imag_part(sys.M);
  const RealMatrix re_n = real_part(sys.N), im_n = imag_part(sys.N);

  RealMatrix f(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      f(i, j) = re_m(i, j) + re_n(i, j);
      f(i, j + n) = im_n(i, j) - im_m(i, j);
      f(i + n, j) = im_m(i, j) + im_n(i, j);
      f(i + n, j + n) = re_m(i, j) - re_n(i, j);
    }
  }
  RealVector g(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = sys.p[i].real();
    g[n + i] = sys.p[i].imag();
  }
  return {std::move(f), std::move(g)};
}

AffineSolutionSet solve_via_realification(const ConjugateSystem& sys,
                                          const Tolerance& tol) {
  const auto [f, g] = realify(sys);
  gauss::AffineSolve<double> sol = gauss::affine_solve(f, g, tol);

  AffineSolutionSet out;
  out.span_field = SpanField::Real;
  out.feasible = sol.feasible;
  for (const RealVector& v : sol.kernel) out.kernel_basis.push_back(from_real_parts(v));
  if (!sol.feasible) return out;

  // Minimum-norm polish: remove the kernel component of the free-vars-zero
  // particular solution (the kernel basis is orthonormal).
  RealVector xy = sol.particular;
  for (const RealVector& q : sol.kernel) {
    const double coeff = inner(xy, q);
    for (std::size_t i = 0; i < xy.size(); ++i) xy[i] -= coeff * q[i];
  }
  out.particular = from_real_parts(xy);
  return out;
}

double residual(const ConjugateSystem& sys, const ComplexVector& z) {
  if (z.size() != sys.n()) throw DimensionMismatch("residual: z size mismatch");
  const ComplexVector mz = sys.M * z;
  const ComplexVector nz = sys.N * conjugate(z);
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    s += std::norm(mz[i] + nz[i] - sys.p[i]);
  return std::sqrt(s);
}

bool range_membership(const ConjugateSystem& sys, const Tolerance& tol) {
  const auto [f, g] = realify(sys);
  const RealVector xy = gauss::least_squares(f, g, tol);
  const RealVector fx = f * xy;
  double r = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) r += (fx[i] - g[i]) * (fx[i] - g[i]);
  return std::sqrt(r) <= tol.residual_tol * (1.0 + norm2(sys.p));
}

}  // namespace conjulin
