#include "conjulin/generate.hpp"

#include <cmath>

#include "conjulin/invertible.hpp"
#include "conjulin/reduction.hpp"

namespace conjulin {

namespace {

constexpr int kMaxRetries = 64;

ComplexVector forward_rhs(const ComplexMatrix& m, const ComplexMatrix& n_mat,
                          const ComplexVector& z0) {
  const ComplexVector mz = m * z0;
  const ComplexVector nz = n_mat * conjugate(z0);
  ComplexVector p(z0.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = mz[i] + nz[i];
  return p;
}

ComplexVector random_unit(std::size_t n, Rng& rng) {
  for (;;) {
    ComplexVector v = random_complex_vector(n, rng);
    const double nrm = norm2(v);
    if (nrm > 0.1) {
      for (Complex& x : v) x /= nrm;
      return v;
    }
  }
}

}  // namespace

ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_entry();
  return m;
}

ComplexVector random_complex_vector(std::size_t dim, Rng& rng) {
  ComplexVector v(dim);
  for (Complex& x : v) x = rng.complex_entry();
  return v;
}

RealMatrix random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.symmetric();
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = Complex(rng.symmetric(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = rng.complex_entry();
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

GeneratedRealSystem gen_spd(std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  const RealMatrix g = random_real_matrix(m, m, rng);
  RealMatrix a = g.transpose() * g;
  for (std::size_t i = 0; i < m; ++i) a(i, i) += 1.0;
  RealVector b(m);
  for (double& x : b) x = rng.symmetric();
  return {std::move(a), std::move(b)};
}

GeneratedSystem gen_unique(std::size_t n, std::uint64_t seed) {
  const Tolerance tol;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Rng rng(seed + 0x10000ull * static_cast<std::uint64_t>(attempt));
    ComplexMatrix m = random_complex_matrix(n, n, rng);
    ComplexMatrix nm = random_complex_matrix(n, n, rng);
    if (!has_unique_solution(m, nm, tol)) continue;
    ComplexVector p = random_complex_vector(n, rng);
    return {std::move(m), std::move(nm), std::move(p)};
  }
  throw Error("gen_unique: retries exhausted");
}

GeneratedSystem gen_reducible(std::size_t n, std::uint64_t seed) {
  const Tolerance tol;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Rng rng(seed + 0x20000ull * static_cast<std::uint64_t>(attempt));
    if (n == 1) {
      Complex m = rng.complex_entry();
      while (std::abs(m) < 0.5) m = rng.complex_entry();
      ComplexMatrix mm(1, 1, {m});
      ComplexMatrix nn(1, 1);
      if (!is_reducible(mm, nn, tol)) continue;
      const ComplexVector z0 = random_complex_vector(1, rng);
      ComplexVector p = forward_rhs(mm, nn, z0);
      return {std::move(mm), std::move(nn), std::move(p)};
    }

    const ComplexVector w = random_unit(n, rng);
    // M annihilates w, N annihilates conj(w): M = R (I - w w*),
    // N = S (I - conj(w) w^T).
    ComplexMatrix proj_w = ComplexMatrix::identity(n);
    ComplexMatrix proj_wbar = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        proj_w(i, j) -= w[i] * std::conj(w[j]);
        proj_wbar(i, j) -= std::conj(w[i]) * w[j];
      }
    ComplexMatrix m = random_complex_matrix(n, n, rng) * proj_w;
    ComplexMatrix nm = random_complex_matrix(n, n, rng) * proj_wbar;
    if (!is_reducible(m, nm, tol)) continue;

    const ComplexVector z0 = random_complex_vector(n, rng);
    ComplexVector p = forward_rhs(m, nm, z0);
    return {std::move(m), std::move(nm), std::move(p)};
  }
  throw Error("gen_reducible: retries exhausted");
}

GeneratedSystem gen_irreducible(std::size_t n, std::uint64_t seed) {
  const Tolerance tol;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Rng rng(seed + 0x30000ull * static_cast<std::uint64_t>(attempt));
    const ComplexMatrix m = random_complex_matrix(n, n, rng);
    const ComplexMatrix r = random_complex_matrix(n, n, rng);
    const ComplexVector v = random_unit(n, rng);

    // Rank-one correction so that v solves the homogeneous system:
    // N conj(v) = -M v, i.e. N = R + d v^T with d = -(M v + R conj(v)).
    const ComplexVector mv = m * v;
    const ComplexVector rv = r * conjugate(v);
    ComplexMatrix nm = r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) nm(i, j) += -(mv[i] + rv[i]) * v[j];

    if (is_reducible(m, nm, tol)) continue;

    const ComplexVector z0 = random_complex_vector(n, rng);
    ComplexVector p = forward_rhs(m, nm, z0);
    return {m, std::move(nm), std::move(p)};
  }
  throw Error("gen_irreducible: retries exhausted");
}

}  // namespace conjulin
