#include <doctest.h>

#include "conjulin/conjsys.hpp"
#include "conjulin/embedding.hpp"
#include "conjulin/gauss.hpp"
#include "conjulin/generate.hpp"
#include "conjulin/invertible.hpp"
#include "conjulin/reduction.hpp"
#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/test_oracles.hpp"

using namespace conjulin;
using fixtures::c;

namespace {
const Tolerance tol;
}

TEST_CASE("block_matrix: scalar layouts") {
  const BlockEmbedding b1 = block_matrix(ComplexMatrix::identity(1), ComplexMatrix(1, 1));
  CHECK(checks::frob_diff(b1.block, ComplexMatrix::identity(2)) < 1e-15);

  const BlockEmbedding b2 = block_matrix(ComplexMatrix(1, 1), ComplexMatrix::identity(1));
  CHECK(b2.block(0, 1) == c(1));
  CHECK(b2.block(1, 0) == c(1));
  CHECK(b2.block(0, 0) == c(0));
}

TEST_CASE("block_matrix: Hermitian for the reference embedding") {
  const auto emb = complexify(fixtures::spd6_system());
  const BlockEmbedding blk = block_matrix(emb.M, emb.N);
  CHECK(checks::frob_diff(blk.block, adjoint(blk.block)) < 1e-12);
}

TEST_CASE("has_unique_solution: scalar and reference cases") {
  CHECK_FALSE(
      has_unique_solution(ComplexMatrix::identity(1), ComplexMatrix::identity(1), tol));
  CHECK(has_unique_solution(ComplexMatrix::identity(1), ComplexMatrix(1, 1), tol));

  const auto emb = complexify(fixtures::spd6_system());
  CHECK(has_unique_solution(emb.M, emb.N, tol));
}

TEST_CASE("has_unique_solution: agrees with realified invertibility") {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 5;
    Rng rng(9000 + trial);
    ComplexMatrix m = random_complex_matrix(n, n, rng);
    ComplexMatrix nm = trial % 5 == 0 ? m : random_complex_matrix(n, n, rng);

    const ConjugateSystem sys(m, nm, ComplexVector(n));
    const auto [f, g] = realify(sys);
    (void)g;
    const bool oracle_invertible = oracles::echelon_rank(f) == 2 * n;
    CHECK(has_unique_solution(m, nm, tol) == oracle_invertible);
  }
}

TEST_CASE("analytic_reduction: trivial and refused cases") {
  const ComplexMatrix two(1, 1, {c(2)});
  const auto [u, v] = analytic_reduction(two, ComplexMatrix(1, 1), tol);
  CHECK(std::abs(u(0, 0) - c(1)) < 1e-15);
  CHECK(std::abs(v(0, 0)) < 1e-15);

  // M = 1, N = i: the block matrix [[1, i], [-i, 1]] is singular, so the
  // system is not uniquely solvable and the closed form must refuse.
  CHECK_THROWS_AS(
      analytic_reduction(ComplexMatrix::identity(1),
                         ComplexMatrix(1, 1, {c(0, 1)}), tol),
      SingularMatrix);
  CHECK_FALSE(has_unique_solution(ComplexMatrix::identity(1),
                                  ComplexMatrix(1, 1, {c(0, 1)}), tol));
}

TEST_CASE("analytic_reduction: scalar closed form") {
  // M = 1, N = i/2: reduced matrix is M - N conj(M)^{-1} conj(N) = 3/4.
  const ComplexMatrix m = ComplexMatrix::identity(1);
  const ComplexMatrix nm(1, 1, {c(0, 0.5)});
  const auto [u, v] = analytic_reduction(m, nm, tol);
  const ComplexMatrix a = u * m + v * conjugate(nm);
  CHECK(std::abs(a(0, 0) - c(0.75)) < 1e-14);

  // Cross-check the unique solution against the realified oracle.
  Rng rng(42);
  const ComplexVector p = random_complex_vector(1, rng);
  const ConjugateSystem sys(m, nm, p);
  const AffineSolutionSet oracle = solve_via_realification(sys, tol);
  REQUIRE(oracle.feasible);
  REQUIRE(oracle.kernel_basis.empty());

  ComplexVector b(1);
  b[0] = (u * p)[0] + (v * conjugate(p))[0];
  const Complex z = b[0] / a(0, 0);
  CHECK(std::abs(z - oracle.particular[0]) < 1e-12);
}

TEST_CASE("analytic_reduction: reference embedding gives the Schur matrix") {
  const auto emb = complexify(fixtures::spd6_system());
  const auto [u, v] = analytic_reduction(emb.M, emb.N, tol);

  const ComplexMatrix expected_v =
      Complex{-1.0} * (emb.N * gauss::inverse(conjugate(emb.M), tol.rank_tol));
  CHECK(checks::frob_diff(v, expected_v) < 1e-10);

  const ComplexMatrix a = u * emb.M + v * conjugate(emb.N);
  CHECK(checks::frob_diff(a, fixtures::spd6_schur()) < 1e-3 * 3);  // entrywise 1e-3
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      CHECK(std::abs(a(i, j) - fixtures::spd6_schur()(i, j)) < 1e-3);
}

TEST_CASE("analytic_reduction: singular M routes to the projector path") {
  // Uniquely solvable (block invertible) but M singular.
  const ComplexMatrix m(2, 2, {c(0), c(0), c(0), c(1)});
  const ComplexMatrix nm(2, 2, {c(1), c(0), c(0), c(0)});
  REQUIRE(has_unique_solution(m, nm, tol));
  CHECK_THROWS_AS(analytic_reduction(m, nm, tol), SingularMatrix);

  // The projector path still solves it.
  Rng rng(77);
  const ComplexVector p = random_complex_vector(2, rng);
  const ConjugateSystem sys(m, nm, p);
  const SolutionReport report = solve(sys, tol);
  REQUIRE(report.reducible);
  REQUIRE(report.solutions.feasible);
  const AffineSolutionSet oracle = solve_via_realification(sys, tol);
  CHECK(checks::vec_diff_norm(report.solutions.particular, oracle.particular) < 1e-8);
}

TEST_CASE("analytic_reduction: identity U N + V conj(M) = 0 and oracle agreement") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 5;
    Rng rng(11000 + trial);
    const ComplexMatrix m = random_complex_matrix(n, n, rng);
    const ComplexMatrix nm = random_complex_matrix(n, n, rng);
    if (!has_unique_solution(m, nm, tol)) continue;
    if (oracles::complex_rank(m) != n) continue;

    const auto [u, v] = analytic_reduction(m, nm, tol);
    const ComplexMatrix identity_check = u * nm + v * conjugate(m);
    CHECK(identity_check.frobenius_norm() <=
          1e-10 * (m.frobenius_norm() + nm.frobenius_norm()));

    const ComplexVector p = random_complex_vector(n, rng);
    const ConjugateSystem sys(m, nm, p);

    const ComplexMatrix a = u * m + v * conjugate(nm);
    ComplexVector b = u * p;
    const ComplexVector vp = v * conjugate(p);
    for (std::size_t i = 0; i < n; ++i) b[i] += vp[i];
    const AffineSolutionSet analytic = solve_complex(a, b, tol);
    REQUIRE(analytic.feasible);

    const AffineSolutionSet oracle = solve_via_realification(sys, tol);
    REQUIRE(oracle.feasible);
    CHECK(checks::vec_diff_norm(analytic.particular, oracle.particular) <= 1e-8);

    const SolutionReport projector_path = solve(sys, tol);
    REQUIRE(projector_path.solutions.feasible);
    CHECK(checks::vec_diff_norm(analytic.particular,
                                projector_path.solutions.particular) <= 1e-8);
  }
}

TEST_CASE("analytic_reduction: the N-inverse variant agrees when N is invertible") {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 3;
    Rng rng(12000 + trial);
    const ComplexMatrix m = random_complex_matrix(n, n, rng);
    const ComplexMatrix nm = random_complex_matrix(n, n, rng);
    if (!has_unique_solution(m, nm, tol)) continue;
    if (oracles::complex_rank(m) != n || oracles::complex_rank(nm) != n) continue;

    const auto [u1, v1] = analytic_reduction(m, nm, tol);
    const auto [u2, v2] = analytic_reduction(m, nm, tol, /*use_n_inverse_variant=*/true);

    const ComplexVector p = random_complex_vector(n, rng);
    auto solve_with = [&](const ComplexMatrix& u, const ComplexMatrix& v) {
      const ComplexMatrix a = u * m + v * conjugate(nm);
      ComplexVector b = u * p;
      const ComplexVector vp = v * conjugate(p);
      for (std::size_t i = 0; i < n; ++i) b[i] += vp[i];
      return solve_complex(a, b, tol).particular;
    };
    CHECK(checks::vec_diff_norm(solve_with(u1, v1), solve_with(u2, v2)) <= 1e-8);
  }
}

TEST_CASE("spectra_match: trivial, reference, and random embeddings") {
  CHECK(spectra_match(ComplexMatrix::identity(1), ComplexMatrix(1, 1), tol));

  const auto emb = complexify(fixtures::spd6_system());
  CHECK(spectra_match(emb.M, emb.N, tol));

  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 4;
    Rng rng(13000 + trial);
    const ComplexMatrix m = random_hermitian(n, rng);
    ComplexMatrix nm = random_complex_matrix(n, n, rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) nm(j, i) = nm(i, j);  // symmetric
    CHECK(spectra_match(m, nm, tol));
  }
}

TEST_CASE("spectra_match: rejects a non-Hermitian block") {
  Rng rng(14000);
  const ComplexMatrix m = random_complex_matrix(3, 3, rng);  // not Hermitian
  const ComplexMatrix nm = random_complex_matrix(3, 3, rng);
  CHECK_THROWS_AS(spectra_match(m, nm, tol), NotHermitian);
}
