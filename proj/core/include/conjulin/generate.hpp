// Deterministic pseudo-random instance generation: the same seed always
// produces the same matrices, independent of platform or standard library.
#pragma once

#include <cstdint>

#include "conjulin/types.hpp"

namespace conjulin {

/// SplitMix64 stream with an explicit bits-to-double mapping, so generated
/// instances are reproducible everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  Complex complex_entry() {
    const double re = symmetric();
    return Complex(re, symmetric());
  }

private:
  std::uint64_t state_;
};

ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, Rng& rng);
ComplexVector random_complex_vector(std::size_t dim, Rng& rng);
RealMatrix random_real_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Random Hermitian matrix with entries of order one.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

struct GeneratedSystem {
  ComplexMatrix M;
  ComplexMatrix N;
  ComplexVector p;
};

struct GeneratedRealSystem {
  RealMatrix A;
  RealVector b;
};

/// A = G^T G + I for a random G: symmetric positive definite by construction.
GeneratedRealSystem gen_spd(std::size_t m, std::uint64_t seed);

/// Random (M, N) resampled until the block matrix [[M, N], [conj N, conj M]]
/// is invertible; p is random.
GeneratedSystem gen_unique(std::size_t n, std::uint64_t seed);

/// Reducible instance with a nontrivial complex solution subspace: a random
/// unit w is annihilated by M while conj(w) is annihilated by N, so C*w
/// solves the homogeneous system. p is forward-constructed (feasible).
/// For n = 1 this degenerates to an invertible (M, N = 0) pair.
GeneratedSystem gen_reducible(std::size_t n, std::uint64_t seed);

/// Irreducible instance: N receives a rank-one correction making a random v
/// solve the homogeneous system while i*v does not, so the solution set is
/// not a complex space. p is forward-constructed (feasible).
GeneratedSystem gen_irreducible(std::size_t n, std::uint64_t seed);

}  // namespace conjulin
