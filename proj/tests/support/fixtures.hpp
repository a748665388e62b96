// Reference instances used by the unit and acceptance suites: a 5x5
// conjugate-linear system with a one-dimensional complex solution kernel,
// and a 6x6 real SPD system for the embedding pipeline.
#pragma once

#include "conjulin/conjsys.hpp"
#include "conjulin/embedding.hpp"
#include "conjulin/types.hpp"

namespace fixtures {

using conjulin::Complex;
using conjulin::ComplexMatrix;
using conjulin::ComplexVector;
using conjulin::RealMatrix;
using conjulin::RealVector;

inline Complex c(double re, double im = 0.0) { return {re, im}; }

// --- 5x5 reducible conjugate-linear system ----------------------------------

inline ComplexMatrix reducible5_M() {
  return ComplexMatrix(5, 5,
                       {c(0), c(0, -1), c(0), c(2, -1), c(0, 5),
                        c(0), c(0, 3), c(0), c(3), c(0, 9),
                        c(-1), c(5), c(1, -3), c(-3, 3), c(1, 7),
                        c(0), c(0, -2), c(0), c(0, -1), c(0, -1),
                        c(0), c(1, -1), c(0), c(0, 1), c(-2, -3)});
}

inline ComplexMatrix reducible5_N() {
  return ComplexMatrix(5, 5,
                       {c(0, -1), c(0, 5), c(-3, 1), c(3, -3), c(7, 1),
                        c(0), c(-3, 2), c(0), c(-2), c(-1, 3),
                        c(0), c(-1), c(0), c(-1, 2), c(5),
                        c(0), c(1), c(0), c(0, 1), c(0, -1),
                        c(0), c(5), c(0), c(7, 4), c(1, 2)});
}

inline ComplexVector reducible5_p() {
  return {c(1, -1), c(3), c(-1, 1), c(5, 1), c(1)};
}

inline conjulin::ConjugateSystem reducible5_system() {
  return {reducible5_M(), reducible5_N(), reducible5_p()};
}

// One member of the solution set (4-decimal print) and the complex kernel
// direction; the set is particular + C * direction.
inline ComplexVector reducible5_particular() {
  return {c(-27.4310, 50.9483), c(-4.0647, 5.7543), c(0), c(2.7694, -1.2220),
          c(0.6875, 0.9203)};
}

inline ComplexVector reducible5_kernel_direction() {
  return {c(1, -3), c(0), c(1), c(0), c(0)};
}

// Exact complex rank of [N; conj(M)], computed independently (row reduction
// over the realified matrix; confirmed in exact arithmetic).
inline constexpr std::size_t reducible5_stack_rank = 4;

// --- 6x6 SPD embedding instance ----------------------------------------------

inline RealMatrix spd6_A() {
  return RealMatrix(
      6, 6,
      {2.0483, -0.3065, 0.7403, -0.3338, 0.9431, 1.4834,
       -0.3065, 1.2538, -1.1144, 0.7319, -0.2412, 0.1729,
       0.7403, -1.1144, 1.8337, -0.6019, -0.0518, 0.6788,
       -0.3338, 0.7319, -0.6019, 1.6525, 0.4313, 0.0371,
       0.9431, -0.2412, -0.0518, 0.4313, 1.4893, 0.3625,
       1.4834, 0.1729, 0.6788, 0.0371, 0.3625, 1.5775});
}

inline RealVector spd6_b() {
  return {-1.7746, -1.3900, -1.9215, -0.2593, 1.3289, 0.4696};
}

inline conjulin::RealSystem spd6_system() { return {spd6_A(), spd6_b()}; }

// Reference spectrum and conditioning (4-decimal prints).
inline RealVector spd6_eig_A() {
  return {0.0245, 0.1082, 1.0932, 1.4319, 2.8521, 4.3453};
}
inline RealVector spd6_eig_S() { return {0.0463, 0.2488, 2.0073}; }
inline constexpr double spd6_cond_A = 177.3795;
inline constexpr double spd6_cond_S = 43.3843;

// Reference solution (4-decimal print; reproducible to ~5.7e-4 relative from
// the 4-decimal inputs above).
inline RealVector spd6_x() {
  return {-33.1807, -56.9574, -42.5687, 2.4589, -3.3323, 56.7669};
}

inline ComplexVector spd6_z() {
  return {c(-33.1807, 2.4589), c(-56.9574, -3.3323), c(-42.5687, 56.7669)};
}

// Schur matrix as printed (4 decimals).
inline ComplexMatrix spd6_schur() {
  return ComplexMatrix(3, 3,
                       {c(0.5756), c(0.3906, 0.2060), c(-0.1576, -0.5196),
                        c(0.3906, -0.2060), c(0.8131), c(-0.5220, -0.6089),
                        c(-0.1576, 0.5196), c(-0.5220, 0.6089), c(0.9137)});
}

// q = p - N conj(M)^{-1} conj(p), recomputed at full precision from A and b.
inline ComplexVector spd6_q() {
  return {c(-4.4545756802006977, 1.5509416036474324),
          c(-1.9777550753281985, 1.375217634150868),
          c(-3.1810998265976389, 1.2955583484991227)};
}

}  // namespace fixtures
