#pragma once

#include <cstdint>

// Pinned constants. The asymptotic statements only give implicit constants;
// every value here was chosen once against the desk-scale suite and is echoed
// in each emitted record through kConstantsVersion.
namespace detlab::constants {

inline constexpr const char* kConstantsVersion = "detlab-constants-v1";

// Enumeration budget: largest number of candidate tuples visited.
inline constexpr double kEnumerationBudget = 1e8;

// Small kernel vector: (H/C)^{2(n-r)} <= n^{d_K r} H_K(A)^{2r}.
inline constexpr long kSmallSolutionC = 4;

// Line counts: N <= c B / H_K(w) + 1 (c = q for F_q(T)).
inline constexpr long kLineCRationals = 2;
inline constexpr long kLineCGaussian = 8;

// Lines on a surface: N <= c d^6 B + |I|.
inline constexpr long kLinesOnSurfaceC = 1;

// Auxiliary polynomial degree bound prefactor (projective and affine).
inline constexpr double kAuxBoundC = 1.0;
inline constexpr int kAuxMaxDegree = 24;
inline constexpr long kAuxBadPrimeCutoff = 200;

// Staircase lower bound: A(s) >= (r!/mu)^{1/r} r/(r+1) s^{1+1/r} - C s.
// Worst case on r <= 3, mu <= 4, s <= 2000 is 1.49 (r = 3, mu = 1).
inline constexpr double kStaircaseC = 2.0;

// |mertens_sum(Q, x) - ln x| <= C.
inline constexpr double kMertensC = 2.0;

// b(f) <= C max{d^a log H, 1}.
inline constexpr double kBadPrimeLemmaC = 1.0;

// Divisor sum: sum_{p | x} log N/N <= log log N(x) + C.
inline constexpr double kDivisorSumC = 2.0;

// Singular-reduction primes of a point: sum log N(p) <= kappa log B + kappa'.
inline constexpr double kPiXKappa = 2.0;
inline constexpr double kPiXKappaPrime = 3.0;

// Dimension growth reference exponents (number fields, function fields).
inline constexpr int kGrowthExponentNumber = 18;
inline constexpr int kGrowthExponentFunction = 64;

// Tolerances of the exponent fits.
inline constexpr double kSlopeTolerance = 0.1;

}  // namespace detlab::constants
