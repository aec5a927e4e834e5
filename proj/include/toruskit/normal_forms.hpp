#pragma once

#include "toruskit/int_matrix.hpp"

namespace toruskit {

/// U * M * V = D with U, V unimodular and D diagonal carrying the invariant
/// factors s_1 | s_2 | ... | s_r (positive, padded with zeros below the rank).
/// The elementary divisors d_k = s_1 * ... * s_k (gcds of the k-minors) are
/// exposed alongside; see elementary_divisors_via_minors for the definitional
/// route.
struct SmithDecomposition {
  IntMatrix U, V, D;
  std::vector<mpz_class> invariant_factors;   // s_1..s_r
  std::vector<mpz_class> elementary_divisors; // d_k = s_1*...*s_k
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Fast path: d_k from the invariant factors.
std::vector<mpz_class> elementary_divisors(const IntMatrix& m);
/// Definitional route: d_k = gcd of all k x k minors. Exponential in the
/// dimensions; intended as the cross-check oracle for desk-scale matrices.
std::vector<mpz_class> elementary_divisors_via_minors(const IntMatrix& m);

/// Row-style Hermite normal form: U * M = H with U unimodular, H in echelon
/// profile with positive pivots and entries above each pivot reduced to
/// [0, pivot). H is the unique canonical basis of the row lattice of M
/// (nonzero rows), which makes it usable for lattice equality and hashing.
struct HermiteResult {
  IntMatrix H, U;
  int rank;
};

HermiteResult hermite_normal_form(const IntMatrix& m);

}  // namespace toruskit
