#pragma once

// Irreducible factorization over the constant field F.
//
//   char p:  distinct-degree + Cantor–Zassenhaus equal-degree splitting
//            (fixed seed, so results are reproducible).
//   ℚ:       Zassenhaus. Modular factorization, Hensel lifting, subset
//            recombination.
//   ℚ(ζ_M):  Trager's norm method, descending to ℚ.
//
// SKOLEMFF_MAX_DEGREE (default 64) caps the degree of the squarefree part
// handed to the splitting step (and of norms in the ℚ(ζ_M) descent);
// larger inputs raise FactorizationTooHard.

#include <utility>
#include <vector>

#include "skolemff/polynomial.hpp"

namespace skolemff {

struct Factorization {
  Constant unit;
  /// Monic irreducible factors with multiplicities, sorted by Polynomial order.
  std::vector<std::pair<Polynomial, long>> factors;
};

long max_factor_degree();

/// a must be nonzero.
Factorization factor(const Polynomial& a);

/// Monic irreducible factors of a monic squarefree polynomial.
std::vector<Polynomial> factor_squarefree(const Polynomial& f);

bool is_irreducible(const Polynomial& a);

/// Distinct roots of a in F, sorted.
std::vector<Constant> roots_in_field(const Polynomial& a);

/// Zassenhaus on a primitive squarefree integer polynomial with positive
/// leading coefficient; returns primitive irreducible integer factors.
std::vector<IntPoly> factor_integer_squarefree(const IntPoly& g);

}  // namespace skolemff
