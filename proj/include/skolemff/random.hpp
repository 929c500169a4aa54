#pragma once

// Seeded generators for test data and the CLI verifier suites. Everything is
// driven by an explicit std::mt19937_64 so runs are reproducible.

#include <random>

#include "skolemff/funfield.hpp"

namespace skolemff {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

/// Small coordinates in [-bound, bound] (char 0) or uniform (char p).
Constant random_constant(const Field& f, Rng& rng, long bound = 3);
Constant random_nonzero_constant(const Field& f, Rng& rng, long bound = 3);
/// Exactly the given degree (nonzero leading coefficient).
Polynomial random_poly(const Field& f, long degree, Rng& rng, long bound = 3);
Polynomial random_monic(const Field& f, long degree, Rng& rng, long bound = 3);
/// Nonzero; numerator and denominator degrees in [0, max_degree].
RationalFunction random_ratfunc(const Field& f, long max_degree, Rng& rng, long bound = 3);
/// Nonconstant.
RationalFunction random_nonconstant(const Field& f, long max_degree, Rng& rng, long bound = 3);
/// Monic irreducible of the given degree (rejection sampling).
Polynomial random_irreducible(const Field& f, long degree, Rng& rng);
/// ∞ plus `finite` random places of degree ≤ 2.
PlaceSet random_place_set(const Field& f, long finite, Rng& rng, bool with_infinity = true);

}  // namespace skolemff
