#pragma once

// Seeded random power-sum instances: the `gen` profiles and the populations
// used by the oracle and pipeline suites.

#include <optional>
#include <string_view>

#include "skolemff/powersum.hpp"
#include "skolemff/random.hpp"

namespace skolemff {

enum class Profile { Small, DepHeavy, CharP };

std::optional<Profile> parse_profile(std::string_view s);
std::string_view to_string(Profile p);

/// c·∏ p^{k_p} over the finite places of S, |k_p| ≤ max_exp; nonconstant
/// when S has a finite place.
RationalFunction random_s_unit(const PlaceSet& s, Rng& rng, long max_exp = 2);
/// Polynomial of degree ≤ max_degree over a product of finite places of S.
RationalFunction random_s_integer(const PlaceSet& s, long max_degree, Rng& rng);

/// small: m ≤ 4, heights ≤ 6, over ℚ or ℚ(ζ₄), sometimes with a planted zero.
/// dep-heavy: f = g^q and the companion polynomial has a root ±g^r, q ∤ r.
/// charp: over 𝔽_3 or 𝔽_5 with f a p-th power.
PowerSumInstance random_instance(Profile profile, Rng& rng);

/// Char 0 instance whose decision window max_c h(P_c)/h(f) is at most window.
PowerSumInstance random_windowed_instance(const Field& field, long window, Rng& rng);

/// Largest h(P_c)/h(f) over the residue classes.
long decision_window(const PowerSumInstance& inst);

}  // namespace skolemff
