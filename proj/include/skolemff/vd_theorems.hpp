#pragma once

// Executable forms of the value-distribution inequalities on ℙ¹. Each
// verifier computes both sides exactly; holds == false would mean a bug here,
// never a counterexample.

#include <string>
#include <vector>

#include "skolemff/funfield.hpp"

namespace skolemff {

struct InequalityReport {
  std::string name;
  Integer lhs, rhs;
  /// lhs and rhs are the cubes of the quantities in the stated inequality.
  bool cubed = false;
  bool holds = false;
  /// Filled only when the inequality fails, to keep the common path cheap.
  std::vector<Place> lhs_places, rhs_places;
};

/// (q−2)·h(f)/deg_ins(f) ≤ Σ N̄_S(f − b_i) + χ_S for distinct constants b_i.
InequalityReport verify_smt(const RationalFunction& f, const PlaceSet& s, const std::vector<Constant>& b,
                            long genus = 0);

/// #{c : f − c ∈ O_S*} ≤ 2g + |S| over the given candidates; f ∈ O_S nonconstant.
InequalityReport verify_sunit_count(const RationalFunction& f, const PlaceSet& s, const std::vector<Constant>& candidates,
                                    long genus = 0);

/// The same bound read over all a-th roots of unity ξ:
/// a − (2g + |S|) ≤ #{ξ : f − ξ ∉ O_S*}.
InequalityReport verify_sunit_roots(const RationalFunction& f, const PlaceSet& s, std::uint64_t a, long genus = 0);

/// N_S(gcd(1−a, 1−b))³ ≤ 54·h(a)·h(b)·χ_S for multiplicatively independent
/// S-units a, b in characteristic 0 with χ_S ≥ 0.
InequalityReport verify_cz_gcd(const RationalFunction& a, const RationalFunction& b, const PlaceSet& s, long genus = 0);

}  // namespace skolemff
