#pragma once

// Multiplicative relations in K*. Relations are taken up to torsion
// constants: a and b are dependent when a^m·b^n is a root of unity for some
// (m, n) ≠ (0, 0).
//
// On ℙ¹ the relation lattice can be read off heights alone: if
// m·div(a) = −n·div(b) then |m|·h(a) = |n|·h(b), so the only primitive
// candidate is (h(b), ∓h(a))/gcd, and a candidate is a genuine relation iff
// a^m·b^n is constant (F is algebraically closed in K). No factoring needed.

#include <optional>

#include "skolemff/funfield.hpp"

namespace skolemff {

struct Relation {
  long m = 0, n = 0;  // primitive, m ≥ 0
  Constant c;         // a^m·b^n
  bool torsion = false;
};

/// The primitive relation between a and b up to constants, if their divisors
/// are proportional. Both constant raises BothConstant.
std::optional<Relation> divisor_relation(const RationalFunction& a, const RationalFunction& b);

bool is_mult_independent(const RationalFunction& a, const RationalFunction& b);

struct DependenceWitness {
  long q = 1;
  long r = 0;
  RootOfUnity torsion;  // β^q = torsion·f^r

  /// (q·ord ε, r·ord ε): the smallest multiple with β^q' = f^r' exactly.
  long exact_q() const { return q * static_cast<long>(torsion.order); }
  long exact_r() const { return r * static_cast<long>(torsion.order); }
};

std::optional<DependenceWitness> dependence_exponents(const RationalFunction& beta, const RationalFunction& f);

/// n with β = f^n.
std::optional<long> is_power_of(const RationalFunction& beta, const RationalFunction& f);

}  // namespace skolemff
