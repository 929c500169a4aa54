#pragma once

// The small-coefficient regime: when Σ h(λ_i) ≤ ρ·h(f)/deg_ins(f), a local
// witness for a suitable a forces Σ λ_i = 0 or a vanishing polynomial
// Σ λ_i ε_i^k X^{r_i}. Valid in every characteristic.

#include <optional>

#include "skolemff/powersum.hpp"

namespace skolemff {

/// Γ = (2 − ρ)/(1 − ρ)·(2g + |S|), |S| counted with degrees.
Rational gamma_bound(const Rational& rho, long genus, long s_degree);
Rational gamma_bound(const PowerSumInstance& inst, const Rational& rho);

/// Σ h(λ_i) ≤ ρ·h(f)/deg_ins(f), compared exactly. ρ must lie in (0, 1).
bool growth_check(const PowerSumInstance& inst, const Rational& rho);

/// Smallest e > Γ divisible by every order, prime to the characteristic.
std::uint64_t min_e(const std::vector<std::uint64_t>& orders, const Rational& gamma, std::uint64_t characteristic = 0);
std::uint64_t min_e(const PowerSumInstance& inst, const Rational& rho);

/// q^{1 + ord_q a − ord_q e} > N + Γ for every prime q | e, and e | a.
bool is_admissible_a(const Integer& a, std::uint64_t e, long spread, const Rational& gamma);
/// The smallest such a.
Integer admissible_a(std::uint64_t e, long spread, const Rational& gamma);

struct Conclusion {
  /// True for the branch e | k (Σ λ_i = 0), false for e ∤ k.
  bool e_divides_k = true;
  bool verified = false;
  /// e ∤ k with pairwise distinct r_i: the branch that cannot occur.
  bool impossible_branch = false;
};

Conclusion conclude_from_witness(const PowerSumInstance& inst, long k, std::uint64_t e);

struct SmallCoefReport {
  Rational rho, gamma;
  bool growth_ok = false;
  Rational growth_lhs, growth_rhs;
  std::uint64_t e = 0;
  Integer a;
  long k_bound = 0;
  std::optional<long> witness;
  std::optional<Conclusion> conclusion;
  /// No witness within the bound, or a witness whose conclusion verified.
  bool consistent = true;
  bool theorem_violation = false;
};

/// Growth check, e, a, witness scan over |k| ≤ k_bound and the conclusion.
SmallCoefReport smallcoef_end_to_end(const PowerSumInstance& inst, const Rational& rho, long k_bound);

}  // namespace skolemff
