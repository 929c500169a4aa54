#pragma once

// Power sums B(n) = Σ λ_i (ε_i f^{r_i})^n over K = F(t): evaluation, the
// local vanishing condition at zeros of f^a − 1, exact decision of global
// zeros, and the effective local-global certificate.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skolemff/funfield.hpp"
#include "skolemff/multstruct.hpp"
#include "skolemff/vd_theorems.hpp"

namespace skolemff {

class PowerSumInstance {
 public:
  /// Validates: m ≥ 1, λ_i nonzero S-integers, f a nonconstant S-unit, all
  /// data over one field. Raises InvalidInstance otherwise.
  PowerSumInstance(std::vector<RationalFunction> lambdas, std::vector<RootOfUnity> epsilons, std::vector<long> r,
                   RationalFunction f, PlaceSet s, long genus = 0);

  const Field& field() const { return f_.field(); }
  std::size_t m() const { return lambdas_.size(); }
  const std::vector<RationalFunction>& lambdas() const { return lambdas_; }
  const std::vector<RootOfUnity>& epsilons() const { return epsilons_; }
  const std::vector<long>& r() const { return r_; }
  const RationalFunction& f() const { return f_; }
  const PlaceSet& s() const { return s_; }
  long genus() const { return genus_; }

  /// lcm of the orders of the ε_i.
  std::uint64_t e() const { return e_; }
  long r_min() const;
  long r_max() const;
  /// N = max r_i − min r_i.
  long spread() const { return r_max() - r_min(); }

  /// Same data with S replaced.
  PowerSumInstance with_places(PlaceSet s) const;
  /// The instance over a larger cyclotomic constant field; finite places of S
  /// are replaced by their factors there.
  PowerSumInstance embedded(const Field& target) const;

 private:
  std::vector<RationalFunction> lambdas_;
  std::vector<RootOfUnity> epsilons_;
  std::vector<long> r_;
  RationalFunction f_;
  PlaceSet s_;
  long genus_;
  std::uint64_t e_ = 1;
};

RationalFunction eval_B(const PowerSumInstance& inst, long n);

/// P_c(X) = Σ λ_i ε_i^c X^{r_i − r_min}, coefficients collected.
KPoly companion_poly(const PowerSumInstance& inst, long c);

/// The instance seen on the residue class n = c + e·m: coefficients
/// λ_i ε_i^c f^{r_i c} (collected by exponent), all ε = 1, base f^e.
/// nullopt when every collected coefficient vanishes (B ≡ 0 on the class).
std::optional<PowerSumInstance> class_instance(const PowerSumInstance& inst, long c);

struct LocalCheck {
  bool passes = false;
  /// d | a (p-free part in char p) whose zeros of Φ_d(f) outside S are missed.
  std::vector<std::uint64_t> failing_orders;
  std::vector<Place> failing_places;
  /// False when some failing part was too large to factor into places.
  bool places_complete = true;
};

/// Checks v_p(B(k)) ≥ min(1, v_p(f^a − 1)) at every place p ∉ S, one
/// cyclotomic layer Φ_d(f) at a time, working modulo the radical of that layer.
class LocalChecker {
 public:
  LocalChecker(const PowerSumInstance& inst, std::uint64_t a);
  ~LocalChecker();
  LocalChecker(const LocalChecker&) = delete;
  LocalChecker& operator=(const LocalChecker&) = delete;

  /// Early-exit test.
  bool passes(long k);
  /// Every layer, with failing places.
  LocalCheck check(long k);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

LocalCheck local_vanishing_check(const PowerSumInstance& inst, long k, std::uint64_t a);

/// Scans k = 0, 1, ..., k_bound, then −1, ..., −k_bound.
std::optional<long> find_local_witness(const PowerSumInstance& inst, std::uint64_t a, long k_bound);

/// Smallest |n| (ties toward positive) with B(n) = 0. Each class c mod e is
/// scanned over |n| ≤ h(P_c)/h(f), which bounds every root f^n of P_c;
/// n_bound replaces that window when given.
std::optional<long> decide_global_zero(const PowerSumInstance& inst, std::optional<long> n_bound = std::nullopt);

// ---------------------------------------------------------------------------
// Certification pipeline (characteristic 0).

struct KRoot {
  RationalFunction beta;
  long multiplicity = 1;
};

/// Roots in K of a nonzero polynomial over K (rational root theorem over
/// F[t]). complete is false when the roots found do not account for the degree.
std::vector<KRoot> roots_in_K(const KPoly& p, bool& complete);

struct ClassifiedRoot {
  RationalFunction beta;
  long multiplicity = 1;
  bool dependent = false;
  /// For dependent roots: β^{q_exact} = base^{r_exact} exactly.
  long q_exact = 0, r_exact = 0;
};

struct DepIndSplit {
  KPoly monic;  // P_c / lc with X^s stripped
  std::vector<ClassifiedRoot> dep, ind;
  KPoly p_dep, p_ind;  // p_dep·p_ind = monic
  KPoly remainder;     // p_ind without its roots in K
  bool complete = true;
};

/// ZeroPolynomial if p = 0.
DepIndSplit split_dep_ind(const KPoly& p, const RationalFunction& base);

/// lcm of the exact q's, or 2 without dependent roots.
long choose_q(const DepIndSplit& split);
/// r_β with β^q = base^{r_β} for the common q.
std::vector<long> common_r(const DepIndSplit& split, long q);
/// Smallest prime not dividing q nor any nonzero difference of the r's.
std::uint64_t choose_p(const std::vector<long>& r_betas, long q);

struct EllInputs {
  long deg_p = 0;
  long h_p = 0;
  long h_f = 1;
  long chi = 0;
  std::uint64_t p = 3;
  long q = 2;
};

/// Whether (φ(p^ℓ)−2)h(f) − χ ≤ 3∛2·deg P·χ^{1/3}[p^ℓ q h(f) + h(P)]^{2/3}
/// holds (decided by cubing).
bool terminal_inequality_holds(const EllInputs& in, long ell);
/// Smallest ℓ ≥ 1 at which the inequality fails. BadChiS if χ < 0.
long ell_bound(const EllInputs& in);

/// Data a class needs for the two lemmas.
struct LemmaContext {
  RationalFunction base;  // f^e
  PlaceSet s;             // enlarged so roots are S-units
  DepIndSplit split;
  std::uint64_t p = 3;
  long ell = 1;
  long q = 2;
  long h_p = 0;
};

struct ClassCertificate {
  long c = 0;
  bool identically_zero = false;
  std::string companion;
  long deg_p = 0, h_p = 0;
  std::vector<ClassifiedRoot> dep, ind;
  bool roots_complete = true;
  long q = 2;
  std::vector<long> r_betas;
  std::uint64_t p = 3;
  long ell = 1;
  Integer a;  // p^ℓ q, relative to the base f^e
  std::vector<InequalityReport> lemma_checks;
};

enum class Verdict { GlobalZeroFound, LocalObstruction, InconclusiveWithinBounds };
std::string_view to_string(Verdict v);

struct CertificateReport {
  Verdict verdict = Verdict::InconclusiveWithinBounds;
  std::optional<long> global_zero;
  std::uint64_t e = 1;
  PlaceSet s_enlarged;
  long chi = 0;
  std::vector<ClassCertificate> classes;
  Integer a;  // e · lcm of the class a's
  long k_bound = 0;
  std::optional<long> local_witness;
  bool theorem_violation = false;
  std::string note;
  /// One per class with a complete root search, for re-running the lemmas.
  std::vector<LemmaContext> contexts;
};

CertificateReport certify_local_global(const PowerSumInstance& inst, long k_bound);

/// Either N_S(gcd(P_dep(F^n), Φ_{p^ℓ}(F))) = 0 or N_S(gcd(P_dep(F^n), Φ_{p^ℓ q}(F))) = 0.
InequalityReport lemma_claimD_check(const LemmaContext& ctx, long n);
/// N_S(gcd(P_ind(F^n), Φ_{p^ℓ}(F)Φ_{p^ℓ q}(F)))³ ≤ 54·(deg P)³·χ_S·(p^ℓ q h(F) + h(P))².
InequalityReport lemma_claimI_check(const LemmaContext& ctx, long n);

/// N_S(gcd(x, Φ_k(F))) for an S-integer x and S-unit F, computed modulo the
/// numerator of x so that large k stay cheap.
long gcd_counting_cyclotomic(const RationalFunction& x, const RationalFunction& base, const std::vector<std::uint64_t>& ks,
                             const PlaceSet& s);

}  // namespace skolemff
