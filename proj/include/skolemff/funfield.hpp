#pragma once

// Arithmetic of K = F(t) on ℙ¹: places, valuations, divisors, heights and
// counting functions.
//
// A finite place is a monic irreducible polynomial over F; it stands for the
// whole Galois orbit of geometric points it cuts out, so every height and
// counting sum below is weighted by place degree.

#include <climits>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skolemff/polynomial.hpp"

namespace skolemff {

class RationalFunction {
 public:
  /// Zero.
  explicit RationalFunction(const Field& field) : num_(field), den_(Polynomial::constant(field.one())) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  /// Normalizes: den monic, gcd(num, den) = 1. den = 0 raises ZeroInput.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const Constant& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction variable(const Field& field) { return RationalFunction(Polynomial::variable(field)); }

  const Field& field() const { return num_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Requires is_constant().
  Constant constant_value() const { return num_.coeff(0); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction inverse() const;
  /// Negative exponents allowed for nonzero values.
  RationalFunction pow(long e) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const RationalFunction& o) const;

  std::string to_string() const;

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_, den_;
};

class Place {
 public:
  /// p must be monic and irreducible; checked unless trusted.
  static Place finite(const Polynomial& p, bool trusted = false);
  static Place infinity() { return Place(); }

  bool is_infinity() const { return !poly_.has_value(); }
  /// Requires !is_infinity().
  const Polynomial& poly() const { return *poly_; }
  long degree() const { return poly_ ? poly_->degree() : 1; }

  bool operator==(const Place& o) const;
  /// Finite places first (by polynomial order), then ∞.
  std::strong_ordering operator<=>(const Place& o) const;

  std::string to_string() const;

 private:
  Place() = default;
  explicit Place(Polynomial p) : poly_(std::move(p)) {}

  std::optional<Polynomial> poly_;
};

/// Sorted, duplicate-free set of places.
class PlaceSet {
 public:
  PlaceSet() = default;
  PlaceSet(std::initializer_list<Place> places);

  void insert(const Place& p);
  bool contains(const Place& p) const;
  bool contains_infinity() const { return !places_.empty() && places_.back().is_infinity(); }
  /// Σ deg p, i.e. |S| counted over geometric points.
  long degree_sum() const;
  std::size_t size() const { return places_.size(); }
  bool empty() const { return places_.empty(); }

  const std::vector<Place>& places() const { return places_; }
  std::vector<Place>::const_iterator begin() const { return places_.begin(); }
  std::vector<Place>::const_iterator end() const { return places_.end(); }

  bool operator==(const PlaceSet&) const = default;

 private:
  std::vector<Place> places_;
};

/// Returned by valuation() for the zero function.
inline constexpr long kInfiniteValuation = LONG_MAX;

long valuation(const RationalFunction& f, const Place& p);

using Divisor = std::map<Place, long>;
Divisor divisor(const RationalFunction& f);

long height(const RationalFunction& f);
/// Height of the point [x_0 : ... : x_n] in ℙⁿ(K).
long projective_height(const std::vector<RationalFunction>& x);

/// Polynomial in X with coefficients in K, little-endian.
class KPoly {
 public:
  explicit KPoly(const Field& field) : field_(&field) {}
  KPoly(const Field& field, std::vector<RationalFunction> coeffs);

  const Field& field() const { return *field_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<RationalFunction>& coeffs() const { return c_; }
  RationalFunction coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RationalFunction(*field_); }

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  RationalFunction eval(const RationalFunction& x) const;

  bool operator==(const KPoly& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  const Field* field_;
  std::vector<RationalFunction> c_;
};

/// min_i v_p(a_i); A ≠ 0.
long poly_valuation(const KPoly& a, const Place& p);
/// Projective height of the coefficient vector; A ≠ 0.
long poly_height(const KPoly& a);

/// N̄_S(b): degree-weighted count of distinct zeros of b outside S.
long truncated_counting(const RationalFunction& b, const PlaceSet& s);
/// N_S(gcd(f, g)) (or its truncation); f, g must be S-integers.
long gcd_counting(const RationalFunction& f, const RationalFunction& g, const PlaceSet& s, bool truncated = false);

/// Largest p^ℓ with f ∈ K^{p^ℓ} (1 in char 0); f nonconstant.
long deg_ins(const RationalFunction& f);

/// 2g − 2 + Σ_{p∈S} deg p.
long chi_s(const PlaceSet& s, long genus = 0);

bool is_s_integer(const RationalFunction& f, const PlaceSet& s);
bool is_s_unit(const RationalFunction& f, const PlaceSet& s);

/// Monic part of a with every finite place of S divided out completely.
Polynomial strip_places(Polynomial a, const PlaceSet& s);

}  // namespace skolemff
