#pragma once

// Dense univariate polynomials over the constant field F (elements of F[t]).

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "skolemff/constants.hpp"

namespace skolemff {

class Polynomial {
 public:
  explicit Polynomial(const Field& field) : field_(&field) {}
  Polynomial(const Field& field, std::vector<Constant> coeffs);

  static Polynomial constant(const Constant& c);
  static Polynomial monomial(const Constant& c, std::size_t degree);
  /// The variable t.
  static Polynomial variable(const Field& field);
  /// Little-endian integer coefficients, e.g. {-1, 0, 1} is t² − 1.
  static Polynomial from_ints(const Field& field, std::initializer_list<long> coeffs);
  static Polynomial from_ints(const Field& field, const IntPoly& coeffs);

  const Field& field() const { return *field_; }
  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const Constant& lc() const { return c_.back(); }
  Constant coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }
  const std::vector<Constant>& coeffs() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Constant& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Constant& c) { return a *= c; }
  friend Polynomial operator*(const Constant& c, Polynomial a) { return a *= c; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divrem(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divrem(d).second; }

  Polynomial pow(std::uint64_t e) const;
  Polynomial derivative() const;
  Constant eval(const Constant& x) const;
  /// this(g(t)).
  Polynomial compose(const Polynomial& g) const;
  Polynomial monic() const;
  /// Multiply by t^k.
  Polynomial shifted(std::size_t k) const;

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Degree first, then coefficients from the top; deterministic, not algebraic.
  std::strong_ordering operator<=>(const Polynomial& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  const Field* field_;
  std::vector<Constant> c_;
};

/// Monic gcd (zero iff both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g, s, t;  // s·a + t·b = g, g monic
};
ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m (requires gcd(a, m) = 1).
Polynomial invert_mod(const Polynomial& a, const Polynomial& m);
Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial powmod(const Polynomial& a, const Integer& e, const Polynomial& m);

bool divides(const Polynomial& d, const Polynomial& a);
/// Throws std::logic_error when the division is not exact.
Polynomial exact_div(const Polynomial& a, const Polynomial& d);

/// Largest k with d^k | a (a nonzero, d nonconstant).
long multiplicity(const Polynomial& d, Polynomial a);

/// Char p: true iff a ∈ F[t^p].
bool is_pth_power_poly(const Polynomial& a);
/// Char p: b with b^p = a; requires is_pth_power_poly(a).
Polynomial pth_root_poly(const Polynomial& a);

/// Squarefree decomposition of a nonconstant polynomial: pairs (g_i, i) with
/// a = lc(a)·∏ g_i^i, each g_i monic squarefree, pairwise coprime.
std::vector<std::pair<Polynomial, long>> squarefree_decomposition(const Polynomial& a);
/// Monic product of the distinct irreducible factors.
Polynomial radical(const Polynomial& a);

/// Homogenized evaluation v^n·P(u/v) of an integer polynomial P of degree n.
Polynomial homogenize(const IntPoly& p, const Polynomial& u, const Polynomial& v);

}  // namespace skolemff
