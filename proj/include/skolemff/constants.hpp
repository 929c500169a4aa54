#pragma once

// Exact arithmetic in the constant field F: ℚ(ζ_M) in characteristic 0, or
// 𝔽_{p^d} given by a stored monic irreducible modulus in characteristic p.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skolemff/arith.hpp"
#include "skolemff/error.hpp"

namespace skolemff {

struct FieldSpec {
  std::uint64_t characteristic = 0;
  /// char 0 only: F = ℚ(ζ_M); M = 1 is ℚ.
  std::uint64_t cyclotomic_order = 1;
  /// char p only: F = 𝔽_{p^d}.
  std::uint64_t extension_degree = 1;
  /// char p only: monic defining polynomial over 𝔽_p, little-endian, length d+1.
  /// Left empty, the smallest irreducible in lexicographic order is chosen.
  std::vector<std::uint64_t> modulus;

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(std::uint64_t m) { return {0, m, 1, {}}; }
  static FieldSpec finite(std::uint64_t p, std::uint64_t d = 1) { return {p, 1, d, {}}; }

  bool operator==(const FieldSpec&) const = default;
};

class Constant;

/// Interned, immutable field context. Obtain through Field::get; the returned
/// reference stays valid for the lifetime of the process.
class Field {
 public:
  static const Field& get(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  bool char_zero() const { return spec_.characteristic == 0; }
  std::uint64_t characteristic() const { return spec_.characteristic; }
  /// φ(M) in char 0, d in char p.
  std::size_t dimension() const { return dim_; }
  /// |F| = p^d (char p only).
  const Integer& size() const { return size_; }

  /// Exponent annihilating every root of unity of F: lcm(2, M) in char 0,
  /// p^d − 1 in char p.
  const Integer& torsion_exponent() const { return torsion_; }

  Constant zero() const;
  Constant one() const;
  Constant from_int(long v) const;
  Constant from_integer(const Integer& v) const;
  /// Char 0 only.
  Constant from_rational(const Rational& v) const;
  /// Power-basis generator: ζ_M in char 0, the class of x in char p.
  Constant generator() const;
  /// Primitive d-th root of unity under the canonical embedding, or nullopt
  /// when F has none.
  std::optional<Constant> primitive_root_of_unity(std::uint64_t d) const;

  const std::vector<Rational>& cyclotomic_modulus() const { return phi_m_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::string describe() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  explicit Field(FieldSpec spec);
  friend struct FieldRegistry;

  FieldSpec spec_;
  std::size_t dim_ = 1;
  Integer size_;
  Integer torsion_;
  std::vector<Rational> phi_m_;
  std::vector<std::uint64_t> modulus_;
  bool chosen_default_ = false;
};

/// An element of F in canonical form (reduced modulo the defining polynomial,
/// rationals in lowest terms, no trailing zero coordinates).
class Constant {
 public:
  explicit Constant(const Field& field) : field_(&field) {}

  static Constant from_coordinates(const Field& field, std::vector<Rational> coords);
  static Constant from_coordinates(const Field& field, std::vector<std::uint64_t> coords);

  const Field& field() const { return *field_; }
  bool is_zero() const { return q_.empty() && m_.empty(); }
  bool is_one() const;
  /// True when the element lies in the prime field (ℚ or 𝔽_p).
  bool is_prime_field() const;
  /// Char 0 only; requires is_prime_field().
  Rational rational_value() const;
  /// Char p only; requires is_prime_field().
  std::uint64_t prime_field_value() const;

  const std::vector<Rational>& rational_coords() const { return q_; }
  const std::vector<std::uint64_t>& modular_coords() const { return m_; }

  Constant operator-() const;
  Constant& operator+=(const Constant& o);
  Constant& operator-=(const Constant& o);
  Constant& operator*=(const Constant& o);
  Constant& operator/=(const Constant& o);
  friend Constant operator+(Constant a, const Constant& b) { return a += b; }
  friend Constant operator-(Constant a, const Constant& b) { return a -= b; }
  friend Constant operator*(Constant a, const Constant& b) { return a *= b; }
  friend Constant operator/(Constant a, const Constant& b) { return a /= b; }

  Constant inverse() const;
  Constant pow(const Integer& e) const;
  Constant pow(long e) const { return pow(Integer(e)); }
  /// Char p only: the unique p-th root (F is perfect).
  Constant pth_root() const;

  bool operator==(const Constant& o) const;
  /// Total order used for deterministic output; not a field order.
  std::strong_ordering operator<=>(const Constant& o) const;

  std::string to_string() const;

 private:
  void canonicalize();

  const Field* field_;
  std::vector<Rational> q_;
  std::vector<std::uint64_t> m_;
};

/// Image of c under the canonical embedding ℚ(ζ_M) → ℚ(ζ_M') (ζ_M ↦ ζ_M'^{M'/M});
/// target must contain a primitive M-th root of unity. Identity on equal fields.
Constant embed(const Constant& c, const Field& target);

/// Exact multiplicative order of a nonzero constant if it is a root of unity.
std::optional<std::uint64_t> torsion_order(const Constant& c);
bool is_root_of_unity(const Constant& c);

struct RootOfUnity {
  std::uint64_t order = 1;
  Constant value;
  bool primitive(std::uint64_t a) const { return order == a; }

  /// Validates value^order = 1 with order minimal.
  static RootOfUnity make(const Constant& value, std::uint64_t declared_order);
};

/// All a-th roots of unity of F, sorted by (order, value). Throws
/// FieldTooSmall unless F contains a primitive a-th root of unity.
std::vector<RootOfUnity> roots_of_unity(std::uint64_t a, const Field& field);

}  // namespace skolemff
