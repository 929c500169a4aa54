#pragma once

// Integer utilities shared by every module: GMP aliases, factorization of
// machine-size integers, cyclotomic polynomials and Euler's totient.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skolemff {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, little-endian, no trailing zeros (zero = empty).
using IntPoly = std::vector<Integer>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division plus Pollard rho on the cofactor.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
int moebius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Largest k with p^k | n (n != 0).
int ord_p(std::uint64_t n, std::uint64_t p);

/// Φ_k computed by iterated exact division of x^k − 1 by Φ_d, d | k, d < k.
IntPoly cyclotomic_poly(std::uint64_t k);

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b);
/// Exact division; throws std::logic_error if b does not divide a over Z.
IntPoly intpoly_exact_div(const IntPoly& a, const IntPoly& b);
void intpoly_trim(IntPoly& a);
std::string intpoly_to_string(const IntPoly& a);

/// "a/b" with "b" omitted when 1.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);
Integer integer_from_string(const std::string& s);

}  // namespace skolemff
