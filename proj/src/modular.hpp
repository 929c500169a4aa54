#pragma once

// Fast characteristic-0 kernels. Multi-modular gcd over ℚ(ζ_M): images at the M-th roots of unity modulo
// primes p ≡ 1 (mod M), Chinese remaindering, rational reconstruction, then
// an exact trial division.

#include <optional>

#include "skolemff/polynomial.hpp"

namespace skolemff::detail {

/// Monic gcd of nonzero a, b in characteristic 0; nullopt if the prime budget
/// runs out (the caller then falls back to Euclid).
std::optional<Polynomial> modular_gcd(const Polynomial& a, const Polynomial& b);

/// Product in characteristic 0 by Kronecker substitution: coefficients are
/// cleared to integers, packed into one big integer per factor (stride
/// 2·dim − 1 in ζ), multiplied by GMP and unpacked.
Polynomial kronecker_mul(const Polynomial& a, const Polynomial& b);

}  // namespace skolemff::detail
