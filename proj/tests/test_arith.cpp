#include <doctest.h>

#include <numeric>

#include "skolemff/arith.hpp"
#include "skolemff/error.hpp"

using namespace skolemff;

namespace {

// Φ_k by dividing x^k − 1 by every Φ_d with d | k, d < k.
IntPoly cyclotomic_by_division(std::uint64_t k) {
  IntPoly num(k + 1, 0);
  num[0] = -1;
  num[k] = 1;
  for (std::uint64_t d = 1; d < k; ++d)
    if (k % d == 0) num = intpoly_exact_div(num, cyclotomic_by_division(d));
  return num;
}

std::uint64_t phi_brute(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++c;
  return c;
}

bool prime_brute(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("cyclotomic polynomials agree with iterated division") {
  for (std::uint64_t k = 1; k <= 60; ++k) {
    CAPTURE(k);
    IntPoly a = cyclotomic_poly(k);
    CHECK(a == cyclotomic_by_division(k));
    CHECK(a.size() == phi_brute(k) + 1);
  }
  CHECK(intpoly_to_string(cyclotomic_poly(6)) == "x^2 - x + 1");
}

TEST_CASE("Phi_105 has a coefficient -2") {
  IntPoly a = cyclotomic_poly(105);
  bool seen = false;
  for (const auto& c : a) seen = seen || c == -2;
  CHECK(seen);
}

TEST_CASE("totient, moebius and primality against brute force") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    CAPTURE(n);
    CHECK(euler_phi(n) == phi_brute(n));
    CHECK(is_prime(n) == prime_brute(n));
    int mu = 1;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) mu = 0;
        else mu = -mu;
        while (m % p == 0) m /= p;
      }
    CHECK(moebius(n) == mu);
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d) count += (n % d == 0);
    CHECK(divisors(n).size() == count);
  }
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));
  auto f = factor_u64(600851475143ULL);
  REQUIRE(f.size() == 4);
  CHECK(f.back().first == 6857);
}

TEST_CASE("rational strings round trip") {
  CHECK(rational_to_string(Rational(-6, 4)) == "-3/2");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(rational_from_string("10/-4") == Rational(-5, 2));
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(integer_from_string("abc"), Error);
}

TEST_CASE("property: x^n - 1 is the product of Phi_d over d | n") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    IntPoly prod{1};
    for (std::uint64_t d : divisors(n)) prod = intpoly_mul(prod, cyclotomic_poly(d));
    IntPoly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("property: totients over the divisors of n sum to n") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t s = 0;
    for (std::uint64_t d : divisors(n)) s += euler_phi(d);
    if (s != n) CHECK(s == n);
  }
}
