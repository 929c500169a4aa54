#include <doctest.h>

#include <random>

#include "skolemff/factor.hpp"
#include "skolemff/polynomial.hpp"

using namespace skolemff;

namespace {

Polynomial random_poly(const Field& F, long deg, std::mt19937_64& rng) {
  std::vector<Constant> c;
  for (long i = 0; i <= deg; ++i) {
    if (F.char_zero()) {
      std::vector<Rational> q;
      for (std::size_t j = 0; j < F.dimension(); ++j) q.emplace_back(static_cast<long>(rng() % 7) - 3);
      c.push_back(Constant::from_coordinates(F, q));
    } else {
      c.push_back(F.from_int(static_cast<long>(rng() % F.characteristic())));
    }
  }
  if (c.back().is_zero()) c.back() = F.one();
  return Polynomial(F, c);
}

Polynomial product(const Factorization& f) {
  Polynomial p = Polynomial::constant(f.unit);
  for (const auto& [g, m] : f.factors) p *= g.pow(static_cast<std::uint64_t>(m));
  return p;
}

}  // namespace

TEST_CASE("division and gcd identities") {
  std::mt19937_64 rng(7);
  for (auto spec : {FieldSpec::rationals(), FieldSpec::cyclotomic(3), FieldSpec::finite(5), FieldSpec::finite(2, 2)}) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 20; ++it) {
      Polynomial a = random_poly(F, 1 + rng() % 6, rng), b = random_poly(F, 1 + rng() % 4, rng);
      auto [q, r] = a.divrem(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      auto e = xgcd(a, b);
      CHECK(e.s * a + e.t * b == e.g);
      CHECK(divides(e.g, a));
      CHECK(divides(e.g, b));
    }
  }
}

TEST_CASE("squarefree decomposition reassembles the input") {
  std::mt19937_64 rng(11);
  for (auto spec : {FieldSpec::rationals(), FieldSpec::finite(3), FieldSpec::finite(2)}) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 15; ++it) {
      Polynomial a = random_poly(F, 1 + rng() % 3, rng);
      Polynomial b = random_poly(F, 1 + rng() % 2, rng);
      Polynomial x = a * b.pow(2) * a.pow(F.char_zero() ? 2 : F.characteristic());
      Polynomial rebuilt = Polynomial::constant(x.lc());
      for (const auto& [g, m] : squarefree_decomposition(x)) rebuilt *= g.pow(static_cast<std::uint64_t>(m));
      CHECK(rebuilt == x);
    }
  }
}

TEST_CASE("factorization reassembles and factors are irreducible") {
  std::mt19937_64 rng(13);
  for (auto spec : {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::cyclotomic(3), FieldSpec::finite(7),
                    FieldSpec::finite(2), FieldSpec::finite(3, 2)}) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 12; ++it) {
      CAPTURE(F.describe());
      Polynomial a = random_poly(F, 1 + rng() % 3, rng) * random_poly(F, 1 + rng() % 3, rng);
      Factorization f = factor(a);
      CHECK(product(f) == a);
      for (const auto& [g, m] : f.factors) {
        CHECK(g.is_monic());
        // No root in F for factors of degree > 1 (a necessary condition).
        if (g.degree() > 1 && !F.char_zero() && F.size() < 50) {
          for (std::uint64_t v = 0; v < F.size().get_ui(); ++v) {
            std::vector<std::uint64_t> coords;
            std::uint64_t w = v;
            for (std::size_t j = 0; j < F.dimension(); ++j) {
              coords.push_back(w % F.characteristic());
              w /= F.characteristic();
            }
            CHECK_FALSE(g.eval(Constant::from_coordinates(F, coords)).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("cyclotomic polynomials split over the matching field") {
  const Field& Q = Field::get(FieldSpec::rationals());
  for (std::uint64_t k : {5u, 12u, 15u, 30u}) CHECK(is_irreducible(Polynomial::from_ints(Q, cyclotomic_poly(k))));
  const Field& K = Field::get(FieldSpec::cyclotomic(4));
  CHECK(factor(Polynomial::from_ints(K, {1, 0, 1})).factors.size() == 2);
  CHECK(factor(Polynomial::from_ints(K, cyclotomic_poly(8))).factors.size() == 2);
  CHECK(roots_in_field(Polynomial::from_ints(K, {-1, 0, 0, 0, 1})).size() == 4);
  const Field& K3 = Field::get(FieldSpec::cyclotomic(3));
  CHECK(roots_in_field(Polynomial::from_ints(K3, {-1, 0, 0, 0, 0, 0, 1})).size() == 6);
  // x^4 + 1 is reducible mod every prime.
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const Field& F = Field::get(FieldSpec::finite(p));
    CHECK_FALSE(is_irreducible(Polynomial::from_ints(F, {1, 0, 0, 0, 1})));
  }
}

TEST_CASE("Swinnerton-Dyer style product needs recombination") {
  // (x^2-2)(x^2-3)(x^4-10x^2+1): the last factor splits mod every prime.
  const Field& Q = Field::get(FieldSpec::rationals());
  Polynomial a = Polynomial::from_ints(Q, {-2, 0, 1}) * Polynomial::from_ints(Q, {-3, 0, 1}) *
                 Polynomial::from_ints(Q, {1, 0, -10, 0, 1});
  auto f = factor(a);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[2].first == Polynomial::from_ints(Q, {1, 0, -10, 0, 1}));
}

TEST_CASE("homogenize") {
  const Field& Q = Field::get(FieldSpec::rationals());
  Polynomial u = Polynomial::from_ints(Q, {0, 1}), v = Polynomial::from_ints(Q, {1});
  CHECK(homogenize(cyclotomic_poly(3), u, v) == Polynomial::from_ints(Q, {1, 1, 1}));
}

TEST_CASE("property: large products and gcds in characteristic 0") {
  std::mt19937_64 rng(606);
  for (auto spec : {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::cyclotomic(5)}) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 8; ++it) {
      Polynomial a = random_poly(F, 12 + rng() % 40, rng), b = random_poly(F, 12 + rng() % 40, rng);
      a *= F.from_rational(Rational(1, 3 + static_cast<long>(rng() % 5)));
      Polynomial ab = a * b;
      CHECK(ab.degree() == a.degree() + b.degree());
      for (long x : {-2, 1, 3}) CHECK(ab.eval(F.from_int(x)) == a.eval(F.from_int(x)) * b.eval(F.from_int(x)));
      auto [q, r] = ab.divrem(a);
      CHECK(r.is_zero());
      CHECK(q == b);

      Polynomial g = random_poly(F, 1 + rng() % 5, rng);
      Polynomial h1 = random_poly(F, 6 + rng() % 8, rng), h2 = random_poly(F, 6 + rng() % 8, rng);
      Polynomial d = gcd(g * h1, g * h2);
      CHECK(divides(g, d));
      CHECK(divides(d, g * h1));
      CHECK(divides(d, g * h2));
      CHECK(d.is_monic());
      CHECK(gcd(g * h1, h1 * h2 + Polynomial::constant(F.one())).degree() <= g.degree());
    }
  }
}
