#include <doctest.h>

#include "skolemff/multstruct.hpp"
#include "skolemff/random.hpp"
#include "skolemff/vd_theorems.hpp"

using namespace skolemff;

namespace {

const Field& Q() { return Field::get(FieldSpec::rationals()); }

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}, const Field& F = Q()) {
  return RationalFunction(Polynomial::from_ints(F, num), Polynomial::from_ints(F, den));
}

Place fin(std::initializer_list<long> p, const Field& F = Q()) { return Place::finite(Polynomial::from_ints(F, p)); }

std::vector<Constant> ints(const Field& F, std::initializer_list<long> v) {
  std::vector<Constant> out;
  for (long x : v) out.push_back(F.from_int(x));
  return out;
}

}  // namespace

TEST_CASE("independence") {
  CHECK(is_mult_independent(rf({0, 1}), rf({-1, 1})));
  CHECK_FALSE(is_mult_independent(rf({0, 0, 1}), rf({0, 0, 0, 1})));
  CHECK(is_mult_independent(rf({0, 2}), rf({0, 3})));
  CHECK_FALSE(is_mult_independent(rf({0, 2}), rf({0, -2})));
  CHECK_FALSE(is_mult_independent(rf({-1}), rf({0, 1})));
  CHECK(is_mult_independent(rf({2}), rf({0, 1})));
  CHECK_THROWS_AS(is_mult_independent(rf({2}), rf({3})), Error);
  auto rel = divisor_relation(rf({0, 0, 1}), rf({0, 0, 0, 1}));
  REQUIRE(rel);
  CHECK(rel->m == 3);
  CHECK(rel->n == -2);
  CHECK(rel->c == Q().one());
  // Every nonzero constant is torsion in characteristic p.
  const Field& F5 = Field::get(FieldSpec::finite(5));
  CHECK_FALSE(is_mult_independent(rf({0, 2}, {1}, F5), rf({0, 3}, {1}, F5)));
}

TEST_CASE("dependence exponents and powers") {
  auto w = dependence_exponents(rf({0, 0, 0, -1}), rf({0, 0, 1}));
  REQUIRE(w);
  CHECK(w->q == 2);
  CHECK(w->r == 3);
  CHECK(w->torsion.order == 1);
  w = dependence_exponents(rf({0, 1}), rf({0, 0, 1}));
  REQUIRE(w);
  CHECK(w->q == 2);
  CHECK(w->r == 1);
  CHECK_FALSE(dependence_exponents(rf({-1, 1}), rf({0, 1})));
  w = dependence_exponents(rf({0, -1}), rf({0, 1}));
  REQUIRE(w);
  CHECK(w->q == 1);
  CHECK(w->r == 1);
  CHECK(w->torsion.order == 2);
  CHECK(w->exact_q() == 2);
  CHECK_THROWS_AS(dependence_exponents(rf({0, 1}), rf({2})), Error);

  CHECK(is_power_of(rf({0, 0, 0, 0, 0, 0, 1}), rf({0, 0, 1})) == 3);
  CHECK_FALSE(is_power_of(rf({0, 0, 0, 1}), rf({0, 0, 1})));
  CHECK_FALSE(is_power_of(rf({-1}), rf({0, 1})));
  CHECK(is_power_of(rf({1}), rf({0, 1})) == 0);
}

TEST_CASE("property: relations re-evaluate exactly") {
  Rng rng(77);
  for (auto spec : {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::finite(7)}) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 25; ++it) {
      RationalFunction f = random_nonconstant(F, 2, rng);
      long n = uniform(rng, -30, 30);
      CHECK(is_power_of(f.pow(n), f) == n);
      auto w = dependence_exponents(f.pow(n), f);
      REQUIRE(w);
      CHECK(w->q == 1);
      CHECK(w->r == n);
      CHECK(w->torsion.order == 1);

      auto roots = roots_of_unity(F.char_zero() ? 2 : 6, F);
      const Constant& eps = roots.back().value;
      long q = uniform(rng, 1, 4), r = uniform(rng, -4, 4);
      RationalFunction g = random_nonconstant(F, 2, rng);
      RationalFunction beta = g.pow(r) * RationalFunction::constant(eps);
      RationalFunction base = g.pow(q);
      auto d = dependence_exponents(beta, base);
      REQUIRE(d);
      CHECK(beta.pow(d->q) == RationalFunction::constant(d->torsion.value) * base.pow(d->r));
      CHECK(beta.pow(d->exact_q()) == base.pow(d->exact_r()));
      CHECK(d->q <= q);

      RationalFunction a = random_nonconstant(F, 2, rng), b = random_nonconstant(F, 2, rng);
      if (auto rel = divisor_relation(a, b)) CHECK(a.pow(rel->m) * b.pow(rel->n) == RationalFunction::constant(rel->c));
    }
  }
}

TEST_CASE("SMT examples") {
  PlaceSet inf{Place::infinity()};
  auto r = verify_smt(rf({0, 1}), inf, ints(Q(), {0, 1, -1}));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 2);
  CHECK(r.holds);
  r = verify_smt(rf({0, 1}), inf, ints(Q(), {0}));
  CHECK(r.lhs == -1);
  CHECK(r.rhs == 0);
  const Field& F3 = Field::get(FieldSpec::finite(3));
  r = verify_smt(rf({0, 0, 0, 1}, {1}, F3), inf, ints(F3, {0, 1, 2}));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 2);
  CHECK(r.holds);
  CHECK_THROWS_AS(verify_smt(rf({4}), inf, {}), Error);
  CHECK_THROWS_AS(verify_smt(rf({0, 1}), inf, ints(Q(), {1, 1})), Error);
}

TEST_CASE("S-unit count examples") {
  PlaceSet s{fin({0, 1}), fin({-1, 1}), Place::infinity()};
  auto r = verify_sunit_count(rf({0, 0, -1, 1}), s, ints(Q(), {0, 1, -1, 2}));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 3);
  CHECK(r.holds);
  PlaceSet s2{fin({0, 1}), Place::infinity()};
  r = verify_sunit_count(rf({0, 1}), s2, ints(Q(), {0, 1, 2, 3, -1}));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 2);
  r = verify_sunit_count(rf({0, -1, 1}), s, ints(Q(), {0}));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 3);
  CHECK_THROWS_AS(verify_sunit_count(rf({1}, {-2, 1}), s, ints(Q(), {0})), Error);

  const Field& K = Field::get(FieldSpec::cyclotomic(4));
  auto rr = verify_sunit_roots(rf({0, 1}, {1}, K), PlaceSet{Place::infinity()}, 4);
  CHECK(rr.lhs == 3);
  CHECK(rr.rhs == 4);
}

TEST_CASE("gcd bound examples") {
  PlaceSet s{fin({0, 1}), fin({-1, 1}), Place::infinity()};
  auto r = verify_cz_gcd(rf({0, 1}), rf({-1, 1}), s);
  CHECK(r.cubed);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 54);
  CHECK(r.holds);
  r = verify_cz_gcd(rf({0, 1}), rf({1, -1}), s);
  CHECK(r.lhs == 0);
  CHECK(r.holds);
  try {
    verify_cz_gcd(rf({0, 0, 1}), rf({0, 0, 0, 1}), s);
    FAIL("expected MultiplicativelyDependent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MultiplicativelyDependent);
  }
  try {
    verify_cz_gcd(rf({0, 1}), rf({-2, 1}), s);
    FAIL("expected NotSUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSUnit);
  }
}
