#include <doctest.h>

#include <set>

#include "skolemff/factor.hpp"
#include "skolemff/funfield.hpp"
#include "skolemff/random.hpp"

using namespace skolemff;

namespace {

const Field& Q() { return Field::get(FieldSpec::rationals()); }

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}, const Field& F = Q()) {
  return RationalFunction(Polynomial::from_ints(F, num), Polynomial::from_ints(F, den));
}

Place fin(std::initializer_list<long> p, const Field& F = Q()) { return Place::finite(Polynomial::from_ints(F, p)); }

// Oracle: height of [x_0 : ... : x_n] as a degree-weighted sum over every
// place in the union of the divisor supports.
long height_by_places(const std::vector<RationalFunction>& x) {
  std::set<Place> support{Place::infinity()};
  for (const auto& xi : x)
    if (!xi.is_zero())
      for (const auto& [p, v] : divisor(xi)) support.insert(p);
  long h = 0;
  for (const auto& p : support) {
    long m = kInfiniteValuation;
    for (const auto& xi : x) m = std::min(m, valuation(xi, p));
    h += p.degree() * -m;
  }
  return h;
}

long zeros_outside(const RationalFunction& b, const PlaceSet& s, bool truncate) {
  long n = 0;
  for (const auto& [p, v] : divisor(b))
    if (v > 0 && !s.contains(p)) n += p.degree() * (truncate ? 1 : v);
  return n;
}

std::vector<FieldSpec> test_fields() {
  return {FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::finite(3), FieldSpec::finite(5),
          FieldSpec::finite(2, 2)};
}

}  // namespace

TEST_CASE("valuations and divisors") {
  RationalFunction f = rf({0, 0, 0, 1}, {-2, 1}) * rf({1, 1});
  CHECK(valuation(f, fin({0, 1})) == 3);
  CHECK(valuation(rf({0, 0, 1}, {-1, 1}), Place::infinity()) == -1);
  CHECK(valuation(rf({1}), fin({5, 1})) == 0);
  CHECK(valuation(RationalFunction(Q()), Place::infinity()) == kInfiniteValuation);

  Divisor d = divisor(rf({0, 0, 1}, {-1, 1}));
  CHECK(d.size() == 3);
  CHECK(d[fin({0, 1})] == 2);
  CHECK(d[fin({-1, 1})] == -1);
  CHECK(d[Place::infinity()] == -1);
  CHECK(divisor(rf({7})).empty());
  Divisor d2 = divisor(rf({1, 0, 1}));
  CHECK(d2[fin({1, 0, 1})] == 1);
  CHECK(d2[Place::infinity()] == -2);
  CHECK_THROWS_AS(divisor(RationalFunction(Q())), Error);
}

TEST_CASE("heights") {
  RationalFunction f = rf({0, 0, 1}, {-1, 1});
  CHECK(height(f) == 2);
  CHECK(height(f.inverse()) == 2);
  CHECK(height(rf({5})) == 0);
  CHECK(projective_height({rf({1}), rf({0, 1})}) == 1);
  CHECK(projective_height({rf({0, 1}), rf({0, 1})}) == 0);
  CHECK(projective_height({rf({0, 1}), rf({1, 0, 1}), rf({0, 1})}) == 2);
  CHECK_THROWS_AS(projective_height({RationalFunction(Q())}), Error);

  KPoly a(Q(), {rf({1}), rf({0, 1})});
  CHECK(poly_height(a) == 1);
  KPoly b(Q(), {rf({0, 1}), rf({1})});
  CHECK(poly_height(a * b) == 2);
  CHECK(poly_valuation(a, fin({0, 1})) == 0);
  CHECK(poly_valuation(KPoly(Q(), {rf({0, 0, 0, 1}), rf({}), rf({0, 1})}), fin({0, 1})) == 1);
  CHECK(poly_valuation(KPoly(Q(), {rf({1}), rf({1}, {0, 1})}), fin({0, 1})) == -1);
  CHECK(poly_height(KPoly(Q(), {rf({3}), rf({4})})) == 0);
}

TEST_CASE("counting functions") {
  PlaceSet inf{Place::infinity()};
  CHECK(truncated_counting(rf({-1, 0, 1}), inf) == 2);
  CHECK(truncated_counting(rf({-1, 3, -3, 1}), inf) == 1);
  CHECK(truncated_counting(rf({0, 1}), {fin({0, 1}), Place::infinity()}) == 0);
  CHECK(gcd_counting(rf({-1, 0, 1}), rf({-1, 0, 0, 1}), inf) == 1);
  RationalFunction a = rf({1, -2, 1}), b = rf({-1, 3, -3, 1});
  CHECK(gcd_counting(a, b, inf) == 2);
  CHECK(gcd_counting(a, b, inf, true) == 1);
  CHECK(gcd_counting(rf({1, 1}), rf({2, 1}), inf) == 0);
  CHECK_THROWS_AS(gcd_counting(rf({1}, {1, 1}), rf({1}), inf), Error);
}

TEST_CASE("deg_ins, chi_S, S-integers") {
  const Field& F3 = Field::get(FieldSpec::finite(3));
  CHECK(deg_ins(rf({0, 0, 0, 1}, {1}, F3)) == 3);
  CHECK(deg_ins(rf({0, 1, 0, 1}, {1}, F3)) == 1);
  CHECK(deg_ins(rf({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 1}, F3)) == 3);
  CHECK(deg_ins(rf({0, 1, 1})) == 1);
  CHECK_THROWS_AS(deg_ins(rf({2})), Error);

  CHECK(chi_s({Place::infinity()}) == -1);
  CHECK(chi_s({fin({0, 1}), Place::infinity()}) == 0);
  CHECK(chi_s({fin({0, 1}), fin({-1, 1}), Place::infinity()}) == 1);

  PlaceSet s{fin({0, 1}), Place::infinity()};
  CHECK(is_s_integer(rf({1}, {0, 1}), s));
  CHECK(is_s_unit(rf({1}, {0, 1}), s));
  CHECK(is_s_integer(rf({-1, 1}), s));
  CHECK_FALSE(is_s_unit(rf({-1, 1}), s));
  CHECK_FALSE(is_s_integer(rf({1}, {-1, 1}), s));
}

TEST_CASE("property: principal divisors have degree zero; height identities") {
  Rng rng(20240601);
  for (auto spec : test_fields()) {
    const Field& F = Field::get(spec);
    CAPTURE(F.describe());
    for (int it = 0; it < 30; ++it) {
      RationalFunction f = random_ratfunc(F, 4, rng);
      long deg = 0;
      for (const auto& [p, v] : divisor(f)) deg += p.degree() * v;
      CHECK(deg == 0);
      CHECK(height(f) == height_by_places({RationalFunction::constant(F.one()), f}));
      CHECK(height(f) == height(f.inverse()));
      std::vector<RationalFunction> x{random_ratfunc(F, 3, rng), random_ratfunc(F, 3, rng), RationalFunction(F)};
      CHECK(projective_height(x) == height_by_places(x));
      RationalFunction c = random_ratfunc(F, 2, rng);
      CHECK(projective_height({x[0] * c, x[1] * c}) == projective_height({x[0], x[1]}));
    }
  }
}

TEST_CASE("property: Gauss lemma and h(AB) = h(A) + h(B)") {
  Rng rng(99);
  for (auto spec : test_fields()) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 15; ++it) {
      auto rand_kpoly = [&](long deg) {
        std::vector<RationalFunction> c;
        for (long i = 0; i <= deg; ++i) c.push_back(random_ratfunc(F, 2, rng));
        return KPoly(F, c);
      };
      KPoly a = rand_kpoly(uniform(rng, 0, 2)), b = rand_kpoly(uniform(rng, 0, 2));
      KPoly ab = a * b;
      CHECK(poly_height(ab) == poly_height(a) + poly_height(b));
      std::set<Place> support{Place::infinity()};
      for (const auto* k : {&a, &b})
        for (const auto& c : k->coeffs())
          if (!c.is_zero())
            for (const auto& [p, v] : divisor(c)) support.insert(p);
      for (const auto& p : support) CHECK(poly_valuation(ab, p) == poly_valuation(a, p) + poly_valuation(b, p));

      // A = ∏(X − β_i): h(A) = Σ h(β_i).
      KPoly prod(F, {RationalFunction::constant(F.one())});
      long hs = 0;
      for (int i = 0; i < 3; ++i) {
        RationalFunction beta = random_ratfunc(F, 2, rng);
        hs += height(beta);
        prod = prod * KPoly(F, {-beta, RationalFunction::constant(F.one())});
      }
      CHECK(poly_height(prod) == hs);
    }
  }
}

TEST_CASE("property: counting bounds and deg_ins divides the divisor") {
  Rng rng(5);
  for (auto spec : test_fields()) {
    const Field& F = Field::get(spec);
    for (int it = 0; it < 20; ++it) {
      PlaceSet s = random_place_set(F, uniform(rng, 0, 2), rng);
      RationalFunction b = random_ratfunc(F, 4, rng);
      CHECK(truncated_counting(b, s) == zeros_outside(b, s, true));
      CHECK(truncated_counting(b, s) <= height(b));
      RationalFunction f(random_poly(F, uniform(rng, 0, 4), rng)), g(random_poly(F, uniform(rng, 0, 4), rng));
      RationalFunction common(random_poly(F, 1, rng));
      f *= common;
      g *= common;
      long n = gcd_counting(f, g, s);
      long oracle = 0;
      Divisor df = divisor(f), dg = divisor(g);
      for (const auto& [p, v] : df)
        if (v > 0 && !s.contains(p) && dg.count(p) && dg[p] > 0) oracle += p.degree() * std::min(v, dg[p]);
      CHECK(n == oracle);
      CHECK(n <= std::min(zeros_outside(f, s, false), zeros_outside(g, s, false)));
      CHECK(gcd_counting(f, g, s, true) <= n);
    }
    if (!F.char_zero()) {
      for (int it = 0; it < 20; ++it) {
        RationalFunction f = random_nonconstant(F, 3, rng);
        long e = static_cast<long>(F.characteristic());
        f = f.pow(uniform(rng, 0, 1) ? e : 1) * (uniform(rng, 0, 1) ? f.pow(e) : RationalFunction::constant(F.one()));
        if (f.is_constant()) continue;
        long d = deg_ins(f);
        for (const auto& [p, v] : divisor(f)) CHECK(v % d == 0);
      }
    }
  }
}
