#include <doctest.h>

#include "skolemff/random.hpp"
#include "skolemff/smallcoef.hpp"

using namespace skolemff;

namespace {

const Field& Q() { return Field::get(FieldSpec::rationals()); }

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}, const Field& F = Q()) {
  return RationalFunction(Polynomial::from_ints(F, num), Polynomial::from_ints(F, den));
}

RationalFunction k(long c, const Field& F = Q()) { return RationalFunction::constant(F.from_int(c)); }

RootOfUnity one(const Field& F = Q()) { return {1, F.one()}; }
RootOfUnity minus_one(const Field& F = Q()) { return RootOfUnity::make(F.from_int(-1), 2); }

PlaceSet s_t(const Field& F = Q()) { return {Place::finite(Polynomial::from_ints(F, {0, 1})), Place::infinity()}; }

PowerSumInstance example1() {
  return PowerSumInstance({k(1), k(1), k(1), k(1)}, {one(), one(), minus_one(), minus_one()}, {4, 3, 2, 1}, rf({0, 1}),
                          s_t());
}

// Direct scans of the defining conditions.
std::uint64_t min_e_oracle(std::uint64_t l, double gamma, std::uint64_t p) {
  for (std::uint64_t e = 1;; ++e)
    if (static_cast<double>(e) > gamma && e % l == 0 && (p == 0 || e % p != 0)) return e;
}

long ord_oracle(long x, long q) {
  long t = 0;
  while (x % q == 0) x /= q, ++t;
  return t;
}

long admissible_oracle(long e, long n, double gamma) {
  for (long a = e;; a += e) {
    bool ok = true;
    for (long q = 2; q <= e; ++q) {
      bool prime = true;
      for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
      if (!prime || e % q) continue;
      double v = 1;
      for (long i = 0; i < 1 + ord_oracle(a, q) - ord_oracle(e, q); ++i) v *= static_cast<double>(q);
      if (v <= n + gamma) ok = false;
    }
    if (ok) return a;
  }
}

}  // namespace

TEST_CASE("gamma, e and a: the formula table") {
  const Rational half(1, 2);
  CHECK(gamma_bound(half, 0, 2) == 6);
  CHECK(gamma_bound(Rational(1, 10), 0, 2) == Rational(38, 9));
  CHECK_THROWS_AS(gamma_bound(Rational(1), 0, 2), Error);

  CHECK(min_e({1, 1}, Rational(6), 0) == 7);
  CHECK(min_e({1, 2}, Rational(6), 0) == 8);
  CHECK(min_e({1}, Rational(6), 3) == 7);
  CHECK(min_e({1, 2}, Rational(38, 9), 0) == 6);

  CHECK(admissible_a(7, 3, Rational(6)) == 49);
  CHECK(admissible_a(8, 3, Rational(6)) == 64);
  CHECK(admissible_a(6, 0, Rational(4)) == 72);
  CHECK(is_admissible_a(Integer(98), 7, 3, Rational(6)));
  CHECK_FALSE(is_admissible_a(Integer(7), 7, 3, Rational(6)));
  CHECK_FALSE(is_admissible_a(Integer(50), 7, 3, Rational(6)));
}

TEST_CASE("property: e and a match direct scans") {
  Rng rng(17);
  for (int it = 0; it < 300; ++it) {
    const Rational rho(uniform(rng, 1, 9), 10);
    const long g = uniform(rng, 0, 1), s = uniform(rng, 2, 5), n = uniform(rng, 0, 5);
    const Rational gamma = gamma_bound(rho, g, s);
    std::vector<std::uint64_t> orders{static_cast<std::uint64_t>(uniform(rng, 1, 6)), static_cast<std::uint64_t>(uniform(rng, 1, 4))};
    const std::uint64_t l = lcm_u64(orders[0], orders[1]);
    std::uint64_t p = std::vector<std::uint64_t>{0, 5, 7}[static_cast<std::size_t>(uniform(rng, 0, 2))];
    if (p && l % p == 0) p = 0;
    const std::uint64_t e = min_e(orders, gamma, p);
    CHECK(e == min_e_oracle(l, gamma.get_d(), p));
    CHECK(Rational(static_cast<long>(e)) > gamma);
    CHECK(e % l == 0);
    const Integer a = admissible_a(e, n, gamma);
    CHECK(is_admissible_a(a, e, n, gamma));
    CHECK(a == admissible_oracle(static_cast<long>(e), n, gamma.get_d()));
  }
}

TEST_CASE("growth condition") {
  CHECK(growth_check(example1(), Rational(1, 100)));
  PowerSumInstance two({rf({0, 1}), rf({1}, {0, 1})}, {one(), one()}, {1, 0}, rf({0, 0, 0, 0, 0, 1}), s_t());
  CHECK(growth_check(two, Rational(1, 2)));
  PowerSumInstance sq({rf({0, 0, 1})}, {one()}, {1}, rf({0, 0, 0, 1}), s_t());
  CHECK_FALSE(growth_check(sq, Rational(1, 2)));
  PowerSumInstance ex2({rf({0, 1}), rf({-1}, {0, 1})}, {one(), one()}, {2, 1}, rf({0, 0, 1}), s_t());
  for (long n = 1; n < 100; n += 7) CHECK_FALSE(growth_check(ex2, Rational(n, 100)));
  CHECK_FALSE(smallcoef_end_to_end(ex2, Rational(99, 100), 10).growth_ok);
  // Inseparable degree divides the right-hand side.
  const Field& F3 = Field::get(FieldSpec::finite(3));
  PowerSumInstance cp({rf({0, 1}, {1}, F3)}, {one(F3)}, {1}, rf({0, 0, 0, 1}, {1}, F3), s_t(F3));
  CHECK_FALSE(growth_check(cp, Rational(1, 2)));
  CHECK_THROWS_AS(growth_check(cp, Rational(1)), Error);
}

TEST_CASE("conclusions") {
  PowerSumInstance zero({k(1), k(-1)}, {one(), one()}, {1, 1}, rf({0, 1}), s_t());
  Conclusion c = conclude_from_witness(zero, 0, 7);
  CHECK(c.e_divides_k);
  CHECK(c.verified);
  // t·X² + t·(−1)^k·X² vanishes for odd k.
  PowerSumInstance alt({rf({0, 1}), rf({0, 1})}, {one(), minus_one()}, {2, 2}, rf({0, 1}), s_t());
  c = conclude_from_witness(alt, 3, 2);
  CHECK_FALSE(c.e_divides_k);
  CHECK(c.verified);
  CHECK_FALSE(c.impossible_branch);
  c = conclude_from_witness(example1(), 1, 6);
  CHECK_FALSE(c.verified);
  CHECK(c.impossible_branch);

  SmallCoefReport rep = smallcoef_end_to_end(example1(), Rational(1, 10), 200);
  CHECK(rep.growth_ok);
  CHECK(rep.gamma == Rational(38, 9));
  CHECK(rep.e == 6);
  CHECK(rep.a == 72);
  CHECK_FALSE(rep.witness);
  CHECK(rep.consistent);

  rep = smallcoef_end_to_end(zero, Rational(1, 2), 10);
  REQUIRE(rep.witness);
  CHECK(*rep.witness == 0);
  CHECK(rep.conclusion->e_divides_k);
  CHECK(rep.conclusion->verified);
}

TEST_CASE("property: constant-coefficient witnesses always verify") {
  Rng rng(99);
  int witnesses = 0;
  for (int it = 0; it < 40; ++it) {
    const Field& F = Field::get(it % 4 == 3 ? FieldSpec::finite(5) : FieldSpec::rationals());
    const long m = uniform(rng, 1, 3);
    std::vector<RationalFunction> lambdas;
    std::vector<RootOfUnity> eps;
    std::vector<long> r;
    for (long i = 0; i < m; ++i) {
      lambdas.push_back(k(uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1), F));
      eps.push_back(uniform(rng, 0, 1) ? one(F) : minus_one(F));
      r.push_back(uniform(rng, 0, 2));
    }
    if (it % 5 == 0) {
      // Cancelling pair: B vanishes on a residue class.
      lambdas.push_back(-lambdas[0]);
      eps.push_back(eps[0].order == 1 ? minus_one(F) : one(F));
      r.push_back(r[0]);
    }
    PowerSumInstance inst(lambdas, eps, r, rf({0, 1}, {1}, F), s_t(F));
    SmallCoefReport rep = smallcoef_end_to_end(inst, Rational(1, 2), 12);
    CHECK(rep.growth_ok);
    CHECK_FALSE(rep.theorem_violation);
    if (rep.witness) ++witnesses;
  }
  CHECK(witnesses > 3);
}
