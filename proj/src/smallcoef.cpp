#include "skolemff/smallcoef.hpp"

#include <set>

namespace skolemff {

namespace {

void check_rho(const Rational& rho) {
  if (rho <= 0 || rho >= 1) throw Error(ErrorKind::InvalidArgument, "rho must lie strictly between 0 and 1");
}

// Largest t with q^t | x.
long ord(Integer x, std::uint64_t q) {
  long t = 0;
  if (x == 0) return 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), q)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), q);
    ++t;
  }
  return t;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [q, k] : factor_u64(n)) out.push_back(q);
  return out;
}

Integer ipow(std::uint64_t q, long t) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(t));
  return r;
}

}  // namespace

Rational gamma_bound(const Rational& rho, long genus, long s_degree) {
  check_rho(rho);
  Rational g = (2 - rho) / (1 - rho) * Rational(2 * genus + s_degree);
  g.canonicalize();
  return g;
}

Rational gamma_bound(const PowerSumInstance& inst, const Rational& rho) {
  return gamma_bound(rho, inst.genus(), inst.s().degree_sum());
}

bool growth_check(const PowerSumInstance& inst, const Rational& rho) {
  check_rho(rho);
  long sum = 0;
  for (const auto& l : inst.lambdas()) sum += height(l);
  return Rational(sum) <= rho * height(inst.f()) / deg_ins(inst.f());
}

std::uint64_t min_e(const std::vector<std::uint64_t>& orders, const Rational& gamma, std::uint64_t characteristic) {
  std::uint64_t l = 1;
  for (auto o : orders) l = lcm_u64(l, o);
  if (characteristic && l % characteristic == 0)
    throw Error(ErrorKind::InvalidArgument, "root of unity order divisible by the characteristic");
  // Smallest multiple of l exceeding Γ.
  Integer q = gamma.get_num() / gamma.get_den();
  std::uint64_t e = l * (q.get_ui() / l + 1);
  while (Rational(Integer(std::to_string(e))) <= gamma) e += l;
  while (characteristic && e % characteristic == 0) e += l;
  return e;
}

std::uint64_t min_e(const PowerSumInstance& inst, const Rational& rho) {
  std::vector<std::uint64_t> orders;
  for (const auto& eps : inst.epsilons()) orders.push_back(eps.order);
  return min_e(orders, gamma_bound(inst, rho), inst.field().characteristic());
}

bool is_admissible_a(const Integer& a, std::uint64_t e, long spread, const Rational& gamma) {
  if (a <= 0 || a % Integer(std::to_string(e)) != 0) return false;
  const Rational bound = Rational(spread) + gamma;
  for (auto q : prime_divisors(e)) {
    const long t = 1 + ord(a, q) - ord(Integer(std::to_string(e)), q);
    if (Rational(ipow(q, t)) <= bound) return false;
  }
  return true;
}

Integer admissible_a(std::uint64_t e, long spread, const Rational& gamma) {
  const Rational bound = Rational(spread) + gamma;
  Integer a = 1;
  for (auto q : prime_divisors(e)) {
    const long oe = ord(Integer(std::to_string(e)), q);
    long t = oe;
    while (Rational(ipow(q, 1 + t - oe)) <= bound) ++t;
    a *= ipow(q, t);
  }
  if (!is_admissible_a(a, e, spread, gamma)) throw std::logic_error("admissible_a produced an inadmissible value");
  return a;
}

Conclusion conclude_from_witness(const PowerSumInstance& inst, long k, std::uint64_t e) {
  Conclusion c;
  c.e_divides_k = k % static_cast<long>(e) == 0;
  if (c.e_divides_k) {
    RationalFunction sum(inst.field());
    for (const auto& l : inst.lambdas()) sum += l;
    c.verified = sum.is_zero();
  } else {
    c.verified = companion_poly(inst, k).is_zero();
    std::set<long> distinct(inst.r().begin(), inst.r().end());
    c.impossible_branch = distinct.size() == inst.r().size();
  }
  return c;
}

SmallCoefReport smallcoef_end_to_end(const PowerSumInstance& inst, const Rational& rho, long k_bound) {
  SmallCoefReport rep;
  rep.rho = rho;
  rep.gamma = gamma_bound(inst, rho);
  rep.k_bound = k_bound;
  long sum = 0;
  for (const auto& l : inst.lambdas()) sum += height(l);
  rep.growth_lhs = Rational(sum);
  rep.growth_rhs = rho * height(inst.f()) / deg_ins(inst.f());
  rep.growth_rhs.canonicalize();
  rep.growth_ok = rep.growth_lhs <= rep.growth_rhs;
  if (!rep.growth_ok) return rep;
  rep.e = min_e(inst, rho);
  rep.a = admissible_a(rep.e, inst.spread(), rep.gamma);
  if (rep.a > Integer("18446744073709551615")) throw Error(ErrorKind::FactorizationTooHard, "a exceeds 64 bits");
  rep.witness = find_local_witness(inst, std::stoull(rep.a.get_str()), k_bound);
  if (rep.witness) {
    rep.conclusion = conclude_from_witness(inst, *rep.witness, rep.e);
    rep.consistent = rep.conclusion->verified;
    rep.theorem_violation = !rep.conclusion->verified;
  }
  return rep;
}

}  // namespace skolemff
