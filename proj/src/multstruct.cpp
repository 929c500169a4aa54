#include "skolemff/multstruct.hpp"

#include <numeric>

namespace skolemff {

namespace {

void require_nonzero(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroInput, "multiplicative relation with zero");
}

// a^m·b^n as a constant, if it is one.
std::optional<Constant> constant_product(const RationalFunction& a, long m, const RationalFunction& b, long n) {
  RationalFunction x = a.pow(m) * b.pow(n);
  if (!x.is_constant()) return std::nullopt;
  return x.constant_value();
}

}  // namespace

std::optional<Relation> divisor_relation(const RationalFunction& a, const RationalFunction& b) {
  require_nonzero(a, b);
  const long ha = height(a), hb = height(b);
  if (ha == 0 && hb == 0) throw Error(ErrorKind::BothConstant, "relation between two constants");
  if (ha == 0 || hb == 0) {
    Constant c = ha == 0 ? a.constant_value() : b.constant_value();
    return Relation{ha == 0 ? 1 : 0, ha == 0 ? 0 : 1, c, is_root_of_unity(c)};
  }
  const long g = std::gcd(ha, hb);
  for (long sign : {-1L, 1L}) {
    const long m = hb / g, n = sign * ha / g;
    if (auto c = constant_product(a, m, b, n)) return Relation{m, n, *c, is_root_of_unity(*c)};
  }
  return std::nullopt;
}

bool is_mult_independent(const RationalFunction& a, const RationalFunction& b) {
  auto rel = divisor_relation(a, b);
  return !rel || !rel->torsion;
}

std::optional<DependenceWitness> dependence_exponents(const RationalFunction& beta, const RationalFunction& f) {
  require_nonzero(beta, f);
  const long hf = height(f);
  if (hf == 0) throw Error(ErrorKind::ConstantF, "dependence_exponents needs nonconstant f");
  auto rel = divisor_relation(beta, f);
  if (!rel || !rel->torsion) return std::nullopt;
  // rel: β^m·f^n = c, m > 0 whenever β is nonconstant or torsion.
  if (rel->m == 0) return std::nullopt;
  auto order = torsion_order(rel->c);
  return DependenceWitness{rel->m, -rel->n, RootOfUnity{*order, rel->c}};
}

std::optional<long> is_power_of(const RationalFunction& beta, const RationalFunction& f) {
  if (beta.is_zero() || f.is_zero()) throw Error(ErrorKind::ZeroInput, "is_power_of with zero");
  const long hf = height(f), hb = height(beta);
  if (hf == 0) throw Error(ErrorKind::ConstantF, "is_power_of needs nonconstant f");
  if (hb % hf != 0) return std::nullopt;
  const long k = hb / hf;
  for (long n : {k, -k})
    if (f.pow(n) == beta) return n;
  return std::nullopt;
}

}  // namespace skolemff
