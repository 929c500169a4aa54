#include "skolemff/vd_theorems.hpp"

#include <set>

#include "skolemff/multstruct.hpp"

namespace skolemff {

namespace {

std::vector<Place> zeros_outside(const RationalFunction& x, const PlaceSet& s) {
  std::vector<Place> out;
  for (const auto& [p, v] : divisor(x))
    if (v > 0 && !s.contains(p)) out.push_back(p);
  return out;
}

std::vector<Place> poles_outside(const RationalFunction& x, const PlaceSet& s) {
  std::vector<Place> out;
  for (const auto& [p, v] : divisor(x))
    if (v != 0 && !s.contains(p)) out.push_back(p);
  return out;
}

InequalityReport finish(std::string name, Integer lhs, Integer rhs, bool cubed = false) {
  InequalityReport r;
  r.name = std::move(name);
  r.holds = lhs <= rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.cubed = cubed;
  return r;
}

void require_nonconstant(const RationalFunction& f) {
  if (f.is_zero() || f.is_constant()) throw Error(ErrorKind::ConstantInput, "f must be nonconstant");
}

}  // namespace

InequalityReport verify_smt(const RationalFunction& f, const PlaceSet& s, const std::vector<Constant>& b, long genus) {
  require_nonconstant(f);
  std::set<Constant> distinct(b.begin(), b.end());
  if (distinct.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "the b_i must be distinct");
  const long q = static_cast<long>(b.size());
  Integer lhs = Integer(q - 2) * height(f) / deg_ins(f);
  Integer rhs = chi_s(s, genus);
  for (const auto& bi : b) rhs += truncated_counting(f - RationalFunction::constant(bi), s);
  InequalityReport r = finish("smt", lhs, rhs);
  if (!r.holds)
    for (const auto& bi : b)
      for (const auto& p : zeros_outside(f - RationalFunction::constant(bi), s)) r.rhs_places.push_back(p);
  return r;
}

InequalityReport verify_sunit_count(const RationalFunction& f, const PlaceSet& s, const std::vector<Constant>& candidates,
                                    long genus) {
  require_nonconstant(f);
  if (!is_s_integer(f, s)) throw Error(ErrorKind::NotSInteger, "f must be an S-integer");
  std::set<Constant> distinct(candidates.begin(), candidates.end());
  long count = 0;
  for (const auto& c : distinct)
    if (is_s_unit(f - RationalFunction::constant(c), s)) ++count;
  InequalityReport r = finish("sunit_count", count, 2 * genus + s.degree_sum());
  if (!r.holds) r.lhs_places = s.places();
  return r;
}

InequalityReport verify_sunit_roots(const RationalFunction& f, const PlaceSet& s, std::uint64_t a, long genus) {
  require_nonconstant(f);
  if (!is_s_integer(f, s)) throw Error(ErrorKind::NotSInteger, "f must be an S-integer");
  long non_units = 0;
  for (const auto& xi : roots_of_unity(a, f.field()))
    if (!is_s_unit(f - RationalFunction::constant(xi.value), s)) ++non_units;
  return finish("sunit_roots", Integer(static_cast<long>(a)) - (2 * genus + s.degree_sum()), non_units);
}

InequalityReport verify_cz_gcd(const RationalFunction& a, const RationalFunction& b, const PlaceSet& s, long genus) {
  if (!a.field().char_zero()) throw Error(ErrorKind::InvalidArgument, "the gcd bound is stated in characteristic 0");
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroInput, "a and b must be nonzero");
  if (!is_s_unit(a, s) || !is_s_unit(b, s)) throw Error(ErrorKind::NotSUnit, "a and b must be S-units");
  if (!is_mult_independent(a, b))
    throw Error(ErrorKind::MultiplicativelyDependent, "a and b are multiplicatively dependent");
  const long chi = chi_s(s, genus);
  if (chi < 0) throw Error(ErrorKind::BadChiS, "chi_S must be non-negative");
  const RationalFunction one = RationalFunction::constant(a.field().one());
  const long n = gcd_counting(one - a, one - b, s);
  Integer lhs = Integer(n) * n * n;
  Integer rhs = Integer(54) * height(a) * height(b) * chi;
  InequalityReport r = finish("cz_gcd", lhs, rhs, true);
  if (!r.holds) {
    r.lhs_places = zeros_outside(one - a, s);
    r.rhs_places = poles_outside(a, s);
  }
  return r;
}

}  // namespace skolemff
