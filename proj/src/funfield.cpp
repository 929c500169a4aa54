#include "skolemff/funfield.hpp"

#include <algorithm>

#include "skolemff/factor.hpp"

namespace skolemff {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(num_.field().one())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroInput, "rational function with zero denominator");
  if (&num_.field() != &den_.field()) throw Error(ErrorKind::FieldMismatch, "numerator and denominator fields differ");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.field().one());
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Constant inv = den_.lc().inverse();
  num_ *= inv;
  den_ *= inv;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.field());
  Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Polynomial an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
  if (g1.degree() > 0) {
    an = exact_div(an, g1);
    bd = exact_div(bd, g1);
  }
  if (g2.degree() > 0) {
    bn = exact_div(bn, g2);
    ad = exact_div(ad, g2);
  }
  Polynomial den = ad * bd;
  Constant inv = den.lc().inverse();
  return RationalFunction(an * bn * inv, den * inv, RationalFunction::Normalized{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (is_zero()) return e == 0 ? RationalFunction::constant(field().one()) : *this;
  // num and den stay coprime under powering.
  return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)),
                          Normalized{});
}

std::strong_ordering RationalFunction::operator<=>(const RationalFunction& o) const {
  if (auto c = num_ <=> o.num_; c != 0) return c;
  return den_ <=> o.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

Place Place::finite(const Polynomial& p, bool trusted) {
  if (p.degree() < 1 || !p.is_monic()) throw Error(ErrorKind::InvalidArgument, "place polynomial must be monic, nonconstant");
  if (!trusted && !is_irreducible(p))
    throw Error(ErrorKind::InvalidArgument, "place polynomial " + p.to_string() + " is reducible");
  return Place(p);
}

bool Place::operator==(const Place& o) const {
  if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
  return *poly_ == *o.poly_;
}

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (is_infinity() != o.is_infinity()) return is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (is_infinity()) return std::strong_ordering::equal;
  return *poly_ <=> *o.poly_;
}

std::string Place::to_string() const { return is_infinity() ? "inf" : "(" + poly_->to_string() + ")"; }

PlaceSet::PlaceSet(std::initializer_list<Place> places) {
  for (const auto& p : places) insert(p);
}

void PlaceSet::insert(const Place& p) {
  auto it = std::lower_bound(places_.begin(), places_.end(), p);
  if (it == places_.end() || !(*it == p)) places_.insert(it, p);
}

bool PlaceSet::contains(const Place& p) const { return std::binary_search(places_.begin(), places_.end(), p); }

long PlaceSet::degree_sum() const {
  long s = 0;
  for (const auto& p : places_) s += p.degree();
  return s;
}

// ---------------------------------------------------------------------------

long valuation(const RationalFunction& f, const Place& p) {
  if (f.is_zero()) return kInfiniteValuation;
  if (p.is_infinity()) return f.den().degree() - f.num().degree();
  long v = multiplicity(p.poly(), f.num());
  if (v == 0) v = -multiplicity(p.poly(), f.den());
  return v;
}

Divisor divisor(const RationalFunction& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "divisor of zero");
  Divisor d;
  if (f.num().degree() > 0)
    for (const auto& [g, m] : factor(f.num()).factors) d[Place::finite(g, true)] += m;
  if (f.den().degree() > 0)
    for (const auto& [g, m] : factor(f.den()).factors) d[Place::finite(g, true)] -= m;
  if (long v = f.den().degree() - f.num().degree(); v != 0) d[Place::infinity()] = v;
  return d;
}

long height(const RationalFunction& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "height of zero");
  return std::max(f.num().degree(), f.den().degree());
}

long projective_height(const std::vector<RationalFunction>& x) {
  const RationalFunction* first = nullptr;
  for (const auto& xi : x)
    if (!xi.is_zero()) {
      first = &xi;
      break;
    }
  if (!first) throw Error(ErrorKind::AllZero, "projective height of the zero vector");
  const Field& F = first->field();
  // Clear denominators: y_i = x_i·L with L the lcm of denominators. Then the
  // finite part is deg L − deg gcd(y) and the part at ∞ is max deg y − deg L.
  Polynomial l = Polynomial::constant(F.one());
  for (const auto& xi : x)
    if (!xi.is_zero()) l = exact_div(l * xi.den(), gcd(l, xi.den()));
  Polynomial g(F);
  long top = 0;
  for (const auto& xi : x) {
    if (xi.is_zero()) continue;
    Polynomial y = xi.num() * exact_div(l, xi.den());
    top = std::max(top, y.degree());
    g = gcd(g, y);
  }
  return top - g.degree();
}

// ---------------------------------------------------------------------------

KPoly::KPoly(const Field& field, std::vector<RationalFunction> coeffs) : field_(&field), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()), RationalFunction(*a.field_));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return KPoly(*a.field_, std::move(c));
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(*a.field_);
  std::vector<RationalFunction> c(a.c_.size() + b.c_.size() - 1, RationalFunction(*a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return KPoly(*a.field_, std::move(c));
}

RationalFunction KPoly::eval(const RationalFunction& x) const {
  RationalFunction r(*field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string KPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "[" + c_[i].to_string() + "]";
    if (i > 0) s += i == 1 ? "*X" : "*X^" + std::to_string(i);
  }
  return s;
}

long poly_valuation(const KPoly& a, const Place& p) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "valuation of the zero polynomial");
  long v = kInfiniteValuation;
  for (const auto& c : a.coeffs()) v = std::min(v, valuation(c, p));
  return v;
}

long poly_height(const KPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "height of the zero polynomial");
  return projective_height(a.coeffs());
}

// ---------------------------------------------------------------------------

Polynomial strip_places(Polynomial a, const PlaceSet& s) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "strip_places of zero");
  for (const auto& p : s) {
    if (p.is_infinity()) continue;
    while (a.degree() >= p.degree()) {
      auto [q, r] = a.divrem(p.poly());
      if (!r.is_zero()) break;
      a = std::move(q);
    }
  }
  return a.monic();
}

namespace {

long radical_degree(const Polynomial& a) { return a.degree() <= 0 ? 0 : radical(a).degree(); }

}  // namespace

long truncated_counting(const RationalFunction& b, const PlaceSet& s) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "counting function of zero");
  long n = radical_degree(strip_places(b.num(), s));
  if (!s.contains_infinity() && b.den().degree() > b.num().degree()) n += 1;
  return n;
}

long gcd_counting(const RationalFunction& f, const RationalFunction& g, const PlaceSet& s, bool truncated) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "gcd counting of zero");
  if (!is_s_integer(f, s) || !is_s_integer(g, s))
    throw Error(ErrorKind::NotSInteger, "gcd counting needs S-integers");
  Polynomial common = strip_places(gcd(f.num(), g.num()), s);
  long n = truncated ? radical_degree(common) : common.degree();
  if (!s.contains_infinity()) {
    long v = std::min(valuation(f, Place::infinity()), valuation(g, Place::infinity()));
    n += truncated ? std::min(1L, v) : v;
  }
  return n;
}

long deg_ins(const RationalFunction& f) {
  if (f.is_zero() || f.is_constant()) throw Error(ErrorKind::ConstantInput, "deg_ins of a constant");
  if (f.field().char_zero()) return 1;
  const long p = static_cast<long>(f.field().characteristic());
  Polynomial num = f.num(), den = f.den();
  long d = 1;
  while (is_pth_power_poly(num) && is_pth_power_poly(den)) {
    num = pth_root_poly(num);
    den = pth_root_poly(den);
    d *= p;
  }
  return d;
}

long chi_s(const PlaceSet& s, long genus) { return 2 * genus - 2 + s.degree_sum(); }

bool is_s_integer(const RationalFunction& f, const PlaceSet& s) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "S-integrality of zero");
  if (!s.contains_infinity() && f.num().degree() > f.den().degree()) return false;
  return strip_places(f.den(), s).degree() == 0;
}

bool is_s_unit(const RationalFunction& f, const PlaceSet& s) {
  if (!is_s_integer(f, s)) return false;
  if (!s.contains_infinity() && f.num().degree() != f.den().degree()) return false;
  return strip_places(f.num(), s).degree() == 0;
}

}  // namespace skolemff
