#include "skolemff/polynomial.hpp"

#include "modular.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skolemff {

Polynomial::Polynomial(const Field& field, std::vector<Constant> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != field_) throw Error(ErrorKind::FieldMismatch, "polynomial coefficient from another field");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Constant& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Constant& c, std::size_t degree) {
  if (c.is_zero()) return Polynomial(c.field());
  std::vector<Constant> v(degree + 1, c.field().zero());
  v[degree] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::variable(const Field& field) { return monomial(field.one(), 1); }

Polynomial Polynomial::from_ints(const Field& field, std::initializer_list<long> coeffs) {
  std::vector<Constant> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.push_back(field.from_int(c));
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::from_ints(const Field& field, const IntPoly& coeffs) {
  std::vector<Constant> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(field.from_integer(c));
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (field_ != o.field_) throw Error(ErrorKind::FieldMismatch, "adding polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (field_ != o.field_) throw Error(ErrorKind::FieldMismatch, "subtracting polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "multiplying polynomials over different fields");
  Polynomial r(*a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.field_->char_zero() && std::min(a.c_.size(), b.c_.size()) >= 12) return detail::kronecker_mul(a, b);
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Constant& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "polynomial division by zero");
  if (field_ != d.field_) throw Error(ErrorKind::FieldMismatch, "dividing polynomials over different fields");
  if (degree() < d.degree()) return {Polynomial(*field_), *this};
  std::vector<Constant> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  std::vector<Constant> quot(c_.size() - dd, field_->zero());
  const bool monic = d.is_monic();
  const Constant inv_lc = monic ? field_->one() : d.lc().inverse();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Constant& top = rem[i + dd];
    if (top.is_zero()) continue;
    Constant c = monic ? top : top * inv_lc;
    for (std::size_t j = 0; j < dd; ++j) {
      if (!d.c_[j].is_zero()) rem[i + j] -= c * d.c_[j];
    }
    rem[i + dd] = field_->zero();
    quot[i] = std::move(c);
  }
  rem.resize(dd, field_->zero());
  return {Polynomial(*field_, std::move(quot)), Polynomial(*field_, std::move(rem))};
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(field_->one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(*field_);
  std::vector<Constant> v;
  v.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
  return Polynomial(*field_, std::move(v));
}

Constant Polynomial::eval(const Constant& x) const {
  Constant acc = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc(*field_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * g;
    acc += constant(c_[i]);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * lc().inverse();
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Constant> v(k, field_->zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(*field_, std::move(v));
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& o) const {
  if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    auto cmp = c_[i] <=> o.c_[i];
    if (cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    bool neg = c.size() > 1 && c[0] == '-' && c_[i].is_prime_field();
    if (neg) c = c.substr(1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.field().char_zero() && std::min(a.degree(), b.degree()) >= 1 && std::max(a.degree(), b.degree()) >= 6)
    if (auto g = detail::modular_gcd(a, b)) return *g;
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd xgcd(const Polynomial& a, const Polynomial& b) {
  const Field& F = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(F.one()), s1(F);
  Polynomial t0(F), t1 = Polynomial::constant(F.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Constant inv = r0.lc().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial invert_mod(const Polynomial& a, const Polynomial& m) {
  ExtendedGcd e = xgcd(a % m, m);
  if (e.g.degree() != 0) throw Error(ErrorKind::InvalidArgument, "polynomial not invertible modulo m");
  return e.s % m;
}

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

Polynomial powmod(const Polynomial& a, const Integer& e, const Polynomial& m) {
  if (e < 0) return powmod(invert_mod(a, m), Integer(-e), m);
  Polynomial result = Polynomial::constant(a.field().one()) % m;
  if (e == 0) return result;
  Polynomial base = a % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m);
  }
  return result;
}

bool divides(const Polynomial& d, const Polynomial& a) { return (a % d).is_zero(); }

Polynomial exact_div(const Polynomial& a, const Polynomial& d) {
  auto [q, r] = a.divrem(d);
  if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
  return q;
}

long multiplicity(const Polynomial& d, Polynomial a) {
  if (a.is_zero() || d.degree() < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity needs nonzero a, nonconstant d");
  long k = 0;
  for (;;) {
    auto [q, r] = a.divrem(d);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

bool is_pth_power_poly(const Polynomial& a) {
  const std::uint64_t p = a.field().characteristic();
  if (p == 0) throw Error(ErrorKind::InvalidArgument, "is_pth_power_poly in characteristic 0");
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (i % p != 0 && !a.coeffs()[i].is_zero()) return false;
  return true;
}

Polynomial pth_root_poly(const Polynomial& a) {
  const std::uint64_t p = a.field().characteristic();
  if (!is_pth_power_poly(a)) throw Error(ErrorKind::InvalidArgument, "not a p-th power");
  std::vector<Constant> v;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) v.push_back(a.coeffs()[i].pth_root());
  return Polynomial(a.field(), std::move(v));
}

namespace {

void sqf_char_p(const Polynomial& f, long scale, std::map<long, Polynomial>& out) {
  const Field& F = f.field();
  auto add = [&](const Polynomial& g, long mult) {
    if (g.degree() < 1) return;
    auto it = out.find(mult);
    if (it == out.end()) out.emplace(mult, g);
    else it->second = it->second * g;
  };
  Polynomial df = f.derivative();
  if (df.is_zero()) {
    sqf_char_p(pth_root_poly(f).monic(), scale * static_cast<long>(F.characteristic()), out);
    return;
  }
  Polynomial b = gcd(f, df);
  Polynomial c = exact_div(f, b);
  long i = 1;
  while (c.degree() > 0) {
    Polynomial y = gcd(b, c);
    Polynomial z = exact_div(c, y);
    add(z.monic(), i * scale);
    ++i;
    c = y;
    b = exact_div(b, y);
  }
  if (b.degree() > 0) sqf_char_p(pth_root_poly(b).monic(), scale * static_cast<long>(F.characteristic()), out);
}

}  // namespace

std::vector<std::pair<Polynomial, long>> squarefree_decomposition(const Polynomial& a) {
  if (a.degree() < 1) return {};
  const Field& F = a.field();
  Polynomial f = a.monic();
  std::map<long, Polynomial> out;
  if (F.char_zero()) {
    // Yun's algorithm.
    Polynomial df = f.derivative();
    Polynomial b = gcd(f, df);
    Polynomial c = exact_div(f, b);
    Polynomial d = exact_div(df, b) - c.derivative();
    long i = 1;
    while (c.degree() > 0) {
      Polynomial g = gcd(c, d);
      if (g.degree() > 0) out.emplace(i, g);
      c = exact_div(c, g);
      d = exact_div(d, g) - c.derivative();
      ++i;
    }
  } else {
    sqf_char_p(f, 1, out);
  }
  std::vector<std::pair<Polynomial, long>> result;
  for (auto& [m, g] : out) result.emplace_back(g.monic(), m);
  return result;
}

Polynomial radical(const Polynomial& a) {
  Polynomial r = Polynomial::constant(a.field().one());
  for (const auto& [g, m] : squarefree_decomposition(a)) r *= g;
  return r;
}

Polynomial homogenize(const IntPoly& p, const Polynomial& u, const Polynomial& v) {
  const Field& F = u.field();
  if (p.empty()) return Polynomial(F);
  const std::size_t n = p.size() - 1;
  Polynomial h = Polynomial::constant(F.from_integer(p[n]));
  Polynomial vp = Polynomial::constant(F.one());
  for (std::size_t j = n; j-- > 0;) {
    vp *= v;
    h = h * u;
    if (p[j] != 0) h += vp * F.from_integer(p[j]);
  }
  return h;
}

}  // namespace skolemff
