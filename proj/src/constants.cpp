#include "skolemff/constants.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>

namespace skolemff {

namespace {

// Raw 𝔽_p polynomial helpers; only used to choose and validate the defining
// modulus before any Field object exists.
using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  fp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lc = invmod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = mulmod(a.back(), inv_lc, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(c, m[j], p)) % p;
    }
    fp_trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  return fp_mod(std::move(c), m, p);
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly r{1};
  base = fp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return fp_mod(std::move(r), m, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    a = fp_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test.
bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  auto frob_iter = [&](std::size_t k) {
    FpPoly x{0, 1};
    for (std::size_t i = 0; i < k; ++i) x = fp_powmod(x, p, f, p);
    return x;
  };
  FpPoly xq = frob_iter(d);
  FpPoly x = fp_mod(FpPoly{0, 1}, f, p);
  if (xq != x) return false;
  for (auto [l, e] : factor_u64(d)) {
    FpPoly h = frob_iter(d / l);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    fp_trim(h);
    FpPoly g = fp_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly smallest_irreducible(std::uint64_t p, std::uint64_t d) {
  FpPoly f(d + 1, 0);
  f[d] = 1;
  // Enumerate the lower coefficients as a base-p counter.
  while (true) {
    if (f[0] != 0 && fp_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < d) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == d) throw Error(ErrorKind::InvalidField, "no irreducible polynomial found");
  }
}

}  // namespace

struct FieldRegistry {
  std::mutex mu;
  std::deque<std::unique_ptr<Field>> fields;

  static FieldRegistry& instance() {
    static FieldRegistry r;
    return r;
  }

  const Field& lookup(const FieldSpec& raw) {
    FieldSpec spec = raw;
    if (spec.characteristic == 0) {
      spec.extension_degree = 1;
      spec.modulus.clear();
    } else {
      spec.cyclotomic_order = 1;
    }
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& f : fields) {
      if (f->spec_ == spec) return *f;
      // A default-modulus request matches a field built from the same default.
      if (spec.modulus.empty() && f->spec_.characteristic == spec.characteristic &&
          f->spec_.extension_degree == spec.extension_degree && f->chosen_default_)
        return *f;
    }
    fields.push_back(std::unique_ptr<Field>(new Field(spec)));
    return *fields.back();
  }
};

const Field& Field::get(const FieldSpec& spec) { return FieldRegistry::instance().lookup(spec); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.characteristic == 0) {
    if (spec_.cyclotomic_order == 0) throw Error(ErrorKind::InvalidField, "cyclotomic_order must be positive");
    IntPoly phi = cyclotomic_poly(spec_.cyclotomic_order);
    phi_m_.assign(phi.begin(), phi.end());
    dim_ = phi.size() - 1;
    torsion_ = Integer(lcm_u64(2, spec_.cyclotomic_order));
    size_ = 0;
    return;
  }
  const std::uint64_t p = spec_.characteristic;
  if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (p > (1ULL << 61)) throw Error(ErrorKind::InvalidField, "characteristic above 2^61 is unsupported");
  const std::uint64_t d = spec_.extension_degree;
  if (d == 0) throw Error(ErrorKind::InvalidField, "extension_degree must be positive");
  if (spec_.modulus.empty()) {
    spec_.modulus = d == 1 ? FpPoly{0, 1} : smallest_irreducible(p, d);
    chosen_default_ = true;
  } else {
    FpPoly m = spec_.modulus;
    for (auto& c : m)
      if (c >= p) throw Error(ErrorKind::InvalidField, "modulus coefficient out of range");
    if (m.size() != d + 1 || m.back() != 1) throw Error(ErrorKind::InvalidField, "modulus must be monic of degree d");
    if (!fp_irreducible(m, p)) throw Error(ErrorKind::InvalidField, "modulus is reducible");
  }
  modulus_ = spec_.modulus;
  dim_ = d;
  mpz_ui_pow_ui(size_.get_mpz_t(), p, d);
  torsion_ = size_ - 1;
}

Constant Field::zero() const { return Constant(*this); }
Constant Field::one() const { return from_int(1); }
Constant Field::from_int(long v) const { return from_integer(Integer(v)); }

Constant Field::from_integer(const Integer& v) const {
  if (char_zero()) return Constant::from_coordinates(*this, std::vector<Rational>{Rational(v)});
  Integer r = v % Integer(std::to_string(spec_.characteristic));
  if (r < 0) r += Integer(std::to_string(spec_.characteristic));
  return Constant::from_coordinates(*this, std::vector<std::uint64_t>{r.get_ui()});
}

Constant Field::from_rational(const Rational& v) const {
  if (!char_zero()) {
    Constant n = from_integer(v.get_num());
    Constant d = from_integer(v.get_den());
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
    return n / d;
  }
  return Constant::from_coordinates(*this, std::vector<Rational>{v});
}

Constant Field::generator() const {
  if (char_zero()) {
    std::vector<Rational> c(2);
    c[1] = 1;
    return Constant::from_coordinates(*this, std::move(c));
  }
  return Constant::from_coordinates(*this, std::vector<std::uint64_t>{0, 1});
}

std::optional<Constant> Field::primitive_root_of_unity(std::uint64_t d) const {
  if (d == 0) return std::nullopt;
  if (d == 1) return one();
  if (char_zero()) {
    const std::uint64_t m = spec_.cyclotomic_order;
    if (m % d == 0) return generator().pow(static_cast<long>(m / d));
    if (m % 2 == 1 && (2 * m) % d == 0) {
      // ζ_{2M} = −ζ_M^{(M+1)/2} for odd M.
      Constant z2m = -generator().pow(static_cast<long>((m + 1) / 2));
      return z2m.pow(static_cast<long>(2 * m / d));
    }
    return std::nullopt;
  }
  Integer qm1 = torsion_;
  if (mpz_divisible_ui_p(qm1.get_mpz_t(), d) == 0) return std::nullopt;
  Integer cof = qm1 / d;
  auto primes = factor_u64(d);
  // Deterministic enumeration of candidates by coordinate counter.
  const std::uint64_t p = spec_.characteristic;
  std::vector<std::uint64_t> coords(dim_, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < dim_) {
      if (++coords[i] < p) break;
      coords[i] = 0;
      ++i;
    }
    if (i == dim_) break;
    Constant c = Constant::from_coordinates(*this, coords);
    Constant y = c.pow(cof);
    bool exact = true;
    for (auto [l, e] : primes) {
      if (y.pow(static_cast<long>(d / l)).is_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return y;
  }
  return std::nullopt;
}

std::string Field::describe() const {
  if (char_zero()) {
    if (spec_.cyclotomic_order == 1) return "Q";
    return "Q(zeta_" + std::to_string(spec_.cyclotomic_order) + ")";
  }
  std::string s = "F_" + std::to_string(spec_.characteristic);
  if (spec_.extension_degree > 1) s += "^" + std::to_string(spec_.extension_degree);
  return s;
}

// ---------------------------------------------------------------------------

Constant Constant::from_coordinates(const Field& field, std::vector<Rational> coords) {
  if (!field.char_zero()) throw Error(ErrorKind::FieldMismatch, "rational coordinates in characteristic p");
  Constant c(field);
  c.q_ = std::move(coords);
  for (auto& x : c.q_) x.canonicalize();
  c.canonicalize();
  return c;
}

Constant Constant::from_coordinates(const Field& field, std::vector<std::uint64_t> coords) {
  if (field.char_zero()) throw Error(ErrorKind::FieldMismatch, "modular coordinates in characteristic 0");
  Constant c(field);
  const std::uint64_t p = field.characteristic();
  for (auto& x : coords) x %= p;
  c.m_ = std::move(coords);
  c.canonicalize();
  return c;
}

void Constant::canonicalize() {
  const Field& F = *field_;
  if (F.char_zero()) {
    const auto& phi = F.cyclotomic_modulus();
    const std::size_t dim = F.dimension();
    while (q_.size() > dim) {
      Rational c = q_.back();
      const std::size_t shift = q_.size() - 1 - dim;
      if (c != 0)
        for (std::size_t j = 0; j < dim; ++j) q_[shift + j] -= c * phi[j];
      q_.pop_back();
    }
    while (!q_.empty() && q_.back() == 0) q_.pop_back();
  } else {
    const auto& mod = F.modulus();
    const std::size_t dim = F.dimension();
    const std::uint64_t p = F.characteristic();
    while (m_.size() > dim) {
      std::uint64_t c = m_.back();
      const std::size_t shift = m_.size() - 1 - dim;
      if (c != 0)
        for (std::size_t j = 0; j < dim; ++j) m_[shift + j] = (m_[shift + j] + p - mulmod(c, mod[j], p)) % p;
      m_.pop_back();
    }
    while (!m_.empty() && m_.back() == 0) m_.pop_back();
  }
}

bool Constant::is_one() const {
  if (field_->char_zero()) return q_.size() == 1 && q_[0] == 1;
  return m_.size() == 1 && m_[0] == 1;
}

bool Constant::is_prime_field() const { return q_.size() <= 1 && m_.size() <= 1; }

Rational Constant::rational_value() const {
  if (!field_->char_zero() || q_.size() > 1) throw Error(ErrorKind::InvalidArgument, "not a rational constant");
  return q_.empty() ? Rational(0) : q_[0];
}

std::uint64_t Constant::prime_field_value() const {
  if (field_->char_zero() || m_.size() > 1) throw Error(ErrorKind::InvalidArgument, "not a prime-field constant");
  return m_.empty() ? 0 : m_[0];
}

Constant Constant::operator-() const {
  Constant r(*this);
  for (auto& x : r.q_) x = -x;
  const std::uint64_t p = field_->characteristic();
  for (auto& x : r.m_) x = x == 0 ? 0 : p - x;
  return r;
}

Constant& Constant::operator+=(const Constant& o) {
  if (field_ != o.field_) throw Error(ErrorKind::FieldMismatch, "adding constants of different fields");
  if (field_->char_zero()) {
    if (q_.size() < o.q_.size()) q_.resize(o.q_.size());
    for (std::size_t i = 0; i < o.q_.size(); ++i) q_[i] += o.q_[i];
    while (!q_.empty() && q_.back() == 0) q_.pop_back();
  } else {
    const std::uint64_t p = field_->characteristic();
    if (m_.size() < o.m_.size()) m_.resize(o.m_.size(), 0);
    for (std::size_t i = 0; i < o.m_.size(); ++i) {
      m_[i] += o.m_[i];
      if (m_[i] >= p) m_[i] -= p;
    }
    while (!m_.empty() && m_.back() == 0) m_.pop_back();
  }
  return *this;
}

Constant& Constant::operator-=(const Constant& o) { return *this += -o; }

Constant& Constant::operator*=(const Constant& o) {
  if (field_ != o.field_) throw Error(ErrorKind::FieldMismatch, "multiplying constants of different fields");
  if (is_zero() || o.is_zero()) {
    q_.clear();
    m_.clear();
    return *this;
  }
  if (field_->char_zero()) {
    if (q_.size() == 1 && o.q_.size() == 1) {
      q_[0] *= o.q_[0];
      return *this;
    }
    std::vector<Rational> r(q_.size() + o.q_.size() - 1);
    for (std::size_t i = 0; i < q_.size(); ++i) {
      if (q_[i] == 0) continue;
      for (std::size_t j = 0; j < o.q_.size(); ++j) r[i + j] += q_[i] * o.q_[j];
    }
    q_ = std::move(r);
  } else {
    const std::uint64_t p = field_->characteristic();
    if (m_.size() == 1 && o.m_.size() == 1) {
      m_[0] = mulmod(m_[0], o.m_[0], p);
      return *this;
    }
    std::vector<std::uint64_t> r(m_.size() + o.m_.size() - 1, 0);
    for (std::size_t i = 0; i < m_.size(); ++i)
      for (std::size_t j = 0; j < o.m_.size(); ++j) r[i + j] = (r[i + j] + mulmod(m_[i], o.m_[j], p)) % p;
    m_ = std::move(r);
  }
  canonicalize();
  return *this;
}

Constant& Constant::operator/=(const Constant& o) { return *this *= o.inverse(); }

Constant Constant::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero constant");
  const Field& F = *field_;
  if (F.char_zero()) {
    if (q_.size() == 1) return Constant::from_coordinates(F, std::vector<Rational>{1 / q_[0]});
    // Extended Euclid of this element against Φ_M over ℚ.
    using QPoly = std::vector<Rational>;
    auto trim = [](QPoly& a) {
      while (!a.empty() && a.back() == 0) a.pop_back();
    };
    QPoly r0 = F.cyclotomic_modulus(), r1 = q_;
    QPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
      QPoly quot(r0.size() - r1.size() + 1);
      QPoly rem = r0;
      for (std::size_t i = quot.size(); i-- > 0;) {
        Rational c = rem[i + r1.size() - 1] / r1.back();
        quot[i] = c;
        for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
      }
      trim(rem);
      // s2 = s0 − quot·s1
      QPoly prod(quot.size() + s1.size(), Rational(0));
      for (std::size_t i = 0; i < quot.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) prod[i + j] += quot[i] * s1[j];
      QPoly s2 = s0;
      if (s2.size() < prod.size()) s2.resize(prod.size());
      for (std::size_t i = 0; i < prod.size(); ++i) s2[i] -= prod[i];
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant: s1·x ≡ r1 (mod Φ_M).
    Rational inv = 1 / r1[0];
    for (auto& c : s1) c *= inv;
    return Constant::from_coordinates(F, std::move(s1));
  }
  const std::uint64_t p = F.characteristic();
  if (m_.size() == 1) return Constant::from_coordinates(F, std::vector<std::uint64_t>{invmod(m_[0], p)});
  return pow(F.size() - 2);
}

Constant Constant::pow(const Integer& e) const {
  if (e < 0) return inverse().pow(Integer(-e));
  Constant result = field_->one();
  Constant base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
  }
  return result;
}

Constant Constant::pth_root() const {
  if (field_->char_zero()) throw Error(ErrorKind::InvalidArgument, "pth_root in characteristic 0");
  // Frobenius has order d, so x^{1/p} = x^{p^{d−1}}.
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), field_->characteristic(), field_->dimension() - 1);
  return pow(e);
}

bool Constant::operator==(const Constant& o) const {
  return field_ == o.field_ && q_ == o.q_ && m_ == o.m_;
}

std::strong_ordering Constant::operator<=>(const Constant& o) const {
  if (field_->char_zero()) {
    const std::size_t n = std::max(q_.size(), o.q_.size());
    for (std::size_t i = 0; i < n; ++i) {
      Rational a = i < q_.size() ? q_[i] : Rational(0);
      Rational b = i < o.q_.size() ? o.q_[i] : Rational(0);
      if (a < b) return std::strong_ordering::less;
      if (b < a) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  const std::size_t n = std::max(m_.size(), o.m_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t a = i < m_.size() ? m_[i] : 0;
    std::uint64_t b = i < o.m_.size() ? o.m_[i] : 0;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string Constant::to_string() const {
  if (is_zero()) return "0";
  if (is_prime_field()) {
    return field_->char_zero() ? rational_to_string(q_[0]) : std::to_string(m_[0]);
  }
  const char* var = field_->char_zero() ? "z" : "x";
  std::string out;
  const std::size_t n = field_->char_zero() ? q_.size() : m_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::string c = field_->char_zero() ? rational_to_string(q_[i]) : std::to_string(m_[i]);
    if (c == "0") continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return "(" + out + ")";
}

// ---------------------------------------------------------------------------

std::optional<std::uint64_t> torsion_order(const Constant& c) {
  if (c.is_zero()) return std::nullopt;
  const Field& F = c.field();
  if (!F.torsion_exponent().fits_ulong_p())
    throw Error(ErrorKind::InvalidField, "torsion exponent of " + F.describe() + " exceeds 64 bits");
  std::uint64_t order = F.torsion_exponent().get_ui();
  if (!c.pow(Integer(F.torsion_exponent())).is_one()) return std::nullopt;
  for (auto [l, e] : factor_u64(order)) {
    while (order % l == 0 && c.pow(Integer(std::to_string(order / l))).is_one()) order /= l;
  }
  return order;
}

bool is_root_of_unity(const Constant& c) {
  if (c.is_zero()) return false;
  if (!c.field().char_zero()) return true;
  return c.pow(Integer(c.field().torsion_exponent())).is_one();
}

RootOfUnity RootOfUnity::make(const Constant& value, std::uint64_t declared_order) {
  if (declared_order == 0) throw Error(ErrorKind::InvalidInstance, "root of unity order must be positive");
  if (!value.pow(Integer(std::to_string(declared_order))).is_one())
    throw Error(ErrorKind::InvalidInstance, value.to_string() + " is not a root of unity of order " +
                                                std::to_string(declared_order));
  for (auto [l, e] : factor_u64(declared_order)) {
    if (value.pow(Integer(std::to_string(declared_order / l))).is_one())
      throw Error(ErrorKind::InvalidInstance, value.to_string() + " has order smaller than declared " +
                                                  std::to_string(declared_order));
  }
  return RootOfUnity{declared_order, value};
}

std::vector<RootOfUnity> roots_of_unity(std::uint64_t a, const Field& field) {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "roots_of_unity(0)");
  auto zeta = field.primitive_root_of_unity(a);
  if (!zeta)
    throw Error(ErrorKind::FieldTooSmall, field.describe() + " has no primitive " + std::to_string(a) +
                                              "-th root of unity");
  std::vector<RootOfUnity> out;
  out.reserve(a);
  Constant power = field.one();
  for (std::uint64_t j = 0; j < a; ++j) {
    out.push_back(RootOfUnity{a / gcd_u64(a, j), power});
    power *= *zeta;
  }
  std::sort(out.begin(), out.end(), [](const RootOfUnity& x, const RootOfUnity& y) {
    if (x.order != y.order) return x.order < y.order;
    return x.value < y.value;
  });
  return out;
}

Constant embed(const Constant& c, const Field& target) {
  const Field& source = c.field();
  if (&source == &target) return c;
  if (!source.char_zero() || !target.char_zero())
    throw Error(ErrorKind::FieldMismatch, "embedding is only defined between cyclotomic fields");
  auto z = target.primitive_root_of_unity(source.spec().cyclotomic_order);
  if (!z) throw Error(ErrorKind::FieldTooSmall, target.describe() + " does not contain " + source.describe());
  Constant out = target.zero(), power = target.one();
  for (const auto& q : c.rational_coords()) {
    out += target.from_rational(q) * power;
    power *= *z;
  }
  return out;
}

}  // namespace skolemff
