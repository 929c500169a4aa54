#include "modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace skolemff::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulm(a, a, p))
    if (e & 1) r = mulm(r, a, p);
  return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

struct PrimeData {
  u64 p = 0;
  std::vector<std::vector<u64>> root_powers;  // [j][i] = ω_j^i
  std::vector<std::vector<u64>> vinv;         // coordinates from values at the roots
};

std::vector<std::vector<u64>> invert_matrix(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const u64 s = invm(a[c][c], p);
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] = mulm(a[c][k], s, p);
      inv[c][k] = mulm(inv[c][k], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const u64 m = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] = subm(a[r][k], mulm(m, a[c][k], p), p);
        inv[r][k] = subm(inv[r][k], mulm(m, inv[c][k], p), p);
      }
    }
  }
  return inv;
}

PrimeData make_prime_data(u64 p, u64 m, std::size_t dim) {
  PrimeData d;
  d.p = p;
  if (dim == 1) {
    d.root_powers = {{1}};
    d.vinv = {{1}};
    return d;
  }
  std::vector<u64> prime_divisors;
  for (u64 q = 2, x = m; x > 1; ++q)
    if (x % q == 0) {
      prime_divisors.push_back(q);
      while (x % q == 0) x /= q;
    }
  u64 omega = 0;
  for (u64 g = 2;; ++g) {
    omega = powm(g, (p - 1) / m, p);
    bool primitive = true;
    for (u64 q : prime_divisors)
      if (powm(omega, m / q, p) == 1) primitive = false;
    if (primitive) break;
  }
  for (u64 j = 1; j <= m; ++j) {
    if (std::gcd(j, m) != 1) continue;
    const u64 w = powm(omega, j, p);
    std::vector<u64> pw(dim);
    pw[0] = 1;
    for (std::size_t i = 1; i < dim; ++i) pw[i] = mulm(pw[i - 1], w, p);
    d.root_powers.push_back(std::move(pw));
  }
  d.vinv = invert_matrix(d.root_powers, p);
  return d;
}

// Primes p ≡ 1 (mod 2M) below 2^62, descending; cached per M.
const PrimeData& prime_data(const Field& F, std::size_t index) {
  thread_local std::map<u64, std::vector<PrimeData>> cache;
  const u64 m = F.spec().cyclotomic_order;
  auto& list = cache[m];
  while (list.size() <= index) {
    const u64 step = 2 * m;
    u64 x = list.empty() ? ((u64{1} << 62) / step) * step + 1 : list.back().p - step;
    while (mpz_probab_prime_p(Integer(std::to_string(x)).get_mpz_t(), 30) == 0) x -= step;
    list.push_back(make_prime_data(x, m, F.dimension()));
  }
  return list[index];
}

// Images of a polynomial at every root; false if a denominator or the
// leading coefficient vanishes.
bool images(const Polynomial& a, const PrimeData& d, std::vector<std::vector<u64>>& out) {
  const u64 p = d.p;
  const std::size_t roots = d.root_powers.size();
  out.assign(roots, std::vector<u64>(a.coeffs().size(), 0));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const auto& coords = a.coeffs()[k].rational_coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const u64 den = mpz_fdiv_ui(coords[i].get_den_mpz_t(), p);
      if (den == 0) return false;
      const u64 c = mulm(mpz_fdiv_ui(coords[i].get_num_mpz_t(), p), invm(den, p), p);
      for (std::size_t j = 0; j < roots; ++j) out[j][k] = addm(out[j][k], mulm(c, d.root_powers[j][i], p), p);
    }
  }
  for (const auto& v : out)
    if (v.back() == 0) return false;
  return true;
}

void trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const u64 inv = invm(b.back(), p);
    while (a.size() >= b.size()) {
      const u64 q = mulm(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = subm(a[shift + i], mulm(q, b[i], p), p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  const u64 inv = invm(a.back(), p);
  for (auto& x : a) x = mulm(x, inv, p);
  return a;
}

std::optional<Rational> reconstruct(const Integer& r, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  Integer g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace

std::optional<Polynomial> modular_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& F = a.field();
  const std::size_t dim = F.dimension();
  long deg = -1;
  Integer modulus = 1;
  std::vector<std::vector<Integer>> residues;  // [coefficient][coordinate]
  std::optional<Polynomial> previous;
  std::vector<std::vector<u64>> ia, ib;
  for (std::size_t idx = 0; idx < 400; ++idx) {
    const PrimeData& d = prime_data(F, idx);
    if (!images(a, d, ia) || !images(b, d, ib)) continue;
    std::vector<std::vector<u64>> g;
    bool consistent = true;
    for (std::size_t j = 0; j < ia.size(); ++j) {
      g.push_back(gcd_mod(ia[j], ib[j], d.p));
      if (g.back().size() != g.front().size()) consistent = false;
    }
    if (!consistent) continue;
    const long dg = static_cast<long>(g.front().size()) - 1;
    if (dg == 0) return Polynomial::constant(F.one());
    if (deg != -1 && dg > deg) continue;
    if (deg == -1 || dg < deg) {
      deg = dg;
      modulus = 1;
      residues.assign(static_cast<std::size_t>(deg), std::vector<Integer>(dim, 0));
      previous.reset();
    }
    const Integer pz(std::to_string(d.p));
    const u64 minv = invm(mpz_fdiv_ui(modulus.get_mpz_t(), d.p), d.p);
    for (std::size_t k = 0; k < static_cast<std::size_t>(deg); ++k)
      for (std::size_t i = 0; i < dim; ++i) {
        u64 v = 0;
        for (std::size_t j = 0; j < g.size(); ++j) v = addm(v, mulm(d.vinv[i][j], g[j][k], d.p), d.p);
        Integer& r = residues[k][i];
        const u64 t = mulm(subm(v, mpz_fdiv_ui(r.get_mpz_t(), d.p), d.p), minv, d.p);
        r += modulus * Integer(std::to_string(t));
      }
    modulus *= pz;
    std::vector<Constant> coeffs;
    bool ok = true;
    for (std::size_t k = 0; k < static_cast<std::size_t>(deg) && ok; ++k) {
      std::vector<Rational> coords;
      for (std::size_t i = 0; i < dim && ok; ++i) {
        auto q = reconstruct(residues[k][i], modulus);
        if (!q) ok = false;
        else coords.push_back(*q);
      }
      if (ok) coeffs.push_back(Constant::from_coordinates(F, std::move(coords)));
    }
    if (!ok) continue;
    coeffs.push_back(F.one());
    Polynomial cand(F, std::move(coeffs));
    if (previous && *previous == cand && (a % cand).is_zero() && (b % cand).is_zero()) return cand;
    previous = std::move(cand);
  }
  return std::nullopt;
}

namespace {

struct Packed {
  Integer pos, neg;
};

// Integer images of the ζ-coordinates, laid out at k·stride + i.
std::vector<Integer> clear_denominators(const Polynomial& a, std::size_t stride, Integer& den) {
  den = 1;
  for (const auto& c : a.coeffs())
    for (const auto& x : c.rational_coords()) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> out(a.coeffs().size() * stride);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const auto& coords = a.coeffs()[k].rational_coords();
    for (std::size_t i = 0; i < coords.size(); ++i) out[k * stride + i] = coords[i].get_num() * (den / coords[i].get_den());
  }
  return out;
}

std::size_t max_bits(const std::vector<Integer>& v) {
  std::size_t m = 0;
  for (const auto& x : v) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
  return m;
}

Packed pack(const std::vector<Integer>& v, std::size_t limbs) {
  std::vector<mp_limb_t> pos(v.size() * limbs, 0), neg(v.size() * limbs, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto& dst = v[i] > 0 ? pos : neg;
    size_t count = 0;
    mpz_export(dst.data() + i * limbs, &count, -1, sizeof(mp_limb_t), 0, 0, v[i].get_mpz_t());
  }
  Packed p;
  mpz_import(p.pos.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  mpz_import(p.neg.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
  return p;
}

std::vector<mp_limb_t> unpack_limbs(const Integer& x, std::size_t total) {
  std::vector<mp_limb_t> out(total, 0);
  if (x != 0) {
    size_t count = 0;
    mpz_export(out.data(), &count, -1, sizeof(mp_limb_t), 0, 0, x.get_mpz_t());
  }
  return out;
}

}  // namespace

Polynomial kronecker_mul(const Polynomial& a, const Polynomial& b) {
  const Field& F = a.field();
  const std::size_t dim = F.dimension();
  const std::size_t stride = dim == 1 ? 1 : 2 * dim - 1;
  Integer da, db;
  std::vector<Integer> ia = clear_denominators(a, stride, da), ib = clear_denominators(b, stride, db);
  const std::size_t terms = std::min(ia.size(), ib.size());
  const std::size_t bits = max_bits(ia) + max_bits(ib) + mpz_sizeinbase(Integer(terms).get_mpz_t(), 2) + 1;
  const std::size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  Packed pa = pack(ia, limbs), pb = pack(ib, limbs);
  const Integer plus = pa.pos * pb.pos + pa.neg * pb.neg;
  const Integer minus = pa.pos * pb.neg + pa.neg * pb.pos;
  const std::size_t slots = ia.size() + ib.size() - 1;
  std::vector<mp_limb_t> lp = unpack_limbs(plus, (slots + 1) * limbs), lm = unpack_limbs(minus, (slots + 1) * limbs);
  const Integer den = da * db;
  const std::size_t degree = a.coeffs().size() + b.coeffs().size() - 2;
  std::vector<Constant> out;
  out.reserve(degree + 1);
  Integer x, y;
  for (std::size_t k = 0; k <= degree; ++k) {
    std::vector<Rational> coords(stride);
    for (std::size_t i = 0; i < stride; ++i) {
      const std::size_t slot = k * stride + i;
      if (slot >= slots) break;
      mpz_import(x.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, lp.data() + slot * limbs);
      mpz_import(y.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, lm.data() + slot * limbs);
      coords[i] = Rational(x - y, den);
    }
    out.push_back(Constant::from_coordinates(F, std::move(coords)));
  }
  return Polynomial(F, std::move(out));
}

}  // namespace skolemff::detail
