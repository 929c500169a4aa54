#include "skolemff/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

namespace skolemff {

long max_factor_degree() {
  if (const char* env = std::getenv("SKOLEMFF_MAX_DEGREE")) {
    try {
      long v = std::stol(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 64;
}

namespace {

// ---------------------------------------------------------------------------
// Finite fields: distinct-degree + equal-degree splitting.

Constant random_constant(const Field& F, std::mt19937_64& rng) {
  const std::uint64_t p = F.characteristic();
  std::vector<std::uint64_t> coords(F.dimension());
  for (auto& c : coords) c = rng() % p;
  return Constant::from_coordinates(F, std::move(coords));
}

Polynomial random_poly(const Field& F, long below_degree, std::mt19937_64& rng) {
  std::vector<Constant> v;
  for (long i = 0; i < below_degree; ++i) v.push_back(random_constant(F, rng));
  return Polynomial(F, std::move(v));
}

void equal_degree_split(const Polynomial& g, long d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Field& F = g.field();
  const Polynomial one = Polynomial::constant(F.one());
  const bool even = F.characteristic() == 2;
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), F.size().get_mpz_t(), static_cast<unsigned long>(d));
  const Integer half = (qd - 1) / 2;
  const long trace_len = static_cast<long>(F.dimension()) * d;
  for (;;) {
    Polynomial a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    Polynomial b(F);
    if (even) {
      Polynomial term = a % g;
      b = term;
      for (long i = 1; i < trace_len; ++i) {
        term = mulmod(term, term, g);
        b += term;
      }
    } else {
      b = powmod(a, half, g) - one;
    }
    Polynomial h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(exact_div(g, h), d, rng, out);
      return;
    }
  }
}

std::vector<Polynomial> factor_finite(const Polynomial& f) {
  const Field& F = f.field();
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<Polynomial> out;
  const Polynomial t = Polynomial::variable(F);
  Polynomial rem = f;
  Polynomial h = t % rem;
  long i = 0;
  while (rem.degree() >= 2 * (i + 1)) {
    ++i;
    h = powmod(h, F.size(), rem);
    Polynomial g = gcd(h - t, rem);
    if (g.degree() > 0) {
      equal_degree_split(g, i, rng, out);
      rem = exact_div(rem, g);
      h = h % rem;
    }
  }
  if (rem.degree() > 0) out.push_back(rem.monic());
  return out;
}

// ---------------------------------------------------------------------------
// ℚ: Zassenhaus.

const Field& rationals() { return Field::get(FieldSpec::rationals()); }

Polynomial to_fp(const IntPoly& g, const Field& Fp) { return Polynomial::from_ints(Fp, g); }

IntPoly from_fp(const Polynomial& a) {
  IntPoly r;
  for (const auto& c : a.coeffs()) r.push_back(Integer(c.prime_field_value()));
  intpoly_trim(r);
  return r;
}

void reduce_mod(IntPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  intpoly_trim(a);
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  intpoly_trim(r);
  return r;
}

void add_scaled(IntPoly& a, const IntPoly& b, const Integer& s) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  intpoly_trim(a);
}

// h ≡ u0·v0 (mod p), u0 monic, gcd(u0, v0) = 1 mod p. Returns (u, v) with
// h ≡ u·v (mod p^k), u monic, u ≡ u0 and v ≡ v0 (mod p).
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& h, const Polynomial& u0, const Polynomial& v0, unsigned long p,
                                        unsigned k) {
  const Field& Fp = u0.field();
  ExtendedGcd e = xgcd(u0, v0);
  if (e.g.degree() != 0) throw std::logic_error("hensel_pair: factors not coprime mod p");
  IntPoly u = from_fp(u0), v = from_fp(v0);
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    Integer next = pj * p;
    IntPoly err = sub(h, intpoly_mul(u, v));
    reduce_mod(err, next);
    for (auto& c : err) c /= pj;
    Polynomial E = to_fp(err, Fp);
    auto [quo, rem] = (e.t * E).divrem(u0);
    Polynomial du = rem;
    Polynomial dv = e.s * E + quo * v0;
    add_scaled(u, from_fp(du), pj);
    add_scaled(v, from_fp(dv), pj);
    pj = next;
    reduce_mod(u, pj);
    reduce_mod(v, pj);
  }
  return {u, v};
}

void hensel_all(const IntPoly& h, const std::vector<Polynomial>& factors, unsigned long p, unsigned k,
                const Integer& modulus, std::vector<IntPoly>& out) {
  const Field& Fp = factors.front().field();
  if (factors.size() == 1) {
    Integer inv;
    Integer lc = h.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    IntPoly m = h;
    for (auto& c : m) c *= inv;
    reduce_mod(m, modulus);
    out.push_back(m);
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<Polynomial> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<Polynomial> right(factors.begin() + static_cast<long>(half), factors.end());
  Polynomial u0 = Polynomial::constant(Fp.one());
  for (const auto& f : left) u0 *= f;
  Polynomial v0 = Polynomial::constant(Fp.from_integer(h.back()));
  for (const auto& f : right) v0 *= f;
  auto [u, v] = hensel_pair(h, u0, v0, p, k);
  hensel_all(u, left, p, k, modulus, out);
  hensel_all(v, right, p, k, modulus, out);
}

Integer content(const IntPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(IntPoly a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

bool try_exact_div(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  try {
    q = intpoly_exact_div(a, b);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

constexpr long kMaxSubsetChecks = 500000;

}  // namespace

std::vector<IntPoly> factor_integer_squarefree(const IntPoly& input) {
  IntPoly g = primitive_part(input);
  const long n = static_cast<long>(g.size()) - 1;
  if (n <= 1) return {g};

  // Pick the prime (among a few good ones) giving the fewest modular factors.
  unsigned long best_p = 0;
  std::vector<Polynomial> best_factors;
  int good = 0;
  for (unsigned long p = 3; good < 4; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(g.back().get_mpz_t(), p)) continue;
    const Field& Fp = Field::get(FieldSpec::finite(p));
    Polynomial gp = to_fp(g, Fp);
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    ++good;
    std::vector<Polynomial> fs = factor_finite(gp.monic());
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) return {g};

  // Mignotte-style bound on coefficients of lc·(any factor).
  Integer norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  norm2 = sqrt(norm2) + 1;
  Integer bound = norm2 * abs(g.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;
  unsigned k = 1;
  Integer modulus = best_p;
  while (modulus <= bound) {
    modulus *= best_p;
    ++k;
  }

  std::vector<IntPoly> lifted;
  hensel_all(g, best_factors, best_p, k, modulus, lifted);

  const Integer half_mod = modulus / 2;
  auto symmetric = [&](IntPoly a) {
    for (auto& c : a) {
      c %= modulus;
      if (c < 0) c += modulus;
      if (c > half_mod) c -= modulus;
    }
    intpoly_trim(a);
    return a;
  };

  std::vector<IntPoly> result;
  std::vector<std::size_t> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  long checks = 0;
  std::size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    for (;;) {
      if (++checks > kMaxSubsetChecks)
        throw Error(ErrorKind::FactorizationTooHard, "Zassenhaus recombination exceeded its subset budget");
      IntPoly cand{g.back()};
      for (std::size_t i : pick) {
        cand = intpoly_mul(cand, lifted[idx[i]]);
        reduce_mod(cand, modulus);
      }
      cand = primitive_part(symmetric(cand));
      IntPoly quot;
      bool plausible = cand[0] == 0 || g[0] == 0 || mpz_divisible_p(g[0].get_mpz_t(), cand[0].get_mpz_t());
      if (plausible && try_exact_div(g, cand, quot)) {
        result.push_back(cand);
        g = primitive_part(quot);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(idx[i]);
        idx = std::move(rest);
        found = true;
        break;
      }
      // Next combination.
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == idx.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (g.size() > 1) result.push_back(g);
  return result;
}

namespace {

std::vector<Polynomial> factor_rational(const Polynomial& f) {
  const Field& Q = f.field();
  Integer den = 1;
  for (const auto& c : f.coeffs()) {
    Rational r = c.rational_value();
    den = lcm(den, Integer(r.get_den()));
  }
  IntPoly g;
  for (const auto& c : f.coeffs()) {
    Rational r = c.rational_value() * den;
    g.push_back(r.get_num());
  }
  std::vector<Polynomial> out;
  for (const auto& h : factor_integer_squarefree(g)) out.push_back(Polynomial::from_ints(Q, h).monic());
  return out;
}

// ---------------------------------------------------------------------------
// ℚ(ζ_M): Trager's norm method.

Rational resultant_q(Polynomial a, Polynomial b) {
  Rational sign_acc = 1;
  for (;;) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (b.degree() == 0) {
      Rational lb = b.lc().rational_value(), r = 1;
      for (long i = 0; i < a.degree(); ++i) r *= lb;
      return sign_acc * r;
    }
    if (a.degree() == 0) {
      Rational la = a.lc().rational_value(), r = 1;
      for (long i = 0; i < b.degree(); ++i) r *= la;
      return sign_acc * r;
    }
    Polynomial r = a % b;
    if (r.is_zero()) return 0;
    if ((a.degree() * b.degree()) % 2 == 1) sign_acc = -sign_acc;
    Rational lb = b.lc().rational_value(), mult = 1;
    for (long i = 0; i < a.degree() - r.degree(); ++i) mult *= lb;
    sign_acc *= mult;
    a = std::move(b);
    b = std::move(r);
  }
}

Rational norm_to_q(const Constant& c) {
  if (c.is_zero()) return 0;
  const Field& K = c.field();
  const Field& Q = rationals();
  std::vector<Constant> phi, b;
  for (const auto& x : K.cyclotomic_modulus()) phi.push_back(Q.from_rational(x));
  for (const auto& x : c.rational_coords()) b.push_back(Q.from_rational(x));
  return resultant_q(Polynomial(Q, phi), Polynomial(Q, b));
}

Polynomial interpolate_q(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const Field& Q = rationals();
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Polynomial poly = Polynomial::constant(Q.from_rational(ys[m - 1]));
  const Polynomial t = Polynomial::variable(Q);
  for (std::size_t i = m - 1; i-- > 0;) {
    poly = poly * (t - Polynomial::constant(Q.from_rational(xs[i])));
    poly += Polynomial::constant(Q.from_rational(ys[i]));
  }
  return poly;
}

std::vector<Polynomial> factor_cyclotomic_field(const Polynomial& f) {
  const Field& K = f.field();
  const long n = f.degree();
  const long D = static_cast<long>(K.dimension());
  if (n * D > max_factor_degree())
    throw Error(ErrorKind::FactorizationTooHard, "norm of degree " + std::to_string(n * D) + " exceeds the cap");
  const Polynomial t = Polynomial::variable(K);
  const Constant alpha = K.generator();
  for (long step = 0; step < 64; ++step) {
    const long s = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    Polynomial shift = t - Polynomial::constant(alpha * K.from_int(s));
    Polynomial gs = f.compose(shift);
    std::vector<Rational> xs, ys;
    for (long x0 = 0; x0 <= n * D; ++x0) {
      xs.emplace_back(x0);
      ys.push_back(norm_to_q(gs.eval(K.from_int(x0))));
    }
    Polynomial N = interpolate_q(xs, ys);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    std::vector<Polynomial> out;
    const Polynomial back = t + Polynomial::constant(alpha * K.from_int(s));
    for (const auto& Ni : factor_rational(N.monic())) {
      std::vector<Constant> lifted;
      for (const auto& c : Ni.coeffs()) lifted.push_back(K.from_rational(c.rational_value()));
      Polynomial h = gcd(gs, Polynomial(K, lifted));
      if (h.degree() > 0) out.push_back(h.compose(back).monic());
    }
    return out;
  }
  throw Error(ErrorKind::FactorizationTooHard, "no squarefree norm found");
}

}  // namespace

std::vector<Polynomial> factor_squarefree(const Polynomial& f) {
  if (f.degree() <= 1) return {f.monic()};
  if (f.degree() > max_factor_degree())
    throw Error(ErrorKind::FactorizationTooHard,
                "degree " + std::to_string(f.degree()) + " exceeds SKOLEMFF_MAX_DEGREE=" +
                    std::to_string(max_factor_degree()));
  const Field& F = f.field();
  std::vector<Polynomial> out;
  if (!F.char_zero()) out = factor_finite(f.monic());
  else if (F.dimension() == 1) out = factor_rational(f.monic());
  else out = factor_cyclotomic_field(f.monic());
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factor(const Polynomial& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "factor of the zero polynomial");
  Factorization result{a.lc(), {}};
  for (const auto& [g, m] : squarefree_decomposition(a))
    for (auto& h : factor_squarefree(g)) result.factors.emplace_back(std::move(h), m);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return result;
}

bool is_irreducible(const Polynomial& a) {
  if (a.degree() < 1) return false;
  Factorization f = factor(a);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<Constant> roots_in_field(const Polynomial& a) {
  std::vector<Constant> out;
  for (const auto& [g, m] : factor(a).factors)
    if (g.degree() == 1) out.push_back(-g.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skolemff
