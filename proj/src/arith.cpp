#include "skolemff/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "skolemff/error.hpp"

namespace skolemff {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::ConstantF: return "ConstantF";
    case ErrorKind::NotSInteger: return "NotSInteger";
    case ErrorKind::NotSUnit: return "NotSUnit";
    case ErrorKind::MultiplicativelyDependent: return "MultiplicativelyDependent";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::QEqualsOne: return "QEqualsOne";
    case ErrorKind::BadChiS: return "BadChiS";
    case ErrorKind::PreconditionGlobalZeroExists: return "PreconditionGlobalZeroExists";
    case ErrorKind::FactorizationTooHard: return "FactorizationTooHard";
    case ErrorKind::RootSearchIncomplete: return "RootSearchIncomplete";
    case ErrorKind::CharPUnsupported: return "CharPUnsupported";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  // a is assumed coprime to m.
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd_u64(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factor_u64(0)");
  std::map<std::uint64_t, int> out;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_into(n, out);
  return {out.begin(), out.end()};
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ds{1};
  for (auto [p, e] : factor_u64(n)) {
    const std::size_t base = ds.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factor_u64(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
  return phi;
}

int ord_p(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

void intpoly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  intpoly_trim(c);
  return c;
}

IntPoly intpoly_exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("intpoly_exact_div by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("intpoly_exact_div: not divisible");
  IntPoly rem = a;
  IntPoly q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& top = rem[i + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::logic_error("intpoly_exact_div: not divisible");
    Integer c = top / lb;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  intpoly_trim(rem);
  if (!rem.empty()) throw std::logic_error("intpoly_exact_div: not divisible");
  intpoly_trim(q);
  return q;
}

IntPoly cyclotomic_poly(std::uint64_t k) {
  if (k == 0) throw std::domain_error("cyclotomic_poly(0)");
  // Φ_k = ∏_{d|k} (x^d − 1)^{μ(k/d)}: multiply the μ = +1 factors, then
  // divide out the μ = −1 ones; both are O(len) passes on sparse binomials.
  IntPoly acc{1};
  std::vector<std::uint64_t> dividers;
  for (std::uint64_t d : divisors(k)) {
    int mu = moebius(k / d);
    if (mu == 1) {
      IntPoly next(acc.size() + d);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i + d] += acc[i];
        next[i] -= acc[i];
      }
      acc = std::move(next);
    } else if (mu == -1) {
      dividers.push_back(d);
    }
  }
  for (std::uint64_t d : dividers) {
    // acc = Q·(x^d − 1)  ⇒  Q_i = acc_{i+d} + Q_{i+d}, from the top down.
    IntPoly q(acc.size() - d);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = acc[i + d];
      if (i + d < q.size()) q[i] += q[i + d];
    }
    acc = std::move(q);
  }
  intpoly_trim(acc);
  return acc;
}

std::string intpoly_to_string(const IntPoly& a) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    Integer c = a[i];
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer ac = abs(c);
    if (ac != 1 || i == 0) out += ac.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string rational_to_string(const Rational& raw) {
  Rational q = raw;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer integer_from_string(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidArgument, "bad integer '" + s + "'");
  return z;
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from_string(s));
  Integer n = integer_from_string(s.substr(0, slash));
  Integer d = integer_from_string(s.substr(slash + 1));
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace skolemff
