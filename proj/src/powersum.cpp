#include "skolemff/powersum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "skolemff/factor.hpp"

namespace skolemff {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInstance, what); }

Integer to_integer(std::uint64_t x) { return Integer(std::to_string(x)); }

long mod_exponent(long d_ins, long r, long k, std::uint64_t d) {
  __int128 x = static_cast<__int128>(d_ins) * r * k;
  __int128 m = static_cast<__int128>(d);
  x %= m;
  if (x < 0) x += m;
  return static_cast<long>(x);
}

Constant eps_pow(const RootOfUnity& eps, long k) {
  long o = static_cast<long>(eps.order);
  long j = ((k % o) + o) % o;
  return eps.value.pow(j);
}

// The unique g with g^{deg_ins f} = f.
RationalFunction inseparable_root(const RationalFunction& f) {
  if (f.field().char_zero()) return f;
  Polynomial num = f.num(), den = f.den();
  while (is_pth_power_poly(num) && is_pth_power_poly(den) && (num.degree() > 0 || den.degree() > 0)) {
    num = pth_root_poly(num);
    den = pth_root_poly(den);
  }
  return RationalFunction(num, den);
}

// Φ_d(x) = Φ_rad(x^{d/rad}), so the homogenized form only needs the small
// polynomial Φ_rad.
std::pair<std::uint64_t, std::uint64_t> radical_split(std::uint64_t d) {
  std::uint64_t rad = 1;
  for (const auto& [p, e] : factor_u64(d)) rad *= p;
  return {rad, d / rad};
}

Polynomial cyclotomic_hom(std::uint64_t d, const Polynomial& u, const Polynomial& v) {
  auto [rad, s] = radical_split(d);
  return homogenize(cyclotomic_poly(rad), u.pow(s), v.pow(s));
}

// Φ_d^hom(u, v) mod m.
Polynomial cyclotomic_hom_mod(std::uint64_t d, const Polynomial& u, const Polynomial& v, const Polynomial& m) {
  auto [rad, s] = radical_split(d);
  const IntPoly phi = cyclotomic_poly(rad);
  Polynomial us = powmod(u % m, to_integer(s), m), vs = powmod(v % m, to_integer(s), m);
  const Field& F = m.field();
  const std::size_t n = phi.size() - 1;
  Polynomial h = Polynomial::constant(F.from_integer(phi[n])) % m;
  Polynomial vp = Polynomial::constant(F.one()) % m;
  for (std::size_t j = n; j-- > 0;) {
    vp = mulmod(vp, vs, m);
    h = mulmod(h, us, m);
    if (phi[j] != 0) h = (h + vp * F.from_integer(phi[j])) % m;
  }
  return h;
}

// Radical of a layer Φ_d^hom(u, v): its repeated factors all divide
// w = u'v − uv', so only the (small) common part with w needs the general
// squarefree machinery.
Polynomial layer_radical(const Polynomial& g, const Polynomial& w) {
  if (g.degree() <= 0) return g.is_zero() ? g : Polynomial::constant(g.field().one());
  Polynomial t = gcd(g, w);
  if (t.degree() <= 0) return g.monic();
  Polynomial tr = radical(t);
  Polynomial rest = g;
  for (;;) {
    Polynomial c = gcd(rest, tr);
    if (c.degree() <= 0) break;
    rest = exact_div(rest, c);
  }
  return (rest * gcd(g, tr)).monic();
}

std::vector<Polynomial> monic_divisors(const Polynomial& a) {
  std::vector<Polynomial> out{Polynomial::constant(a.field().one())};
  if (a.degree() <= 0) return out;
  for (const auto& [g, m] : factor(a).factors) {
    std::vector<Polynomial> next;
    for (const auto& d : out) {
      Polynomial x = d;
      for (long i = 0; i <= m; ++i) {
        next.push_back(x);
        x = x * g;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Synthetic division by X − β.
std::pair<KPoly, RationalFunction> divide_linear(const KPoly& p, const RationalFunction& beta) {
  const long n = p.degree();
  std::vector<RationalFunction> q(static_cast<std::size_t>(std::max(0L, n)), RationalFunction(p.field()));
  RationalFunction acc(p.field());
  for (long j = n; j >= 1; --j) {
    acc = p.coeff(static_cast<std::size_t>(j)) + acc * beta;
    q[static_cast<std::size_t>(j - 1)] = acc;
  }
  RationalFunction rem = p.coeff(0) + acc * beta;
  return {KPoly(p.field(), std::move(q)), rem};
}

KPoly linear(const RationalFunction& beta) {
  return KPoly(beta.field(), {-beta, RationalFunction::constant(beta.field().one())});
}

std::size_t lowest_nonzero(const KPoly& p) {
  std::size_t s = 0;
  while (p.coeff(s).is_zero()) ++s;
  return s;
}

KPoly strip_and_normalize(const KPoly& p) {
  const std::size_t s = lowest_nonzero(p);
  const RationalFunction lc = p.coeffs().back();
  std::vector<RationalFunction> c;
  for (std::size_t i = s; i < p.coeffs().size(); ++i) c.push_back(p.coeffs()[i] / lc);
  return KPoly(p.field(), std::move(c));
}

}  // namespace

// ---------------------------------------------------------------------------

PowerSumInstance::PowerSumInstance(std::vector<RationalFunction> lambdas, std::vector<RootOfUnity> epsilons,
                                   std::vector<long> r, RationalFunction f, PlaceSet s, long genus)
    : lambdas_(std::move(lambdas)),
      epsilons_(std::move(epsilons)),
      r_(std::move(r)),
      f_(std::move(f)),
      s_(std::move(s)),
      genus_(genus) {
  if (lambdas_.empty()) invalid("at least one term is required");
  if (epsilons_.size() != lambdas_.size() || r_.size() != lambdas_.size())
    invalid("lambdas, epsilons and r must have equal length");
  const Field* field = &f_.field();
  if (f_.is_zero() || f_.is_constant()) invalid("f must be nonconstant");
  if (!is_s_unit(f_, s_)) invalid("f must be an S-unit");
  for (const auto& p : s_)
    if (!p.is_infinity() && &p.poly().field() != field) invalid("place over another field");
  for (const auto& l : lambdas_) {
    if (&l.field() != field) invalid("lambda over another field");
    if (l.is_zero()) invalid("lambdas must be nonzero");
    if (!is_s_integer(l, s_)) invalid("lambda " + l.to_string() + " is not an S-integer");
  }
  for (const auto& eps : epsilons_) {
    if (&eps.value.field() != field) invalid("epsilon over another field");
    if (eps.value.pow(static_cast<long>(eps.order)) != field->one()) invalid("epsilon order is wrong");
    e_ = lcm_u64(e_, eps.order);
  }
  if (!field->char_zero() && e_ % field->characteristic() == 0) invalid("p divides e");
}

long PowerSumInstance::r_min() const { return *std::min_element(r_.begin(), r_.end()); }
long PowerSumInstance::r_max() const { return *std::max_element(r_.begin(), r_.end()); }

PowerSumInstance PowerSumInstance::with_places(PlaceSet s) const {
  return PowerSumInstance(lambdas_, epsilons_, r_, f_, std::move(s), genus_);
}

namespace {

Polynomial embed_poly(const Polynomial& a, const Field& target) {
  std::vector<Constant> c;
  for (const auto& x : a.coeffs()) c.push_back(embed(x, target));
  return Polynomial(target, std::move(c));
}

RationalFunction embed_rf(const RationalFunction& x, const Field& target) {
  return RationalFunction(embed_poly(x.num(), target), embed_poly(x.den(), target));
}

}  // namespace

PowerSumInstance PowerSumInstance::embedded(const Field& target) const {
  std::vector<RationalFunction> lambdas;
  for (const auto& l : lambdas_) lambdas.push_back(embed_rf(l, target));
  std::vector<RootOfUnity> eps;
  for (const auto& x : epsilons_) eps.push_back(RootOfUnity{x.order, embed(x.value, target)});
  PlaceSet s;
  for (const auto& p : s_) {
    if (p.is_infinity()) {
      s.insert(p);
      continue;
    }
    for (const auto& [g, m] : factor(embed_poly(p.poly(), target)).factors) s.insert(Place::finite(g, true));
  }
  return PowerSumInstance(lambdas, eps, r_, embed_rf(f_, target), s, genus_);
}

RationalFunction eval_B(const PowerSumInstance& inst, long n) {
  // Over the common denominator D·V^{R|n|}: B(n) = (U^{r_min}/V^{R})^{|n|}·S/D with
  // S = Σ λ_i D ε_i^n U^{(r_i − r_min)|n|} V^{(R − r_i)|n|}, (U, V) = (num f, den f)
  // for n ≥ 0 and swapped for n < 0. One normalization at the end.
  const Field& F = inst.field();
  const bool neg = n < 0;
  const std::uint64_t an = static_cast<std::uint64_t>(neg ? -n : n);
  const Polynomial P = (neg ? inst.f().den() : inst.f().num()).pow(an);
  const Polynomial Q = (neg ? inst.f().num() : inst.f().den()).pow(an);
  const long lo = inst.r_min(), hi = inst.r_max();
  std::vector<Polynomial> pp{Polynomial::constant(F.one())}, qp{Polynomial::constant(F.one())};
  for (long j = 0; j < hi - lo; ++j) {
    pp.push_back(pp.back() * P);
    qp.push_back(qp.back() * Q);
  }
  Polynomial d = Polynomial::constant(F.one());
  for (const auto& l : inst.lambdas()) d = exact_div(d * l.den(), gcd(d, l.den()));
  Polynomial sum(F);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const auto& l = inst.lambdas()[i];
    const auto j = static_cast<std::size_t>(inst.r()[i] - lo);
    sum += l.num() * exact_div(d, l.den()) * eps_pow(inst.epsilons()[i], n) * pp[j] * qp[static_cast<std::size_t>(hi - lo) - j];
  }
  if (sum.is_zero()) return RationalFunction(F);
  Polynomial num = std::move(sum), den = std::move(d);
  (lo >= 0 ? num : den) *= P.pow(static_cast<std::uint64_t>(std::abs(lo)));
  (hi >= 0 ? den : num) *= Q.pow(static_cast<std::uint64_t>(std::abs(hi)));
  return RationalFunction(std::move(num), std::move(den));
}

KPoly companion_poly(const PowerSumInstance& inst, long c) {
  const long rmin = inst.r_min();
  std::vector<RationalFunction> coeffs(static_cast<std::size_t>(inst.spread() + 1), RationalFunction(inst.field()));
  for (std::size_t i = 0; i < inst.m(); ++i)
    coeffs[static_cast<std::size_t>(inst.r()[i] - rmin)] +=
        inst.lambdas()[i] * RationalFunction::constant(eps_pow(inst.epsilons()[i], c));
  return KPoly(inst.field(), std::move(coeffs));
}

std::optional<PowerSumInstance> class_instance(const PowerSumInstance& inst, long c) {
  std::map<long, RationalFunction> collected;
  for (std::size_t i = 0; i < inst.m(); ++i) {
    RationalFunction mu = inst.lambdas()[i] * RationalFunction::constant(eps_pow(inst.epsilons()[i], c)) *
                          inst.f().pow(inst.r()[i] * c);
    auto it = collected.find(inst.r()[i]);
    if (it == collected.end()) collected.emplace(inst.r()[i], mu);
    else it->second += mu;
  }
  std::vector<RationalFunction> lambdas;
  std::vector<RootOfUnity> eps;
  std::vector<long> r;
  for (const auto& [ri, mu] : collected) {
    if (mu.is_zero()) continue;
    lambdas.push_back(mu);
    eps.push_back(RootOfUnity{1, inst.field().one()});
    r.push_back(ri);
  }
  if (lambdas.empty()) return std::nullopt;
  return PowerSumInstance(lambdas, eps, r, inst.f().pow(static_cast<long>(inst.e())), inst.s(), inst.genus());
}

// ---------------------------------------------------------------------------

struct LocalChecker::Impl {
  struct Layer {
    std::uint64_t d = 1;
    bool built = false;
    Polynomial rad;
    Polynomial u, v;
    std::vector<Polynomial> lifted;
  };

  PowerSumInstance inst;
  long d_ins = 1;
  Polynomial u, v, w;
  std::vector<Polynomial> lifted;  // λ_i times the common denominator
  std::vector<Layer> layers;
  std::uint64_t inf_order = 0;  // order of g(∞) when ∞ ∉ S and it matters
  std::vector<Constant> lambda_inf;
  Constant c_inf;

  Impl(const PowerSumInstance& in, std::uint64_t a)
      : inst(in), u(in.field()), v(in.field()), w(in.field()), c_inf(in.field().zero()) {
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "a must be positive");
    const Field& F = inst.field();
    d_ins = deg_ins(inst.f());
    RationalFunction g = inseparable_root(inst.f());
    u = g.num();
    v = g.den();
    w = u.derivative() * v - u * v.derivative();
    // In char p, f^a − 1 = (f^{a0} − 1)^{p^j} and f = g^{deg_ins}: only the
    // p-free part a0 matters.
    std::uint64_t a0 = a;
    if (!F.char_zero())
      while (a0 % F.characteristic() == 0) a0 /= F.characteristic();
    for (std::uint64_t d : divisors(a0)) layers.push_back(Layer{d, false, Polynomial(F), Polynomial(F), Polynomial(F), {}});

    Polynomial l = Polynomial::constant(F.one());
    for (const auto& lam : inst.lambdas()) l = exact_div(l * lam.den(), gcd(l, lam.den()));
    for (const auto& lam : inst.lambdas()) lifted.push_back(lam.num() * exact_div(l, lam.den()));

    if (!inst.s().contains_infinity() && u.degree() == v.degree()) {
      c_inf = u.lc() / v.lc();
      if (auto o = torsion_order(c_inf); o && a0 % *o == 0) {
        inf_order = *o;
        for (const auto& lam : inst.lambdas())
          lambda_inf.push_back(lam.num().degree() == lam.den().degree() ? lam.num().lc() / lam.den().lc() : F.zero());
      }
    }
  }

  void build(Layer& layer) {
    if (layer.built) return;
    Polynomial g = cyclotomic_hom(layer.d, u, v);
    g = strip_places(g, inst.s());
    layer.rad = layer_radical(g, w);
    if (layer.rad.degree() > 0) {
      layer.u = u % layer.rad;
      layer.v = v % layer.rad;
      for (const auto& x : lifted) layer.lifted.push_back(x % layer.rad);
    }
    layer.built = true;
  }

  // Residue of (common denominator)·v^d·B(k) modulo the layer radical.
  Polynomial residue(Layer& layer, long k) {
    const Polynomial& m = layer.rad;
    Polynomial q(inst.field());
    for (std::size_t i = 0; i < inst.m(); ++i) {
      long e = mod_exponent(d_ins, inst.r()[i], k, layer.d);
      Polynomial term = mulmod(powmod(layer.u, Integer(e), m), powmod(layer.v, Integer(static_cast<long>(layer.d) - e), m), m);
      term = mulmod(term, layer.lifted[i], m) * eps_pow(inst.epsilons()[i], k);
      q += term;
    }
    return q % m;
  }

  bool infinity_passes(long k) const {
    Constant s = inst.field().zero();
    for (std::size_t i = 0; i < inst.m(); ++i)
      s += lambda_inf[i] * eps_pow(inst.epsilons()[i], k) * c_inf.pow(mod_exponent(d_ins, inst.r()[i], k, inf_order));
    return s.is_zero();
  }

  bool layer_passes(Layer& layer, long k) {
    if (layer.d == inf_order && !infinity_passes(k)) return false;
    build(layer);
    if (layer.rad.degree() <= 0) return true;
    return residue(layer, k).is_zero();
  }
};

LocalChecker::LocalChecker(const PowerSumInstance& inst, std::uint64_t a) : impl_(std::make_unique<Impl>(inst, a)) {}
LocalChecker::~LocalChecker() = default;

bool LocalChecker::passes(long k) {
  for (auto& layer : impl_->layers)
    if (!impl_->layer_passes(layer, k)) return false;
  return true;
}

LocalCheck LocalChecker::check(long k) {
  LocalCheck out;
  out.passes = true;
  for (auto& layer : impl_->layers) {
    bool ok = true;
    if (layer.d == impl_->inf_order && !impl_->infinity_passes(k)) {
      ok = false;
      out.failing_places.push_back(Place::infinity());
    }
    impl_->build(layer);
    if (layer.rad.degree() > 0) {
      Polynomial q = impl_->residue(layer, k);
      if (!q.is_zero()) {
        ok = false;
        Polynomial missed = exact_div(layer.rad, gcd(layer.rad, q));
        if (missed.degree() <= max_factor_degree()) {
          for (const auto& [g, m] : factor(missed).factors) out.failing_places.push_back(Place::finite(g, true));
        } else {
          out.places_complete = false;
        }
      }
    }
    if (!ok) {
      out.passes = false;
      out.failing_orders.push_back(layer.d);
    }
  }
  std::sort(out.failing_places.begin(), out.failing_places.end());
  return out;
}

LocalCheck local_vanishing_check(const PowerSumInstance& inst, long k, std::uint64_t a) {
  return LocalChecker(inst, a).check(k);
}

std::optional<long> find_local_witness(const PowerSumInstance& inst, std::uint64_t a, long k_bound) {
  LocalChecker checker(inst, a);
  for (long k = 0; k <= k_bound; ++k)
    if (checker.passes(k)) return k;
  for (long k = -1; k >= -k_bound; --k)
    if (checker.passes(k)) return k;
  return std::nullopt;
}

std::optional<long> decide_global_zero(const PowerSumInstance& inst, std::optional<long> n_bound) {
  const long e = static_cast<long>(inst.e());
  const long hf = height(inst.f());
  std::optional<long> best;
  auto consider = [&](long n) {
    if (!best || std::abs(n) < std::abs(*best) || (std::abs(n) == std::abs(*best) && n > *best)) best = n;
  };
  for (long c = 0; c < e; ++c) {
    KPoly pc = companion_poly(inst, c);
    if (pc.is_zero()) {
      // B vanishes on the whole class; its smallest members are c and c − e.
      consider(c);
      if (c > 0) consider(c - e);
      continue;
    }
    long window = n_bound ? *n_bound : poly_height(pc) / hf;
    if (pc.degree() == static_cast<long>(lowest_nonzero(pc)) && !n_bound) continue;  // monomial: no zeros
    long start = -window;
    start += ((c - start) % e + e) % e;
    for (long n = start; n <= window; n += e) {
      if (best && std::abs(n) > std::abs(*best)) continue;
      if (pc.eval(inst.f().pow(n)).is_zero()) consider(n);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

std::vector<KRoot> roots_in_K(const KPoly& p, bool& complete) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const Field& F = p.field();
  const std::size_t s = lowest_nonzero(p);
  const long n = p.degree() - static_cast<long>(s);
  complete = true;
  if (n == 0) return {};

  Polynomial l = Polynomial::constant(F.one());
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) l = exact_div(l * c.den(), gcd(l, c.den()));
  std::vector<Polynomial> a;
  Polynomial content(F);
  for (std::size_t i = s; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    a.push_back(c.is_zero() ? Polynomial(F) : c.num() * exact_div(l, c.den()));
    content = gcd(content, a.back());
  }
  for (auto& x : a) x = x / content;

  std::vector<RationalFunction> found;
  const auto us = monic_divisors(a.front()), vs = monic_divisors(a.back());
  for (const auto& u : us)
    for (const auto& v : vs) {
      if (gcd(u, v).degree() > 0) continue;
      // Σ_j a_j (c·u)^j v^{n−j} = 0 coefficientwise in t gives polynomials in c.
      std::vector<Polynomial> cj;
      Polynomial up = Polynomial::constant(F.one());
      std::vector<Polynomial> vpow{Polynomial::constant(F.one())};
      for (long j = 1; j <= n; ++j) vpow.push_back(vpow.back() * v);
      long top = 0;
      for (long j = 0; j <= n; ++j) {
        cj.push_back(a[static_cast<std::size_t>(j)] * up * vpow[static_cast<std::size_t>(n - j)]);
        top = std::max(top, cj.back().degree());
        up = up * u;
      }
      Polynomial g(F);
      for (long i = 0; i <= top; ++i) {
        std::vector<Constant> coeffs;
        for (long j = 0; j <= n; ++j) coeffs.push_back(cj[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(i)));
        g = gcd(g, Polynomial(F, std::move(coeffs)));
        if (g.degree() == 0) break;
      }
      if (g.degree() < 1) continue;
      for (const auto& c : roots_in_field(g)) {
        if (c.is_zero()) continue;
        found.push_back(RationalFunction(u * c, v));
      }
    }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  std::vector<RationalFunction> shifted(p.coeffs().begin() + static_cast<long>(s), p.coeffs().end());
  KPoly work(F, shifted);
  std::vector<KRoot> out;
  long total = 0;
  for (const auto& beta : found) {
    long mult = 0;
    for (;;) {
      auto [q, rem] = divide_linear(work, beta);
      if (!rem.is_zero()) break;
      work = q;
      ++mult;
    }
    if (mult > 0) {
      out.push_back(KRoot{beta, mult});
      total += mult;
    }
  }
  complete = total == n;
  return out;
}

DepIndSplit split_dep_ind(const KPoly& p, const RationalFunction& base) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "split of the zero polynomial");
  const Field& F = p.field();
  DepIndSplit out{strip_and_normalize(p), {}, {}, KPoly(F), KPoly(F), KPoly(F), true};
  auto roots = roots_in_K(out.monic, out.complete);
  KPoly dep(F, {RationalFunction::constant(F.one())});
  KPoly rest = out.monic;
  for (const auto& root : roots) {
    ClassifiedRoot c{root.beta, root.multiplicity, false, 0, 0};
    if (auto w = dependence_exponents(root.beta, base)) {
      c.dependent = true;
      c.q_exact = w->exact_q();
      c.r_exact = w->exact_r();
      for (long i = 0; i < root.multiplicity; ++i) {
        dep = dep * linear(root.beta);
        rest = divide_linear(rest, root.beta).first;
      }
      out.dep.push_back(c);
    } else {
      out.ind.push_back(c);
    }
  }
  out.p_dep = dep;
  out.p_ind = rest;
  for (const auto& c : out.ind)
    for (long i = 0; i < c.multiplicity; ++i) rest = divide_linear(rest, c.beta).first;
  out.remainder = rest;
  return out;
}

long choose_q(const DepIndSplit& split) {
  if (split.dep.empty()) return 2;
  long q = 1;
  for (const auto& d : split.dep) q = std::lcm(q, d.q_exact);
  return q;
}

std::vector<long> common_r(const DepIndSplit& split, long q) {
  std::vector<long> out;
  for (const auto& d : split.dep) out.push_back(d.r_exact * (q / d.q_exact));
  return out;
}

std::uint64_t choose_p(const std::vector<long>& r_betas, long q) {
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p) || q % static_cast<long>(p) == 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r_betas.size() && ok; ++i)
      for (std::size_t j = 0; j < r_betas.size() && ok; ++j) {
        long diff = r_betas[i] - r_betas[j];
        if (diff != 0 && diff % static_cast<long>(p) == 0) ok = false;
      }
    if (ok) return p;
  }
}

bool terminal_inequality_holds(const EllInputs& in, long ell) {
  Integer pl = 1;
  for (long i = 0; i < ell; ++i) pl *= static_cast<unsigned long>(in.p);
  Integer phi = pl - pl / static_cast<unsigned long>(in.p);
  Integer lhs = (phi - 2) * in.h_f - in.chi;
  if (lhs <= 0) return true;
  Integer inner = pl * in.q * in.h_f + in.h_p;
  Integer d = in.deg_p;
  Integer rhs = Integer(54) * d * d * d * in.chi * inner * inner;
  return lhs * lhs * lhs <= rhs;
}

long ell_bound(const EllInputs& in) {
  if (in.chi < 0) throw Error(ErrorKind::BadChiS, "chi_S must be non-negative");
  if (in.h_f < 1) throw Error(ErrorKind::ConstantF, "h(f) must be positive");
  for (long ell = 1; ell < 256; ++ell)
    if (!terminal_inequality_holds(in, ell)) return ell;
  throw Error(ErrorKind::InvalidArgument, "ell_bound did not terminate");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::GlobalZeroFound: return "GlobalZeroFound";
    case Verdict::LocalObstruction: return "LocalObstruction";
    case Verdict::InconclusiveWithinBounds: return "InconclusiveWithinBounds";
  }
  return "?";
}

// ---------------------------------------------------------------------------

long gcd_counting_cyclotomic(const RationalFunction& x, const RationalFunction& base,
                             const std::vector<std::uint64_t>& ks, const PlaceSet& s) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "gcd counting of zero");
  if (!is_s_integer(x, s)) throw Error(ErrorKind::NotSInteger, "gcd counting needs an S-integer");
  if (!is_s_unit(base, s)) throw Error(ErrorKind::NotSUnit, "the base must be an S-unit");
  const Polynomial& u = base.num();
  const Polynomial& v = base.den();
  long n = 0;
  Polynomial g = strip_places(x.num(), s);
  if (g.degree() > 0) {
    Polynomial h = Polynomial::constant(x.field().one());
    // F(P) lies in a field of degree deg P·[F:ℚ] and can only be a primitive
    // k-th root of unity when φ(k) fits in that degree.
    const std::uint64_t room = static_cast<std::uint64_t>(g.degree()) * x.field().dimension();
    for (std::uint64_t k : ks)
      if (euler_phi(k) <= room) h = mulmod(h, cyclotomic_hom_mod(k, u, v, g), g);
    n += gcd(g, h).degree();
  }
  if (!s.contains_infinity()) {
    // An S-unit base has neither zero nor pole at ∞, so deg u = deg v.
    Constant c0 = u.lc() / v.lc();
    auto order = torsion_order(c0);
    long vphi = 0;
    for (std::uint64_t k : ks)
      if (order && *order == k) vphi += v.degree() - (u - v * c0).degree();
    n += std::min(valuation(x, Place::infinity()), vphi);
  }
  return n;
}

namespace {

Integer power_u64(std::uint64_t p, long ell) {
  Integer r = 1;
  for (long i = 0; i < ell; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

std::uint64_t checked_u64(const Integer& x) {
  if (x > Integer("18446744073709551615")) throw Error(ErrorKind::FactorizationTooHard, "a exceeds 64 bits");
  return std::stoull(x.get_str());
}

constexpr std::uint64_t kMaxExtensionDimension = 32;

// Smallest n ≤ 1000 with r | X^n − 1, for r with constant coefficients.
std::optional<std::uint64_t> cyclotomic_closure(const KPoly& r) {
  if (r.degree() <= 0) return 1;
  const Field& F = r.field();
  std::vector<Constant> c;
  for (const auto& x : r.coeffs()) {
    if (!x.is_constant()) return std::nullopt;
    c.push_back(x.constant_value());
  }
  const Polynomial m(F, std::move(c));
  const Polynomial x = Polynomial::variable(F) % m;
  const Polynomial one = Polynomial::constant(F.one());
  Polynomial xn = one;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    xn = mulmod(xn, x, m);
    if (xn == one % m) return n;
  }
  return std::nullopt;
}

}  // namespace

InequalityReport lemma_claimD_check(const LemmaContext& ctx, long n) {
  InequalityReport r;
  r.name = "claimD";
  const std::uint64_t pl = checked_u64(power_u64(ctx.p, ctx.ell));
  RationalFunction x = ctx.split.p_dep.eval(ctx.base.pow(n));
  long n1 = gcd_counting_cyclotomic(x, ctx.base, {pl}, ctx.s);
  long n2 = gcd_counting_cyclotomic(x, ctx.base, {pl * static_cast<std::uint64_t>(ctx.q)}, ctx.s);
  r.lhs = std::min(n1, n2);
  r.rhs = 0;
  r.holds = r.lhs <= r.rhs;
  return r;
}

InequalityReport lemma_claimI_check(const LemmaContext& ctx, long n) {
  const long chi = chi_s(ctx.s);
  if (chi < 0) throw Error(ErrorKind::BadChiS, "chi_S must be non-negative");
  InequalityReport r;
  r.name = "claimI";
  r.cubed = true;
  const Integer pl = power_u64(ctx.p, ctx.ell);
  const std::uint64_t pl64 = checked_u64(pl);
  RationalFunction x = ctx.split.p_ind.eval(ctx.base.pow(n));
  long count = gcd_counting_cyclotomic(x, ctx.base, {pl64, pl64 * static_cast<std::uint64_t>(ctx.q)}, ctx.s);
  const Integer d = ctx.split.monic.degree();
  const Integer inner = pl * ctx.q * height(ctx.base) + ctx.h_p;
  r.lhs = Integer(count) * count * count;
  r.rhs = Integer(54) * d * d * d * chi * inner * inner;
  r.holds = r.lhs <= r.rhs;
  return r;
}

CertificateReport certify_local_global(const PowerSumInstance& inst, long k_bound) {
  if (!inst.field().char_zero())
    throw Error(ErrorKind::CharPUnsupported, "the certificate relies on the characteristic-0 gcd bound");
  CertificateReport rep;
  rep.e = inst.e();
  rep.k_bound = k_bound;
  rep.global_zero = decide_global_zero(inst);
  if (rep.global_zero) {
    rep.verdict = Verdict::GlobalZeroFound;
    return rep;
  }
  bool complete = true;
  try {
    struct ClassData {
      PowerSumInstance ci;
      DepIndSplit split;
    };
    std::vector<ClassData> data;
    PlaceSet s2 = inst.s();
    for (long c = 0; c < static_cast<long>(inst.e()); ++c) {
      auto ci = class_instance(inst, c);
      if (!ci) throw std::logic_error("zero class without a global zero");
      DepIndSplit split = split_dep_ind(companion_poly(*ci, 0), ci->f());
      for (const auto* roots : {&split.dep, &split.ind})
        for (const auto& root : *roots)
          for (const auto& [place, v] : divisor(root.beta)) s2.insert(place);
      data.push_back(ClassData{*ci, split});
    }
    // Roots outside K that are roots of unity only need a larger cyclotomic
    // constant field; retry there once.
    const std::uint64_t m = inst.field().spec().cyclotomic_order;
    std::uint64_t m2 = m;
    for (const auto& d : data)
      if (!d.split.complete)
        if (auto n = cyclotomic_closure(d.split.remainder)) m2 = lcm_u64(m2, *n);
    if (m2 != m && euler_phi(m2) <= kMaxExtensionDimension) {
      const Field& target = Field::get(FieldSpec::cyclotomic(m2));
      CertificateReport ext = certify_local_global(inst.embedded(target), k_bound);
      ext.note = "constant field extended to " + target.describe() + (ext.note.empty() ? "" : "; " + ext.note);
      return ext;
    }
    rep.s_enlarged = s2;
    rep.chi = chi_s(s2, inst.genus());
    Integer lcm_a = 1;
    for (long c = 0; c < static_cast<long>(data.size()); ++c) {
      const auto& [ci, split] = data[static_cast<std::size_t>(c)];
      ClassCertificate cc;
      cc.c = c;
      cc.companion = split.monic.to_string();
      cc.dep = split.dep;
      cc.ind = split.ind;
      cc.roots_complete = split.complete;
      complete = complete && split.complete;
      cc.q = choose_q(split);
      if (cc.q == 1) throw Error(ErrorKind::QEqualsOne, "q = 1 although no global zero exists");
      cc.r_betas = common_r(split, cc.q);
      cc.p = choose_p(cc.r_betas, cc.q);
      cc.deg_p = split.monic.degree();
      cc.h_p = poly_height(split.monic);
      EllInputs in{cc.deg_p, cc.h_p, height(ci.f()), rep.chi, cc.p, cc.q};
      cc.ell = ell_bound(in);
      cc.a = power_u64(cc.p, cc.ell) * cc.q;
      lcm_a = lcm(lcm_a, cc.a);
      if (split.complete) {
        LemmaContext ctx{ci.f(), s2, split, cc.p, cc.ell, cc.q, cc.h_p};
        for (long n : {0L, 1L, -1L}) {
          cc.lemma_checks.push_back(lemma_claimD_check(ctx, n));
          cc.lemma_checks.push_back(lemma_claimI_check(ctx, n));
        }
        rep.contexts.push_back(std::move(ctx));
      }
      rep.classes.push_back(std::move(cc));
    }
    rep.a = lcm_a * static_cast<unsigned long>(inst.e());
    rep.local_witness = find_local_witness(inst.with_places(s2), checked_u64(rep.a), k_bound);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::FactorizationTooHard && err.kind() != ErrorKind::RootSearchIncomplete) throw;
    rep.verdict = Verdict::InconclusiveWithinBounds;
    rep.note = err.what();
    return rep;
  }
  for (const auto& cc : rep.classes)
    for (const auto& l : cc.lemma_checks)
      if (!l.holds) rep.theorem_violation = true;
  if (rep.local_witness) {
    rep.theorem_violation = true;
    rep.verdict = Verdict::InconclusiveWithinBounds;
    rep.note = "local witness found without a global zero";
  } else if (!complete) {
    rep.verdict = Verdict::InconclusiveWithinBounds;
    rep.note = "some companion polynomial has roots outside K";
  } else {
    rep.verdict = Verdict::LocalObstruction;
  }
  return rep;
}

}  // namespace skolemff
