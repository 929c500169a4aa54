#include "skolemff/generate.hpp"

#include <algorithm>

namespace skolemff {

std::optional<Profile> parse_profile(std::string_view s) {
  if (s == "small") return Profile::Small;
  if (s == "dep-heavy") return Profile::DepHeavy;
  if (s == "charp") return Profile::CharP;
  return std::nullopt;
}

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Small: return "small";
    case Profile::DepHeavy: return "dep-heavy";
    case Profile::CharP: return "charp";
  }
  return "?";
}

namespace {

std::vector<Polynomial> finite_places(const PlaceSet& s) {
  std::vector<Polynomial> out;
  for (const auto& p : s)
    if (!p.is_infinity()) out.push_back(p.poly());
  return out;
}

const Field& field_of(const PlaceSet& s) {
  for (const auto& p : s)
    if (!p.is_infinity()) return p.poly().field();
  throw Error(ErrorKind::InvalidArgument, "place set without finite places");
}

RootOfUnity random_root_of_unity(const Field& F, Rng& rng) {
  std::uint64_t n = F.char_zero() ? F.torsion_exponent().get_ui() : F.size().get_ui() - 1;
  auto roots = roots_of_unity(n, F);
  return roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(roots.size()) - 1))];
}

PlaceSet places_t(const Field& F, bool with_t_minus_1) {
  PlaceSet s{Place::infinity(), Place::finite(Polynomial::from_ints(F, {0, 1}), true)};
  if (with_t_minus_1) s.insert(Place::finite(Polynomial::from_ints(F, {-1, 1}), true));
  return s;
}

}  // namespace

RationalFunction random_s_unit(const PlaceSet& s, Rng& rng, long max_exp) {
  const Field& F = field_of(s);
  auto places = finite_places(s);
  if (places.empty() || (!s.contains_infinity() && places.size() < 2))
    throw Error(ErrorKind::InvalidArgument, "S has no nonconstant units");
  for (;;) {
    RationalFunction u = RationalFunction::constant(random_nonzero_constant(F, rng, 2));
    long total = 0;
    for (std::size_t i = 0; i < places.size(); ++i) {
      long k = uniform(rng, -max_exp, max_exp);
      if (i + 1 == places.size() && !s.contains_infinity()) {
        // Without ∞ in S the degrees of the exponents must cancel.
        if (total % places[i].degree() != 0) break;
        k = -total / places[i].degree();
      }
      total += k * places[i].degree();
      u = u * RationalFunction(places[i]).pow(k);
    }
    if (!u.is_constant() && is_s_unit(u, s)) return u;
  }
}

RationalFunction random_s_integer(const PlaceSet& s, long max_degree, Rng& rng) {
  const Field& F = field_of(s);
  for (;;) {
    long d = uniform(rng, 0, max_degree);
    RationalFunction x(random_poly(F, d, rng, 2));
    auto places = finite_places(s);
    for (const auto& p : places) x = x * RationalFunction(p).pow(-uniform(rng, 0, 1));
    if (!s.contains_infinity() && !places.empty())
      while (x.num().degree() > x.den().degree()) x = x / RationalFunction(places.front());
    if (!x.is_zero()) return x;
  }
}

namespace {

PowerSumInstance small_instance(const Field& F, Rng& rng) {
  PlaceSet s = places_t(F, uniform(rng, 0, 1) == 1);
  RationalFunction f = random_s_unit(s, rng, 2);
  while (height(f) > 6) f = random_s_unit(s, rng, 2);
  const long m = uniform(rng, 1, 4);
  std::vector<RationalFunction> lambdas;
  std::vector<RootOfUnity> eps;
  std::vector<long> r;
  for (long i = 0; i < m; ++i) {
    lambdas.push_back(random_s_integer(s, 2, rng));
    eps.push_back(uniform(rng, 0, 1) ? RootOfUnity{1, F.one()} : random_root_of_unity(F, rng));
    r.push_back(uniform(rng, -2, 3));
  }
  if (m >= 2 && uniform(rng, 0, 2) == 0) {
    // Plant a zero at n0 by solving for the last coefficient.
    const long n0 = uniform(rng, -2, 2);
    RationalFunction sum(F);
    for (long i = 0; i + 1 < m; ++i)
      sum += lambdas[i] * RationalFunction::constant(eps[i].value.pow(n0)) * f.pow((r[i] - r[m - 1]) * n0);
    if (!sum.is_zero()) lambdas[m - 1] = -sum / RationalFunction::constant(eps[m - 1].value.pow(n0));
  }
  return PowerSumInstance(lambdas, eps, r, f, s);
}

PowerSumInstance dep_heavy_instance(Rng& rng) {
  const Field& F = Field::get(FieldSpec::rationals());
  PlaceSet s = places_t(F, uniform(rng, 0, 1) == 1);
  for (;;) {
    RationalFunction g = random_s_unit(s, rng, 1);
    const long q = uniform(rng, 2, 3);
    long rb = uniform(rng, -3, 3);
    if (rb % q == 0) rb += 1;
    RationalFunction f = g.pow(q);
    RationalFunction beta = g.pow(rb);
    if (uniform(rng, 0, 1)) beta = -beta;
    // Second root: another dependent root, a torsion constant, or an S-integer.
    RationalFunction gamma(F);
    switch (uniform(rng, 0, 2)) {
      case 0: gamma = g.pow(uniform(rng, -3, 3)); break;
      case 1: gamma = RationalFunction::constant(F.from_int(-1)); break;
      default: gamma = random_s_integer(s, 1, rng);
    }
    std::vector<RationalFunction> lambdas;
    std::vector<long> r;
    RationalFunction one = RationalFunction::constant(F.one());
    lambdas = {one, -(beta + gamma), beta * gamma};
    r = {2, 1, 0};
    if (uniform(rng, 0, 2) == 0) {
      // A third factor X − 1/β keeps the roots dependent.
      RationalFunction delta = beta.inverse();
      lambdas = {one, -(beta + gamma + delta), beta * gamma + beta * delta + gamma * delta, -(beta * gamma * delta)};
      r = {3, 2, 1, 0};
    }
    std::vector<RationalFunction> kept;
    std::vector<long> kept_r;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      if (!lambdas[i].is_zero()) kept.push_back(lambdas[i]), kept_r.push_back(r[i]);
    std::vector<RootOfUnity> eps(kept.size(), RootOfUnity{1, F.one()});
    PowerSumInstance inst(kept, eps, kept_r, f, s);
    if (!decide_global_zero(inst)) return inst;
  }
}

PowerSumInstance charp_instance(Rng& rng) {
  const std::uint64_t p = uniform(rng, 0, 1) ? 3 : 5;
  const Field& F = Field::get(FieldSpec::finite(p));
  PlaceSet s = places_t(F, true);
  RationalFunction f = random_s_unit(s, rng, 1).pow(static_cast<long>(p));
  const long m = uniform(rng, 1, 4);
  std::vector<RationalFunction> lambdas;
  std::vector<RootOfUnity> eps;
  std::vector<long> r;
  for (long i = 0; i < m; ++i) {
    lambdas.push_back(random_s_integer(s, 2, rng));
    eps.push_back(random_root_of_unity(F, rng));
    r.push_back(uniform(rng, -2, 3));
  }
  return PowerSumInstance(lambdas, eps, r, f, s);
}

}  // namespace

PowerSumInstance random_instance(Profile profile, Rng& rng) {
  switch (profile) {
    case Profile::Small:
      return small_instance(Field::get(uniform(rng, 0, 2) == 0 ? FieldSpec::cyclotomic(4) : FieldSpec::rationals()), rng);
    case Profile::DepHeavy: return dep_heavy_instance(rng);
    case Profile::CharP: return charp_instance(rng);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown profile");
}

long decision_window(const PowerSumInstance& inst) {
  long w = 0;
  for (long c = 0; c < static_cast<long>(inst.e()); ++c) {
    KPoly pc = companion_poly(inst, c);
    if (!pc.is_zero()) w = std::max(w, poly_height(pc) / height(inst.f()));
  }
  return w;
}

PowerSumInstance random_windowed_instance(const Field& field, long window, Rng& rng) {
  for (;;) {
    PowerSumInstance inst = small_instance(field, rng);
    if (decision_window(inst) <= window) return inst;
  }
}

}  // namespace skolemff
