#include "skolemff/suites.hpp"

#include <algorithm>

#include "skolemff/generate.hpp"
#include "skolemff/random.hpp"
#include "skolemff/vd_theorems.hpp"

namespace skolemff {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"smt", "sunit", "czgcd", "gauss", "claimD", "claimI"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

const Field& field_for(long i, bool with_char_p) {
  static const std::vector<FieldSpec> all{FieldSpec::rationals(), FieldSpec::cyclotomic(4), FieldSpec::finite(3),
                                          FieldSpec::finite(5)};
  return Field::get(all[static_cast<std::size_t>(i % (with_char_p ? 4 : 2))]);
}

std::vector<Constant> distinct_constants(const Field& F, long want, Rng& rng) {
  std::vector<Constant> out;
  const long cap = F.char_zero() ? want : std::min<long>(want, static_cast<long>(F.characteristic()));
  while (static_cast<long>(out.size()) < cap) {
    Constant c = random_constant(F, rng, 4);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

json constants_json(const std::vector<Constant>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

// A nonconstant f of degree ≤ max_deg, often with critical values among b.
RationalFunction smt_function(const Field& F, long max_deg, Rng& rng, std::vector<Constant>& b) {
  const long half = std::max<long>(1, max_deg / 2);
  switch (uniform(rng, 0, 3)) {
    case 0: {
      // b_0 + (t − c)^k g: a multiple zero of f − b_0.
      const long k = uniform(rng, 2, std::max<long>(2, half));
      Polynomial g = random_poly(F, uniform(rng, 0, std::max<long>(0, half - k)), rng);
      Polynomial lin = Polynomial::from_ints(F, {0, 1}) - Polynomial::constant(random_constant(F, rng));
      RationalFunction f = RationalFunction::constant(b.empty() ? F.zero() : b[0]) + RationalFunction(lin.pow(static_cast<std::uint64_t>(k)) * g);
      if (!f.is_constant()) return f;
      break;
    }
    case 1:
      if (!F.char_zero()) {
        // A p-th power in t: deg_ins > 1.
        Polynomial g = random_poly(F, uniform(rng, 1, std::max<long>(1, max_deg / static_cast<long>(F.characteristic()))), rng);
        return RationalFunction(g.compose(Polynomial::monomial(F.one(), F.characteristic())));
      }
      break;
    default: break;
  }
  return random_nonconstant(F, half, rng);
}

struct Case {
  std::string field;
  bool violated = false;
  bool skipped = false;
  json repro;
};

Case smt_case(const Field& F, long max_deg, Rng& rng) {
  std::vector<Constant> b = distinct_constants(F, uniform(rng, 1, 5), rng);
  RationalFunction f = smt_function(F, max_deg, rng, b);
  PlaceSet s = random_place_set(F, uniform(rng, 0, 2), rng, uniform(rng, 0, 3) > 0);
  InequalityReport r = verify_smt(f, s, b);
  Case c;
  if (r.holds) return c;
  // Minimize: drop constants while the inequality still fails.
  for (std::size_t i = 0; i < b.size();) {
    auto smaller = b;
    smaller.erase(smaller.begin() + static_cast<long>(i));
    if (!smaller.empty() && !verify_smt(f, s, smaller).holds) {
      b = smaller;
      r = verify_smt(f, s, b);
    } else {
      ++i;
    }
  }
  c.violated = true;
  c.repro = json{{"field", to_json(F.spec())}, {"f", to_json(f)}, {"S", to_json(s)}, {"b", constants_json(b)}, {"report", to_json(r)}};
  return c;
}

Case sunit_case(const Field& F, long max_deg, Rng& rng) {
  PlaceSet s = random_place_set(F, uniform(rng, 1, 2), rng, true);
  const Constant c0 = random_constant(F, rng);
  RationalFunction f = uniform(rng, 0, 2) ? RationalFunction::constant(c0) + random_s_unit(s, rng, std::max<long>(1, max_deg / 4))
                                          : RationalFunction(random_poly(F, uniform(rng, 1, std::max<long>(1, max_deg / 2)), rng));
  std::vector<Constant> cand{c0, F.zero(), F.one(), -F.one()};
  for (const auto& x : distinct_constants(F, 4, rng)) cand.push_back(x);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  InequalityReport r = verify_sunit_count(f, s, cand);
  const std::uint64_t a = F.char_zero() ? F.torsion_exponent().get_ui() : F.characteristic() - 1;
  InequalityReport rr = verify_sunit_roots(f, s, a);
  Case c;
  if (r.holds && rr.holds) return c;
  c.violated = true;
  c.repro = json{{"field", to_json(F.spec())}, {"f", to_json(f)}, {"S", to_json(s)}, {"candidates", constants_json(cand)},
                 {"a", dec(static_cast<long>(a))}, {"count_report", to_json(r)}, {"roots_report", to_json(rr)}};
  return c;
}

Case czgcd_case(const Field& F, long max_deg, Rng& rng) {
  PlaceSet s = random_place_set(F, uniform(rng, 1, 3), rng, true);
  const long e = std::max<long>(1, max_deg / 4);
  RationalFunction a = random_s_unit(s, rng, e);
  RationalFunction b = random_s_unit(s, rng, e);
  if (uniform(rng, 0, 1)) b = a.pow(uniform(rng, 1, 2)) * random_s_unit(s, rng, 1);
  Case c;
  try {
    InequalityReport r = verify_cz_gcd(a, b, s);
    if (!r.holds) {
      c.violated = true;
      c.repro = json{{"field", to_json(F.spec())}, {"a", to_json(a)}, {"b", to_json(b)}, {"S", to_json(s)}, {"report", to_json(r)}};
    }
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::MultiplicativelyDependent) throw;
    c.skipped = true;
  }
  return c;
}

KPoly random_kpoly(const Field& F, long deg, long coeff_deg, Rng& rng) {
  std::vector<RationalFunction> c;
  for (long i = 0; i <= deg; ++i) c.push_back(uniform(rng, 0, 3) ? random_ratfunc(F, coeff_deg, rng) : RationalFunction(F));
  if (c.back().is_zero()) c.back() = random_ratfunc(F, coeff_deg, rng);
  return KPoly(F, std::move(c));
}

Case gauss_case(const Field& F, long max_deg, Rng& rng) {
  const long cd = std::max<long>(1, max_deg / 4);
  KPoly a = random_kpoly(F, uniform(rng, 0, 3), cd, rng), b = random_kpoly(F, uniform(rng, 0, 3), cd, rng);
  KPoly ab = a * b;
  Case c;
  json failures = json::array();
  // Places where some coefficient has a zero or pole, plus ∞.
  PlaceSet places{Place::infinity()};
  for (const auto* p : {&a, &b})
    for (const auto& x : p->coeffs())
      if (!x.is_zero())
        for (const auto& [pl, v] : divisor(x)) places.insert(pl);
  for (const auto& pl : places)
    if (poly_valuation(ab, pl) != poly_valuation(a, pl) + poly_valuation(b, pl)) failures.push_back("gauss at " + pl.to_string());
  if (poly_height(ab) != poly_height(a) + poly_height(b)) failures.push_back("height of product");
  // Product of linear factors: h(∏ (X − β_i)) = Σ h(β_i).
  KPoly lin(F, {RationalFunction::constant(F.one())});
  long sum = 0;
  const long k = uniform(rng, 1, 4);
  for (long i = 0; i < k; ++i) {
    RationalFunction beta = random_ratfunc(F, cd, rng);
    sum += height(beta);
    lin = lin * KPoly(F, {-beta, RationalFunction::constant(F.one())});
  }
  if (poly_height(lin) != sum) failures.push_back("height of a product of linear factors");
  if (!failures.empty()) {
    c.violated = true;
    c.repro = json{{"field", to_json(F.spec())}, {"A", a.to_string()}, {"B", b.to_string()}, {"failures", failures}};
  }
  return c;
}

Case lemma_case(bool dep, long i, Rng& rng) {
  Case c;
  PowerSumInstance inst = dep || i % 2 == 0 ? random_instance(Profile::DepHeavy, rng)
                                            : random_windowed_instance(field_for(i / 2, false), 20, rng);
  CertificateReport rep;
  c.field = inst.field().describe();
  try {
    rep = certify_local_global(inst, 0);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::FactorizationTooHard && err.kind() != ErrorKind::RootSearchIncomplete) throw;
    c.skipped = true;
    return c;
  }
  c.field = inst.field().describe();
  if (rep.global_zero || rep.contexts.empty()) {
    c.skipped = true;
    return c;
  }
  json bad = json::array();
  for (const auto& ctx : rep.contexts)
    for (long n = -2; n <= 2; ++n) {
      InequalityReport r = dep ? lemma_claimD_check(ctx, n) : lemma_claimI_check(ctx, n);
      if (!r.holds) bad.push_back(json{{"n", dec(n)}, {"report", to_json(r)}});
    }
  if (!bad.empty()) {
    c.violated = true;
    c.repro = json{{"instance", to_json(inst)}, {"failures", bad}};
  }
  return c;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed, long count, long max_deg) {
  if (!is_suite(name)) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  if (count < 0 || max_deg < 1) throw Error(ErrorKind::InvalidArgument, "count must be ≥ 0 and max-deg ≥ 1");
  SuiteResult res;
  res.suite = name;
  res.seed = seed;
  res.count = count;
  res.max_deg = max_deg;
  for (long i = 0; i < count; ++i) {
    Rng rng(seed * 1000003ull + static_cast<std::uint64_t>(i));
    const bool char_p = name == "smt" || name == "sunit" || name == "gauss";
    const Field& F = field_for(i, char_p);
    Case c;
    if (name == "smt") c = smt_case(F, max_deg, rng);
    else if (name == "sunit") c = sunit_case(F, max_deg, rng);
    else if (name == "czgcd") c = czgcd_case(F, max_deg, rng);
    else if (name == "gauss") c = gauss_case(F, max_deg, rng);
    else c = lemma_case(name == "claimD", i, rng);
    res.per_field[c.field.empty() ? F.describe() : c.field]++;
    if (c.skipped) {
      ++res.skipped;
      continue;
    }
    ++res.checked;
    if (c.violated) {
      ++res.violations;
      if (!res.reproducer) {
        c.repro["case"] = dec(i);
        res.reproducer = c.repro;
      }
    }
  }
  return res;
}

json to_json(const SuiteResult& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = std::to_string(r.seed);
  j["count"] = dec(r.count);
  j["max_deg"] = dec(r.max_deg);
  j["checked"] = dec(r.checked);
  j["violations"] = dec(r.violations);
  j[r.suite == "czgcd" ? "skipped_dependent" : "skipped"] = dec(r.skipped);
  json pf = json::object();
  for (const auto& [k, v] : r.per_field) pf[k] = dec(v);
  j["fields"] = pf;
  if (r.reproducer) j["reproducer"] = *r.reproducer;
  return j;
}

}  // namespace skolemff
