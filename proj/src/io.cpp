#include "skolemff/io.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace skolemff {

std::string dec(const Integer& x) { return x.get_str(); }
std::string dec(long x) { return std::to_string(x); }

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInstance, what); }

std::string text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(std::string("expected a number for ") + what);
}

long as_long(const json& j, const char* what) {
  try {
    return std::stol(text(j, what));
  } catch (const std::logic_error&) {
    bad(std::string("malformed integer for ") + what);
  }
}

std::uint64_t as_u64(const json& j, const char* what) {
  long v = as_long(j, what);
  if (v < 0) bad(std::string("negative value for ") + what);
  return static_cast<std::uint64_t>(v);
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const FieldSpec& spec) {
  json j;
  j["characteristic"] = dec(static_cast<long>(spec.characteristic));
  if (spec.characteristic == 0) {
    j["cyclotomic_order"] = dec(static_cast<long>(spec.cyclotomic_order));
  } else {
    j["extension_degree"] = dec(static_cast<long>(spec.extension_degree));
    if (!spec.modulus.empty()) {
      json m = json::array();
      for (auto c : spec.modulus) m.push_back(dec(static_cast<long>(c)));
      j["modulus"] = m;
    }
  }
  return j;
}

FieldSpec field_spec_from_json(const json& j) {
  FieldSpec s;
  s.characteristic = as_u64(member(j, "characteristic"), "characteristic");
  if (s.characteristic == 0) {
    if (j.contains("cyclotomic_order")) s.cyclotomic_order = as_u64(j["cyclotomic_order"], "cyclotomic_order");
  } else {
    if (j.contains("extension_degree")) s.extension_degree = as_u64(j["extension_degree"], "extension_degree");
    if (j.contains("modulus"))
      for (const auto& c : j["modulus"]) s.modulus.push_back(as_u64(c, "modulus"));
  }
  return s;
}

json to_json(const Constant& c) {
  if (c.is_prime_field()) {
    if (c.field().char_zero()) return rational_to_string(c.rational_value());
    return dec(static_cast<long>(c.prime_field_value()));
  }
  json a = json::array();
  if (c.field().char_zero())
    for (const auto& q : c.rational_coords()) a.push_back(rational_to_string(q));
  else
    for (auto m : c.modular_coords()) a.push_back(dec(static_cast<long>(m)));
  return a;
}

Constant constant_from_json(const json& j, const Field& F) {
  try {
    if (!j.is_array()) {
      return F.from_rational(rational_from_string(text(j, "constant")));
    }
    if (F.char_zero()) {
      std::vector<Rational> q;
      for (const auto& x : j) q.push_back(rational_from_string(text(x, "coordinate")));
      return Constant::from_coordinates(F, std::move(q));
    }
    Constant acc = F.zero(), g = F.one();
    for (const auto& x : j) {
      acc += F.from_integer(Integer(text(x, "coordinate"))) * g;
      g *= F.generator();
    }
    return acc;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInstance) throw;
    bad(std::string("bad constant: ") + e.what());
  } catch (const std::invalid_argument&) {
    bad("bad constant " + j.dump());
  }
}

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Polynomial poly_from_json(const json& j, const Field& F) {
  if (!j.is_array()) bad("expected a coefficient list");
  std::vector<Constant> c;
  for (const auto& x : j) c.push_back(constant_from_json(x, F));
  return Polynomial(F, std::move(c));
}

json to_json(const RationalFunction& f) {
  if (f.den().degree() == 0) return to_json(f.num());
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfunc_from_json(const json& j, const Field& F) {
  if (j.is_object()) {
    Polynomial den = poly_from_json(member(j, "den"), F);
    if (den.is_zero()) bad("zero denominator");
    return RationalFunction(poly_from_json(member(j, "num"), F), den);
  }
  return RationalFunction(poly_from_json(j, F));
}

json to_json(const Place& p) { return p.is_infinity() ? json("inf") : to_json(p.poly()); }

Place place_from_json(const json& j, const Field& F) {
  if (j.is_string() && j.get<std::string>() == "inf") return Place::infinity();
  Polynomial p = poly_from_json(j, F);
  try {
    return Place::finite(p);
  } catch (const Error& e) {
    bad(std::string("bad place: ") + e.what());
  }
}

json to_json(const PlaceSet& s) {
  json a = json::array();
  for (const auto& p : s) a.push_back(to_json(p));
  return a;
}

PlaceSet place_set_from_json(const json& j, const Field& F) {
  if (!j.is_array()) bad("S must be a list of places");
  PlaceSet s;
  for (const auto& x : j) s.insert(place_from_json(x, F));
  return s;
}

json to_json(const RootOfUnity& e) {
  const Field& F = e.value.field();
  if (F.char_zero()) {
    auto z = F.primitive_root_of_unity(e.order);
    Constant w = F.one();
    for (std::uint64_t k = 0; z && k < e.order; ++k, w *= *z)
      if (w == e.value) return json::array({dec(static_cast<long>(e.order)), dec(static_cast<long>(k))});
  }
  return json{{"value", to_json(e.value)}, {"order", dec(static_cast<long>(e.order))}};
}

RootOfUnity root_of_unity_from_json(const json& j, const Field& F) {
  try {
    if (j.is_array()) {
      if (j.size() != 2) bad("epsilon must be [order, exponent]");
      const std::uint64_t n = as_u64(j[0], "epsilon order");
      const long k = as_long(j[1], "epsilon exponent");
      if (n == 0) bad("epsilon order must be positive");
      auto z = F.primitive_root_of_unity(n);
      if (!z) bad(F.describe() + " has no primitive " + std::to_string(n) + "-th root of unity");
      const std::uint64_t kk = static_cast<std::uint64_t>(((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n));
      const std::uint64_t order = n / std::gcd(n, kk == 0 ? n : kk);
      return RootOfUnity::make(z->pow(static_cast<long>(kk)), order);
    }
    return RootOfUnity::make(constant_from_json(member(j, "value"), F), as_u64(member(j, "order"), "epsilon order"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInstance) throw;
    bad(std::string("bad epsilon: ") + e.what());
  }
}

json to_json(const PowerSumInstance& inst, const std::string& name, std::optional<std::uint64_t> seed) {
  json j;
  if (!name.empty()) j["name"] = name;
  if (seed) j["seed"] = std::to_string(*seed);
  j["field"] = to_json(inst.field().spec());
  j["f"] = to_json(inst.f());
  json l = json::array(), e = json::array(), r = json::array();
  for (std::size_t i = 0; i < inst.m(); ++i) {
    l.push_back(to_json(inst.lambdas()[i]));
    e.push_back(to_json(inst.epsilons()[i]));
    r.push_back(dec(inst.r()[i]));
  }
  j["lambdas"] = l;
  j["epsilons"] = e;
  j["r"] = r;
  j["S"] = to_json(inst.s());
  if (inst.genus() != 0) j["genus"] = dec(inst.genus());
  return j;
}

InstanceFile instance_from_json(const json& j) {
  if (!j.is_object()) bad("instance must be a JSON object");
  const Field* F = nullptr;
  try {
    F = &Field::get(field_spec_from_json(member(j, "field")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInstance) throw;
    bad(std::string("bad field: ") + e.what());
  }
  RationalFunction f = ratfunc_from_json(member(j, "f"), *F);
  const json& jl = member(j, "lambdas");
  const json& je = member(j, "epsilons");
  const json& jr = member(j, "r");
  if (!jl.is_array() || !je.is_array() || !jr.is_array()) bad("lambdas, epsilons and r must be lists");
  if (jl.size() != je.size() || jl.size() != jr.size()) bad("lambdas, epsilons and r differ in length");
  std::vector<RationalFunction> l;
  std::vector<RootOfUnity> e;
  std::vector<long> r;
  for (std::size_t i = 0; i < jl.size(); ++i) {
    l.push_back(ratfunc_from_json(jl[i], *F));
    e.push_back(root_of_unity_from_json(je[i], *F));
    r.push_back(as_long(jr[i], "r"));
  }
  PlaceSet s = place_set_from_json(member(j, "S"), *F);
  long genus = j.contains("genus") ? as_long(j["genus"], "genus") : 0;
  InstanceFile out{PowerSumInstance(l, e, r, f, s, genus), "", std::nullopt};
  if (j.contains("name") && j["name"].is_string()) out.name = j["name"].get<std::string>();
  if (j.contains("seed")) out.seed = as_u64(j["seed"], "seed");
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const std::string& path, const PowerSumInstance& inst, const std::string& name,
                   std::optional<std::uint64_t> seed) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << to_json(inst, name, seed).dump(2) << "\n";
}

std::string instance_digest(const PowerSumInstance& inst) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_json(inst).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const InequalityReport& r) {
  json j{{"name", r.name}, {"lhs", dec(r.lhs)}, {"rhs", dec(r.rhs)}, {"cubed", r.cubed}, {"holds", r.holds}};
  if (!r.lhs_places.empty() || !r.rhs_places.empty()) {
    json lp = json::array(), rp = json::array();
    for (const auto& p : r.lhs_places) lp.push_back(p.to_string());
    for (const auto& p : r.rhs_places) rp.push_back(p.to_string());
    j["lhs_places"] = lp;
    j["rhs_places"] = rp;
  }
  return j;
}

json to_json(const LocalCheck& c) {
  json orders = json::array(), places = json::array();
  for (auto d : c.failing_orders) orders.push_back(dec(static_cast<long>(d)));
  for (const auto& p : c.failing_places) places.push_back(p.to_string());
  return json{{"passes", c.passes}, {"failing_orders", orders}, {"failing_places", places},
              {"places_complete", c.places_complete}};
}

json to_json(const ClassifiedRoot& r) {
  json j{{"beta", r.beta.to_string()}, {"multiplicity", dec(r.multiplicity)}};
  if (r.dependent) {
    j["q"] = dec(r.q_exact);
    j["r"] = dec(r.r_exact);
  }
  return j;
}

json to_json(const CertificateReport& r) {
  json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["global_zero"] = r.global_zero ? json(dec(*r.global_zero)) : json(nullptr);
  j["e"] = dec(static_cast<long>(r.e));
  if (r.verdict == Verdict::GlobalZeroFound) return j;
  j["a"] = dec(r.a);
  j["k_bound"] = dec(r.k_bound);
  j["local_witness"] = r.local_witness ? json(dec(*r.local_witness)) : json(nullptr);
  j["theorem_violation"] = r.theorem_violation;
  j["S_enlarged"] = to_json(r.s_enlarged);
  j["chi_S"] = dec(r.chi);
  json classes = json::array();
  for (const auto& c : r.classes) {
    json cj;
    cj["c"] = dec(c.c);
    cj["companion"] = c.companion;
    cj["deg_P"] = dec(c.deg_p);
    cj["h_P"] = dec(c.h_p);
    json dep = json::array(), ind = json::array();
    for (const auto& x : c.dep) dep.push_back(to_json(x));
    for (const auto& x : c.ind) ind.push_back(to_json(x));
    cj["dep_roots"] = dep;
    cj["ind_roots"] = ind;
    cj["roots_complete"] = c.roots_complete;
    cj["q"] = dec(c.q);
    json rb = json::array();
    for (long x : c.r_betas) rb.push_back(dec(x));
    cj["r_betas"] = rb;
    cj["p"] = dec(static_cast<long>(c.p));
    cj["ell"] = dec(c.ell);
    cj["a"] = dec(c.a);
    json lc = json::array();
    for (const auto& l : c.lemma_checks) lc.push_back(to_json(l));
    cj["lemma_checks"] = lc;
    classes.push_back(cj);
  }
  j["classes"] = classes;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const Conclusion& c) {
  return json{{"branch", c.e_divides_k ? "e_divides_k" : "e_not_divides_k"},
              {"verified", c.verified},
              {"impossible_branch", c.impossible_branch}};
}

json to_json(const SmallCoefReport& r) {
  json j;
  j["rho"] = rational_to_string(r.rho);
  j["gamma"] = rational_to_string(r.gamma);
  j["growth_ok"] = r.growth_ok;
  j["growth_lhs"] = rational_to_string(r.growth_lhs);
  j["growth_rhs"] = rational_to_string(r.growth_rhs);
  if (!r.growth_ok) return j;
  j["e"] = dec(static_cast<long>(r.e));
  j["a"] = dec(r.a);
  j["k_bound"] = dec(r.k_bound);
  j["witness"] = r.witness ? json(dec(*r.witness)) : json(nullptr);
  j["conclusion"] = r.conclusion ? to_json(*r.conclusion) : json(nullptr);
  j["consistent"] = r.consistent;
  j["theorem_violation"] = r.theorem_violation;
  return j;
}

}  // namespace skolemff
