#include <doctest.h>

#include <cstdio>
#include <set>

#include "skolemff/generate.hpp"
#include "skolemff/io.hpp"
#include "skolemff/suites.hpp"

using namespace skolemff;

namespace {

bool same(const PowerSumInstance& a, const PowerSumInstance& b) {
  if (a.field().spec() != b.field().spec() || !(a.f() == b.f()) || a.r() != b.r() || !(a.s() == b.s()) ||
      a.lambdas() != b.lambdas() || a.epsilons().size() != b.epsilons().size())
    return false;
  for (std::size_t i = 0; i < a.epsilons().size(); ++i)
    if (a.epsilons()[i].order != b.epsilons()[i].order || !(a.epsilons()[i].value == b.epsilons()[i].value))
      return false;
  return true;
}

json example2_json() {
  return json::parse(R"({
    "field": {"characteristic": "0", "cyclotomic_order": "1"},
    "f": {"num": ["0", "0", "1"], "den": ["1"]},
    "lambdas": [{"num": ["0", "1"], "den": ["1"]}, {"num": ["-1"], "den": ["0", "1"]}],
    "epsilons": [["1", "0"], ["1", "0"]],
    "r": ["2", "1"],
    "S": [["0", "1"], "inf"]
  })");
}

}  // namespace

TEST_CASE("property: instance round trip and digest") {
  const char* path = "skolemff_io_roundtrip.json";
  for (Profile p : {Profile::Small, Profile::DepHeavy, Profile::CharP})
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      Rng rng(seed);
      PowerSumInstance inst = random_instance(p, rng);
      InstanceFile back = instance_from_json(json::parse(to_json(inst, "x", seed).dump()));
      REQUIRE(same(inst, back.instance));
      CHECK(back.name == "x");
      CHECK(back.seed == seed);
      CHECK(instance_digest(inst) == instance_digest(back.instance));
      CHECK(to_json(back.instance) == to_json(inst));

      save_instance(path, inst);
      CHECK(same(load_instance(path).instance, inst));

      Rng again(seed);
      CHECK(instance_digest(random_instance(p, again)) == instance_digest(inst));
    }
  std::remove(path);
}

TEST_CASE("digests separate instances") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    seen.insert(instance_digest(random_instance(Profile::Small, rng)));
  }
  CHECK(seen.size() >= 35);
}

TEST_CASE("malformed instances are rejected") {
  InstanceFile ok = instance_from_json(example2_json());
  CHECK(ok.instance.m() == 2);

  auto rejects = [](const json& j) {
    try {
      instance_from_json(j);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::InvalidInstance;
    }
    return false;
  };
  json j = example2_json();
  j.erase("f");
  CHECK(rejects(j));
  j = example2_json();
  j["r"] = json::array({"2"});
  CHECK(rejects(j));
  j = example2_json();
  j["r"][0] = "two";
  CHECK(rejects(j));
  j = example2_json();
  j["epsilons"][0] = json::array({"2", "0"});  // ζ_2^0 = 1 has order 1, declared order is fine
  CHECK_FALSE(rejects(j));
  j = example2_json();
  j["field"] = json{{"characteristic", "4"}, {"degree", "1"}};
  CHECK(rejects(j));
  j = example2_json();
  j["S"] = json::array({json::array({"0", "0", "1"}), "inf"});  // t^2 is not irreducible
  CHECK(rejects(j));
  j = example2_json();
  j["S"] = json::array({"inf"});  // λ₂ = −1/t is not an S-unit
  CHECK(rejects(j));
  j = example2_json();
  j["lambdas"][0]["den"] = json::array({"0"});
  CHECK(rejects(j));
  CHECK_THROWS(load_instance("/nonexistent/instance.json"));
}

TEST_CASE("char p epsilons carry explicit values") {
  Rng rng(3);
  PowerSumInstance inst = random_instance(Profile::CharP, rng);
  CHECK(inst.field().characteristic() > 0);
  CHECK(deg_ins(inst.f()) > 1);
  json j = to_json(inst);
  for (const auto& e : j["epsilons"]) CHECK(e.contains("order"));
}

TEST_CASE("suites are deterministic and clean") {
  for (const auto& name : suite_names()) {
    SuiteResult a = run_suite(name, 11, 12, 8);
    SuiteResult b = run_suite(name, 11, 12, 8);
    CHECK(a.violations == 0);
    CHECK(a.checked + a.skipped == 12);
    CHECK(to_json(a).dump() == to_json(b).dump());
  }
  CHECK_THROWS(run_suite("nope", 1, 1));
}
