#pragma once

// JSON for instances and reports. Every number is written as a decimal
// string; integers are also accepted as JSON numbers on input.
//
// Instance file layout:
//   field:    {"characteristic": "0", "cyclotomic_order": "4"}
//             {"characteristic": "5", "extension_degree": "2", "modulus": ["2","0","1"]}
//   constant: "3/4" (prime field) or coordinates ["1", "-1/2"] in the power basis
//   poly:     little-endian list of constants
//   ratfunc:  {"num": poly, "den": poly} or a bare poly
//   place:    "inf" or a monic irreducible poly
//   epsilon:  [order, exponent] meaning ζ_order^exponent (char 0), or
//             {"value": constant, "order": "n"} (any characteristic)

#include <string>

#include <json.hpp>

#include "skolemff/powersum.hpp"
#include "skolemff/smallcoef.hpp"

namespace skolemff {

using json = nlohmann::ordered_json;

json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

json to_json(const Constant& c);
Constant constant_from_json(const json& j, const Field& F);
json to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j, const Field& F);
json to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const json& j, const Field& F);
json to_json(const Place& p);
Place place_from_json(const json& j, const Field& F);
json to_json(const PlaceSet& s);
PlaceSet place_set_from_json(const json& j, const Field& F);
json to_json(const RootOfUnity& e);
RootOfUnity root_of_unity_from_json(const json& j, const Field& F);

struct InstanceFile {
  PowerSumInstance instance;
  std::string name;
  std::optional<std::uint64_t> seed;
};

json to_json(const PowerSumInstance& inst, const std::string& name = "", std::optional<std::uint64_t> seed = std::nullopt);
/// Validates; malformed files and invalid instances raise InvalidInstance.
InstanceFile instance_from_json(const json& j);
InstanceFile load_instance(const std::string& path);
void save_instance(const std::string& path, const PowerSumInstance& inst, const std::string& name = "",
                   std::optional<std::uint64_t> seed = std::nullopt);

/// FNV-1a of the canonical instance JSON, as 16 hex digits.
std::string instance_digest(const PowerSumInstance& inst);

json to_json(const InequalityReport& r);
json to_json(const LocalCheck& c);
json to_json(const ClassifiedRoot& r);
json to_json(const CertificateReport& r);
json to_json(const Conclusion& c);
json to_json(const SmallCoefReport& r);

/// Decimal string of an integer-like value.
std::string dec(const Integer& x);
std::string dec(long x);

}  // namespace skolemff
