#pragma once

// Seeded randomized verifier suites behind `skolemff verify`. Case i draws
// from its own generator seeded by (seed, i), so any failing case can be
// replayed alone.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skolemff/io.hpp"

namespace skolemff {

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  long count = 0;
  long max_deg = 12;
  long checked = 0;
  long violations = 0;
  /// czgcd: multiplicatively dependent pairs; claimD/claimI: instances with a
  /// global zero or an incomplete root search.
  long skipped = 0;
  std::map<std::string, long> per_field;
  /// First violating case, minimized where the suite knows how.
  std::optional<json> reproducer;
};

/// smt, sunit, czgcd, gauss, claimD, claimI.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// InvalidArgument for an unknown suite or count < 0.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, long count, long max_deg = 12);

json to_json(const SuiteResult& r);

}  // namespace skolemff
