// skolemff: command-line front end. Every invocation prints one JSON report
// on stdout; the exit code is 0 (answer), 1 (theorem violation), 2 (invalid
// input) or 3 (inconclusive).

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "skolemff/generate.hpp"
#include "skolemff/io.hpp"
#include "skolemff/smallcoef.hpp"
#include "skolemff/suites.hpp"

using namespace skolemff;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInvalid = 2, kInconclusive = 3 };

struct Outcome {
  json result;
  int exit_code = kOk;
};

struct Options {
  std::string command;
  long n_bound = -1;
  std::uint64_t a = 0;
  long k_bound = 100;
  std::optional<long> k;
  std::string rho;
};

Outcome run_on_instance(const Options& o, const PowerSumInstance& inst) {
  Outcome out;
  if (o.command == "solve") {
    auto n = decide_global_zero(inst, o.n_bound >= 0 ? std::optional<long>(o.n_bound) : std::nullopt);
    out.result["global_zero"] = n ? json(dec(*n)) : json(nullptr);
    if (n) {
      RationalFunction b = eval_B(inst, *n);
      out.result["B_at_zero"] = b.to_string();
      if (!b.is_zero()) out.exit_code = kViolation;
    }
  } else if (o.command == "local") {
    out.result["a"] = dec(static_cast<long>(o.a));
    if (o.k) {
      out.result["k"] = dec(*o.k);
      out.result["check"] = to_json(local_vanishing_check(inst, *o.k, o.a));
    } else {
      out.result["k_bound"] = dec(o.k_bound);
      auto w = find_local_witness(inst, o.a, o.k_bound);
      out.result["witness"] = w ? json(dec(*w)) : json(nullptr);
    }
  } else if (o.command == "certify") {
    CertificateReport rep = certify_local_global(inst, o.k_bound);
    out.result = to_json(rep);
    if (rep.theorem_violation) out.exit_code = kViolation;
    else if (rep.verdict == Verdict::InconclusiveWithinBounds) out.exit_code = kInconclusive;
  } else if (o.command == "smallcoef") {
    Rational rho;
    try {
      rho = rational_from_string(o.rho);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "malformed --rho '" + o.rho + "'");
    }
    SmallCoefReport rep = smallcoef_end_to_end(inst, rho, o.k_bound);
    out.result = to_json(rep);
    if (rep.theorem_violation) out.exit_code = kViolation;
  }
  return out;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::FactorizationTooHard:
    case ErrorKind::RootSearchIncomplete: return kInconclusive;
    case ErrorKind::QEqualsOne: return kViolation;
    default: return kInvalid;
  }
}

template <class F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {json{{"error", e.what()}, {"error_kind", std::string(to_string(e.kind()))}}, exit_for(e)};
  } catch (const std::logic_error& e) {
    return {json{{"error", std::string("internal consistency failure: ") + e.what()}}, kViolation};
  } catch (const std::exception& e) {
    return {json{{"error", e.what()}}, kInvalid};
  }
}

json args_json(const Options& o) {
  json a = json::object();
  if (o.command == "solve" && o.n_bound >= 0) a["n_bound"] = dec(o.n_bound);
  if (o.command == "local") a["a"] = dec(static_cast<long>(o.a));
  if (o.command == "local" && o.k) a["k"] = dec(*o.k);
  if (o.command != "solve") a["k_bound"] = dec(o.k_bound);
  if (o.command == "smallcoef") a["rho"] = o.rho;
  return a;
}

json report(const std::string& command, const json& args, const std::string& digest, const Outcome& out,
            std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  json r;
  r["command"] = command;
  r["args"] = args;
  r["instance_digest"] = digest.empty() ? json(nullptr) : json(digest);
  r["result"] = out.result;
  r["timing_ms"] = std::to_string(ms);
  r["exit_code"] = std::to_string(out.exit_code);
  return r;
}

json file_report(const Options& o, const std::string& path, int& code) {
  auto start = std::chrono::steady_clock::now();
  std::string digest;
  Outcome out = guarded([&] {
    InstanceFile f = load_instance(path);
    digest = instance_digest(f.instance);
    return run_on_instance(o, f.instance);
  });
  code = out.exit_code;
  json r = report(o.command, args_json(o), digest, out, start);
  r["instance"] = path;
  return r;
}

int combine(int a, int b) {
  // Violation dominates, then invalid input, then inconclusive.
  for (int c : {kViolation, kInvalid, kInconclusive})
    if (a == c || b == c) return c;
  return kOk;
}

int run_instance_command(const Options& o, const std::string& file, const std::string& dir) {
  if (dir.empty()) {
    int code = kOk;
    std::cout << file_report(o, file, code).dump(2) << "\n";
    return code;
  }
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path().string());
  if (ec) {
    Outcome out{json{{"error", "cannot read directory " + dir}}, kInvalid};
    std::cout << report(o.command, args_json(o), "", out, std::chrono::steady_clock::now()).dump(2) << "\n";
    return kInvalid;
  }
  std::sort(paths.begin(), paths.end());
  // Files are independent; results are collected by index so output order
  // does not depend on scheduling.
  std::vector<json> reports(paths.size());
  std::vector<int> codes(paths.size(), kOk);
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(paths.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < paths.size();) reports[i] = file_report(o, paths[i], codes[i]);
    });
  for (auto& t : pool) t.join();
  int code = kOk;
  for (int c : codes) code = combine(code, c);
  json batch;
  batch["command"] = o.command;
  batch["directory"] = dir;
  batch["reports"] = reports;
  batch["exit_code"] = std::to_string(code);
  std::cout << batch.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential local-global principle over rational function fields"};
  app.require_subcommand(1);
  Options o;
  std::string file, dir;

  auto add_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("file", file, "instance JSON");
    auto* d = sub->add_option("--dir", dir, "process every *.json in a directory");
    f->excludes(d);
  };
  auto* solve = app.add_subcommand("solve", "decide whether some B(n) vanishes");
  add_input(solve);
  solve->add_option("--n-bound", o.n_bound, "scan |n| ≤ N instead of the height bound");

  auto* local = app.add_subcommand("local", "search for a local witness k");
  add_input(local);
  local->add_option("--a", o.a, "modulus a")->required()->check(CLI::PositiveNumber);
  local->add_option("--k-bound", o.k_bound, "search |k| ≤ K")->check(CLI::NonNegativeNumber);
  local->add_option("--k", o.k, "check this k only");

  auto* certify = app.add_subcommand("certify", "effective local-global certificate");
  add_input(certify);
  certify->add_option("--k-bound", o.k_bound, "witness search bound")->check(CLI::NonNegativeNumber);

  auto* small = app.add_subcommand("smallcoef", "small-coefficient theorem end to end");
  add_input(small);
  small->add_option("--rho", o.rho, "growth constant P/Q in (0,1)")->required();
  small->add_option("--k-bound", o.k_bound, "witness search bound")->check(CLI::NonNegativeNumber);

  std::string suite;
  std::uint64_t seed = 0;
  long count = 0, max_deg = 12;
  auto* verify = app.add_subcommand("verify", "run a randomized theorem suite");
  verify->add_option("suite", suite, "smt|czgcd|gauss|sunit|claimD|claimI")->required();
  verify->add_option("--seed", seed)->required();
  verify->add_option("--count", count)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--max-deg", max_deg)->check(CLI::PositiveNumber);

  std::string profile, out_path;
  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  gen->add_option("--seed", seed)->required();
  gen->add_option("--profile", profile, "small|dep-heavy|charp")->required();
  gen->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  for (auto* sub : {solve, local, certify, small})
    if (sub->parsed()) {
      o.command = sub->get_name();
      if (file.empty() && dir.empty()) {
        std::cerr << o.command << ": an instance file or --dir is required\n";
        return kInvalid;
      }
      return run_instance_command(o, file, dir);
    }

  auto start = std::chrono::steady_clock::now();
  if (verify->parsed()) {
    json args{{"suite", suite}, {"seed", std::to_string(seed)}, {"count", dec(count)}, {"max_deg", dec(max_deg)}};
    Outcome out = guarded([&] {
      SuiteResult r = run_suite(suite, seed, count, max_deg);
      return Outcome{to_json(r), r.violations ? kViolation : kOk};
    });
    std::cout << report("verify", args, "", out, start).dump(2) << "\n";
    return out.exit_code;
  }
  // gen
  json args{{"seed", std::to_string(seed)}, {"profile", profile}, {"out", out_path}};
  std::string digest;
  Outcome out = guarded([&] {
    auto p = parse_profile(profile);
    if (!p) throw Error(ErrorKind::InvalidArgument, "unknown profile '" + profile + "'");
    Rng rng(seed);
    PowerSumInstance inst = random_instance(*p, rng);
    save_instance(out_path, inst, std::string(to_string(*p)) + "-" + std::to_string(seed), seed);
    digest = instance_digest(inst);
    return Outcome{json{{"out", out_path}, {"field", inst.field().describe()}, {"m", dec(static_cast<long>(inst.m()))},
                        {"deg_ins_f", dec(deg_ins(inst.f()))}},
                   kOk};
  });
  std::cout << report("gen", args, digest, out, start).dump(2) << "\n";
  return out.exit_code;
}
