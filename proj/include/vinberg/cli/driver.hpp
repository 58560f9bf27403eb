#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vinberg/asymptotics/exponents.hpp"
#include "vinberg/checks/diagram.hpp"
#include "vinberg/checks/dy.hpp"
#include "vinberg/checks/filtrations.hpp"
#include "vinberg/checks/identities.hpp"
#include "vinberg/rees/rees.hpp"

namespace vinberg::cli {

inline constexpr const char* kToolName = "vinberg";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultBound = 6;
inline constexpr const char* kBoundEnv = "VINBERG_BOUND";
/// The D_Y kernel comparison is capped: (4,4) already takes about 100 s.
inline constexpr int kDyBoundCap = 4;
/// Exponent checks in `verify all` cover Sym^0 .. Sym^8.
inline constexpr unsigned kExponentRange = 8;

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "presentation", "dy",    "rees",          "tau",
                                              "grderv",     "pwfilt",       "vfilt", "asymp-diagram", "parabolic"};
  return names;
}

inline int default_bound() {
  const char* env = std::getenv(kBoundEnv);
  if (!env || !*env) return kDefaultBound;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kBoundEnv) + " must be a non-negative integer");
  }
}

/// Runs one suite at the given bound. Throws UsageError for bounds a suite cannot use.
inline std::vector<CheckReport> run_suite(const std::string& suite, int bound) {
  if (suite == "identities") return {checks::verify_sl2_identities().to_report()};
  if (suite == "presentation") return {checks::verify_dsl2_presentation().to_report()};
  if (suite == "dy") {
    if (bound < 2) throw UsageError("dy: bound must be >= 2 to see the relation");
    int b = std::min(bound, kDyBoundCap);
    return {checks::verify_dy_relation(b, b)};
  }
  if (suite == "rees") return {rees_fiber_check(bound)};
  if (suite == "tau") return {tau_check(bound)};
  if (suite == "grderv") return {gr_derivations_check(bound)};
  if (suite == "pwfilt") return {checks::pw_vs_derivations_check(checks::default_operator_samples(), bound).to_report()};
  if (suite == "vfilt") return {checks::vfiltration_check(bound).to_report()};
  if (suite == "asymp-diagram") return {checks::asymp_diagram_check(static_cast<unsigned>(bound))};
  if (suite == "parabolic") return {checks::parabolic_rank1_check(static_cast<unsigned>(bound))};
  if (suite == "exponents") {
    std::vector<CheckReport> out;
    for (unsigned m = 0; m <= kExponentRange; ++m) out.push_back(leading_exponent_check(m));
    return out;
  }
  throw UsageError("unknown suite '" + suite + "'");
}

/// Every suite, run concurrently; results are gathered in a fixed order.
inline std::vector<CheckReport> run_all(int bound) {
  std::vector<std::string> names = suite_names();
  names.push_back("exponents");
  std::vector<std::future<std::vector<CheckReport>>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n, bound] { return run_suite(n, bound); }));
  std::vector<CheckReport> out;
  for (auto& j : jobs)
    for (auto& r : j.get()) out.push_back(std::move(r));
  return out;
}

struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckReport> checks;
  nlohmann::json data;  // command-specific payload (exponents, localize)
  double duration_seconds = 0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass(); });
  }

  /// Duration is reported on stderr only, so identical runs give identical JSON.
  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    nlohmann::json j = {{"tool", kToolName}, {"version", kVersion}, {"command", command},
                        {"parameters", parameters}, {"checks", arr}, {"pass", pass()}};
    if (!data.is_null()) j["data"] = data;
    return j;
  }
};

inline std::string json_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void print_checks(std::ostream& out, const std::vector<CheckReport>& checks) {
  for (const auto& c : checks) {
    std::size_t ok = 0;
    for (const auto& i : c.items) ok += i.pass;
    out << (c.pass() ? "PASS " : "FAIL ") << c.check << "  " << ok << "/" << c.items.size() << " items";
    if (!c.parameters.empty()) out << "  " << c.parameters.dump();
    out << "\n";
    for (const auto* f : c.failures())
      out << "  fail: " << f->name << "\n        expected " << json_text(f->expected) << "\n        got      " << json_text(f->got)
          << "\n";
  }
}

inline void write_json(const std::string& path, const RunReport& rep) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << rep.to_json().dump(2) << "\n";
}

inline std::pair<unsigned, unsigned> parse_rep_indices(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--rep expects m,k");
  auto num = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) || std::isspace(c); }))
      throw UsageError("--rep expects two non-negative integers, got '" + text + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification suites for the SL2 Vinberg semigroup", kToolName};
  app.require_subcommand(1);
  int bound = -1;
  std::string json_path;
  bool quiet = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "degree/level bound (default 6, or $" + std::string(kBoundEnv) + ")")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--json", json_path, "write the JSON report to this path");
    sub->add_flag("--quiet", quiet, "no human-readable output");
  };
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite, or all of them");
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(allowed));
  add_common(verify);
  long m = -1;
  auto* expo = app.add_subcommand("exponents", "asymptotic exponents of Sym^m from n-coinvariants");
  expo->add_option("--m", m, "symmetric power")->required();
  add_common(expo);
  std::string rep_text, point_text;
  auto* loc = app.add_subcommand("localize", "fiber of the localization of V_m (x) V_k^* at a point");
  loc->add_option("--rep", rep_text, "m,k")->required();
  loc->add_option("--point", point_text, "a,b,c,d with p/q entries")->required();
  add_common(loc);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  try {
    if (bound < 0) bound = default_bound();
    if (verify->parsed()) {
      rep.command = "verify " + suite;
      rep.parameters = {{"suite", suite}, {"bound", bound}};
      rep.checks = suite == "all" ? run_all(bound) : run_suite(suite, bound);
      if (!quiet) print_checks(out, rep.checks);
    } else if (expo->parsed()) {
      if (m < 0) throw UsageError("--m must be non-negative");
      rep.command = "exponents";
      rep.parameters = {{"m", m}};
      auto r = leading_exponent_result(static_cast<unsigned>(m));
      rep.checks.push_back(r.report);
      rep.data = r.to_json();
      if (!quiet) {
        out << "coinvariant exponents " << exponent_set_text(r.coinv.exponents) << "\n";
        out << "oracle exponents      " << integer_set_text(r.oracle) << "\n";
        out << "leading exponent      " << r.leading << "\n";
        out << (r.report.pass() ? "pass" : "fail") << "\n";
      }
    } else {
      auto [mi, ki] = parse_rep_indices(rep_text);
      RationalPoint p;
      try {
        p = RationalPoint::parse(point_text);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--point: ") + e.what());
      }
      rep.command = "localize";
      rep.parameters = {{"rep", {mi, ki}}, {"point", p.to_string()}};
      std::optional<LocalizationFiber> found;
      try {
        found = localization_fiber(matrix_coefficient_bimodule(mi, ki), p);
      } catch (const PointError& e) {
        throw UsageError(e.what());
      }
      const LocalizationFiber& fib = *found;
      rep.data = fib.to_json();
      if (!quiet) {
        out << "point " << p.to_string() << " (" << rep.data["kind"].get<std::string>() << ")\n";
        out << "stabilizer basis\n";
        for (const auto& v : fib.stabilizer.basis()) out << "  " << vinberg::to_json(v).dump() << "\n";
        out << "coinvariant dimension " << fib.coinvariants.dim << "\n";
        if (fib.cartan) {
          out << "Euler lift " << vinberg::to_json(*fib.cartan).dump() << "\n";
          if (!fib.coinvariants.induced.empty())
            out << "induced Cartan action " << vinberg::to_json(fib.coinvariants.induced[0]).dump() << "\n";
        }
      }
    }
    rep.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!json_path.empty()) write_json(json_path, rep);
  } catch (const UsageError& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kUsage;
  }
  if (!quiet) err << "duration " << rep.duration_seconds << " s\n";
  return rep.pass() ? kPass : kFail;
}

}  // namespace vinberg::cli
