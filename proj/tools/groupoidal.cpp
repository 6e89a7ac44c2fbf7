// Command-line front end: run check suites on a scenario, validate a
// scenario's structure, or list/emit the bundled example scenarios.
//
// Exit codes: 0 all executed checks passed, 1 check failures, 2 usage or
// input errors.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "groupoidal/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw groupoidal::scenario_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Honors GROUPOIDAL_SIZE_CAP (positive integer) as the group enumeration cap.
void apply_env_cap(groupoidal::Scenario& s) {
  const char* raw = std::getenv("GROUPOIDAL_SIZE_CAP");
  if (!raw || !*raw) return;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (!end || *end != '\0' || v <= 0)
    throw groupoidal::scenario_error(
        std::string("GROUPOIDAL_SIZE_CAP must be a positive integer, got '") + raw + "'");
  s.group_cap = static_cast<int>(v);
}

groupoidal::Scenario load_scenario(const std::string& path) {
  groupoidal::Scenario s = groupoidal::parse_scenario(read_file(path));
  apply_env_cap(s);
  return s;
}

int cmd_run(const std::string& path, const std::vector<std::string>& suites, double tol,
            const std::string& format, const std::string& out_path) {
  groupoidal::Scenario s = load_scenario(path);
  if (!suites.empty()) s.suites = suites;
  if (tol > 0.0) s.tolerance = tol;

  const groupoidal::RunReport report = groupoidal::run_suites(s);
  const std::string text = groupoidal::render_report(report, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw groupoidal::scenario_error("cannot write file: " + out_path);
    out << text;
  }
  return report.all_passed() ? kExitPass : kExitCheckFailed;
}

int cmd_validate(const std::string& path) {
  const groupoidal::Scenario s = load_scenario(path);
  const groupoidal::ValidationOutcome v = groupoidal::validate_scenario(s);
  if (!v.summary.empty()) std::cout << v.summary << "\n";
  for (const std::string& p : v.problems) std::cout << "problem: " << p << "\n";
  std::cout << (v.ok ? "valid" : "invalid") << "\n";
  return v.ok ? kExitPass : kExitCheckFailed;
}

int cmd_builtin(bool list, const std::string& emit) {
  const auto& builtins = groupoidal::builtin_scenarios();
  if (list) {
    size_t width = 0;
    for (const auto& b : builtins) width = std::max(width, b.name.size());
    for (const auto& b : builtins)
      std::cout << b.name << std::string(width - b.name.size() + 2, ' ')
                << b.description << "\n";
    return kExitPass;
  }
  for (const auto& b : builtins) {
    if (b.name == emit) {
      std::cout << b.json_text;
      return kExitPass;
    }
  }
  std::cerr << "error: no builtin scenario named '" << emit << "' (try --list)\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoid representation checks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run check suites from a scenario file");
  std::string run_path;
  std::vector<std::string> run_suites;
  double run_tol = -1.0;
  std::string run_format = "human";
  std::string run_out;
  run->add_option("scenario", run_path, "Scenario JSON file")->required();
  run->add_option("--suite", run_suites,
                  "Suite to run (repeatable): all, axioms, haar, theorem1, theorem2, "
                  "theorem3, equivalence");
  run->add_option("--tol", run_tol, "Override the pass tolerance (positive)");
  run->add_option("--format", run_format, "Report format")
      ->check(CLI::IsMember({"human", "json"}));
  run->add_option("--out", run_out, "Write the report to a file instead of stdout");

  auto* validate = app.add_subcommand("validate", "Check a scenario's structure only");
  std::string validate_path;
  validate->add_option("scenario", validate_path, "Scenario JSON file")->required();

  auto* builtin = app.add_subcommand("builtin", "Bundled example scenarios");
  bool builtin_list = false;
  std::string builtin_emit;
  builtin->add_flag("--list", builtin_list, "List bundled scenario names");
  builtin->add_option("--emit", builtin_emit, "Print the named scenario's JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (run->parsed()) {
      for (const std::string& name : run_suites)
        if (!groupoidal::is_suite_name(name))
          throw groupoidal::scenario_error("unknown suite '" + name + "'");
      if (run->count("--tol") > 0 && run_tol <= 0.0)
        throw groupoidal::scenario_error("--tol must be positive");
      return cmd_run(run_path, run_suites, run->count("--tol") > 0 ? run_tol : -1.0,
                     run_format, run_out);
    }
    if (validate->parsed()) return cmd_validate(validate_path);
    if (builtin->parsed()) {
      if (builtin_list != builtin_emit.empty())
        throw groupoidal::scenario_error("builtin needs exactly one of --list or --emit NAME");
      return cmd_builtin(builtin_list, builtin_emit);
    }
  } catch (const groupoidal::scenario_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
