#ifndef GROUPOIDAL_SCENARIO_HPP
#define GROUPOIDAL_SCENARIO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "groupoidal/mackey.hpp"

namespace groupoidal {

// Malformed scenario input (bad JSON, unknown fields, wrong shapes).
// Distinct from check failures: the CLI maps this to usage exit code 2.
struct scenario_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RepSpec {
  std::string type;  // trivial | sign | permutation | regular | matrices
  int dim = 1;       // trivial only
  std::vector<CMatrix> matrices;  // matrices only, parallel to the subgroup
};

struct Scenario {
  std::string name;

  bool has_group = false;
  int degree = 0;  // generators form
  std::vector<std::vector<int>> generators;
  std::vector<std::vector<int>> table;  // table form (non-empty when used)
  bool subgroup_as_indices = false;
  std::vector<std::vector<int>> subgroup_words;
  std::vector<int> subgroup_indices;
  RepSpec rep;

  bool has_space = false;
  int pair_points = 0;

  std::vector<std::string> suites;  // empty means every suite
  double tolerance = kVerifyTol;
  int group_cap = kDefaultGroupCap;  // set by the CLI, not stored in JSON
};

extern const std::vector<std::string> kSuiteNames;
bool is_suite_name(const std::string& s);

Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& s);
std::uint64_t scenario_fingerprint(const Scenario& s);

// Constructed objects for a group scenario (throws for space scenarios).
struct GroupContext {
  FiniteGroup group;
  std::vector<int> subgroup;
  CosetSpace cosets;
  GroupRep rep;

  GroupContext(FiniteGroup g, std::vector<int> k, GroupRep r)
      : group(std::move(g)),
        subgroup(k),
        cosets(group, std::move(k)),
        rep(std::move(r)) {}
};
GroupContext build_group_context(const Scenario& s);

struct CheckResult {
  std::string suite;
  std::string check;
  std::string status;  // pass | fail | skip
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct RunReport {
  std::string scenario_name;
  std::string fingerprint;
  bool complete = true;
  std::vector<CheckResult> results;
  double elapsed_seconds = 0.0;

  int executed() const;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool all_passed() const { return failed() == 0; }
};

// Runs the scenario's suites (or all of them); collects failures instead of
// aborting. Size-cap breaches mark the report incomplete.
RunReport run_suites(const Scenario& s);

// format: "human" (table, includes timing) or "json" (stable machine output,
// no timing).
std::string render_report(const RunReport& r, const std::string& format);

struct BuiltinScenario {
  std::string name;
  std::string description;
  std::string json_text;
};
const std::vector<BuiltinScenario>& builtin_scenarios();

struct ValidationOutcome {
  bool ok = true;
  std::vector<std::string> problems;
  std::string summary;
};
// Builds every object the scenario describes and runs the structural
// validations, without any suite checks.
ValidationOutcome validate_scenario(const Scenario& s);

}  // namespace groupoidal

#endif
