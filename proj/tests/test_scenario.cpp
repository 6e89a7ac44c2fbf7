#include <string>
#include <vector>

#include "doctest.h"
#include "groupoidal/scenario.hpp"
#include "json.hpp"

using namespace groupoidal;

namespace {

std::string builtin_text(const std::string& name) {
  for (const auto& b : builtin_scenarios())
    if (b.name == name) return b.json_text;
  REQUIRE(false);
  return "";
}

}  // namespace

TEST_CASE("parse, serialize and parse again is byte-stable") {
  for (const auto& b : builtin_scenarios()) {
    const Scenario s1 = parse_scenario(b.json_text);
    const std::string text1 = serialize_scenario(s1);
    const Scenario s2 = parse_scenario(text1);
    const std::string text2 = serialize_scenario(s2);
    CHECK(text1 == text2);
    CHECK(text1 == b.json_text);  // builtins are emitted in canonical form
    CHECK(scenario_fingerprint(s1) == scenario_fingerprint(s2));
  }
}

TEST_CASE("fingerprints distinguish scenarios") {
  const Scenario a = parse_scenario(builtin_text("s3-sign"));
  const Scenario b = parse_scenario(builtin_text("s3-trivial"));
  CHECK(scenario_fingerprint(a) != scenario_fingerprint(b));
}

TEST_CASE("malformed scenarios fail with scenario_error") {
  CHECK_THROWS_AS(parse_scenario("not json at all"), scenario_error);
  CHECK_THROWS_AS(parse_scenario("[1,2,3]"), scenario_error);
  CHECK_THROWS_AS(parse_scenario("{}"), scenario_error);  // neither group nor space
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]},
    "space":{"type":"pair","points":3}})"),
                  scenario_error);  // both
  CHECK_THROWS_AS(parse_scenario(R"({"unknown_field":1,"space":{"type":"pair","points":3}})"),
                  scenario_error);
  CHECK_THROWS_AS(parse_scenario(R"({"space":{"type":"pair","points":0}})"), scenario_error);
  CHECK_THROWS_AS(parse_scenario(R"({"space":{"type":"circle","points":3}})"), scenario_error);
  // group scenarios need subgroup and representation
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]}})"),
                  scenario_error);
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]},
    "subgroup":[[0,1,2]]})"),
                  scenario_error);
  // generator of the wrong length
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0]]},
    "subgroup":[[0,1,2]],"representation":{"type":"trivial"}})"),
                  scenario_error);
  // table and generators together
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":2,"generators":[[1,0]],
    "table":[[0,1],[1,0]]},"subgroup":[0],"representation":{"type":"trivial"}})"),
                  scenario_error);
  // dim on a non-trivial representation type
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]},
    "subgroup":[[0,1,2]],"representation":{"type":"sign","dim":2}})"),
                  scenario_error);
  // matrices on the wrong type / missing matrices
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]},
    "subgroup":[[0,1,2]],"representation":{"type":"matrices"}})"),
                  scenario_error);
  // ragged matrix rows
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]},
    "subgroup":[[0,1,2]],"representation":{"type":"matrices",
    "matrices":[[[[1,0],[0,0]],[[0,0]]]]}})"),
                  scenario_error);
  // entries must be [re, im]
  CHECK_THROWS_AS(parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2]]},
    "subgroup":[[0,1,2]],"representation":{"type":"matrices","matrices":[[[1]]]}})"),
                  scenario_error);
  CHECK_THROWS_AS(parse_scenario(R"({"space":{"type":"pair","points":3},"suites":["nope"]})"),
                  scenario_error);
  CHECK_THROWS_AS(parse_scenario(R"({"space":{"type":"pair","points":3},"tolerance":0})"),
                  scenario_error);
  CHECK_THROWS_AS(parse_scenario(R"({"space":{"type":"pair","points":3},
    "subgroup":[[0,1,2]]})"),
                  scenario_error);
}

TEST_CASE("group context reports helpful construction failures") {
  // a subgroup word that is not a group element
  Scenario s = parse_scenario(R"({"group":{"degree":4,"generators":[[1,2,3,0]]},
    "subgroup":[[0,1,2,3],[1,0,2,3]],"representation":{"type":"trivial"}})");
  CHECK_THROWS_AS(build_group_context(s), scenario_error);
  // a word list that is an element set but not closed
  Scenario s2 = parse_scenario(R"({"group":{"degree":3,"generators":[[1,0,2],[1,2,0]]},
    "subgroup":[[0,1,2],[1,2,0]],"representation":{"type":"trivial"}})");
  CHECK_THROWS_AS(build_group_context(s2), not_a_subgroup_error);
  // matrices must be parallel to the subgroup
  Scenario s3 = parse_scenario(R"({"group":{"degree":4,"generators":[[1,2,3,0]]},
    "subgroup":[[0,1,2,3],[2,3,0,1]],"representation":{"type":"matrices",
    "matrices":[[[[1,0]]]]}})");
  CHECK_THROWS_AS(build_group_context(s3), scenario_error);
  // index subgroups work with table groups
  Scenario s4 = parse_scenario(R"({"group":{"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],
    [3,0,1,2]]},"subgroup":[0,2],"representation":{"type":"trivial","dim":1}})");
  const GroupContext ctx = build_group_context(s4);
  CHECK(ctx.group.order() == 4);
  CHECK(ctx.cosets.points() == 2);
  // word subgroups do not work with table groups
  Scenario s5 = parse_scenario(R"({"group":{"table":[[0,1],[1,0]]},
    "subgroup":[[0,1]],"representation":{"type":"trivial"}})");
  CHECK_THROWS_AS(build_group_context(s5), scenario_error);
}

TEST_CASE("every builtin validates cleanly and passes its full run") {
  for (const auto& b : builtin_scenarios()) {
    const Scenario s = parse_scenario(b.json_text);
    const ValidationOutcome v = validate_scenario(s);
    CHECK(v.ok);
    CHECK(v.problems.empty());
    const RunReport r = run_suites(s);
    CHECK(r.complete);
    CHECK(r.failed() == 0);
    CHECK(r.all_passed());
    CHECK(r.passed() >= 8);
  }
}

TEST_CASE("suite selection limits what runs and keeps order") {
  Scenario s = parse_scenario(builtin_text("s3-sign"));
  s.suites = {"haar", "axioms"};
  const RunReport r = run_suites(s);
  REQUIRE(r.results.size() == 5);  // 3 haar checks then 2 axioms checks
  CHECK(r.results[0].suite == "haar");
  CHECK(r.results[3].suite == "axioms");
  CHECK(r.all_passed());
}

TEST_CASE("the all suite name expands to everything") {
  Scenario s = parse_scenario(builtin_text("z4-free"));
  s.suites = {"all"};
  const RunReport r = run_suites(s);
  CHECK(r.results.size() == 12);
  CHECK(r.all_passed());
}

TEST_CASE("runs are deterministic") {
  const Scenario s = parse_scenario(builtin_text("s3-sign"));
  const RunReport a = run_suites(s);
  const RunReport b = run_suites(s);
  REQUIRE(a.results.size() == b.results.size());
  for (size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].check == b.results[i].check);
    CHECK(a.results[i].status == b.results[i].status);
    CHECK(a.results[i].residual == b.results[i].residual);
    CHECK(a.results[i].detail == b.results[i].detail);
  }
  CHECK(a.fingerprint == b.fingerprint);
  CHECK(render_report(a, "json") == render_report(b, "json"));
}

TEST_CASE("machine report carries the full result table and no timing") {
  const Scenario s = parse_scenario(builtin_text("z4-character"));
  const RunReport r = run_suites(s);
  const nlohmann::json j = nlohmann::json::parse(render_report(r, "json"));
  CHECK(j.contains("scenario"));
  CHECK(j.contains("fingerprint"));
  CHECK(j.contains("complete"));
  CHECK(j.contains("summary"));
  CHECK(j.contains("results"));
  CHECK(!j.contains("elapsed"));
  CHECK(!j.contains("elapsed_seconds"));
  CHECK(j["summary"]["executed"].get<int>() == r.executed());
  CHECK(j["summary"]["passed"].get<int>() == r.passed());
  REQUIRE(j["results"].is_array());
  REQUIRE(j["results"].size() == r.results.size());
  for (const auto& e : j["results"]) {
    CHECK(e.contains("suite"));
    CHECK(e.contains("check"));
    CHECK(e.contains("status"));
    CHECK(e.contains("residual"));
    CHECK(e.contains("tolerance"));
    CHECK(e.contains("detail"));
  }
  const std::string human = render_report(r, "human");
  CHECK(human.find("PASS") != std::string::npos);
  CHECK(human.find("passed") != std::string::npos);
  CHECK_THROWS_AS(render_report(r, "yaml"), scenario_error);
}

TEST_CASE("a broken representation surfaces as a failed setup entry") {
  Scenario s = parse_scenario(R"({"group":{"degree":4,"generators":[[1,2,3,0]]},
    "subgroup":[[0,1,2,3],[2,3,0,1]],"representation":{"type":"matrices",
    "matrices":[[[[1,0]]],[[[2,0]]]]}})");
  const RunReport r = run_suites(s);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].suite == "setup");
  CHECK(r.results[0].status == "fail");
  CHECK(!r.all_passed());
}

TEST_CASE("a size cap breach marks the report incomplete without failing it") {
  Scenario s = parse_scenario(builtin_text("s3-sign"));
  s.group_cap = 3;  // the group needs 6
  const RunReport r = run_suites(s);
  CHECK(!r.complete);
  CHECK(r.failed() == 0);
  CHECK(r.skipped() >= 1);
  CHECK(r.all_passed());  // nothing executed, nothing failed
}

TEST_CASE("tolerance travels from the scenario into every check") {
  Scenario s = parse_scenario(builtin_text("pair4"));
  s.tolerance = 0.5;
  const RunReport r = run_suites(s);
  for (const auto& c : r.results) CHECK(c.tolerance == 0.5);
}

TEST_CASE("validate_scenario flags structural problems") {
  const ValidationOutcome ok = validate_scenario(parse_scenario(builtin_text("pair4")));
  CHECK(ok.ok);
  CHECK(ok.summary.find("4 points") != std::string::npos);

  Scenario s = parse_scenario(R"({"group":{"degree":4,"generators":[[1,2,3,0]]},
    "subgroup":[[0,1,2,3],[1,0,2,3]],"representation":{"type":"trivial"}})");
  const ValidationOutcome bad = validate_scenario(s);
  CHECK(!bad.ok);
  REQUIRE(!bad.problems.empty());
}
