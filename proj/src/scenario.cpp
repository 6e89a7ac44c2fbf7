#include "groupoidal/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace groupoidal {

using nlohmann::ordered_json;

const std::vector<std::string> kSuiteNames = {"axioms",   "haar",     "theorem1",
                                              "theorem2", "theorem3", "equivalence"};

bool is_suite_name(const std::string& s) {
  return s == "all" ||
         std::find(kSuiteNames.begin(), kSuiteNames.end(), s) != kSuiteNames.end();
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw scenario_error(msg); }

void check_keys(const ordered_json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) bad(where + ": unknown field '" + it.key() + "'");
  }
}

int get_int(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  return j.get<int>();
}

std::vector<int> get_int_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of integers");
  std::vector<int> v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<std::vector<int>> get_word_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of permutation words");
  std::vector<std::vector<int>> v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(get_int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

CMatrix get_matrix(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where + " must be a non-empty array of rows");
  const int rows = int(j.size());
  int cols = -1;
  CMatrix m;
  for (int i = 0; i < rows; ++i) {
    const ordered_json& row = j[i];
    if (!row.is_array()) bad(where + " row " + std::to_string(i) + " must be an array");
    if (cols < 0) {
      cols = int(row.size());
      if (cols == 0) bad(where + " rows must not be empty");
      m = CMatrix::zero(rows, cols);
    } else if (int(row.size()) != cols) {
      bad(where + " rows have inconsistent lengths");
    }
    for (int k = 0; k < cols; ++k) {
      const ordered_json& e = row[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        bad(where + " entries must be [re, im] number pairs");
      m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

ordered_json matrix_to_json(const CMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(ordered_json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("scenario must be a JSON object");
  check_keys(j, "scenario",
             {"name", "group", "subgroup", "representation", "space", "suites", "tolerance"});

  Scenario s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name must be a string");
    s.name = j["name"].get<std::string>();
  }

  const bool has_group = j.contains("group");
  const bool has_space = j.contains("space");
  if (has_group == has_space)
    bad("scenario needs exactly one of 'group' or 'space'");

  if (has_group) {
    s.has_group = true;
    const ordered_json& g = j["group"];
    if (!g.is_object()) bad("group must be an object");
    check_keys(g, "group", {"degree", "generators", "table"});
    if (g.contains("table")) {
      if (g.contains("degree") || g.contains("generators"))
        bad("group: give either degree+generators or table, not both");
      s.table = get_word_list(g["table"], "group.table");
      if (s.table.empty()) bad("group.table must not be empty");
    } else {
      if (!g.contains("degree") || !g.contains("generators"))
        bad("group needs both degree and generators (or a table)");
      s.degree = get_int(g["degree"], "group.degree");
      if (s.degree < 1) bad("group.degree must be at least 1");
      s.generators = get_word_list(g["generators"], "group.generators");
      for (size_t i = 0; i < s.generators.size(); ++i)
        if (int(s.generators[i].size()) != s.degree)
          bad("group.generators[" + std::to_string(i) + "] must have length " +
              std::to_string(s.degree));
    }

    if (!j.contains("subgroup")) bad("group scenarios need a subgroup");
    const ordered_json& k = j["subgroup"];
    if (!k.is_array() || k.empty())
      bad("subgroup must be a non-empty array (include at least the identity)");
    if (k[0].is_array()) {
      s.subgroup_words = get_word_list(k, "subgroup");
    } else {
      s.subgroup_as_indices = true;
      s.subgroup_indices = get_int_list(k, "subgroup");
    }

    if (!j.contains("representation")) bad("group scenarios need a representation");
    const ordered_json& r = j["representation"];
    if (!r.is_object()) bad("representation must be an object");
    check_keys(r, "representation", {"type", "dim", "matrices"});
    if (!r.contains("type") || !r["type"].is_string()) bad("representation.type is required");
    s.rep.type = r["type"].get<std::string>();
    const bool known = s.rep.type == "trivial" || s.rep.type == "sign" ||
                       s.rep.type == "permutation" || s.rep.type == "regular" ||
                       s.rep.type == "matrices";
    if (!known)
      bad("representation.type must be trivial, sign, permutation, regular, or matrices");
    if (r.contains("dim")) {
      if (s.rep.type != "trivial") bad("representation.dim only applies to type trivial");
      s.rep.dim = get_int(r["dim"], "representation.dim");
      if (s.rep.dim < 1) bad("representation.dim must be at least 1");
    }
    if (s.rep.type == "matrices") {
      if (!r.contains("matrices")) bad("representation.matrices is required for type matrices");
      const ordered_json& mats = r["matrices"];
      if (!mats.is_array() || mats.empty())
        bad("representation.matrices must be a non-empty array");
      for (size_t i = 0; i < mats.size(); ++i)
        s.rep.matrices.push_back(
            get_matrix(mats[i], "representation.matrices[" + std::to_string(i) + "]"));
    } else if (r.contains("matrices")) {
      bad("representation.matrices only applies to type matrices");
    }
  } else {
    s.has_space = true;
    const ordered_json& sp = j["space"];
    if (!sp.is_object()) bad("space must be an object");
    check_keys(sp, "space", {"type", "points"});
    if (!sp.contains("type") || !sp["type"].is_string() ||
        sp["type"].get<std::string>() != "pair")
      bad("space.type must be \"pair\"");
    if (!sp.contains("points")) bad("space.points is required");
    s.pair_points = get_int(sp["points"], "space.points");
    if (s.pair_points < 1) bad("space.points must be at least 1");
    if (j.contains("subgroup") || j.contains("representation"))
      bad("space scenarios take no subgroup or representation");
  }

  if (j.contains("suites")) {
    if (!j["suites"].is_array()) bad("suites must be an array of suite names");
    for (const auto& e : j["suites"]) {
      if (!e.is_string() || !is_suite_name(e.get<std::string>()))
        bad("suites entries must be one of: all, axioms, haar, theorem1, theorem2, "
            "theorem3, equivalence");
      s.suites.push_back(e.get<std::string>());
    }
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) bad("tolerance must be a number");
    s.tolerance = j["tolerance"].get<double>();
    if (!(s.tolerance > 0.0)) bad("tolerance must be positive");
  }
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  ordered_json j;
  j["name"] = s.name;
  if (s.has_group) {
    ordered_json g;
    if (!s.table.empty()) {
      g["table"] = s.table;
    } else {
      g["degree"] = s.degree;
      g["generators"] = s.generators;
    }
    j["group"] = std::move(g);
    if (s.subgroup_as_indices)
      j["subgroup"] = s.subgroup_indices;
    else
      j["subgroup"] = s.subgroup_words;
    ordered_json r;
    r["type"] = s.rep.type;
    if (s.rep.type == "trivial") r["dim"] = s.rep.dim;
    if (s.rep.type == "matrices") {
      ordered_json mats = ordered_json::array();
      for (const CMatrix& m : s.rep.matrices) mats.push_back(matrix_to_json(m));
      r["matrices"] = std::move(mats);
    }
    j["representation"] = std::move(r);
  } else {
    ordered_json sp;
    sp["type"] = "pair";
    sp["points"] = s.pair_points;
    j["space"] = std::move(sp);
  }
  j["suites"] = s.suites;
  j["tolerance"] = s.tolerance;
  return j.dump(2) + "\n";
}

std::uint64_t scenario_fingerprint(const Scenario& s) { return fnv1a(serialize_scenario(s)); }

GroupContext build_group_context(const Scenario& s) {
  if (!s.has_group) throw scenario_error("scenario has no group");
  FiniteGroup g = s.table.empty()
                      ? FiniteGroup::from_generators(s.degree, s.generators, s.group_cap)
                      : FiniteGroup::from_table(s.table);
  std::vector<int> k;
  if (s.subgroup_as_indices) {
    for (size_t i = 0; i < s.subgroup_indices.size(); ++i) {
      const int e = s.subgroup_indices[i];
      if (e < 0 || e >= g.order())
        throw scenario_error("subgroup[" + std::to_string(i) + "] index out of range");
      k.push_back(e);
    }
  } else {
    if (!g.has_words())
      throw scenario_error("subgroup words need a generator-built group; use indices");
    for (size_t i = 0; i < s.subgroup_words.size(); ++i) {
      const int e = g.element_of_word(s.subgroup_words[i]);
      if (e < 0)
        throw scenario_error("subgroup[" + std::to_string(i) +
                             "] is not an element of the group");
      k.push_back(e);
    }
  }
  k = g.normalize_subgroup(std::move(k));

  GroupRep rep;
  if (s.rep.type == "trivial") {
    rep = group_trivial_rep(g, k, s.rep.dim);
  } else if (s.rep.type == "sign") {
    rep = group_sign_rep(g, k);
  } else if (s.rep.type == "permutation") {
    rep = group_permutation_rep(g, k, natural_action(g));
  } else if (s.rep.type == "regular") {
    rep = group_regular_rep(g, k);
  } else if (s.rep.type == "matrices") {
    if (s.rep.matrices.size() != k.size())
      throw scenario_error("representation.matrices must be parallel to the subgroup list (" +
                           std::to_string(k.size()) + " elements)");
    rep = group_rep_from_matrices(g, k, s.rep.matrices);
  } else {
    throw scenario_error("unknown representation type " + s.rep.type);
  }
  return GroupContext(std::move(g), std::move(k), std::move(rep));
}

int RunReport::executed() const {
  int n = 0;
  for (const auto& r : results)
    if (r.status != "skip") ++n;
  return n;
}
int RunReport::passed() const {
  int n = 0;
  for (const auto& r : results)
    if (r.status == "pass") ++n;
  return n;
}
int RunReport::failed() const {
  int n = 0;
  for (const auto& r : results)
    if (r.status == "fail") ++n;
  return n;
}
int RunReport::skipped() const {
  int n = 0;
  for (const auto& r : results)
    if (r.status == "skip") ++n;
  return n;
}

namespace {

struct SuiteContext {
  const Scenario& sc;
  RunReport& out;
  double tol;
  std::unique_ptr<GroupContext> ctx;  // group scenarios only
  std::shared_ptr<const FiniteGroupoid> gd;

  template <typename Fn>
  void check(const std::string& suite, const std::string& name, Fn fn) {
    CheckResult r;
    r.suite = suite;
    r.check = name;
    r.tolerance = tol;
    try {
      fn(r);
      if (r.status.empty()) r.status = r.residual <= tol ? "pass" : "fail";
    } catch (const size_limit_error& e) {
      r.status = "skip";
      r.detail = std::string("size cap: ") + e.what();
      out.complete = false;
    } catch (const std::exception& e) {
      r.status = "fail";
      r.detail = e.what();
    }
    out.results.push_back(std::move(r));
  }

  void skip(const std::string& suite, const std::string& name, const std::string& why) {
    CheckResult r;
    r.suite = suite;
    r.check = name;
    r.status = "skip";
    r.tolerance = tol;
    r.detail = why;
    out.results.push_back(std::move(r));
  }

  IsotropyRep trivial_isotropy(const IsotropyGroups& iso) const {
    IsotropyRep t;
    t.dims.assign(gd->base_size, 1);
    t.mats.resize(gd->base_size);
    for (int x = 0; x < gd->base_size; ++x)
      t.mats[x].assign(iso.elems[x].size(), CMatrix::identity(1));
    return t;
  }

  ImprimitivitySystem induced_system() const {
    const IsotropyGroups iso = isotropy_subgroupoid(*gd);
    const std::vector<SectionFamily> sections = coset_all_sections(*gd, ctx->cosets);
    const IsotropyRep tau =
        coset_isotropy_rep(*gd, iso, ctx->group, ctx->cosets, ctx->rep);
    return ImprimitivitySystem{induce(gd, iso, tau, sections), ctx->rep.dim};
  }

  ImprimitivitySystem classes_system() const {
    return ImprimitivitySystem{quasi_regular_rep(gd), 1};
  }

  double equivalence_residual(const GroupoidRep& r1, const GroupoidRep& r2,
                              const std::vector<CMatrix>& a) const {
    double worst = 0.0;
    for (int g = 0; g < gd->size; ++g)
      worst = std::max(worst, CMatrix::max_abs_diff(r2.u[g] * a[gd->d[g]],
                                                    a[gd->r[g]] * r1.u[g]));
    return worst;
  }

  void run_axioms() {
    check("axioms", "groupoid-axioms", [&](CheckResult& r) {
      const GroupoidReport rep = validate_groupoid(*gd);
      r.residual = rep.ok() ? 0.0 : 1.0;
      r.detail = std::to_string(gd->size) + " elements over " +
                 std::to_string(gd->base_size) + " points";
      if (!rep.ok()) {
        r.status = "fail";
        r.detail = rep.failures[0].axiom + ": " + rep.failures[0].witness + " (and " +
                   std::to_string(rep.failures.size() - 1) + " more)";
      }
    });
    check("axioms", "orbit-classes-match-pairs", [&](CheckResult& r) {
      const QuotientGroupoid qg = quotient_groupoid(*gd);
      quotient_iso_pair(*gd, qg);
      r.residual = 0.0;
      r.detail = std::to_string(qg.q.size) + " classes match ordered point pairs";
    });
  }

  void run_haar() {
    const HaarSystem haar = counting_haar(*gd);
    const BaseMeasure mu = uniform_measure(*gd);
    const IsotropyWeights iw = counting_isotropy_weights(*gd);
    check("haar", "right-invariance", [&](CheckResult& r) {
      const CheckReport rep = verify_right_invariance(*gd, haar);
      r.residual = rep.max_residual;
      r.detail = rep.witness;
    });
    check("haar", "section-consistency", [&](CheckResult& r) {
      const SectionFamily s = ctx ? coset_section_family(*gd, ctx->cosets, ctx->cosets.base())
                                  : section_family(*gd, 0);
      const CheckReport rep = verify_consistency(*gd, s, haar, mu, iw);
      r.residual = rep.max_residual;
      r.detail = "sections " + hex64(rep.section_fingerprint);
      if (!rep.witness.empty()) r.detail += "; " + rep.witness;
    });
    check("haar", "inversion-symmetry", [&](CheckResult& r) {
      const CheckReport rep = verify_invariant_measure(*gd, haar, mu);
      r.residual = rep.max_residual;
      r.detail = rep.witness;
    });
  }

  void run_theorem1() {
    if (ctx) {
      check("theorem1", "decomposition-induced", [&](CheckResult& r) {
        const Theorem1Report rep = verify_theorem1(induced_system(), tol);
        r.residual = rep.max_residual();
        r.detail = "induced fiber dimension " + std::to_string(rep.induced_dim);
      });
    } else {
      skip("theorem1", "decomposition-induced", "needs a group scenario");
    }
    check("theorem1", "decomposition-classes", [&](CheckResult& r) {
      const Theorem1Report rep = verify_theorem1(classes_system(), tol);
      r.residual = rep.max_residual();
      r.detail = "induced fiber dimension " + std::to_string(rep.induced_dim);
    });
  }

  void run_theorem2() {
    if (ctx) {
      check("theorem2", "block-structure-induced", [&](CheckResult& r) {
        const Theorem2Report rep = verify_theorem2(induced_system(), tol);
        r.residual = rep.max_residual();
        r.detail = "block width " + std::to_string(ctx->rep.dim);
      });
    } else {
      skip("theorem2", "block-structure-induced", "needs a group scenario");
    }
    check("theorem2", "block-structure-classes", [&](CheckResult& r) {
      const Theorem2Report rep = verify_theorem2(classes_system(), tol);
      r.residual = rep.max_residual();
      r.detail = "block width 1";
    });
  }

  void run_theorem3() {
    if (!ctx) {
      skip("theorem3", "group-side-bridge", "needs a group scenario");
      return;
    }
    check("theorem3", "group-side-bridge", [&](CheckResult& r) {
      const Theorem3Report rep = verify_theorem3(ctx->group, ctx->cosets, ctx->rep);
      r.residual = rep.max_residual();
      if (!rep.dim_ok) {
        r.status = "fail";
        r.detail = "dimension mismatch";
        return;
      }
      r.detail = std::to_string(rep.points) + " cosets x width " +
                 std::to_string(rep.block_width) + " = dimension " +
                 std::to_string(rep.total_dim);
    });
  }

  void run_equivalence() {
    if (ctx) {
      check("equivalence", "classes-vs-induced-trivial", [&](CheckResult& r) {
        const IsotropyGroups iso = isotropy_subgroupoid(*gd);
        const GroupoidRep lhs = quasi_regular_rep(gd);
        const GroupoidRep rhs =
            induce(gd, iso, trivial_isotropy(iso), all_section_families(*gd));
        const auto a = find_equivalence(lhs, rhs, tol);
        if (!a) {
          r.status = "fail";
          r.detail = "no unitary family found";
          return;
        }
        r.residual = equivalence_residual(lhs, rhs, *a);
        r.detail = "unitary family found";
      });
      if (int(ctx->subgroup.size()) == 1) {
        check("equivalence", "free-action-translation", [&](CheckResult& r) {
          const IsotropyGroups iso = isotropy_subgroupoid(*gd);
          const GroupoidRep lhs =
              induce(gd, iso, trivial_isotropy(iso), all_section_families(*gd));
          const GroupoidRep rhs = regular_rep(gd);
          const auto a = find_equivalence(lhs, rhs, tol);
          if (!a) {
            r.status = "fail";
            r.detail = "no unitary family found";
            return;
          }
          r.residual = equivalence_residual(lhs, rhs, *a);
          r.detail = "unitary family found";
        });
      } else {
        skip("equivalence", "free-action-translation", "subgroup is not trivial");
      }
    } else {
      check("equivalence", "translation-vs-constant", [&](CheckResult& r) {
        const GroupoidRep lhs = trivial_rep(gd, gd->base_size);
        const GroupoidRep rhs = regular_rep(gd);
        const auto a = find_equivalence(lhs, rhs, tol);
        if (!a) {
          r.status = "fail";
          r.detail = "no unitary family found";
          return;
        }
        r.residual = equivalence_residual(lhs, rhs, *a);
        r.detail = "unitary family found";
      });
    }
  }
};

}  // namespace

RunReport run_suites(const Scenario& s) {
  RunReport out;
  out.scenario_name = s.name.empty() ? "(unnamed)" : s.name;
  out.fingerprint = hex64(scenario_fingerprint(s));
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::string> todo = s.suites;
  if (todo.empty() ||
      std::find(todo.begin(), todo.end(), std::string("all")) != todo.end())
    todo = kSuiteNames;
  // drop duplicates, keep first occurrences
  std::vector<std::string> suites;
  for (const auto& name : todo)
    if (std::find(suites.begin(), suites.end(), name) == suites.end()) suites.push_back(name);

  SuiteContext sx{s, out, s.tolerance, nullptr, nullptr};
  try {
    if (s.has_group) {
      sx.ctx = std::make_unique<GroupContext>(build_group_context(s));
      sx.gd = std::make_shared<const FiniteGroupoid>(
          transformation_groupoid(sx.ctx->group, sx.ctx->cosets.coset_action()));
    } else {
      sx.gd = std::make_shared<const FiniteGroupoid>(pair_groupoid(s.pair_points));
    }
  } catch (const size_limit_error& e) {
    out.complete = false;
    out.results.push_back({"setup", "construction", "skip", 0.0, s.tolerance,
                           std::string("size cap: ") + e.what()});
  } catch (const std::exception& e) {
    out.results.push_back({"setup", "construction", "fail", 0.0, s.tolerance, e.what()});
  }

  if (sx.gd) {
    for (const std::string& suite : suites) {
      if (suite == "axioms") sx.run_axioms();
      else if (suite == "haar") sx.run_haar();
      else if (suite == "theorem1") sx.run_theorem1();
      else if (suite == "theorem2") sx.run_theorem2();
      else if (suite == "theorem3") sx.run_theorem3();
      else if (suite == "equivalence") sx.run_equivalence();
    }
  }

  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::string render_report(const RunReport& r, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["scenario"] = r.scenario_name;
    j["fingerprint"] = r.fingerprint;
    j["complete"] = r.complete;
    ordered_json summary;
    summary["executed"] = r.executed();
    summary["passed"] = r.passed();
    summary["failed"] = r.failed();
    summary["skipped"] = r.skipped();
    j["summary"] = std::move(summary);
    ordered_json results = ordered_json::array();
    for (const CheckResult& c : r.results) {
      ordered_json e;
      e["suite"] = c.suite;
      e["check"] = c.check;
      e["status"] = c.status;
      e["residual"] = c.residual;
      e["tolerance"] = c.tolerance;
      e["detail"] = c.detail;
      results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    return j.dump(2) + "\n";
  }
  if (format != "human")
    throw scenario_error("unknown report format '" + format + "' (use human or json)");

  std::ostringstream os;
  os << "scenario " << r.scenario_name << "  [" << r.fingerprint << "]\n";
  for (const CheckResult& c : r.results) {
    const char* tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP";
    os << "  [" << tag << "] " << c.suite << "/" << c.check;
    if (c.status != "skip") {
      os << "  residual " << c.residual << " (tol " << c.tolerance << ")";
    }
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << "\n";
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_seconds);
  os << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped in "
     << elapsed << "s";
  if (!r.complete) os << "  (incomplete: size cap reached)";
  os << "\n";
  return os.str();
}

namespace {

Scenario make_group_scenario(const std::string& name, int degree,
                             std::vector<std::vector<int>> gens,
                             std::vector<std::vector<int>> subgroup, RepSpec rep) {
  Scenario s;
  s.name = name;
  s.has_group = true;
  s.degree = degree;
  s.generators = std::move(gens);
  s.subgroup_words = std::move(subgroup);
  s.rep = std::move(rep);
  return s;
}

std::vector<BuiltinScenario> make_builtins() {
  std::vector<BuiltinScenario> out;

  {
    RepSpec r;
    r.type = "sign";
    Scenario s = make_group_scenario("s3-sign", 3, {{1, 0, 2}, {1, 2, 0}},
                                     {{0, 1, 2}, {1, 0, 2}}, r);
    out.push_back({"s3-sign", "S3 over a two-element subgroup with its parity character",
                   serialize_scenario(s)});
  }
  {
    RepSpec r;
    r.type = "trivial";
    r.dim = 1;
    Scenario s = make_group_scenario("s3-trivial", 3, {{1, 0, 2}, {1, 2, 0}},
                                     {{0, 1, 2}, {1, 0, 2}}, r);
    out.push_back({"s3-trivial", "S3 over a two-element subgroup with the trivial character",
                   serialize_scenario(s)});
  }
  {
    RepSpec r;
    r.type = "matrices";
    CMatrix plus(1, 1), minus(1, 1);
    plus(0, 0) = cplx(1.0, 0.0);
    minus(0, 0) = cplx(-1.0, 0.0);
    r.matrices = {plus, minus};
    Scenario s = make_group_scenario("z4-character", 4, {{1, 2, 3, 0}},
                                     {{0, 1, 2, 3}, {2, 3, 0, 1}}, r);
    out.push_back({"z4-character",
                   "Z4 over its half-turn subgroup with the faithful character of order two",
                   serialize_scenario(s)});
  }
  {
    Scenario s;
    s.name = "pair4";
    s.has_space = true;
    s.pair_points = 4;
    out.push_back({"pair4", "Pairs of four points with no isotropy", serialize_scenario(s)});
  }
  {
    RepSpec r;
    r.type = "permutation";
    Scenario s = make_group_scenario(
        "s3-full", 3, {{1, 0, 2}, {1, 2, 0}},
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}, r);
    out.push_back({"s3-full",
                   "S3 over itself (one coset) carrying its three-point permutation matrices",
                   serialize_scenario(s)});
  }
  {
    RepSpec r;
    r.type = "trivial";
    r.dim = 1;
    Scenario s =
        make_group_scenario("z4-free", 4, {{1, 2, 3, 0}}, {{0, 1, 2, 3}}, r);
    out.push_back({"z4-free", "Z4 acting freely on itself (trivial subgroup)",
                   serialize_scenario(s)});
  }
  return out;
}

}  // namespace

const std::vector<BuiltinScenario>& builtin_scenarios() {
  static const std::vector<BuiltinScenario> builtins = make_builtins();
  return builtins;
}

ValidationOutcome validate_scenario(const Scenario& s) {
  ValidationOutcome out;
  std::ostringstream summary;
  try {
    std::shared_ptr<const FiniteGroupoid> gd;
    if (s.has_group) {
      GroupContext ctx = build_group_context(s);
      summary << "group of order " << ctx.group.order() << ", subgroup of order "
              << ctx.subgroup.size() << ", " << ctx.cosets.points() << " cosets, "
              << "representation " << s.rep.type << " of dimension " << ctx.rep.dim;
      const RepReport rr = validate_group_rep(ctx.group, ctx.rep);
      if (!rr.pass(kConstructTol))
        out.problems.push_back("representation defect " + std::to_string(rr.max_residual()));
      gd = std::make_shared<const FiniteGroupoid>(
          transformation_groupoid(ctx.group, ctx.cosets.coset_action()));
    } else {
      gd = std::make_shared<const FiniteGroupoid>(pair_groupoid(s.pair_points));
      summary << "pair space on " << s.pair_points << " points";
    }
    summary << "; groupoid with " << gd->size << " elements over " << gd->base_size
            << " points";
    const GroupoidReport rep = validate_groupoid(*gd);
    for (const GroupoidFailure& f : rep.failures)
      out.problems.push_back(f.axiom + ": " + f.witness);
  } catch (const std::exception& e) {
    out.problems.push_back(e.what());
  }
  out.ok = out.problems.empty();
  out.summary = summary.str();
  return out;
}

}  // namespace groupoidal
