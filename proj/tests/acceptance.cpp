// End-to-end acceptance checks for the groupoidal library. Each check prints
// one PASS/FAIL line with its worst residual, its pinned tolerance, and its
// wall time; the process exits nonzero when any check fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "groupoidal/fingroup.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/induction.hpp"
#include "groupoidal/linalg.hpp"
#include "groupoidal/mackey.hpp"
#include "groupoidal/rep.hpp"

using namespace groupoidal;

namespace {

constexpr double kExact = 0.0;     // integer arithmetic must come out exact
constexpr double kTight = 1e-9;    // spectral-quality constructions
constexpr double kStd = 1e-8;      // generic numeric comparisons
constexpr double kDetect = 1e-4;   // a planted 1e-3 corruption must exceed this
constexpr double kCorrupt = 1e-3;  // magnitude of every planted corruption

struct Outcome {
  bool pass = false;
  double residual = 0.0;
  double tolerance = kStd;
  std::string detail;
};

int g_failures = 0;

void run(int idx, const char* name, double budget_s,
         const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_budget = elapsed < budget_s;
  const bool pass = o.pass && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%2d] %s  %-40s residual %.3e (tol %.1e)  %6.3fs%s%s%s\n", idx,
              pass ? "PASS" : "FAIL", name, o.residual, o.tolerance, elapsed,
              in_budget ? "" : "  [over time budget]", o.detail.empty() ? "" : "  -- ",
              o.detail.c_str());
}

FiniteGroup make_s3() { return FiniteGroup::from_generators(3, {{1, 0, 2}, {1, 2, 0}}); }

// S3 over an order-2 subgroup: 3 cosets, 18 groupoid elements, Z2 isotropy.
struct S3Instance {
  FiniteGroup g;
  std::vector<int> k;
  CosetSpace cs;
  std::shared_ptr<const FiniteGroupoid> gd;

  S3Instance()
      : g(make_s3()),
        k(g.normalize_subgroup({g.element_of_word({0, 1, 2}), g.element_of_word({1, 0, 2})})),
        cs(g, k),
        gd(std::make_shared<const FiniteGroupoid>(
            transformation_groupoid(g, cs.coset_action()))) {}
};

// +1 on units, -1 on the other loop; valid whenever every isotropy group
// has order at most two.
IsotropyRep parity_isotropy(const FiniteGroupoid& gd, const IsotropyGroups& iso) {
  IsotropyRep tau;
  tau.dims.assign(gd.base_size, 1);
  tau.mats.resize(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x)
    for (int e : iso.elems[x]) {
      CMatrix m(1, 1);
      m(0, 0) = (e == gd.unit[x]) ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
      tau.mats[x].push_back(m);
    }
  return tau;
}

IsotropyRep identity_isotropy(const FiniteGroupoid& gd, const IsotropyGroups& iso, int w) {
  IsotropyRep tau;
  tau.dims.assign(gd.base_size, w);
  tau.mats.resize(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x)
    tau.mats[x].assign(iso.elems[x].size(), CMatrix::identity(w));
  return tau;
}

// Worst-case defect of A as an intertwiner family from r1 to r2:
// r2(g) * A[d(g)] - A[r(g)] * r1(g) over every element.
double intertwiner_residual(const GroupoidRep& r1, const GroupoidRep& r2,
                            const std::vector<CMatrix>& a) {
  const FiniteGroupoid& gd = r1.groupoid();
  double worst = 0.0;
  for (int e = 0; e < gd.size; ++e)
    worst = std::max(worst, CMatrix::max_abs_diff(r2.u[e] * a[gd.d[e]],
                                                  a[gd.r[e]] * r1.u[e]));
  return worst;
}

Outcome axioms_at_scale() {
  Outcome o;
  o.tolerance = kExact;

  const auto t0 = std::chrono::steady_clock::now();
  const FiniteGroupoid pairs = pair_groupoid(12);
  const GroupoidReport pr = validate_groupoid(pairs);
  const double pair_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto t1 = std::chrono::steady_clock::now();
  const FiniteGroup s4 = FiniteGroup::from_generators(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  const std::vector<int> k = s4.normalize_subgroup(
      {s4.element_of_word({0, 1, 2, 3}), s4.element_of_word({1, 0, 2, 3})});
  const CosetSpace cs(s4, k);
  const FiniteGroupoid tg = transformation_groupoid(s4, cs.coset_action());
  const GroupoidReport tr = validate_groupoid(tg);
  const double tg_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

  o.pass = pr.ok() && tr.ok() && pairs.size == 144 && tg.size == 288 &&
           tg.base_size == 12 && pair_s < 1.0 && tg_s < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "pair on 12 points (144 elements, %.3fs) and S4/K (288 elements, %.3fs)",
                pair_s, tg_s);
  o.detail = buf;
  return o;
}

Outcome haar_consistency() {
  Outcome o;
  o.tolerance = kExact;
  const S3Instance inst;
  const FiniteGroupoid& gd = *inst.gd;
  const HaarSystem haar = counting_haar(gd);
  const BaseMeasure mu = uniform_measure(gd);
  const IsotropyWeights iw = counting_isotropy_weights(gd);

  double worst = verify_right_invariance(gd, haar).max_residual;
  worst = std::max(worst, verify_invariant_measure(gd, haar, mu).max_residual);
  for (const SectionFamily& s : coset_all_sections(gd, inst.cs))
    worst = std::max(worst, verify_consistency(gd, s, haar, mu, iw).max_residual);

  o.residual = worst;
  o.pass = gd.size == 18 && worst == 0.0;
  o.detail = "counting weights, uniform base measure, coset sections";
  return o;
}

Outcome quotient_collapse() {
  Outcome o;
  o.tolerance = kExact;
  const S3Instance inst;
  const QuotientGroupoid qg = quotient_groupoid(*inst.gd);
  const std::vector<int> img = quotient_iso_pair(*inst.gd, qg);

  std::vector<int> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(9);
  std::iota(expect.begin(), expect.end(), 0);

  o.pass = qg.q.size == 9 && qg.q.base_size == 3 && sorted == expect;
  o.detail = "9 classes map bijectively onto the pair groupoid on 3 points";
  return o;
}

Outcome pair_regular_is_trivial() {
  Outcome o;
  o.tolerance = kStd;
  auto gd = std::make_shared<const FiniteGroupoid>(pair_groupoid(4));
  const GroupoidRep reg = regular_rep(gd);
  const GroupoidRep triv = trivial_rep(gd, 4);
  const auto a = find_equivalence(reg, triv, kStd);
  if (!a) {
    o.detail = "no unitary family found";
    return o;
  }
  o.residual = intertwiner_residual(reg, triv, *a);
  o.pass = o.residual <= kStd;
  o.detail = "translation on 4-point fibers matches the constant bundle";
  return o;
}

Outcome orbit_translation_decomposition() {
  Outcome o;
  o.tolerance = kStd;
  const S3Instance inst;
  const ImprimitivitySystem sys{quasi_regular_rep(inst.gd), 1};
  validate_system(sys);

  const Theorem1Report t1 = verify_theorem1(sys, kStd);
  const IsotropyGroups iso = isotropy_subgroupoid(*inst.gd);
  const IsotropyRep tau = extract_isotropy_rep(sys, iso, kStd);
  double tau_dev = 0.0;
  for (const auto& per_point : tau.mats)
    for (const CMatrix& m : per_point)
      tau_dev = std::max(tau_dev, std::abs(m(0, 0) - cplx(1.0, 0.0)));

  o.residual = std::max({t1.covariance.max_residual, t1.intertwining.max_residual,
                         t1.bridge_unitarity, tau_dev});
  o.pass = t1.covariance.max_residual <= kTight && tau_dev <= kTight &&
           t1.intertwining.max_residual <= kStd && t1.tau_validation.pass(kStd) &&
           t1.induced_dim == 3;
  o.detail = "orbit translation decomposes over the trivial isotropy action";
  return o;
}

Outcome parity_round_trip() {
  Outcome o;
  o.tolerance = kStd;
  const S3Instance inst;
  const IsotropyGroups iso = isotropy_subgroupoid(*inst.gd);
  const IsotropyRep tau = parity_isotropy(*inst.gd, iso);
  const std::vector<SectionFamily> sections = all_section_families(*inst.gd);

  const ImprimitivitySystem sys{induce(inst.gd, iso, tau, sections), 1};
  const Theorem1Report t1 = verify_theorem1(sys, kStd);
  const IsotropyRep tau2 = extract_isotropy_rep(sys, iso, kStd);

  double blockwise = 0.0;
  for (size_t x = 0; x < tau.mats.size(); ++x)
    for (size_t i = 0; i < tau.mats[x].size(); ++i)
      blockwise = std::max(blockwise,
                           CMatrix::max_abs_diff(tau.mats[x][i], tau2.mats[x][i]));

  o.residual = std::max({t1.covariance.max_residual, t1.intertwining.max_residual,
                         t1.bridge_unitarity, blockwise});
  o.pass = blockwise <= kTight && t1.pass(kStd);
  o.detail = "induce, extract, re-induce and bridge the parity action";
  return o;
}

Outcome irreducibility_certificates() {
  Outcome o;
  o.tolerance = kStd;
  const S3Instance inst;
  const IsotropyGroups iso = isotropy_subgroupoid(*inst.gd);
  const std::vector<SectionFamily> sections = all_section_families(*inst.gd);

  const ImprimitivitySystem parity{
      induce(inst.gd, iso, parity_isotropy(*inst.gd, iso), sections), 1};
  const ImprimitivitySystem doubled{
      induce(inst.gd, iso, identity_isotropy(*inst.gd, iso, 2), sections), 2};

  // The commutant of {loop matrices at one point} + {block projectors} must
  // be exactly the span of the projectors: one dimension per base point,
  // every basis element block-scalar-diagonal.
  std::vector<CMatrix> gens;
  for (int e : iso.elems[0]) gens.push_back(parity.rep.u[e]);
  for (int z = 0; z < inst.gd->base_size; ++z) gens.push_back(block_projection(parity, z));
  const std::vector<CMatrix> comm = commutant_basis(gens, parity.rep.dims[0]);
  double off_block = 0.0;
  for (const CMatrix& b : comm)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j)
        if (i != j) off_block = std::max(off_block, std::abs(b(i, j)));

  const IsotropyRep tau = extract_isotropy_rep(parity, iso, kStd);
  bool scalar_commutants = true;
  for (int x = 0; x < inst.gd->base_size; ++x)
    scalar_commutants =
        scalar_commutants && commutant_basis(tau.mats[x], tau.dims[x]).size() == 1;

  o.residual = off_block;
  o.pass = is_irreducible_system(parity) && comm.size() == 3 && off_block <= kStd &&
           scalar_commutants && !is_irreducible_system(doubled) &&
           doubled.rep.dims[0] == 6;
  o.detail = "parity system irreducible (commutant dim 3), doubled identity system not";
  return o;
}

Outcome block_structure_along_arrows() {
  Outcome o;
  o.tolerance = kStd;
  const S3Instance inst;
  const IsotropyGroups iso = isotropy_subgroupoid(*inst.gd);
  const std::vector<SectionFamily> sections = all_section_families(*inst.gd);

  const std::vector<ImprimitivitySystem> systems = {
      {quasi_regular_rep(inst.gd), 1},
      {induce(inst.gd, iso, parity_isotropy(*inst.gd, iso), sections), 1},
      {induce(inst.gd, iso, identity_isotropy(*inst.gd, iso, 2), sections), 2},
  };
  double worst = 0.0;
  for (const ImprimitivitySystem& sys : systems) {
    const Theorem2Report t2 = verify_theorem2(sys, kStd);
    worst = std::max(worst, t2.max_residual());
  }
  o.residual = worst;
  o.pass = worst <= kStd;
  o.detail = "every matrix block-diagonal with equal blocks; conjugation moves fibers";
  return o;
}

Outcome group_side_bridge_quartet() {
  Outcome o;
  o.tolerance = kStd;
  const S3Instance inst;

  struct Case {
    const char* label;
    Theorem3Report report;
    int expected_dim;
  };
  std::vector<Case> cases;

  cases.push_back({"S3 parity character",
                   verify_theorem3(inst.g, inst.cs, group_sign_rep(inst.g, inst.k)), 3});
  cases.push_back({"S3 trivial character",
                   verify_theorem3(inst.g, inst.cs, group_trivial_rep(inst.g, inst.k, 1)),
                   3});

  const FiniteGroup z4 = FiniteGroup::from_generators(4, {{1, 2, 3, 0}});
  const std::vector<int> half = z4.normalize_subgroup(
      {z4.element_of_word({0, 1, 2, 3}), z4.element_of_word({2, 3, 0, 1})});
  const CosetSpace z4cs(z4, half);
  CMatrix plus(1, 1), minus(1, 1);
  plus(0, 0) = cplx(1.0, 0.0);
  minus(0, 0) = cplx(-1.0, 0.0);
  cases.push_back(
      {"Z4 half-turn character",
       verify_theorem3(z4, z4cs, group_rep_from_matrices(z4, half, {plus, minus})), 2});

  const std::vector<int> whole = all_elements(inst.g);
  const CosetSpace full(inst.g, whole);
  cases.push_back(
      {"S3 over itself with permutation matrices",
       verify_theorem3(inst.g, full,
                       group_permutation_rep(inst.g, whole, natural_action(inst.g))),
       3});

  double worst = 0.0;
  bool ok = true;
  for (const Case& c : cases) {
    worst = std::max({worst, c.report.max_residual(), c.report.bridge_unitarity});
    ok = ok && c.report.pass(kStd) && c.report.dim_ok &&
         c.report.total_dim == c.expected_dim;
  }
  o.residual = worst;
  o.pass = ok;
  o.detail = "four subgroup/character instances agree with the induced model";
  return o;
}

Outcome free_action_is_translation() {
  Outcome o;
  o.tolerance = kStd;
  const FiniteGroup z4 = FiniteGroup::from_generators(4, {{1, 2, 3, 0}});
  const std::vector<int> trivial_k = {z4.element_of_word({0, 1, 2, 3})};
  const CosetSpace cs(z4, trivial_k);
  auto gd = std::make_shared<const FiniteGroupoid>(
      transformation_groupoid(z4, cs.coset_action()));

  const IsotropyGroups iso = isotropy_subgroupoid(*gd);
  const GroupoidRep ind =
      induce(gd, iso, identity_isotropy(*gd, iso, 1), all_section_families(*gd));
  const GroupoidRep reg = regular_rep(gd);
  const auto a = find_equivalence(ind, reg, kStd);
  if (!a) {
    o.detail = "no unitary family found";
    return o;
  }
  o.residual = intertwiner_residual(ind, reg, *a);
  o.pass = o.residual <= kStd && !ind.dims.empty() && ind.dims[0] == 4;
  o.detail = "inducing trivial isotropy along a free action rebuilds translation";
  return o;
}

Outcome translation_correspondence() {
  Outcome o;
  o.tolerance = kTight;
  const S3Instance inst;
  const FrobeniusReport fr = frobenius_correspondence(inst.gd);
  o.residual = std::max(fr.max_residual(), fr.phi_unitarity);
  o.pass = fr.pass(kTight);
  o.detail = "explicit unitary carries translation to the induced right-translation";
  return o;
}

Outcome corruption_detection() {
  Outcome o;
  o.tolerance = kDetect;
  const S3Instance inst;
  const FiniteGroupoid& gd = *inst.gd;
  const HaarSystem haar = counting_haar(gd);
  const IsotropyGroups iso = isotropy_subgroupoid(gd);
  const ImprimitivitySystem clean{
      induce(inst.gd, iso, parity_isotropy(gd, iso), all_section_families(gd)), 1};

  std::mt19937_64 rng(0x20260816ULL);
  std::uniform_int_distribution<int> pick_elem(0, gd.size - 1);
  std::uniform_int_distribution<int> pick_entry(0, clean.rep.dims[0] - 1);

  const int rounds = 100;
  int detected = 0;
  double weakest = 1e300;
  for (int i = 0; i < rounds; ++i) {
    switch (i % 4) {
      case 0: {  // composition table: redirect one defined entry
        FiniteGroupoid m = gd;
        int g = -1, h = -1;
        do {
          g = pick_elem(rng);
          h = pick_elem(rng);
        } while (!m.composable(g, h));
        const int v = m.compose(g, h);
        int w = pick_elem(rng);
        while (w == v) w = pick_elem(rng);
        m.set_compose(g, h, w);
        if (!validate_groupoid(m).ok()) ++detected;
        break;
      }
      case 1: {  // invariant weights: bump a single element weight
        HaarSystem m = haar;
        m.w[size_t(pick_elem(rng))] += kCorrupt;
        const double res = verify_right_invariance(gd, m).max_residual;
        weakest = std::min(weakest, res);
        if (res > kDetect) ++detected;
        break;
      }
      case 2: {  // representation matrices: bump a single entry
        GroupoidRep m = clean.rep;
        m.u[size_t(pick_elem(rng))](pick_entry(rng), pick_entry(rng)) += kCorrupt;
        const double res = validate_rep(m).max_residual();
        weakest = std::min(weakest, res);
        if (res > kDetect) ++detected;
        break;
      }
      default: {  // block structure: same bump, read through the system checks
        ImprimitivitySystem m = clean;
        m.rep.u[size_t(pick_elem(rng))](pick_entry(rng), pick_entry(rng)) += kCorrupt;
        const double res = verify_theorem2(m, kStd).max_residual();
        weakest = std::min(weakest, res);
        if (res > kDetect) ++detected;
        break;
      }
    }
  }

  o.residual = weakest;  // smallest reported defect across all planted faults
  o.pass = detected == rounds;
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d/%d planted faults detected", detected, rounds);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  std::printf("groupoidal acceptance checks\n");
  run(1, "axiom validation at desk scale", 2.5, axioms_at_scale);
  run(2, "invariant weight consistency", 1.0, haar_consistency);
  run(3, "quotient collapses to pairs", 1.0, quotient_collapse);
  run(4, "pair translation is a constant bundle", 2.0, pair_regular_is_trivial);
  run(5, "orbit translation decomposition", 2.0, orbit_translation_decomposition);
  run(6, "parity induction round trip", 2.0, parity_round_trip);
  run(7, "irreducibility certificates", 2.0, irreducibility_certificates);
  run(8, "block structure along arrows", 2.0, block_structure_along_arrows);
  run(9, "group-side bridge quartet", 5.0, group_side_bridge_quartet);
  run(10, "free action induces translation", 2.0, free_action_is_translation);
  run(11, "translation correspondence intertwiner", 2.0, translation_correspondence);
  run(12, "single-entry corruption detection", 30.0, corruption_detection);

  std::printf("%d of 12 checks passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
