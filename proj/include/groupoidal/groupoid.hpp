#ifndef GROUPOIDAL_GROUPOID_HPP
#define GROUPOIDAL_GROUPOID_HPP

#include <string>
#include <vector>

#include "groupoidal/common.hpp"
#include "groupoidal/fingroup.hpp"

namespace groupoidal {

// Finite groupoid over base points 0..base_size-1, elements 0..size-1.
// compose(g,h) is defined exactly when d(g) == r(h); then d(g∘h) = d(h) and
// r(g∘h) = r(g). Everything is tabulated, so validation is exhaustive.
struct FiniteGroupoid {
  int base_size = 0;
  int size = 0;
  std::vector<int> d, r, inv;          // per element
  std::vector<int> unit;               // per base point
  std::vector<int32_t> compose_tbl;    // size x size, -1 where undefined
  std::vector<std::string> elem_label;
  std::vector<std::string> base_label;
  std::vector<std::vector<int>> out_of;  // elements with d == x
  std::vector<std::vector<int>> into;    // elements with r == x

  bool composable(int g, int h) const { return d[g] == r[h]; }
  int compose(int g, int h) const { return compose_tbl[size_t(g) * size + h]; }
  void set_compose(int g, int h, int v) { compose_tbl[size_t(g) * size + h] = int32_t(v); }

  // Builds fiber lists; call after filling the tables.
  void finalize();

  std::uint64_t fingerprint() const;
};

// Elements (x,y), x row / y column; d(x,y) = y, r(x,y) = x,
// (x,y)∘(y,z) = (x,z), inverse swaps, units on the diagonal.
FiniteGroupoid pair_groupoid(int n);

// Elements (x,g) with d(x,g) = x, r(x,g) = x·g and (x·g, h)∘(x,g) = (x, g·h).
FiniteGroupoid transformation_groupoid(const FiniteGroup& g, const GroupAction& a);

struct GroupoidFailure {
  std::string axiom;
  std::string witness;
};

struct GroupoidReport {
  std::vector<GroupoidFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Exhaustive axiom check; never throws on violations, collects them all
// (capped per axiom so reports stay readable).
GroupoidReport validate_groupoid(const FiniteGroupoid& gd);

bool is_transitive(const FiniteGroupoid& gd);
// Least element of G_x^y = {g : d(g)=x, r(g)=y}; throws not_transitive_error if empty.
int connecting_element(const FiniteGroupoid& gd, int x, int y);

// Isotropy groups Γ_x = {g : d(g)=r(g)=x} with the composition they inherit.
struct IsotropyGroups {
  std::vector<std::vector<int>> elems;  // per point, ascending element ids
  std::vector<FiniteGroup> group;       // per point, table group over local indices
  std::vector<int> local_index;         // element id -> local index, -1 elsewhere

  int local(int elem) const { return local_index[elem]; }
};

IsotropyGroups isotropy_subgroupoid(const FiniteGroupoid& gd);

// γ ↦ g∘γ∘g⁻¹ as a map of local indices Γ_x → Γ_y for g ∈ G_x^y;
// verified to be a bijective homomorphism.
std::vector<int> isotropy_isomorphism(const FiniteGroupoid& gd, const IsotropyGroups& iso,
                                      int x, int y, int g);

// Section through the fiber G_x: one element s(y) ∈ G_x^y per point, s(x) = ε(x).
struct SectionFamily {
  int base = -1;
  std::vector<int> elem;

  std::uint64_t fingerprint() const;
};

// Canonical generic sections: least connecting element per point.
SectionFamily section_family(const FiniteGroupoid& gd, int x);
void validate_sections(const FiniteGroupoid& gd, const SectionFamily& s);

// Unique factorization g = γ ∘ s(y) with y = r(g), γ ∈ Γ_y, for g ∈ G_x.
struct Factorization {
  int gamma;
  int y;
};
Factorization isotropy_factorization(const FiniteGroupoid& gd, const SectionFamily& s, int g);

// Classes [g] = {γ∘g : γ ∈ Γ_r(g)} with inherited structure maps.
struct QuotientGroupoid {
  FiniteGroupoid q;
  std::vector<int> class_of;   // element -> class
  std::vector<int> class_rep;  // class -> least element
};

QuotientGroupoid quotient_groupoid(const FiniteGroupoid& gd);

// The map [g] ↦ (r(g), d(g)) into pair_groupoid(base_size), verified to be an
// isomorphism of groupoids; returns the image element per class.
// Throws not_transitive_error when gd is not transitive.
std::vector<int> quotient_iso_pair(const FiniteGroupoid& gd, const QuotientGroupoid& qg);

// Positive weight per element; fiberwise these are the Haar weights on G_x.
struct HaarSystem {
  std::vector<double> w;
};

HaarSystem counting_haar(const FiniteGroupoid& gd);

struct BaseMeasure {
  std::vector<double> mu;  // per base point, positive
};

BaseMeasure uniform_measure(const FiniteGroupoid& gd);

// Weights for isotropy elements (entries for non-isotropy ids are unused).
struct IsotropyWeights {
  std::vector<double> w;
};

IsotropyWeights counting_isotropy_weights(const FiniteGroupoid& gd);

struct CheckReport {
  double max_residual = 0.0;
  std::string witness;      // worst offender, empty when residual is 0
  std::uint64_t section_fingerprint = 0;
  bool pass(double tol) const { return max_residual <= tol; }
};

// Right invariance: w(h∘g) = w(h) over every composable pair.
CheckReport verify_right_invariance(const FiniteGroupoid& gd, const HaarSystem& haar);

// Disintegration along a section family: for every u in the fiber over
// s.base, w(u) = wΓ(γ_u) · μ(r(u)) where u = γ_u ∘ s(r(u)).
CheckReport verify_consistency(const FiniteGroupoid& gd, const SectionFamily& s,
                               const HaarSystem& haar, const BaseMeasure& mu,
                               const IsotropyWeights& iw);

// Pushforward symmetry: w(g)·μ(d(g)) = w(g⁻¹)·μ(r(g)) for every element.
CheckReport verify_invariant_measure(const FiniteGroupoid& gd, const HaarSystem& haar,
                                     const BaseMeasure& mu);

}  // namespace groupoidal

#endif
