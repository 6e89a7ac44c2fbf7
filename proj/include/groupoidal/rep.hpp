#ifndef GROUPOIDAL_REP_HPP
#define GROUPOIDAL_REP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "groupoidal/groupoid.hpp"
#include "groupoidal/matrix.hpp"

namespace groupoidal {

// Unitary representation of a finite groupoid on a bundle of Hilbert spaces:
// dims[x] is the fiber dimension over base point x, and u[g] is the
// dims[r(g)] x dims[d(g)] matrix of U(g) : H_d(g) -> H_r(g).
struct GroupoidRep {
  std::shared_ptr<const FiniteGroupoid> gd;
  std::vector<int> dims;
  std::vector<CMatrix> u;

  const FiniteGroupoid& groupoid() const { return *gd; }
  int total_dim() const;
};

struct RepCheck {
  std::string name;
  double residual = 0.0;
  std::string witness;
};

struct RepReport {
  std::vector<RepCheck> checks;
  double max_residual() const;
  bool pass(double tol) const { return max_residual() <= tol; }
};

// Exhaustive numeric validation: units map to identities, composition is
// respected, inverses invert, every matrix is unitary. Shape mismatches and
// missing matrices throw structure_error; numeric defects land in the report.
RepReport validate_rep(const GroupoidRep& rep);

// Representation of a subgroup on element ids of the ambient group:
// elems is the ascending id list, mats is parallel to it.
struct GroupRep {
  int dim = 0;
  std::vector<int> elems;
  std::vector<CMatrix> mats;

  int index_of(int e) const;  // -1 when e is not covered
  bool covers(int e) const { return index_of(e) >= 0; }
  const CMatrix& at(int e) const;  // throws structure_error when not covered
};

std::vector<int> all_elements(const FiniteGroup& g);

RepReport validate_group_rep(const FiniteGroup& g, const GroupRep& rep);

GroupRep group_trivial_rep(const FiniteGroup& g, std::vector<int> elems, int dim = 1);
// 1x1 permutation parity; requires a permutation-built group.
GroupRep group_sign_rep(const FiniteGroup& g, std::vector<int> elems);
// M(k)[i][a.act(i,k)] = 1 on the action's points.
GroupRep group_permutation_rep(const FiniteGroup& g, std::vector<int> elems,
                               const GroupAction& a);
// Right translation of the subgroup on itself; dim = |elems|.
GroupRep group_regular_rep(const FiniteGroup& g, std::vector<int> elems);
// Explicit matrices, parallel to the ascending element list; validated.
GroupRep group_rep_from_matrices(const FiniteGroup& g, std::vector<int> elems,
                                 std::vector<CMatrix> mats);

// Per-point unitary representations of the isotropy groups; mats[x] is
// parallel to iso.elems[x].
struct IsotropyRep {
  std::vector<int> dims;
  std::vector<std::vector<CMatrix>> mats;
};

RepReport validate_isotropy_rep(const FiniteGroupoid& gd, const IsotropyGroups& iso,
                                const IsotropyRep& tau);

// U(g) = identity on a constant-dimension bundle.
GroupoidRep trivial_rep(std::shared_ptr<const FiniteGroupoid> gd, int dim = 1);

// Left translation on departure fibers: the fiber over z has basis
// {u : d(u) = z} in ascending id order and U(g) e_u = e_{u ∘ g⁻¹}.
GroupoidRep regular_rep(std::shared_ptr<const FiniteGroupoid> gd);

// Left translation on orbit classes [u] = {γ∘u : γ isotropy at r(u)}:
// classes in the fiber over z are indexed by their arrival point, so each
// fiber has one basis vector per base point and U(g) e_[u] = e_[u ∘ g⁻¹].
// Requires a transitive groupoid.
GroupoidRep quasi_regular_rep(std::shared_ptr<const FiniteGroupoid> gd);

IsotropyRep restrict_to_isotropy(const GroupoidRep& rep, const IsotropyGroups& iso);

GroupoidRep direct_sum(const GroupoidRep& a, const GroupoidRep& b);

// A transitive groupoid representation is irreducible exactly when the
// commutant of its restriction to one isotropy group is one-dimensional.
bool is_irreducible(const GroupoidRep& rep, int x0 = 0, double cutoff = kRankCutoff);

// Searches for a family of unitaries A_x with U2(g)·A_d(g) = A_r(g)·U1(g)
// for every g. Returns one per base point, or nothing when the search finds
// no invertible intertwiner (absence of a certificate, not a proof).
std::optional<std::vector<CMatrix>> find_equivalence(const GroupoidRep& r1,
                                                     const GroupoidRep& r2,
                                                     double tol = kVerifyTol);

// Same search for subgroup representations: one unitary T with
// L2(k)·T = T·L1(k) for every covered element.
std::optional<CMatrix> find_group_equivalence(const FiniteGroup& g, const GroupRep& r1,
                                              const GroupRep& r2, double tol = kVerifyTol);

}  // namespace groupoidal

#endif
