#ifndef GROUPOIDAL_INDUCTION_HPP
#define GROUPOIDAL_INDUCTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "groupoidal/rep.hpp"

namespace groupoidal {

// One section family per base point, sections[x].base == x.
std::vector<SectionFamily> all_section_families(const FiniteGroupoid& gd);
std::uint64_t sections_fingerprint(const std::vector<SectionFamily>& sections);

// γ_z(g) = s_y(z) ∘ g ∘ s_x(z)⁻¹ with x = d(g), y = r(g); lands in the
// isotropy group at z and satisfies γ_z(g1∘g0) = γ_z(g1) ∘ γ_z(g0).
int induction_cocycle(const FiniteGroupoid& gd, const std::vector<SectionFamily>& sections,
                      int z, int g);

// Representation induced from a per-point isotropy representation: every
// fiber is ⊕_z W_z and U(g) acts block-diagonally by τ_z(γ_z(g)).
GroupoidRep induce(std::shared_ptr<const FiniteGroupoid> gd, const IsotropyGroups& iso,
                   const IsotropyRep& tau, const std::vector<SectionFamily>& sections);

// A representation whose fibers carry a declared decomposition into
// base_size blocks of equal width w, together with the diagonal action
// π(f) = blockdiag_z(f(z)·I_w) of functions on the base.
struct ImprimitivitySystem {
  GroupoidRep rep;
  int block_width = 0;
};

// Throws structure_error unless every fiber has dimension base_size·width.
void validate_system(const ImprimitivitySystem& sys);

// π(δ_z): the orthogonal projector onto block z (same matrix on every fiber).
CMatrix block_projection(const ImprimitivitySystem& sys, int z);

// Covariance of the diagonal action: U(g)·π(δ_z)·U(g⁻¹) = π(δ_z) for all g, z.
CheckReport verify_imprimitivity(const ImprimitivitySystem& sys);

// Reads the isotropy representation off the diagonal blocks: for γ in the
// isotropy at x, U(γ) must be block-diagonal (else decomposability_error)
// with all diagonal blocks equal (else constancy_error); τ_x(γ) is block 0.
IsotropyRep extract_isotropy_rep(const ImprimitivitySystem& sys,
                                 const IsotropyGroups& iso, double tol = kVerifyTol);

// The bridge at the section base: row block y of the result is row block y
// of U(s(y)). When the system decomposes, this is blockdiag_y of the y-th
// diagonal block of U(s(y)), and it is unitary.
CMatrix build_bridge(const ImprimitivitySystem& sys, const SectionFamily& s);

struct Theorem1Report {
  CheckReport covariance;
  RepReport tau_validation;
  double bridge_unitarity = 0.0;
  int bridge_witness = -1;  // base point with the worst bridge defect
  CheckReport intertwining;  // J_r(g)·U(g) vs U^τ(g)·J_d(g)
  int induced_dim = 0;

  double max_residual() const;
  bool pass(double tol) const { return max_residual() <= tol; }
};

// Full decomposition pipeline: covariance, isotropy extraction (throws on
// structural failure), induced model, per-point bridges, intertwining.
Theorem1Report verify_theorem1(const ImprimitivitySystem& sys, double extract_tol = kVerifyTol);

struct Theorem2Report {
  CheckReport decomposability;  // off-diagonal block mass over every element
  CheckReport constancy;        // diagonal blocks agree over every element
  CheckReport conjugacy;        // τ_y(g∘γ∘g⁻¹) = U⁰(g)·τ_x(γ)·U⁰(g)⁻¹

  double max_residual() const;
  bool pass(double tol) const { return max_residual() <= tol; }
};

// Block structure of every matrix in the system plus conjugation-equivalence
// of the isotropy representations along every arrow.
Theorem2Report verify_theorem2(const ImprimitivitySystem& sys, double extract_tol = kVerifyTol);

// Commutant test on the generators {U(γ)} ∪ {π(δ_z)} at one base point:
// irreducible exactly when the commutant is spanned by the block projectors.
bool is_irreducible_system(const ImprimitivitySystem& sys, int x0 = 0,
                           double cutoff = kRankCutoff, double structure_tol = kVerifyTol);

struct FrobeniusReport {
  GroupoidRep regular;
  GroupoidRep induced;           // induced from right translation isotropy reps
  std::vector<CMatrix> phi;      // unitary change of basis per base point
  double phi_unitarity = 0.0;
  CheckReport intertwining;      // Φ_r(g)·U(g) vs U^τ(g)·Φ_d(g)

  double max_residual() const;
  bool pass(double tol) const { return max_residual() <= tol; }
};

// The left translation representation is induced from right translation of
// the isotropy groups; phi is the explicit arrow-refactoring unitary.
FrobeniusReport frobenius_correspondence(std::shared_ptr<const FiniteGroupoid> gd);

}  // namespace groupoidal

#endif
