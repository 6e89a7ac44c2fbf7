#ifndef GROUPOIDAL_MACKEY_HPP
#define GROUPOIDAL_MACKEY_HPP

#include <memory>
#include <string>
#include <vector>

#include "groupoidal/induction.hpp"

namespace groupoidal {

// Coset cocycle k(y,g) = s₀(y)·g·s₀(y·g)⁻¹ where s₀ picks coset
// representatives; always lands in the subgroup (throws structure_error
// with the offending pair otherwise).
int coset_cocycle(const FiniteGroup& g, const CosetSpace& cs, int y, int gg);

// Induced group representation on ⊕_y W: block row y, column y·g holds
// L(k(y,g)). Covers every group element; dimension = points · dim L.
GroupRep mackey_induce(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l);

// Family R_g with block (z, z·g) = A_z · L(k(z,g)) · A_{z·g}⁻¹ for a
// unitary family A; A = identity reproduces mackey_induce exactly.
GroupRep coset_family_rep(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l,
                          const std::vector<CMatrix>& transport);

// Sections of the coset translation groupoid through the fiber over x:
// s_x(y) = (x, s₀(x)⁻¹·s₀(y)).
SectionFamily coset_section_family(const FiniteGroupoid& gd, const CosetSpace& cs, int x);
std::vector<SectionFamily> coset_all_sections(const FiniteGroupoid& gd, const CosetSpace& cs);

// Isotropy representation of the coset translation groupoid built from a
// subgroup representation: the isotropy element (x, s₀(x)⁻¹·k·s₀(x)) acts
// by L(k⁻¹), which composition then turns into an honest homomorphism.
IsotropyRep coset_isotropy_rep(const FiniteGroupoid& gd, const IsotropyGroups& iso,
                               const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l);

// Reading a representation of the coset translation groupoid at the fiber
// over the identity coset o: transport[x] = U((o, s₀(x))) identifies H_o
// with H_x, and stabilizer_rep(k) = U((o, k))⁻¹ is an honest representation
// of the subgroup on H_o. compatibility measures
// U((x, s₀(x)⁻¹·k·s₀(x))) − A_x · stabilizer_rep(k⁻¹) · A_x⁻¹ over all x, k.
struct FiberIdentification {
  int base = -1;
  std::vector<CMatrix> transport;
  GroupRep stabilizer_rep;
  CheckReport compatibility;
};

FiberIdentification identify_fibers(const GroupoidRep& u, const CosetSpace& cs);

// Block-diagonal of the inverted transport family; intertwines the R-family
// with the Mackey-induced representation.
CMatrix coset_bridge(const std::vector<CMatrix>& transport);

struct Theorem3Report {
  int points = 0;
  int block_width = 0;
  int total_dim = 0;
  bool dim_ok = false;

  RepReport tau_validation;      // isotropy rep built from the subgroup rep
  RepReport induced_validation;  // groupoid representation induced from it
  RepReport mackey_validation;   // Mackey-induced group representation
  CheckReport compatibility;     // fiber identification of the induced rep
  CheckReport recovery;          // stabilizer rep = block copies of L
  CheckReport family_hom;        // R_g·R_h = R_{g·h}
  double bridge_unitarity = 0.0;
  CheckReport square;            // J·R_g = U^L(g)·J
  CheckReport corner;            // J⁻¹·J is the identity and commutes with R

  double max_residual() const;
  bool pass(double tol) const { return dim_ok && max_residual() <= tol; }
};

// Runs the full group-side/groupoid-side comparison for (G, K, L):
// induce L through the coset translation groupoid, read the fiber data back,
// build the R-family and the bridge, and compare against mackey_induce.
Theorem3Report verify_theorem3(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l);

}  // namespace groupoidal

#endif
