#ifndef GROUPOIDAL_LINALG_HPP
#define GROUPOIDAL_LINALG_HPP

#include <optional>
#include <vector>

#include "groupoidal/matrix.hpp"

namespace groupoidal {

// Singular values, descending.
std::vector<double> singular_values(const CMatrix& m);

double smallest_singular_value(const CMatrix& m);

// Unitary factor of the polar decomposition T = U P (P positive).
// Throws std::domain_error when T is numerically singular.
CMatrix unitary_polar(const CMatrix& t, double cutoff = 1e-9);

// Orthonormal basis (Frobenius inner product) of {A : A M_i = M_i A for all i}
// inside the d x d matrices. Rank decisions use `cutoff` scaled by the largest
// singular value of the stacked constraint operator. The span always contains
// the identity.
std::vector<CMatrix> commutant_basis(const std::vector<CMatrix>& mats, int dim,
                                     double cutoff = 1e-9);

// Orthonormal basis of {T : T A_i = B_i T}, T of shape (rows of B) x (rows of A).
// Pairs must be square and of consistent sizes.
std::vector<CMatrix> intertwiner_basis(const std::vector<CMatrix>& a,
                                       const std::vector<CMatrix>& b,
                                       double cutoff = 1e-9);

// Searches span{basis} for an element with smallest singular value above
// `cutoff`: the basis elements themselves, a small coefficient grid, then
// fixed-seed random combinations. Returns nothing when the search fails;
// that is a search failure, not a proof of absence.
std::optional<CMatrix> invertible_in_span(const std::vector<CMatrix>& basis,
                                          double cutoff = 1e-6);

}  // namespace groupoidal

#endif
