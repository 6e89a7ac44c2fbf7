#include "groupoidal/rep.hpp"

#include <algorithm>
#include <cmath>

#include "groupoidal/linalg.hpp"

namespace groupoidal {

int GroupoidRep::total_dim() const {
  int t = 0;
  for (int v : dims) t += v;
  return t;
}

double RepReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

namespace {

void bump(RepCheck& c, double res, const std::string& witness) {
  if (res > c.residual) {
    c.residual = res;
    c.witness = witness;
  }
}

double two_sided_unitarity(const CMatrix& m) {
  return std::max(m.unitarity_defect(), m.adjoint().unitarity_defect());
}

}  // namespace

RepReport validate_rep(const GroupoidRep& rep) {
  if (!rep.gd) throw structure_error("representation has no groupoid attached");
  const FiniteGroupoid& gd = *rep.gd;
  if (int(rep.dims.size()) != gd.base_size)
    throw structure_error("fiber dimension list does not match the base point count");
  if (int(rep.u.size()) != gd.size)
    throw structure_error("matrix list does not match the element count");
  for (int x = 0; x < gd.base_size; ++x)
    if (rep.dims[x] < 1)
      throw structure_error("fiber over point " + std::to_string(x) +
                            " must have dimension at least 1");
  for (int g = 0; g < gd.size; ++g)
    if (rep.u[g].rows() != rep.dims[gd.r[g]] || rep.u[g].cols() != rep.dims[gd.d[g]])
      throw structure_error("matrix of " + gd.elem_label[g] + " is " +
                            std::to_string(rep.u[g].rows()) + "x" +
                            std::to_string(rep.u[g].cols()) + ", expected " +
                            std::to_string(rep.dims[gd.r[g]]) + "x" +
                            std::to_string(rep.dims[gd.d[g]]));

  RepReport rep_out;
  RepCheck unit{"units", 0.0, ""};
  RepCheck hom{"composition", 0.0, ""};
  RepCheck invc{"inverses", 0.0, ""};
  RepCheck uni{"unitarity", 0.0, ""};
  for (int x = 0; x < gd.base_size; ++x)
    bump(unit, CMatrix::max_abs_diff(rep.u[gd.unit[x]], CMatrix::identity(rep.dims[x])),
         "unit at point " + std::to_string(x));
  for (int g = 0; g < gd.size; ++g)
    for (int h : gd.into[gd.d[g]])
      bump(hom, CMatrix::max_abs_diff(rep.u[gd.compose(g, h)], rep.u[g] * rep.u[h]),
           "U(" + gd.elem_label[g] + " ∘ " + gd.elem_label[h] + ") ≠ U(" + gd.elem_label[g] +
               ")·U(" + gd.elem_label[h] + ")");
  for (int g = 0; g < gd.size; ++g) {
    bump(invc,
         CMatrix::max_abs_diff(rep.u[gd.inv[g]] * rep.u[g], CMatrix::identity(rep.dims[gd.d[g]])),
         "U(inv " + gd.elem_label[g] + ")·U(" + gd.elem_label[g] + ") ≠ I");
    bump(uni, two_sided_unitarity(rep.u[g]), "U(" + gd.elem_label[g] + ") is not unitary");
  }
  rep_out.checks = {unit, hom, invc, uni};
  return rep_out;
}

int GroupRep::index_of(int e) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), e);
  if (it == elems.end() || *it != e) return -1;
  return int(it - elems.begin());
}

const CMatrix& GroupRep::at(int e) const {
  int i = index_of(e);
  if (i < 0)
    throw structure_error("element " + std::to_string(e) +
                          " is outside the subgroup this representation covers");
  return mats[size_t(i)];
}

std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> v(g.order());
  for (int i = 0; i < g.order(); ++i) v[i] = i;
  return v;
}

RepReport validate_group_rep(const FiniteGroup& g, const GroupRep& rep) {
  std::vector<int> elems = g.normalize_subgroup(rep.elems);
  if (elems != rep.elems)
    throw structure_error("subgroup element list must be ascending and duplicate-free");
  if (rep.mats.size() != rep.elems.size())
    throw structure_error("matrix list is not parallel to the element list");
  if (rep.dim < 1) throw structure_error("representation dimension must be at least 1");
  for (const CMatrix& m : rep.mats)
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      throw structure_error("every matrix must be " + std::to_string(rep.dim) + "x" +
                            std::to_string(rep.dim));

  RepReport out;
  RepCheck unit{"identity", 0.0, ""};
  RepCheck hom{"multiplication", 0.0, ""};
  RepCheck uni{"unitarity", 0.0, ""};
  bump(unit, CMatrix::max_abs_diff(rep.at(g.identity()), CMatrix::identity(rep.dim)),
       "identity element");
  for (int a : rep.elems)
    for (int b : rep.elems)
      bump(hom, CMatrix::max_abs_diff(rep.at(g.mul(a, b)), rep.at(a) * rep.at(b)),
           "L(" + g.label(a) + "·" + g.label(b) + ") ≠ L(" + g.label(a) + ")·L(" + g.label(b) +
               ")");
  for (int a : rep.elems)
    bump(uni, two_sided_unitarity(rep.at(a)), "L(" + g.label(a) + ") is not unitary");
  out.checks = {unit, hom, uni};
  return out;
}

GroupRep group_trivial_rep(const FiniteGroup& g, std::vector<int> elems, int dim) {
  GroupRep rep;
  rep.dim = dim;
  rep.elems = g.normalize_subgroup(std::move(elems));
  rep.mats.assign(rep.elems.size(), CMatrix::identity(dim));
  return rep;
}

GroupRep group_sign_rep(const FiniteGroup& g, std::vector<int> elems) {
  if (!g.has_words())
    throw structure_error("parity needs a permutation-built group");
  GroupRep rep;
  rep.dim = 1;
  rep.elems = g.normalize_subgroup(std::move(elems));
  for (int e : rep.elems) {
    CMatrix m(1, 1);
    m(0, 0) = cplx(double(g.sign(e)), 0.0);
    rep.mats.push_back(m);
  }
  return rep;
}

GroupRep group_permutation_rep(const FiniteGroup& g, std::vector<int> elems,
                               const GroupAction& a) {
  validate_action(g, a);
  GroupRep rep;
  rep.dim = a.points;
  rep.elems = g.normalize_subgroup(std::move(elems));
  for (int e : rep.elems) {
    CMatrix m = CMatrix::zero(a.points, a.points);
    for (int i = 0; i < a.points; ++i) m(i, a.act(i, e)) = cplx(1.0, 0.0);
    rep.mats.push_back(m);
  }
  return rep;
}

GroupRep group_regular_rep(const FiniteGroup& g, std::vector<int> elems) {
  GroupRep rep;
  rep.elems = g.normalize_subgroup(std::move(elems));
  const int n = int(rep.elems.size());
  rep.dim = n;
  for (int e : rep.elems) {
    CMatrix m = CMatrix::zero(n, n);
    for (int i = 0; i < n; ++i) {
      int target = rep.index_of(g.mul(rep.elems[i], e));
      if (target < 0) throw structure_error("element list is not closed under multiplication");
      m(i, target) = cplx(1.0, 0.0);
    }
    rep.mats.push_back(m);
  }
  return rep;
}

GroupRep group_rep_from_matrices(const FiniteGroup& g, std::vector<int> elems,
                                 std::vector<CMatrix> mats) {
  GroupRep rep;
  rep.elems = g.normalize_subgroup(std::move(elems));
  rep.mats = std::move(mats);
  if (rep.mats.empty() || rep.mats.size() != rep.elems.size())
    throw structure_error("need one matrix per subgroup element");
  rep.dim = rep.mats[0].rows();
  RepReport check = validate_group_rep(g, rep);
  if (!check.pass(kConstructTol))
    throw structure_error("supplied matrices are not a unitary representation (worst defect " +
                          std::to_string(check.max_residual()) + ")");
  return rep;
}

RepReport validate_isotropy_rep(const FiniteGroupoid& gd, const IsotropyGroups& iso,
                                const IsotropyRep& tau) {
  if (int(tau.dims.size()) != gd.base_size || int(tau.mats.size()) != gd.base_size)
    throw structure_error("isotropy representation must cover every base point");
  RepReport out;
  RepCheck unit{"identity", 0.0, ""};
  RepCheck hom{"multiplication", 0.0, ""};
  RepCheck uni{"unitarity", 0.0, ""};
  for (int x = 0; x < gd.base_size; ++x) {
    const auto& el = iso.elems[x];
    const auto& mats = tau.mats[x];
    if (mats.size() != el.size())
      throw structure_error("matrix list at point " + std::to_string(x) +
                            " is not parallel to the isotropy elements");
    if (tau.dims[x] < 1)
      throw structure_error("isotropy fiber at point " + std::to_string(x) +
                            " must have dimension at least 1");
    for (const CMatrix& m : mats)
      if (m.rows() != tau.dims[x] || m.cols() != tau.dims[x])
        throw structure_error("matrix shape mismatch at point " + std::to_string(x));
    const FiniteGroup& gx = iso.group[x];
    bump(unit, CMatrix::max_abs_diff(mats[gx.identity()], CMatrix::identity(tau.dims[x])),
         "unit at point " + std::to_string(x));
    for (int a = 0; a < gx.order(); ++a) {
      for (int b = 0; b < gx.order(); ++b)
        bump(hom, CMatrix::max_abs_diff(mats[gx.mul(a, b)], mats[a] * mats[b]),
             "τ(" + gd.elem_label[el[a]] + " ∘ " + gd.elem_label[el[b]] + ") at point " +
                 std::to_string(x));
      bump(uni, two_sided_unitarity(mats[a]), "τ(" + gd.elem_label[el[a]] + ") is not unitary");
    }
  }
  out.checks = {unit, hom, uni};
  return out;
}

GroupoidRep trivial_rep(std::shared_ptr<const FiniteGroupoid> gd, int dim) {
  if (dim < 1) throw structure_error("fiber dimension must be at least 1");
  GroupoidRep rep;
  rep.gd = std::move(gd);
  rep.dims.assign(rep.gd->base_size, dim);
  rep.u.assign(rep.gd->size, CMatrix::identity(dim));
  return rep;
}

GroupoidRep regular_rep(std::shared_ptr<const FiniteGroupoid> gd) {
  const FiniteGroupoid& g = *gd;
  // pos[u]: slot of u inside the fiber listing g.out_of[d(u)] (ascending ids).
  std::vector<int> pos(g.size, -1);
  for (int z = 0; z < g.base_size; ++z)
    for (size_t j = 0; j < g.out_of[z].size(); ++j) pos[g.out_of[z][j]] = int(j);
  GroupoidRep rep;
  rep.gd = gd;
  rep.dims.resize(g.base_size);
  for (int z = 0; z < g.base_size; ++z) rep.dims[z] = int(g.out_of[z].size());
  rep.u.reserve(g.size);
  for (int e = 0; e < g.size; ++e) {
    const int zd = g.d[e], zr = g.r[e];
    CMatrix m = CMatrix::zero(rep.dims[zr], rep.dims[zd]);
    for (int j = 0; j < rep.dims[zd]; ++j) {
      const int u = g.out_of[zd][j];
      const int target = g.compose(u, g.inv[e]);
      if (target < 0 || g.d[target] != zr)
        throw structure_error("translation moved a basis arrow out of the expected fiber");
      m(pos[target], j) = cplx(1.0, 0.0);
    }
    rep.u.push_back(std::move(m));
  }
  return rep;
}

GroupoidRep quasi_regular_rep(std::shared_ptr<const FiniteGroupoid> gd) {
  const FiniteGroupoid& g = *gd;
  // Orbit classes [u] = {γ∘u : γ isotropy at r(u)} are exactly the pairs
  // (r(u), d(u)); within the fiber over z they are indexed by the arrival
  // point, which needs every arrival point to be reachable from z.
  QuotientGroupoid qg = quotient_groupoid(g);
  std::vector<int> slot(qg.q.size, -1);  // class -> its arrival point
  std::vector<std::vector<int>> class_at(g.base_size, std::vector<int>(g.base_size, -1));
  for (int c = 0; c < qg.q.size; ++c) {
    if (class_at[qg.q.d[c]][qg.q.r[c]] >= 0)
      throw structure_error("two orbit classes share departure and arrival points");
    class_at[qg.q.d[c]][qg.q.r[c]] = c;
    slot[c] = qg.q.r[c];
  }
  for (int z = 0; z < g.base_size; ++z)
    for (int y = 0; y < g.base_size; ++y)
      if (class_at[z][y] < 0)
        throw not_transitive_error("no arrow runs from point " + std::to_string(z) +
                                   " to point " + std::to_string(y));
  GroupoidRep rep;
  rep.gd = gd;
  rep.dims.assign(g.base_size, g.base_size);
  rep.u.reserve(g.size);
  for (int e = 0; e < g.size; ++e) {
    const int zd = g.d[e], zr = g.r[e];
    CMatrix m = CMatrix::zero(g.base_size, g.base_size);
    for (int y = 0; y < g.base_size; ++y) {
      const int c = class_at[zd][y];
      const int target = qg.class_of[g.compose(qg.class_rep[c], g.inv[e])];
      if (qg.q.d[target] != zr)
        throw structure_error("translation moved an orbit class off the expected fiber");
      m(slot[target], y) = cplx(1.0, 0.0);
    }
    rep.u.push_back(std::move(m));
  }
  return rep;
}

IsotropyRep restrict_to_isotropy(const GroupoidRep& rep, const IsotropyGroups& iso) {
  const FiniteGroupoid& gd = rep.groupoid();
  IsotropyRep tau;
  tau.dims = rep.dims;
  tau.mats.resize(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x)
    for (int e : iso.elems[x]) tau.mats[x].push_back(rep.u[e]);
  return tau;
}

GroupoidRep direct_sum(const GroupoidRep& a, const GroupoidRep& b) {
  if (!a.gd || a.gd != b.gd)
    throw structure_error("direct sum needs two representations of the same groupoid object");
  const FiniteGroupoid& gd = *a.gd;
  GroupoidRep out;
  out.gd = a.gd;
  out.dims.resize(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) out.dims[x] = a.dims[x] + b.dims[x];
  out.u.reserve(gd.size);
  for (int g = 0; g < gd.size; ++g) {
    CMatrix m = CMatrix::zero(out.dims[gd.r[g]], out.dims[gd.d[g]]);
    m.set_block(0, 0, a.u[g]);
    m.set_block(a.dims[gd.r[g]], a.dims[gd.d[g]], b.u[g]);
    out.u.push_back(std::move(m));
  }
  return out;
}

bool is_irreducible(const GroupoidRep& rep, int x0, double cutoff) {
  const FiniteGroupoid& gd = rep.groupoid();
  if (!is_transitive(gd))
    throw not_transitive_error("irreducibility via one isotropy group needs every point "
                               "reachable from every other");
  if (x0 < 0 || x0 >= gd.base_size) throw structure_error("anchor point out of range");
  std::vector<CMatrix> gens;
  for (int e : gd.into[x0])
    if (gd.d[e] == x0) gens.push_back(rep.u[e]);
  std::vector<CMatrix> basis = commutant_basis(gens, rep.dims[x0], cutoff);
  return basis.size() == 1;
}

std::optional<std::vector<CMatrix>> find_equivalence(const GroupoidRep& r1,
                                                     const GroupoidRep& r2, double tol) {
  if (!r1.gd || r1.gd != r2.gd)
    throw structure_error("equivalence search needs two representations of the same "
                          "groupoid object");
  const FiniteGroupoid& gd = *r1.gd;
  if (!is_transitive(gd))
    throw not_transitive_error("equivalence search propagates from one point and needs "
                               "every point reachable");
  for (int x = 0; x < gd.base_size; ++x)
    if (r1.dims[x] != r2.dims[x]) return std::nullopt;

  const int x0 = 0;
  std::vector<CMatrix> g1, g2;
  for (int e : gd.into[x0])
    if (gd.d[e] == x0) {
      g1.push_back(r1.u[e]);
      g2.push_back(r2.u[e]);
    }
  std::vector<CMatrix> space = intertwiner_basis(g1, g2);
  if (space.empty()) return std::nullopt;
  std::optional<CMatrix> t = invertible_in_span(space);
  if (!t) return std::nullopt;
  CMatrix a0 = unitary_polar(*t);

  SectionFamily s = section_family(gd, x0);
  std::vector<CMatrix> a(gd.base_size, CMatrix());
  for (int y = 0; y < gd.base_size; ++y) {
    const int c = s.elem[y];
    a[y] = r2.u[c] * a0 * r1.u[gd.inv[c]];
  }

  for (int y = 0; y < gd.base_size; ++y)
    if (a[y].unitarity_defect() > tol) return std::nullopt;
  for (int g = 0; g < gd.size; ++g)
    if (CMatrix::max_abs_diff(r2.u[g] * a[gd.d[g]], a[gd.r[g]] * r1.u[g]) > tol)
      return std::nullopt;
  return a;
}

std::optional<CMatrix> find_group_equivalence(const FiniteGroup& g, const GroupRep& r1,
                                              const GroupRep& r2, double tol) {
  if (r1.elems != r2.elems)
    throw structure_error("equivalence search needs representations of the same subgroup");
  if (r1.dim != r2.dim) return std::nullopt;
  std::vector<CMatrix> space = intertwiner_basis(r1.mats, r2.mats);
  if (space.empty()) return std::nullopt;
  std::optional<CMatrix> t = invertible_in_span(space);
  if (!t) return std::nullopt;
  CMatrix u = unitary_polar(*t);
  if (u.unitarity_defect() > tol) return std::nullopt;
  for (size_t i = 0; i < r1.mats.size(); ++i)
    if (CMatrix::max_abs_diff(u * r1.mats[i], r2.mats[i] * u) > tol) return std::nullopt;
  (void)g;
  return u;
}

}  // namespace groupoidal
