#include "groupoidal/mackey.hpp"

#include <algorithm>
#include <cmath>

namespace groupoidal {

namespace {

// Element id of (x, g) inside the translation groupoid built from an action.
int tg_elem(int x, int g, int order) { return x * order + g; }

void check_coset_rep(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l) {
  if (l.elems != cs.subgroup())
    throw structure_error("representation does not cover exactly the coset subgroup");
  (void)g;
}

void check_transport(const std::vector<CMatrix>& transport, int points, int dim) {
  if (int(transport.size()) != points)
    throw structure_error("need one transport unitary per coset");
  for (const CMatrix& a : transport) {
    if (a.rows() != dim || a.cols() != dim)
      throw structure_error("transport matrices must be " + std::to_string(dim) + "x" +
                            std::to_string(dim));
    if (a.unitarity_defect() > kConstructTol)
      throw structure_error("transport matrix is not unitary (defect " +
                            std::to_string(a.unitarity_defect()) + ")");
  }
}

int cocycle_of(const FiniteGroup& g, const CosetSpace& cs, const GroupAction& act, int y,
               int gg) {
  const int yg = act.act(y, gg);
  const int k = g.mul(g.mul(cs.representative(y), gg), g.inv(cs.representative(yg)));
  if (!cs.in_subgroup(k))
    throw structure_error("coset cocycle left the subgroup at coset " + std::to_string(y) +
                          ", element " + g.label(gg));
  return k;
}

}  // namespace

int coset_cocycle(const FiniteGroup& g, const CosetSpace& cs, int y, int gg) {
  return cocycle_of(g, cs, cs.coset_action(), y, gg);
}

GroupRep mackey_induce(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l) {
  check_coset_rep(g, cs, l);
  const GroupAction act = cs.coset_action();
  const int n = cs.points(), w = l.dim;
  GroupRep out;
  out.dim = n * w;
  out.elems = all_elements(g);
  out.mats.reserve(g.order());
  for (int e = 0; e < g.order(); ++e) {
    CMatrix m = CMatrix::zero(n * w, n * w);
    for (int y = 0; y < n; ++y)
      m.set_block(y * w, act.act(y, e) * w, l.at(cocycle_of(g, cs, act, y, e)));
    out.mats.push_back(std::move(m));
  }
  return out;
}

GroupRep coset_family_rep(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l,
                          const std::vector<CMatrix>& transport) {
  check_coset_rep(g, cs, l);
  const GroupAction act = cs.coset_action();
  const int n = cs.points(), w = l.dim;
  check_transport(transport, n, w);
  GroupRep out;
  out.dim = n * w;
  out.elems = all_elements(g);
  out.mats.reserve(g.order());
  for (int e = 0; e < g.order(); ++e) {
    CMatrix m = CMatrix::zero(n * w, n * w);
    for (int z = 0; z < n; ++z) {
      const int zg = act.act(z, e);
      m.set_block(z * w, zg * w,
                  transport[z] * l.at(cocycle_of(g, cs, act, z, e)) * transport[zg].adjoint());
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

SectionFamily coset_section_family(const FiniteGroupoid& gd, const CosetSpace& cs, int x) {
  const int q = cs.group().order();
  if (gd.base_size != cs.points() || gd.size != cs.points() * q)
    throw structure_error("groupoid does not match the coset translation groupoid");
  SectionFamily s;
  s.base = x;
  s.elem.resize(gd.base_size);
  for (int y = 0; y < gd.base_size; ++y) {
    const int word = cs.group().mul(cs.group().inv(cs.representative(x)), cs.representative(y));
    s.elem[y] = tg_elem(x, word, q);
    if (gd.d[s.elem[y]] != x || gd.r[s.elem[y]] != y)
      throw structure_error("coset section from " + std::to_string(x) + " to " +
                            std::to_string(y) + " has wrong endpoints");
  }
  validate_sections(gd, s);
  return s;
}

std::vector<SectionFamily> coset_all_sections(const FiniteGroupoid& gd, const CosetSpace& cs) {
  std::vector<SectionFamily> out;
  out.reserve(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) out.push_back(coset_section_family(gd, cs, x));
  return out;
}

IsotropyRep coset_isotropy_rep(const FiniteGroupoid& gd, const IsotropyGroups& iso,
                               const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l) {
  check_coset_rep(g, cs, l);
  const int q = g.order();
  if (gd.base_size != cs.points() || gd.size != cs.points() * q)
    throw structure_error("groupoid does not match the coset translation groupoid");
  IsotropyRep tau;
  tau.dims.assign(gd.base_size, l.dim);
  tau.mats.resize(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) {
    const int rx = cs.representative(x);
    for (int elem : iso.elems[x]) {
      const int word = elem % q;  // elem = (x, word)
      const int k = g.mul(g.mul(rx, word), g.inv(rx));
      if (!cs.in_subgroup(k))
        throw structure_error("isotropy word at coset " + std::to_string(x) +
                              " does not conjugate into the subgroup");
      tau.mats[x].push_back(l.at(g.inv(k)));
    }
  }
  return tau;
}

FiberIdentification identify_fibers(const GroupoidRep& u, const CosetSpace& cs) {
  const FiniteGroupoid& gd = u.groupoid();
  const FiniteGroup& g = cs.group();
  const int q = g.order(), n = cs.points();
  if (gd.base_size != n || gd.size != n * q)
    throw structure_error("representation does not live on the coset translation groupoid");
  for (int x = 1; x < n; ++x)
    if (u.dims[x] != u.dims[0])
      throw structure_error("fiber dimensions differ, so fibers cannot be identified");
  FiberIdentification out;
  out.base = cs.base();
  if (cs.representative(out.base) != g.identity())
    throw structure_error("base coset representative must be the identity");

  out.transport.reserve(n);
  for (int x = 0; x < n; ++x)
    out.transport.push_back(u.u[tg_elem(out.base, cs.representative(x), q)]);

  out.stabilizer_rep.dim = u.dims[out.base];
  out.stabilizer_rep.elems = cs.subgroup();
  for (int k : cs.subgroup())
    out.stabilizer_rep.mats.push_back(u.u[gd.inv[tg_elem(out.base, k, q)]]);

  for (int x = 0; x < n; ++x) {
    const int rx = cs.representative(x);
    for (int k : cs.subgroup()) {
      const int word = g.mul(g.mul(g.inv(rx), k), rx);
      const int elem = tg_elem(x, word, q);
      if (gd.d[elem] != x || gd.r[elem] != x)
        throw structure_error("conjugated subgroup word is not isotropy at coset " +
                              std::to_string(x));
      const CMatrix rhs = out.transport[x] * out.stabilizer_rep.at(g.inv(k)) *
                          u.u[gd.inv[tg_elem(out.base, rx, q)]];
      const double res = CMatrix::max_abs_diff(u.u[elem], rhs);
      if (res > out.compatibility.max_residual) {
        out.compatibility.max_residual = res;
        out.compatibility.witness = "fiber identification fails at coset " + std::to_string(x) +
                                    ", subgroup element " + g.label(k);
      }
    }
  }
  return out;
}

CMatrix coset_bridge(const std::vector<CMatrix>& transport) {
  if (transport.empty()) throw structure_error("transport family is empty");
  const int w = transport[0].rows();
  check_transport(transport, int(transport.size()), w);
  CMatrix j = CMatrix::zero(int(transport.size()) * w, int(transport.size()) * w);
  for (size_t y = 0; y < transport.size(); ++y)
    j.set_block(int(y) * w, int(y) * w, transport[y].adjoint());
  return j;
}

double Theorem3Report::max_residual() const {
  return std::max({tau_validation.max_residual(), induced_validation.max_residual(),
                   mackey_validation.max_residual(), compatibility.max_residual,
                   recovery.max_residual, family_hom.max_residual, bridge_unitarity,
                   square.max_residual, corner.max_residual});
}

Theorem3Report verify_theorem3(const FiniteGroup& g, const CosetSpace& cs, const GroupRep& l) {
  check_coset_rep(g, cs, l);
  Theorem3Report out;
  out.points = cs.points();
  out.block_width = l.dim;
  out.total_dim = out.points * out.block_width;

  auto gd = std::make_shared<const FiniteGroupoid>(transformation_groupoid(g, cs.coset_action()));
  const IsotropyGroups iso = isotropy_subgroupoid(*gd);
  const std::vector<SectionFamily> sections = coset_all_sections(*gd, cs);

  const IsotropyRep tau = coset_isotropy_rep(*gd, iso, g, cs, l);
  out.tau_validation = validate_isotropy_rep(*gd, iso, tau);

  const GroupoidRep induced = induce(gd, iso, tau, sections);
  out.induced_validation = validate_rep(induced);

  const FiberIdentification fi = identify_fibers(induced, cs);
  out.compatibility = fi.compatibility;

  // The stabilizer representation recovered from the induced representation
  // must be points-many diagonal copies of L.
  const int w = l.dim;
  for (int k : cs.subgroup()) {
    const CMatrix& m = fi.stabilizer_rep.at(k);
    for (int z = 0; z < out.points; ++z) {
      for (int z2 = 0; z2 < out.points; ++z2) {
        const CMatrix blk = m.block(z * w, z2 * w, w, w);
        const double res = (z == z2) ? CMatrix::max_abs_diff(blk, l.at(k)) : blk.max_abs();
        if (res > out.recovery.max_residual) {
          out.recovery.max_residual = res;
          out.recovery.witness = "recovered action of " + g.label(k) + " differs from L at " +
                                 "block (" + std::to_string(z) + "," + std::to_string(z2) + ")";
        }
      }
    }
  }

  const GroupRep mackey = mackey_induce(g, cs, l);
  out.mackey_validation = validate_group_rep(g, mackey);

  // transport extracted from the induced representation acts on its fibers
  // (dimension points·w); the R-family needs w×w unitaries, so reuse the
  // diagonal block, which the recovery check pinned down.
  std::vector<CMatrix> transport;
  transport.reserve(out.points);
  for (int x = 0; x < out.points; ++x) transport.push_back(fi.transport[x].block(0, 0, w, w));
  const GroupRep family = coset_family_rep(g, cs, l, transport);

  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const double res =
          CMatrix::max_abs_diff(family.at(g.mul(a, b)), family.at(a) * family.at(b));
      if (res > out.family_hom.max_residual) {
        out.family_hom.max_residual = res;
        out.family_hom.witness = "R(" + g.label(a) + "·" + g.label(b) + ") ≠ R(" + g.label(a) +
                                 ")·R(" + g.label(b) + ")";
      }
    }

  const CMatrix bridge = coset_bridge(transport);
  out.bridge_unitarity = std::max(bridge.unitarity_defect(), bridge.adjoint().unitarity_defect());

  for (int e = 0; e < g.order(); ++e) {
    const double res = CMatrix::max_abs_diff(bridge * family.at(e), mackey.at(e) * bridge);
    if (res > out.square.max_residual) {
      out.square.max_residual = res;
      out.square.witness = "bridge mismatch at " + g.label(e);
    }
  }

  const CMatrix eye = bridge.adjoint() * bridge;
  out.corner.max_residual = CMatrix::max_abs_diff(eye, CMatrix::identity(out.total_dim));
  out.corner.witness = out.corner.max_residual > 0 ? "J⁻¹·J is not the identity" : "";
  for (int e = 0; e < g.order(); ++e) {
    const double res = CMatrix::max_abs_diff(eye * family.at(e), family.at(e) * eye);
    if (res > out.corner.max_residual) {
      out.corner.max_residual = res;
      out.corner.witness = "J⁻¹·J does not commute with R(" + g.label(e) + ")";
    }
  }

  out.dim_ok = (mackey.dim == out.total_dim);
  for (int x = 0; x < gd->base_size; ++x)
    if (induced.dims[x] != out.total_dim) out.dim_ok = false;
  return out;
}

}  // namespace groupoidal
