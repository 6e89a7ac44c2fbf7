#include "groupoidal/induction.hpp"

#include <algorithm>
#include <cmath>

#include "groupoidal/linalg.hpp"

namespace groupoidal {

std::vector<SectionFamily> all_section_families(const FiniteGroupoid& gd) {
  std::vector<SectionFamily> s;
  s.reserve(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) s.push_back(section_family(gd, x));
  return s;
}

std::uint64_t sections_fingerprint(const std::vector<SectionFamily>& sections) {
  std::uint64_t h = fnv1a("section-families");
  for (const SectionFamily& s : sections)
    h = fnv1a(std::to_string(s.fingerprint()) + ";", h);
  return h;
}

int induction_cocycle(const FiniteGroupoid& gd, const std::vector<SectionFamily>& sections,
                      int z, int g) {
  const int x = gd.d[g], y = gd.r[g];
  const int t1 = gd.compose(g, gd.inv[sections[x].elem[z]]);
  if (t1 < 0) throw structure_error("cocycle: section inverse did not compose");
  const int c = gd.compose(sections[y].elem[z], t1);
  if (c < 0 || gd.d[c] != z || gd.r[c] != z)
    throw structure_error("cocycle of " + gd.elem_label[g] + " at point " + std::to_string(z) +
                          " did not land in the isotropy group");
  return c;
}

namespace {

void check_section_families(const FiniteGroupoid& gd,
                            const std::vector<SectionFamily>& sections) {
  if (int(sections.size()) != gd.base_size)
    throw structure_error("need one section family per base point");
  for (int x = 0; x < gd.base_size; ++x) {
    if (sections[x].base != x)
      throw structure_error("section family " + std::to_string(x) +
                            " is not based at its own point");
    validate_sections(gd, sections[x]);
  }
}

std::vector<int> block_offsets(const IsotropyRep& tau) {
  std::vector<int> off(tau.dims.size() + 1, 0);
  for (size_t z = 0; z < tau.dims.size(); ++z) off[z + 1] = off[z] + tau.dims[z];
  return off;
}

}  // namespace

GroupoidRep induce(std::shared_ptr<const FiniteGroupoid> gd, const IsotropyGroups& iso,
                   const IsotropyRep& tau, const std::vector<SectionFamily>& sections) {
  const FiniteGroupoid& g = *gd;
  check_section_families(g, sections);
  RepReport tau_check = validate_isotropy_rep(g, iso, tau);
  if (!tau_check.pass(kConstructTol))
    throw structure_error("isotropy representation fails validation with defect " +
                          std::to_string(tau_check.max_residual()));
  const std::vector<int> off = block_offsets(tau);
  const int total = off.back();
  GroupoidRep out;
  out.gd = gd;
  out.dims.assign(g.base_size, total);
  out.u.reserve(g.size);
  for (int e = 0; e < g.size; ++e) {
    CMatrix m = CMatrix::zero(total, total);
    for (int z = 0; z < g.base_size; ++z) {
      const int c = induction_cocycle(g, sections, z, e);
      const int li = iso.local(c);
      if (li < 0) throw structure_error("cocycle landed outside the tabulated isotropy");
      m.set_block(off[z], off[z], tau.mats[z][li]);
    }
    out.u.push_back(std::move(m));
  }
  return out;
}

void validate_system(const ImprimitivitySystem& sys) {
  if (!sys.rep.gd) throw structure_error("system has no groupoid attached");
  const FiniteGroupoid& gd = *sys.rep.gd;
  if (sys.block_width < 1) throw structure_error("block width must be at least 1");
  const int total = gd.base_size * sys.block_width;
  if (int(sys.rep.dims.size()) != gd.base_size || int(sys.rep.u.size()) != gd.size)
    throw structure_error("system tables do not match the groupoid");
  for (int x = 0; x < gd.base_size; ++x)
    if (sys.rep.dims[x] != total)
      throw structure_error("fiber over point " + std::to_string(x) + " has dimension " +
                            std::to_string(sys.rep.dims[x]) + ", expected " +
                            std::to_string(total));
  for (int e = 0; e < gd.size; ++e)
    if (sys.rep.u[e].rows() != total || sys.rep.u[e].cols() != total)
      throw structure_error("matrix of " + gd.elem_label[e] + " does not act on the full fiber");
}

CMatrix block_projection(const ImprimitivitySystem& sys, int z) {
  const FiniteGroupoid& gd = *sys.rep.gd;
  const int w = sys.block_width;
  CMatrix p = CMatrix::zero(gd.base_size * w, gd.base_size * w);
  for (int i = 0; i < w; ++i) p(z * w + i, z * w + i) = cplx(1.0, 0.0);
  return p;
}

CheckReport verify_imprimitivity(const ImprimitivitySystem& sys) {
  validate_system(sys);
  const FiniteGroupoid& gd = *sys.rep.gd;
  CheckReport rep;
  std::vector<CMatrix> proj;
  for (int z = 0; z < gd.base_size; ++z) proj.push_back(block_projection(sys, z));
  for (int e = 0; e < gd.size; ++e)
    for (int z = 0; z < gd.base_size; ++z) {
      const double res = CMatrix::max_abs_diff(
          sys.rep.u[e] * proj[z] * sys.rep.u[gd.inv[e]], proj[z]);
      if (res > rep.max_residual) {
        rep.max_residual = res;
        rep.witness = "U(" + gd.elem_label[e] + ")·π(δ_" + std::to_string(z) + ")·U(" +
                      gd.elem_label[e] + ")⁻¹ ≠ π(δ_" + std::to_string(z) + ")";
      }
    }
  return rep;
}

namespace {

double off_diagonal_mass(const CMatrix& m, int w, int* bi, int* bj) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i / w != j / w && std::abs(m(i, j)) > worst) {
        worst = std::abs(m(i, j));
        *bi = i / w;
        *bj = j / w;
      }
  return worst;
}

}  // namespace

IsotropyRep extract_isotropy_rep(const ImprimitivitySystem& sys, const IsotropyGroups& iso,
                                 double tol) {
  validate_system(sys);
  const FiniteGroupoid& gd = *sys.rep.gd;
  const int w = sys.block_width;
  IsotropyRep tau;
  tau.dims.assign(gd.base_size, w);
  tau.mats.resize(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) {
    for (int gamma : iso.elems[x]) {
      const CMatrix& m = sys.rep.u[gamma];
      int bi = 0, bj = 0;
      const double mass = off_diagonal_mass(m, w, &bi, &bj);
      if (mass > tol)
        throw decomposability_error("U(" + gd.elem_label[gamma] + ") carries weight " +
                                    std::to_string(mass) + " between blocks " +
                                    std::to_string(bi) + " and " + std::to_string(bj));
      const CMatrix b0 = m.block(0, 0, w, w);
      for (int z = 1; z < gd.base_size; ++z) {
        const double diff = CMatrix::max_abs_diff(m.block(z * w, z * w, w, w), b0);
        if (diff > tol)
          throw constancy_error("diagonal blocks 0 and " + std::to_string(z) + " of U(" +
                                gd.elem_label[gamma] + ") differ by " + std::to_string(diff));
      }
      tau.mats[x].push_back(b0);
    }
  }
  return tau;
}

CMatrix build_bridge(const ImprimitivitySystem& sys, const SectionFamily& s) {
  validate_system(sys);
  const FiniteGroupoid& gd = *sys.rep.gd;
  validate_sections(gd, s);
  const int w = sys.block_width;
  const int total = gd.base_size * w;
  CMatrix j = CMatrix::zero(total, total);
  for (int y = 0; y < gd.base_size; ++y)
    j.set_block(y * w, 0, sys.rep.u[s.elem[y]].block(y * w, 0, w, total));
  return j;
}

double Theorem1Report::max_residual() const {
  return std::max({covariance.max_residual, tau_validation.max_residual(), bridge_unitarity,
                   intertwining.max_residual});
}

Theorem1Report verify_theorem1(const ImprimitivitySystem& sys, double extract_tol) {
  validate_system(sys);
  const FiniteGroupoid& gd = *sys.rep.gd;
  Theorem1Report out;
  out.covariance = verify_imprimitivity(sys);
  const IsotropyGroups iso = isotropy_subgroupoid(gd);
  const IsotropyRep tau = extract_isotropy_rep(sys, iso, extract_tol);
  out.tau_validation = validate_isotropy_rep(gd, iso, tau);
  const std::vector<SectionFamily> sections = all_section_families(gd);
  const GroupoidRep induced = induce(sys.rep.gd, iso, tau, sections);
  out.induced_dim = induced.dims.empty() ? 0 : induced.dims[0];

  std::vector<CMatrix> bridge;
  bridge.reserve(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) {
    bridge.push_back(build_bridge(sys, sections[x]));
    const double defect = std::max(bridge.back().unitarity_defect(),
                                   bridge.back().adjoint().unitarity_defect());
    if (defect > out.bridge_unitarity) {
      out.bridge_unitarity = defect;
      out.bridge_witness = x;
    }
  }
  out.intertwining.section_fingerprint = sections_fingerprint(sections);
  for (int e = 0; e < gd.size; ++e) {
    const double res = CMatrix::max_abs_diff(bridge[gd.r[e]] * sys.rep.u[e],
                                             induced.u[e] * bridge[gd.d[e]]);
    if (res > out.intertwining.max_residual) {
      out.intertwining.max_residual = res;
      out.intertwining.witness = "bridge mismatch at " + gd.elem_label[e];
    }
  }
  return out;
}

double Theorem2Report::max_residual() const {
  return std::max({decomposability.max_residual, constancy.max_residual,
                   conjugacy.max_residual});
}

Theorem2Report verify_theorem2(const ImprimitivitySystem& sys, double extract_tol) {
  validate_system(sys);
  const FiniteGroupoid& gd = *sys.rep.gd;
  const int w = sys.block_width;
  Theorem2Report out;
  for (int e = 0; e < gd.size; ++e) {
    const CMatrix& m = sys.rep.u[e];
    int bi = 0, bj = 0;
    const double mass = off_diagonal_mass(m, w, &bi, &bj);
    if (mass > out.decomposability.max_residual) {
      out.decomposability.max_residual = mass;
      out.decomposability.witness = "U(" + gd.elem_label[e] + ") couples blocks " +
                                    std::to_string(bi) + " and " + std::to_string(bj);
    }
    const CMatrix b0 = m.block(0, 0, w, w);
    for (int z = 1; z < gd.base_size; ++z) {
      const double diff = CMatrix::max_abs_diff(m.block(z * w, z * w, w, w), b0);
      if (diff > out.constancy.max_residual) {
        out.constancy.max_residual = diff;
        out.constancy.witness = "diagonal blocks 0 and " + std::to_string(z) + " of U(" +
                                gd.elem_label[e] + ") differ";
      }
    }
  }

  // Conjugacy only makes sense once the blocks actually decompose; when they
  // do not, the first two residuals already carry the verdict.
  if (out.decomposability.max_residual > extract_tol ||
      out.constancy.max_residual > extract_tol) {
    out.conjugacy.witness = "not computed: block structure already fails";
    return out;
  }
  const IsotropyGroups iso = isotropy_subgroupoid(gd);
  const IsotropyRep tau = extract_isotropy_rep(sys, iso, extract_tol);
  for (int e = 0; e < gd.size; ++e) {
    const int x = gd.d[e], y = gd.r[e];
    const std::vector<int> map = isotropy_isomorphism(gd, iso, x, y, e);
    const CMatrix u0 = sys.rep.u[e].block(0, 0, w, w);
    const CMatrix u0i = sys.rep.u[gd.inv[e]].block(0, 0, w, w);
    for (size_t a = 0; a < iso.elems[x].size(); ++a) {
      const double res =
          CMatrix::max_abs_diff(tau.mats[y][map[a]], u0 * tau.mats[x][a] * u0i);
      if (res > out.conjugacy.max_residual) {
        out.conjugacy.max_residual = res;
        out.conjugacy.witness = "conjugating τ(" + gd.elem_label[iso.elems[x][a]] +
                                ") along " + gd.elem_label[e];
      }
    }
  }
  return out;
}

bool is_irreducible_system(const ImprimitivitySystem& sys, int x0, double cutoff,
                           double structure_tol) {
  validate_system(sys);
  const FiniteGroupoid& gd = *sys.rep.gd;
  if (x0 < 0 || x0 >= gd.base_size) throw structure_error("anchor point out of range");
  const int w = sys.block_width;
  std::vector<CMatrix> gens;
  for (int e : gd.out_of[x0])
    if (gd.r[e] == x0) gens.push_back(sys.rep.u[e]);
  for (int z = 0; z < gd.base_size; ++z) gens.push_back(block_projection(sys, z));
  const std::vector<CMatrix> basis =
      commutant_basis(gens, gd.base_size * w, cutoff);
  if (int(basis.size()) != gd.base_size) return false;
  for (const CMatrix& b : basis) {
    int bi = 0, bj = 0;
    if (off_diagonal_mass(b, w, &bi, &bj) > structure_tol) return false;
    for (int z = 0; z < gd.base_size; ++z) {
      const CMatrix blk = b.block(z * w, z * w, w, w);
      cplx mean(0.0, 0.0);
      for (int i = 0; i < w; ++i) mean += blk(i, i);
      mean /= double(w);
      if (CMatrix::max_abs_diff(blk, CMatrix::identity(w) * mean) > structure_tol)
        return false;
    }
  }
  return true;
}

double FrobeniusReport::max_residual() const {
  return std::max(phi_unitarity, intertwining.max_residual);
}

FrobeniusReport frobenius_correspondence(std::shared_ptr<const FiniteGroupoid> gd) {
  const FiniteGroupoid& g = *gd;
  const IsotropyGroups iso = isotropy_subgroupoid(g);
  const std::vector<SectionFamily> sections = all_section_families(g);

  FrobeniusReport out;
  out.regular = regular_rep(gd);

  IsotropyRep tau;
  tau.dims.resize(g.base_size);
  tau.mats.resize(g.base_size);
  for (int y = 0; y < g.base_size; ++y) {
    const FiniteGroup& gy = iso.group[y];
    tau.dims[y] = gy.order();
    tau.mats[y] = group_regular_rep(gy, all_elements(gy)).mats;
  }
  out.induced = induce(gd, iso, tau, sections);

  std::vector<int> off(g.base_size + 1, 0);
  for (int y = 0; y < g.base_size; ++y) off[y + 1] = off[y] + tau.dims[y];
  const int total = off.back();

  out.phi.reserve(g.base_size);
  for (int x = 0; x < g.base_size; ++x) {
    if (out.regular.dims[x] != total)
      throw structure_error("fiber over point " + std::to_string(x) + " has " +
                            std::to_string(out.regular.dims[x]) +
                            " arrows but the isotropy groups provide " + std::to_string(total));
    CMatrix phi = CMatrix::zero(total, total);
    for (size_t j = 0; j < g.out_of[x].size(); ++j) {
      const Factorization f = isotropy_factorization(g, sections[x], g.out_of[x][j]);
      phi(off[f.y] + iso.local(f.gamma), int(j)) = cplx(1.0, 0.0);
    }
    out.phi.push_back(std::move(phi));
    out.phi_unitarity = std::max(out.phi_unitarity, out.phi.back().unitarity_defect());
  }

  out.intertwining.section_fingerprint = sections_fingerprint(sections);
  for (int e = 0; e < g.size; ++e) {
    const double res = CMatrix::max_abs_diff(out.phi[g.r[e]] * out.regular.u[e],
                                             out.induced.u[e] * out.phi[g.d[e]]);
    if (res > out.intertwining.max_residual) {
      out.intertwining.max_residual = res;
      out.intertwining.witness = "arrow refactoring mismatch at " + g.elem_label[e];
    }
  }
  return out;
}

}  // namespace groupoidal
