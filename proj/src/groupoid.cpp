#include "groupoidal/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

namespace groupoidal {

namespace {

std::uint64_t chain(std::uint64_t h, long long v) {
  return fnv1a(std::to_string(v) + ";", h);
}

std::string pair_label(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

void FiniteGroupoid::finalize() {
  if (size > kGroupoidElementCap)
    throw size_limit_error("groupoid has " + std::to_string(size) + " elements, cap is " +
                           std::to_string(kGroupoidElementCap));
  out_of.assign(base_size, {});
  into.assign(base_size, {});
  for (int g = 0; g < size; ++g) {
    out_of[d[g]].push_back(g);
    into[r[g]].push_back(g);
  }
}

std::uint64_t FiniteGroupoid::fingerprint() const {
  std::uint64_t h = fnv1a("groupoid");
  h = chain(h, base_size);
  h = chain(h, size);
  for (int v : d) h = chain(h, v);
  for (int v : r) h = chain(h, v);
  for (int v : inv) h = chain(h, v);
  for (int v : unit) h = chain(h, v);
  for (int32_t v : compose_tbl) h = chain(h, v);
  return h;
}

FiniteGroupoid pair_groupoid(int n) {
  if (n <= 0) throw structure_error("pair groupoid needs at least one point");
  FiniteGroupoid gd;
  gd.base_size = n;
  gd.size = n * n;
  if (gd.size > kGroupoidElementCap)
    throw size_limit_error("pair groupoid on " + std::to_string(n) + " points has " +
                           std::to_string(gd.size) + " elements, cap is " +
                           std::to_string(kGroupoidElementCap));
  gd.d.resize(gd.size);
  gd.r.resize(gd.size);
  gd.inv.resize(gd.size);
  gd.unit.resize(n);
  gd.elem_label.resize(gd.size);
  gd.base_label.resize(n);
  gd.compose_tbl.assign(size_t(gd.size) * gd.size, -1);
  for (int x = 0; x < n; ++x) {
    gd.base_label[x] = std::to_string(x);
    gd.unit[x] = x * n + x;
    for (int y = 0; y < n; ++y) {
      int e = x * n + y;
      gd.d[e] = y;
      gd.r[e] = x;
      gd.inv[e] = y * n + x;
      gd.elem_label[e] = pair_label(x, y);
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) gd.set_compose(x * n + y, y * n + z, x * n + z);
  gd.finalize();
  return gd;
}

FiniteGroupoid transformation_groupoid(const FiniteGroup& g, const GroupAction& a) {
  validate_action(g, a);
  FiniteGroupoid gd;
  const int n = a.points, q = g.order();
  gd.base_size = n;
  gd.size = n * q;
  if (gd.size > kGroupoidElementCap)
    throw size_limit_error("transformation groupoid has " + std::to_string(gd.size) +
                           " elements, cap is " + std::to_string(kGroupoidElementCap));
  gd.d.resize(gd.size);
  gd.r.resize(gd.size);
  gd.inv.resize(gd.size);
  gd.unit.resize(n);
  gd.elem_label.resize(gd.size);
  gd.base_label.resize(n);
  gd.compose_tbl.assign(size_t(gd.size) * gd.size, -1);
  for (int x = 0; x < n; ++x) {
    gd.base_label[x] = std::to_string(x);
    gd.unit[x] = x * q + g.identity();
    for (int k = 0; k < q; ++k) {
      int e = x * q + k;
      gd.d[e] = x;
      gd.r[e] = a.act(x, k);
      gd.inv[e] = a.act(x, k) * q + g.inv(k);
      gd.elem_label[e] = "(" + std::to_string(x) + "," + g.label(k) + ")";
    }
  }
  // (x·k1, k2) ∘ (x, k1) = (x, k1·k2)
  for (int x = 0; x < n; ++x)
    for (int k1 = 0; k1 < q; ++k1)
      for (int k2 = 0; k2 < q; ++k2)
        gd.set_compose(a.act(x, k1) * q + k2, x * q + k1, x * q + g.mul(k1, k2));
  gd.finalize();
  return gd;
}

namespace {

constexpr int kMaxFailuresPerAxiom = 8;

class FailureSink {
 public:
  explicit FailureSink(GroupoidReport& rep) : rep_(rep) {}
  void add(const std::string& axiom, const std::string& witness) {
    if (++count_[axiom] <= kMaxFailuresPerAxiom) rep_.failures.push_back({axiom, witness});
  }

 private:
  GroupoidReport& rep_;
  std::map<std::string, int> count_;
};

}  // namespace

GroupoidReport validate_groupoid(const FiniteGroupoid& gd) {
  GroupoidReport rep;
  FailureSink sink(rep);
  const int n = gd.base_size, m = gd.size;
  auto lab = [&](int e) {
    return (e >= 0 && e < m) ? gd.elem_label[e] : ("#" + std::to_string(e));
  };

  if (n <= 0 || m < 0 || int(gd.d.size()) != m || int(gd.r.size()) != m ||
      int(gd.inv.size()) != m || int(gd.unit.size()) != n ||
      gd.compose_tbl.size() != size_t(m) * m || int(gd.elem_label.size()) != m ||
      int(gd.base_label.size()) != n) {
    sink.add("shape", "table sizes do not match base_size/size");
    return rep;
  }
  for (int e = 0; e < m; ++e) {
    if (gd.d[e] < 0 || gd.d[e] >= n) sink.add("range", "d(" + lab(e) + ") out of range");
    if (gd.r[e] < 0 || gd.r[e] >= n) sink.add("range", "r(" + lab(e) + ") out of range");
    if (gd.inv[e] < 0 || gd.inv[e] >= m) sink.add("range", "inv(" + lab(e) + ") out of range");
  }
  for (int x = 0; x < n; ++x)
    if (gd.unit[x] < 0 || gd.unit[x] >= m)
      sink.add("range", "unit(" + std::to_string(x) + ") out of range");
  if (!rep.ok()) return rep;  // later checks would index out of bounds

  for (int x = 0; x < n; ++x) {
    int u = gd.unit[x];
    if (gd.d[u] != x || gd.r[u] != x)
      sink.add("unit-endpoints", "unit of " + std::to_string(x) + " is " + lab(u) +
                                     " with d=" + std::to_string(gd.d[u]) +
                                     " r=" + std::to_string(gd.r[u]));
  }

  for (int g = 0; g < m; ++g) {
    for (int h = 0; h < m; ++h) {
      int c = gd.compose(g, h);
      bool want = gd.d[g] == gd.r[h];
      if (want && (c < 0 || c >= m)) {
        sink.add("composability", "compose(" + lab(g) + ", " + lab(h) + ") should be defined");
      } else if (!want && c != -1) {
        sink.add("composability", "compose(" + lab(g) + ", " + lab(h) + ") should be undefined");
      } else if (want) {
        if (gd.d[c] != gd.d[h] || gd.r[c] != gd.r[g])
          sink.add("composite-endpoints",
                   "compose(" + lab(g) + ", " + lab(h) + ") = " + lab(c) + " has wrong d/r");
      }
    }
  }
  if (!rep.ok()) return rep;

  // Unit laws: g ∘ ε(d(g)) = g = ε(r(g)) ∘ g.
  for (int g = 0; g < m; ++g) {
    if (gd.compose(g, gd.unit[gd.d[g]]) != g)
      sink.add("unit-law", lab(g) + " ∘ unit(d) ≠ " + lab(g));
    if (gd.compose(gd.unit[gd.r[g]], g) != g)
      sink.add("unit-law", "unit(r) ∘ " + lab(g) + " ≠ " + lab(g));
  }

  // Inverse laws: g⁻¹∘g = ε(d(g)), g∘g⁻¹ = ε(r(g)), (g⁻¹)⁻¹ = g.
  for (int g = 0; g < m; ++g) {
    int gi = gd.inv[g];
    if (gd.d[gi] != gd.r[g] || gd.r[gi] != gd.d[g]) {
      sink.add("inverse", "inv(" + lab(g) + ") = " + lab(gi) + " has wrong endpoints");
      continue;
    }
    if (gd.compose(gi, g) != gd.unit[gd.d[g]])
      sink.add("inverse", "inv(" + lab(g) + ") ∘ " + lab(g) + " is not a unit");
    if (gd.compose(g, gi) != gd.unit[gd.r[g]])
      sink.add("inverse", lab(g) + " ∘ inv(" + lab(g) + ") is not a unit");
    if (gd.inv[gi] != g) sink.add("inverse", "inv(inv(" + lab(g) + ")) ≠ " + lab(g));
  }

  // Associativity over all composable triples (f∘g)∘h = f∘(g∘h).
  std::vector<std::vector<int>> out_of(n), into(n);
  for (int e = 0; e < m; ++e) {
    out_of[gd.d[e]].push_back(e);
    into[gd.r[e]].push_back(e);
  }
  for (int g = 0; g < m; ++g) {
    for (int h : into[gd.d[g]]) {
      int gh = gd.compose(g, h);
      for (int f : out_of[gd.r[g]]) {
        int fg = gd.compose(f, g);
        if (gd.compose(fg, h) != gd.compose(f, gh)) {
          sink.add("associativity", "(" + lab(f) + " ∘ " + lab(g) + ") ∘ " + lab(h) +
                                        " ≠ " + lab(f) + " ∘ (" + lab(g) + " ∘ " + lab(h) + ")");
        }
      }
    }
  }
  return rep;
}

bool is_transitive(const FiniteGroupoid& gd) {
  std::vector<int> parent(gd.base_size);
  for (int i = 0; i < gd.base_size; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int g = 0; g < gd.size; ++g) parent[find(gd.d[g])] = find(gd.r[g]);
  for (int x = 1; x < gd.base_size; ++x)
    if (find(x) != find(0)) return false;
  return true;
}

int connecting_element(const FiniteGroupoid& gd, int x, int y) {
  for (int g = 0; g < gd.size; ++g)
    if (gd.d[g] == x && gd.r[g] == y) return g;
  throw not_transitive_error("no element connects point " + std::to_string(x) + " to point " +
                             std::to_string(y));
}

IsotropyGroups isotropy_subgroupoid(const FiniteGroupoid& gd) {
  IsotropyGroups iso;
  iso.elems.resize(gd.base_size);
  iso.local_index.assign(gd.size, -1);
  for (int g = 0; g < gd.size; ++g)
    if (gd.d[g] == gd.r[g]) {
      iso.local_index[g] = int(iso.elems[gd.d[g]].size());
      iso.elems[gd.d[g]].push_back(g);  // ascending: g increases through the scan
    }
  iso.group.reserve(gd.base_size);
  for (int x = 0; x < gd.base_size; ++x) {
    const auto& el = iso.elems[x];
    const int k = int(el.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int c = gd.compose(el[i], el[j]);
        if (c < 0 || iso.local_index[c] < 0 || gd.d[c] != x)
          throw structure_error("isotropy at point " + std::to_string(x) +
                                " is not closed under composition");
        table[i][j] = iso.local_index[c];
      }
    iso.group.push_back(FiniteGroup::from_table(table));
  }
  return iso;
}

std::vector<int> isotropy_isomorphism(const FiniteGroupoid& gd, const IsotropyGroups& iso,
                                      int x, int y, int g) {
  if (gd.d[g] != x || gd.r[g] != y)
    throw structure_error("conjugating element " + gd.elem_label[g] + " does not map point " +
                          std::to_string(x) + " to point " + std::to_string(y));
  const auto& ex = iso.elems[x];
  const auto& ey = iso.elems[y];
  if (ex.size() != ey.size())
    throw structure_error("isotropy groups at points " + std::to_string(x) + " and " +
                          std::to_string(y) + " have different sizes");
  std::vector<int> map(ex.size(), -1);
  for (size_t i = 0; i < ex.size(); ++i) {
    int c = gd.compose(gd.compose(g, ex[i]), gd.inv[g]);
    int li = c >= 0 ? iso.local_index[c] : -1;
    if (li < 0 || gd.d[c] != y)
      throw structure_error("conjugation by " + gd.elem_label[g] + " leaves isotropy at point " +
                            std::to_string(y));
    map[i] = li;
  }
  std::vector<int> seen(ey.size(), 0);
  for (int v : map) seen[v] = 1;
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw structure_error("conjugation by " + gd.elem_label[g] + " is not surjective");
  const FiniteGroup& gx = iso.group[x];
  const FiniteGroup& gy = iso.group[y];
  for (int a = 0; a < gx.order(); ++a)
    for (int b = 0; b < gx.order(); ++b)
      if (map[gx.mul(a, b)] != gy.mul(map[a], map[b]))
        throw structure_error("conjugation by " + gd.elem_label[g] +
                              " is not a homomorphism of isotropy groups");
  return map;
}

std::uint64_t SectionFamily::fingerprint() const {
  std::uint64_t h = fnv1a("sections");
  h = chain(h, base);
  for (int v : elem) h = chain(h, v);
  return h;
}

SectionFamily section_family(const FiniteGroupoid& gd, int x) {
  SectionFamily s;
  s.base = x;
  s.elem.resize(gd.base_size);
  for (int y = 0; y < gd.base_size; ++y)
    s.elem[y] = (y == x) ? gd.unit[x] : connecting_element(gd, x, y);
  return s;
}

void validate_sections(const FiniteGroupoid& gd, const SectionFamily& s) {
  if (s.base < 0 || s.base >= gd.base_size)
    throw structure_error("section base point out of range");
  if (int(s.elem.size()) != gd.base_size)
    throw structure_error("section family must pick one element per base point");
  for (int y = 0; y < gd.base_size; ++y) {
    int e = s.elem[y];
    if (e < 0 || e >= gd.size) throw structure_error("section element out of range");
    if (gd.d[e] != s.base || gd.r[e] != y)
      throw structure_error("section at point " + std::to_string(y) + " is " +
                            gd.elem_label[e] + ", which does not run from the base point");
  }
  if (s.elem[s.base] != gd.unit[s.base])
    throw structure_error("section at the base point must be the unit");
}

Factorization isotropy_factorization(const FiniteGroupoid& gd, const SectionFamily& s, int g) {
  if (gd.d[g] != s.base)
    throw structure_error("element " + gd.elem_label[g] + " does not start at the section base");
  const int y = gd.r[g];
  const int gamma = gd.compose(g, gd.inv[s.elem[y]]);
  if (gamma < 0 || gd.d[gamma] != y || gd.r[gamma] != y ||
      gd.compose(gamma, s.elem[y]) != g)
    throw structure_error("factorization through the section failed for " + gd.elem_label[g]);
  return {gamma, y};
}

QuotientGroupoid quotient_groupoid(const FiniteGroupoid& gd) {
  QuotientGroupoid qg;
  qg.class_of.assign(gd.size, -1);
  std::vector<std::vector<int>> iso(gd.base_size);
  for (int g = 0; g < gd.size; ++g)
    if (gd.d[g] == gd.r[g]) iso[gd.d[g]].push_back(g);
  for (int g = 0; g < gd.size; ++g) {
    if (qg.class_of[g] >= 0) continue;
    const int c = int(qg.class_rep.size());
    qg.class_rep.push_back(g);  // ascending scan: g is the least member
    for (int gamma : iso[gd.r[g]]) {
      int member = gd.compose(gamma, g);
      if (member < 0) throw structure_error("isotropy element failed to act on its fiber");
      qg.class_of[member] = c;
    }
    if (qg.class_of[g] != c)
      throw structure_error("orbit of " + gd.elem_label[g] + " does not contain it");
  }

  FiniteGroupoid& q = qg.q;
  const int nc = int(qg.class_rep.size());
  q.base_size = gd.base_size;
  q.size = nc;
  q.base_label = gd.base_label;
  q.d.resize(nc);
  q.r.resize(nc);
  q.inv.resize(nc);
  q.elem_label.resize(nc);
  q.unit.resize(gd.base_size);
  q.compose_tbl.assign(size_t(nc) * nc, -1);
  for (int c = 0; c < nc; ++c) {
    int rep = qg.class_rep[c];
    q.d[c] = gd.d[rep];
    q.r[c] = gd.r[rep];
    q.inv[c] = qg.class_of[gd.inv[rep]];
    q.elem_label[c] = "[" + gd.elem_label[rep] + "]";
  }
  for (int x = 0; x < gd.base_size; ++x) q.unit[x] = qg.class_of[gd.unit[x]];
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = 0; c2 < nc; ++c2)
      if (q.d[c1] == q.r[c2])
        q.set_compose(c1, c2, qg.class_of[gd.compose(qg.class_rep[c1], qg.class_rep[c2])]);
  q.finalize();
  return qg;
}

std::vector<int> quotient_iso_pair(const FiniteGroupoid& gd, const QuotientGroupoid& qg) {
  if (!is_transitive(gd))
    throw not_transitive_error("the orbit-class groupoid maps onto pairs only when every two "
                               "points are connected");
  const int n = gd.base_size;
  const FiniteGroupoid pg = pair_groupoid(n);
  const FiniteGroupoid& q = qg.q;
  if (q.size != pg.size)
    throw structure_error("class count " + std::to_string(q.size) + " differs from " +
                          std::to_string(pg.size) + " ordered point pairs");
  std::vector<int> img(q.size);
  std::vector<int> hit(pg.size, 0);
  for (int c = 0; c < q.size; ++c) {
    img[c] = q.r[c] * n + q.d[c];
    if (hit[img[c]]++)
      throw structure_error("two classes map to the same point pair " + pg.elem_label[img[c]]);
  }
  for (int c = 0; c < q.size; ++c) {
    if (pg.d[img[c]] != q.d[c] || pg.r[img[c]] != q.r[c])
      throw structure_error("pair image of " + q.elem_label[c] + " has wrong endpoints");
    if (img[q.inv[c]] != pg.inv[img[c]])
      throw structure_error("pair image of " + q.elem_label[c] + " breaks inverses");
  }
  for (int x = 0; x < n; ++x)
    if (img[q.unit[x]] != pg.unit[x])
      throw structure_error("pair image misses the unit at point " + std::to_string(x));
  for (int c1 = 0; c1 < q.size; ++c1)
    for (int c2 = 0; c2 < q.size; ++c2) {
      int c = q.compose(c1, c2);
      int p = pg.compose(img[c1], img[c2]);
      if ((c < 0) != (p < 0) || (c >= 0 && img[c] != p))
        throw structure_error("pair image breaks composition at " + q.elem_label[c1] + " ∘ " +
                              q.elem_label[c2]);
    }
  return img;
}

HaarSystem counting_haar(const FiniteGroupoid& gd) {
  HaarSystem h;
  h.w.assign(gd.size, 1.0);
  return h;
}

BaseMeasure uniform_measure(const FiniteGroupoid& gd) {
  BaseMeasure m;
  m.mu.assign(gd.base_size, 1.0);
  return m;
}

IsotropyWeights counting_isotropy_weights(const FiniteGroupoid& gd) {
  IsotropyWeights iw;
  iw.w.assign(gd.size, 1.0);
  return iw;
}

CheckReport verify_right_invariance(const FiniteGroupoid& gd, const HaarSystem& haar) {
  if (int(haar.w.size()) != gd.size)
    throw structure_error("weight vector length does not match the element count");
  CheckReport rep;
  for (int h = 0; h < gd.size; ++h)
    for (int g : gd.into[gd.d[h]]) {
      const double res = std::abs(haar.w[gd.compose(h, g)] - haar.w[h]);
      if (res > rep.max_residual) {
        rep.max_residual = res;
        rep.witness = "w(" + gd.elem_label[h] + " ∘ " + gd.elem_label[g] + ") ≠ w(" +
                      gd.elem_label[h] + ")";
      }
    }
  return rep;
}

CheckReport verify_consistency(const FiniteGroupoid& gd, const SectionFamily& s,
                               const HaarSystem& haar, const BaseMeasure& mu,
                               const IsotropyWeights& iw) {
  validate_sections(gd, s);
  if (int(haar.w.size()) != gd.size || int(iw.w.size()) != gd.size)
    throw structure_error("weight vector length does not match the element count");
  if (int(mu.mu.size()) != gd.base_size)
    throw structure_error("base measure length does not match the point count");
  CheckReport rep;
  rep.section_fingerprint = s.fingerprint();
  for (int u : gd.out_of[s.base]) {
    const Factorization f = isotropy_factorization(gd, s, u);
    const double res = std::abs(haar.w[u] - iw.w[f.gamma] * mu.mu[f.y]);
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.witness = "w(" + gd.elem_label[u] + ") ≠ wΓ(" + gd.elem_label[f.gamma] + ")·μ(" +
                    std::to_string(f.y) + ")";
    }
  }
  return rep;
}

CheckReport verify_invariant_measure(const FiniteGroupoid& gd, const HaarSystem& haar,
                                     const BaseMeasure& mu) {
  if (int(haar.w.size()) != gd.size)
    throw structure_error("weight vector length does not match the element count");
  if (int(mu.mu.size()) != gd.base_size)
    throw structure_error("base measure length does not match the point count");
  CheckReport rep;
  for (int g = 0; g < gd.size; ++g) {
    const double res = std::abs(haar.w[g] * mu.mu[gd.d[g]] - haar.w[gd.inv[g]] * mu.mu[gd.r[g]]);
    if (res > rep.max_residual) {
      rep.max_residual = res;
      rep.witness = "w(" + gd.elem_label[g] + ")·μ(d) ≠ w(" + gd.elem_label[gd.inv[g]] + ")·μ(r)";
    }
  }
  return rep;
}

}  // namespace groupoidal
