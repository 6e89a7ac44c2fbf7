#include "groupoidal/fingroup.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace groupoidal {

namespace {

// Dense multiplication tables only below this order; larger groups multiply
// by composing words and hashing.
constexpr int kDenseTableLimit = 1024;

bool is_permutation(const std::vector<int>& w, int degree) {
  if (int(w.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : w) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> compose_words(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<int> invert_word(const std::vector<int>& a) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = int(i);
  return c;
}

}  // namespace

std::string FiniteGroup::word_key(const std::vector<int>& w) {
  std::string k;
  k.reserve(w.size() * 2);
  for (int v : w) {
    k.push_back(char(v & 0xff));
    k.push_back(char((v >> 8) & 0xff));
  }
  return k;
}

FiniteGroup FiniteGroup::from_generators(int degree,
                                         const std::vector<std::vector<int>>& gens, int cap) {
  if (degree <= 0) throw std::invalid_argument("from_generators: degree must be positive");
  for (const auto& g : gens)
    if (!is_permutation(g, degree))
      throw std::invalid_argument("from_generators: generator is not a permutation of the degree");

  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  // Breadth-first closure.
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> elems{id};
  seen[id] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto w = compose_words(elems[head], g);
      if (seen.emplace(w, int(elems.size())).second) {
        if (int(elems.size()) >= cap)
          throw size_limit_error("from_generators: closure exceeds cap of " +
                                 std::to_string(cap) + " elements");
        elems.push_back(std::move(w));
      }
    }
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.order_ = int(elems.size());
  std::sort(elems.begin(), elems.end());  // identity word is lexicographically minimal
  g.words_ = std::move(elems);
  for (int i = 0; i < g.order_; ++i) g.word_index_[word_key(g.words_[i])] = i;
  g.identity_ = 0;

  g.inv_.resize(g.order_);
  for (int i = 0; i < g.order_; ++i) {
    int j = g.element_of_word(invert_word(g.words_[i]));
    if (j < 0) throw structure_error("from_generators: closure not inverse-closed");
    g.inv_[i] = j;
  }
  if (g.order_ <= kDenseTableLimit) {
    g.mul_.resize(size_t(g.order_) * g.order_);
    for (int a = 0; a < g.order_; ++a)
      for (int b = 0; b < g.order_; ++b) {
        int c = g.element_of_word(compose_words(g.words_[a], g.words_[b]));
        if (c < 0) throw structure_error("from_generators: closure not product-closed");
        g.mul_[size_t(a) * g.order_ + b] = c;
      }
  }
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
  int n = int(table.size());
  if (n == 0) throw std::invalid_argument("from_table: empty table");
  if (n > kDenseTableLimit)
    throw size_limit_error("from_table: table order exceeds " +
                           std::to_string(kDenseTableLimit));
  for (const auto& row : table) {
    if (int(row.size()) != n) throw std::invalid_argument("from_table: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("from_table: entry out of range");
  }

  FiniteGroup g;
  g.order_ = n;
  g.degree_ = 0;
  g.mul_.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[size_t(a) * n + b] = table[a][b];

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[c][a] == a && table[a][c] == a;
    if (ok) e = c;
  }
  if (e < 0) throw structure_error("from_table: no identity element");
  g.identity_ = e;

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0)
      throw structure_error("from_table: element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw structure_error("from_table: associativity fails at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return g;
}

int FiniteGroup::mul(int a, int b) const {
  if (!mul_.empty()) return mul_[size_t(a) * order_ + b];
  return mul_by_words(a, b);
}

int FiniteGroup::mul_by_words(int a, int b) const {
  int c = element_of_word(compose_words(words_[a], words_[b]));
  if (c < 0) throw structure_error("mul: product fell outside the group");
  return c;
}

int FiniteGroup::element_of_word(const std::vector<int>& w) const {
  auto it = word_index_.find(word_key(w));
  return it == word_index_.end() ? -1 : it->second;
}

int FiniteGroup::sign(int a) const {
  if (!has_words()) throw structure_error("sign: group has no permutation realization");
  const auto& w = words_[a];
  std::vector<char> seen(w.size(), 0);
  int parity = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = size_t(w[j])) {
      seen[j] = 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

std::string FiniteGroup::label(int a) const {
  if (!has_words()) return "g" + std::to_string(a);
  std::string s = "[";
  for (size_t i = 0; i < words_[a].size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(words_[a][i]);
  }
  s.push_back(']');
  return s;
}

void FiniteGroup::check_subgroup(const std::vector<int>& elems) const {
  std::vector<char> member(order_, 0);
  for (int v : elems) {
    if (v < 0 || v >= order_)
      throw not_a_subgroup_error("subgroup: element index " + std::to_string(v) +
                                 " out of range");
    member[v] = 1;
  }
  if (!member[identity_]) throw not_a_subgroup_error("subgroup: identity missing");
  for (int a : elems) {
    if (!member[inv(a)])
      throw not_a_subgroup_error("subgroup: inverse of " + label(a) + " missing");
    for (int b : elems)
      if (!member[mul(a, b)])
        throw not_a_subgroup_error("subgroup: product " + label(a) + "*" + label(b) +
                                   " = " + label(mul(a, b)) + " missing");
  }
}

std::vector<int> FiniteGroup::normalize_subgroup(std::vector<int> elems) const {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  check_subgroup(elems);
  return elems;
}

std::uint64_t FiniteGroup::fingerprint() const {
  std::uint64_t h = fnv1a("group:" + std::to_string(order_));
  for (int i = 0; i < order_; ++i) h = fnv1a(label(i), h);
  return h;
}

void validate_action(const FiniteGroup& g, const GroupAction& a) {
  if (a.group_order != g.order()) throw structure_error("action: group order mismatch");
  if (int(a.table.size()) != a.points * a.group_order)
    throw structure_error("action: table size mismatch");
  for (int v : a.table)
    if (v < 0 || v >= a.points) throw structure_error("action: target point out of range");
  for (int p = 0; p < a.points; ++p)
    if (a.act(p, g.identity()) != p)
      throw structure_error("action: identity moves point " + std::to_string(p));
  for (int p = 0; p < a.points; ++p)
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        if (a.act(a.act(p, x), y) != a.act(p, g.mul(x, y)))
          throw structure_error("action: compatibility fails at point " + std::to_string(p) +
                                " with " + g.label(x) + ", " + g.label(y));
}

GroupAction natural_action(const FiniteGroup& g) {
  if (!g.has_words()) throw structure_error("natural_action: group has no permutation words");
  GroupAction a;
  a.points = g.degree();
  a.group_order = g.order();
  a.table.resize(size_t(a.points) * a.group_order);
  for (int p = 0; p < a.points; ++p)
    for (int x = 0; x < g.order(); ++x) a.table[size_t(p) * a.group_order + x] = g.word(x)[p];
  return a;
}

GroupAction trivial_action(const FiniteGroup& g, int points) {
  GroupAction a;
  a.points = points;
  a.group_order = g.order();
  a.table.resize(size_t(points) * g.order());
  for (int p = 0; p < points; ++p)
    for (int x = 0; x < g.order(); ++x) a.table[size_t(p) * g.order() + x] = p;
  return a;
}

CosetSpace::CosetSpace(FiniteGroup g, std::vector<int> subgroup_elems) : g_(std::move(g)) {
  k_ = g_.normalize_subgroup(std::move(subgroup_elems));
  coset_of_.assign(g_.order(), -1);
  for (int x = 0; x < g_.order(); ++x) {
    if (coset_of_[x] >= 0) continue;
    int p = int(reps_.size());
    reps_.push_back(x);  // ascending scan: first unassigned element is minimal
    for (int k : k_) coset_of_[g_.mul(k, x)] = p;
  }
  base_ = coset_of_[g_.identity()];
  reps_[base_] = g_.identity();  // identity represents the base coset
}

bool CosetSpace::in_subgroup(int g) const {
  return std::binary_search(k_.begin(), k_.end(), g);
}

GroupAction CosetSpace::coset_action() const {
  GroupAction a;
  a.points = points();
  a.group_order = g_.order();
  a.table.resize(size_t(a.points) * a.group_order);
  for (int p = 0; p < a.points; ++p)
    for (int x = 0; x < g_.order(); ++x)
      a.table[size_t(p) * a.group_order + x] = coset_of_[g_.mul(reps_[p], x)];
  validate_action(g_, a);
  return a;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return std::string(buf);
}

}  // namespace groupoidal
