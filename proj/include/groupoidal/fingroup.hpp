#ifndef GROUPOIDAL_FINGROUP_HPP
#define GROUPOIDAL_FINGROUP_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "groupoidal/common.hpp"

namespace groupoidal {

// Finite group with elements indexed 0..order-1. Groups generated from
// permutation words keep the words: elements are sorted lexicographically by
// word, which puts the identity at index 0. Multiplication is "a then b":
// word(mul(a,b))[i] = word(b)[word(a)[i]], so words act on points on the
// right via act(i,g) = word(g)[i].
class FiniteGroup {
 public:
  static FiniteGroup from_generators(int degree, const std::vector<std::vector<int>>& gens,
                                     int cap = kDefaultGroupCap);
  // Explicit multiplication table (table[a][b] = mul(a,b)); fully validated.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int degree() const { return degree_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }

  bool has_words() const { return degree_ > 0; }
  const std::vector<int>& word(int a) const { return words_[a]; }
  // Index of the element with this word, or -1.
  int element_of_word(const std::vector<int>& w) const;
  // Permutation parity: +1 or -1. Requires words.
  int sign(int a) const;

  std::string label(int a) const;

  // Throws not_a_subgroup_error (with a witness) unless elems is a subgroup.
  void check_subgroup(const std::vector<int>& elems) const;
  // Sorted, deduplicated, checked.
  std::vector<int> normalize_subgroup(std::vector<int> elems) const;

  std::uint64_t fingerprint() const;

 private:
  int order_ = 0;
  int degree_ = 0;  // 0 for table-built groups
  int identity_ = 0;
  std::vector<std::vector<int>> words_;
  std::vector<int> mul_;  // dense order x order table when small enough
  std::vector<int> inv_;
  std::unordered_map<std::string, int> word_index_;

  static std::string word_key(const std::vector<int>& w);
  int mul_by_words(int a, int b) const;
};

// Right action of a group on points 0..points-1: act(p, mul(g,h)) = act(act(p,g), h).
struct GroupAction {
  int points = 0;
  int group_order = 0;
  std::vector<int> table;  // points x order, row-major

  int act(int p, int g) const { return table[size_t(p) * group_order + g]; }
};

// Throws structure_error (with a witness) on an axiom violation.
void validate_action(const FiniteGroup& g, const GroupAction& a);

GroupAction natural_action(const FiniteGroup& g);  // on 0..degree-1 via words
GroupAction trivial_action(const FiniteGroup& g, int points = 1);

// Right cosets K\G. Points are ordered by their minimal element; the
// representative of the base coset (the one containing the identity) is the
// identity itself, so sections built from representatives are unital there.
class CosetSpace {
 public:
  CosetSpace(FiniteGroup g, std::vector<int> subgroup_elems);

  const FiniteGroup& group() const { return g_; }
  const std::vector<int>& subgroup() const { return k_; }
  int points() const { return int(reps_.size()); }
  int coset_of(int g) const { return coset_of_[g]; }
  int representative(int p) const { return reps_[p]; }
  const std::vector<int>& representatives() const { return reps_; }
  int base() const { return base_; }  // coset of the identity
  bool in_subgroup(int g) const;

  // act(p, g) = coset of representative(p)*g; validated right action.
  GroupAction coset_action() const;

 private:
  FiniteGroup g_;
  std::vector<int> k_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
  int base_ = 0;
};

}  // namespace groupoidal

#endif
