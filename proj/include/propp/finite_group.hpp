#pragma once

#include <optional>
#include <string>
#include <vector>

#include "propp/fp_linear.hpp"
#include "propp/word.hpp"

namespace propp {

inline constexpr int kMaxFiniteOrder = 512;

/// Finite group stored as a Cayley table. Elements are 0..order-1; the
/// generators carry names used by words.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Closure of the given permutations (images of 0..n-1). Elements are
  /// numbered in breadth-first order from the identity (index 0).
  /// Products compose left to right: (x*y)(i) = y(x(i)).
  static FiniteGroup from_permutations(unsigned prime, const std::vector<std::vector<int>>& gens,
                                       std::vector<std::string> names = {});
  /// table[i][j] = i*j. Empty `gens` selects a minimal generating set.
  static FiniteGroup from_cayley(unsigned prime, std::vector<std::vector<int>> table,
                                 std::vector<int> gens = {}, std::vector<std::string> names = {});
  static FiniteGroup trivial(unsigned prime);

  unsigned prime() const { return prime_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long k) const;
  int element_order(int a) const;
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Evaluate a word in the generator names.
  int evaluate(const SymWord& w) const;
  /// Shortest-first word for an element (breadth-first search tree).
  const SymWord& word_of(int x) const { return words_[x]; }
  /// One relator per non-tree edge of the Cayley graph search tree.
  std::vector<SymWord> relators() const;

  bool operator==(const FiniteGroup& o) const {
    return prime_ == o.prime_ && table_ == o.table_ && gens_ == o.gens_ && names_ == o.names_;
  }

 private:
  void finish(std::vector<int> gens, std::vector<std::string> names);

  unsigned prime_ = 2;
  int id_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> names_;
  std::vector<SymWord> words_;
  std::vector<int> bfs_parent_, bfs_gen_;
};

/// Full check: identity, associativity, inverses, order a power of p.
void validate_p_group(const FiniteGroup& g);

/// Sorted element list of a subgroup.
using Subgroup = std::vector<int>;

Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x);  // x h x^-1
/// Some x with x h x^-1 = k (least index), if any.
std::optional<int> conjugating_element(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);
Subgroup normalizer(const FiniteGroup& g, const std::vector<int>& h);
bool is_malnormal(const FiniteGroup& g, const Subgroup& h);

struct FrattiniQuotient {
  Subgroup phi;
  int dim = 0;
  std::vector<int> basis;           // lifts of a basis of G/Phi
  std::vector<FpVector> coords;     // projection of every element
  FpVector project(int x) const { return coords[x]; }
};
FrattiniQuotient frattini_quotient(const FiniteGroup& g);

/// A subgroup as a group of its own; `embedding[i]` is the parent element.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<int> embedding;
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const std::string& name_prefix = "h");

/// Homomorphism given by generator images; checked on the whole table.
struct GroupHom {
  std::vector<int> image;
  bool injective() const;
};
GroupHom hom_from_generators(const FiniteGroup& src, const FiniteGroup& tgt, const std::vector<int>& gen_images);

}  // namespace propp
