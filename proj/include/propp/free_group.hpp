#pragma once

#include <optional>
#include <string>
#include <vector>

#include "propp/fp_linear.hpp"
#include "propp/word.hpp"

namespace propp {

/// Free group (or its pro-p completion) on named generators.
class FreeGroup {
 public:
  FreeGroup() = default;
  FreeGroup(unsigned prime, std::vector<std::string> names);

  unsigned prime() const { return prime_; }
  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  Word parse(const SymWord& w) const { return to_word(w, names_); }
  Word parse(const std::string& s) const { return to_word(parse_symword(s), names_); }
  SymWord to_sym(const Word& w) const { return to_symword(w, names_); }
  std::string format(const Word& w) const { return to_string(w, names_); }

  bool operator==(const FreeGroup&) const = default;

 private:
  unsigned prime_ = 2;
  std::vector<std::string> names_;
};

/// Exponent sums mod p. The raw-letter overload rejects unreduced input.
FpVector exponent_vector_mod_p(const Word& w, int rank, unsigned p);
FpVector exponent_vector_mod_p(const std::vector<int>& raw_letters, int rank, unsigned p);

struct FreeFactorResult {
  bool free_factor = false;
  std::vector<Word> basis;              // completed basis when free_factor
  std::vector<std::string> transcript;  // moves used to reach it
};

/// A word generates a free factor of the free pro-p group iff its image in
/// F/Phi is nonzero.
FreeFactorResult is_cyclic_free_factor(const Word& c, const FreeGroup& f);

/// Some x with x a x^-1 == b.
std::optional<Word> conjugator(const Word& a, const Word& b);
/// Root r with w = r^k, k maximal (w non-trivial).
Word root(const Word& w, int* exponent = nullptr);

/// Stallings graph of a finitely generated subgroup H = <gens>. Edges carry
/// labels in the free group on the given generators, so membership also
/// yields preimages; a label conflict while folding means gens are not a
/// free basis of H.
class SubgroupAutomaton {
 public:
  SubgroupAutomaton() = default;
  SubgroupAutomaton(int rank, const std::vector<Word>& gens);

  int rank() const { return rank_; }
  int states() const { return static_cast<int>(next_.size()); }
  int edge_count() const;
  int subgroup_rank() const { return edge_count() - states() + 1; }
  /// The generators form a free basis of H (map F(gens) -> F injective).
  bool injective() const { return injective_; }
  /// H is the whole free group.
  bool is_full() const;
  /// Every state has all 2*rank outgoing letters.
  bool finite_index() const;

  bool contains(const Word& w) const;
  /// Word in the generators representing w, when w is in H and injective().
  std::optional<Word> preimage(const Word& w) const;
  /// Canonical representative of the coset H y.
  Word right_coset_rep(const Word& y) const;
  /// Canonical representative of x H.
  Word left_coset_rep(const Word& x) const;
  /// Left coset representatives up to length `max_len` (all of them when
  /// finite_index()); sorted, identity first.
  std::vector<Word> left_transversal(std::size_t max_len) const;

  /// Transition or -1. Letters use the Word convention (+k / -k).
  int step(int state, int letter) const;
  const Word& tree_word(int state) const { return tree_word_[state]; }

 private:
  int letter_slot(int letter) const { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

  int rank_ = 0;
  bool injective_ = true;
  std::vector<std::vector<int>> next_;     // state x slot -> state
  std::vector<std::vector<Word>> label_;   // state x slot -> label
  std::vector<Word> tree_word_;
};

/// Malnormality of H = <gens> in F via the fiber product of the Stallings
/// graph with itself. `witness` receives some g not in H with H^g meeting
/// H nontrivially, and `element` a nontrivial element of that
/// intersection.
bool is_malnormal_free(int rank, const std::vector<Word>& gens, Word* witness = nullptr, Word* element = nullptr);

}  // namespace propp
