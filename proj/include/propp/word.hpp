#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace propp {

/// Word over an indexed alphabet. Letter +k is generator k-1, -k its inverse.
/// Always freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  static Word generator(int index, int exponent = 1);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(long k) const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  // Cyclically reduced core and the conjugator u with *this == u core u^-1.
  Word cyclic_core(Word* conjugator = nullptr) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

/// Word over named symbols; exponents are unit steps so the sequence is the
/// literal letter string. Freely reduced on construction.
struct SymLetter {
  std::string sym;
  int exp = 1;  // +1 or -1
  auto operator<=>(const SymLetter&) const = default;
};

class SymWord {
 public:
  SymWord() = default;
  explicit SymWord(std::vector<SymLetter> letters);
  static SymWord symbol(const std::string& s, int exponent = 1);

  const std::vector<SymLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  SymWord inverse() const;
  SymWord power(long k) const;
  SymWord operator*(const SymWord& rhs) const;
  SymWord& operator*=(const SymWord& rhs);
  SymWord conjugated_by(const SymWord& c) const;  // c^-1 w c

  // Prefix every symbol with `prefix`.
  SymWord qualified(const std::string& prefix) const;

  auto operator<=>(const SymWord&) const = default;
  bool operator==(const SymWord&) const = default;

 private:
  std::vector<SymLetter> letters_;
};

/// Parse "a b^-1 a^2 [a,b]". Commutator [x,y] = x^-1 y^-1 x y.
/// "1" and "" denote the empty word.
SymWord parse_symword(const std::string& text);
std::string to_string(const SymWord& w);

/// Index-based conversion against an alphabet; throws UnknownSymbol.
Word to_word(const SymWord& w, const std::vector<std::string>& alphabet);
SymWord to_symword(const Word& w, const std::vector<std::string>& alphabet);
std::string to_string(const Word& w, const std::vector<std::string>& alphabet);

/// Replace each symbol by a word; symbols missing from `subst` are kept.
template <class Map>
SymWord substitute(const SymWord& w, const Map& subst) {
  SymWord out;
  for (const auto& l : w.letters()) {
    auto it = subst.find(l.sym);
    if (it == subst.end()) {
      out *= SymWord::symbol(l.sym, l.exp);
    } else {
      out *= (l.exp > 0 ? it->second : it->second.inverse());
    }
  }
  return out;
}

}  // namespace propp
