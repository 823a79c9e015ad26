#include "propp/word.hpp"

#include <cctype>
#include <sstream>

#include "propp/error.hpp"

namespace propp {

namespace {

void push_reduced(std::vector<int>& out, int l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void push_reduced(std::vector<SymLetter>& out, const SymLetter& l) {
  if (!out.empty() && out.back().sym == l.sym && out.back().exp == -l.exp) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) push_reduced(letters_, l);
}

Word Word::generator(int index, int exponent) {
  std::vector<int> v;
  int l = index + 1;
  for (int i = 0; i < std::abs(exponent); ++i) v.push_back(exponent > 0 ? l : -l);
  return Word(std::move(v));
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::power(long k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(k); ++i) out *= base;
  return out;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w *= rhs;
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  for (int l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

Word Word::cyclic_core(Word* conjugator) const {
  std::size_t i = 0, j = letters_.size();
  while (j - i >= 2 && letters_[i] == -letters_[j - 1]) {
    ++i;
    --j;
  }
  if (conjugator) *conjugator = Word(std::vector<int>(letters_.begin(), letters_.begin() + i));
  return Word(std::vector<int>(letters_.begin() + i, letters_.begin() + j));
}

SymWord::SymWord(std::vector<SymLetter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) push_reduced(letters_, l);
}

SymWord SymWord::symbol(const std::string& s, int exponent) {
  SymWord w;
  for (int i = 0; i < std::abs(exponent); ++i) w.letters_.push_back({s, exponent > 0 ? 1 : -1});
  return w;
}

SymWord SymWord::inverse() const {
  SymWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->sym, -it->exp});
  return w;
}

SymWord SymWord::power(long k) const {
  SymWord base = k < 0 ? inverse() : *this;
  SymWord out;
  for (long i = 0; i < std::labs(k); ++i) out *= base;
  return out;
}

SymWord SymWord::operator*(const SymWord& rhs) const {
  SymWord w = *this;
  w *= rhs;
  return w;
}

SymWord& SymWord::operator*=(const SymWord& rhs) {
  for (const auto& l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

SymWord SymWord::conjugated_by(const SymWord& c) const { return c.inverse() * *this * c; }

SymWord SymWord::qualified(const std::string& prefix) const {
  SymWord w;
  for (const auto& l : letters_) w.letters_.push_back({prefix + l.sym, l.exp});
  return w;
}

namespace {

// name or name^k
SymWord parse_atom(const std::string& tok, const std::string& whole) {
  auto caret = tok.find('^');
  std::string name = tok.substr(0, caret);
  long e = 1;
  if (caret != std::string::npos) {
    std::string ex = tok.substr(caret + 1);
    try {
      std::size_t used = 0;
      e = std::stol(ex, &used);
      if (used != ex.size()) throw std::invalid_argument(ex);
    } catch (const std::exception&) {
      fail(ErrorCode::Schema, "bad exponent in word '" + whole + "'");
    }
  }
  if (name.empty()) fail(ErrorCode::Schema, "empty symbol in word '" + whole + "'");
  if (name == "1") return SymWord();
  return SymWord::symbol(name).power(e);
}

}  // namespace

SymWord parse_symword(const std::string& text) {
  SymWord out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '[') {
      auto close = text.find(']', i);
      if (close == std::string::npos) fail(ErrorCode::Schema, "unbalanced '[' in '" + text + "'");
      std::string inner = text.substr(i + 1, close - i - 1);
      auto comma = inner.find(',');
      if (comma == std::string::npos) fail(ErrorCode::Schema, "commutator needs ',' in '" + text + "'");
      SymWord x = parse_symword(inner.substr(0, comma));
      SymWord y = parse_symword(inner.substr(comma + 1));
      SymWord c = x.inverse() * y.inverse() * x * y;
      i = close + 1;
      if (i < n && text[i] == '^') {
        std::size_t j = i + 1;
        while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        long e = 0;
        try {
          e = std::stol(text.substr(i + 1, j - i - 1));
        } catch (const std::exception&) {
          fail(ErrorCode::Schema, "bad exponent in word '" + text + "'");
        }
        c = c.power(e);
        i = j;
      }
      out *= c;
      continue;
    }
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '[') ++j;
    out *= parse_atom(text.substr(i, j - i), text);
    i = j;
  }
  return out;
}

std::string to_string(const SymWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const auto& ls = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long e = static_cast<long>(j - i) * ls[i].exp;
    if (!first) os << ' ';
    first = false;
    os << ls[i].sym;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

Word to_word(const SymWord& w, const std::vector<std::string>& alphabet) {
  std::vector<int> letters;
  for (const auto& l : w.letters()) {
    int idx = -1;
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      if (alphabet[k] == l.sym) {
        idx = static_cast<int>(k);
        break;
      }
    }
    if (idx < 0) fail(ErrorCode::UnknownSymbol, "unknown symbol '" + l.sym + "'");
    letters.push_back(l.exp > 0 ? idx + 1 : -(idx + 1));
  }
  return Word(std::move(letters));
}

SymWord to_symword(const Word& w, const std::vector<std::string>& alphabet) {
  std::vector<SymLetter> out;
  for (int l : w.letters()) {
    std::size_t idx = static_cast<std::size_t>(std::abs(l) - 1);
    if (idx >= alphabet.size()) fail(ErrorCode::UnknownSymbol, "letter outside alphabet");
    out.push_back({alphabet[idx], l > 0 ? 1 : -1});
  }
  return SymWord(std::move(out));
}

std::string to_string(const Word& w, const std::vector<std::string>& alphabet) {
  return to_string(to_symword(w, alphabet));
}

}  // namespace propp
