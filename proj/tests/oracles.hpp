// Brute-force oracles shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "propp/finite_group.hpp"
#include "propp/word.hpp"

namespace oracles {

// All nontrivial reduced words over a rank-2 alphabet up to length n.
inline std::vector<propp::Word> reduced_words(int rank, int n) {
  std::vector<propp::Word> out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int g = -rank; g <= rank; ++g) {
        if (g == 0 || (!w.empty() && w.back() == -g)) continue;
        auto x = w;
        x.push_back(g);
        next.push_back(x);
      }
    for (const auto& w : next) out.emplace_back(w);
    layer = std::move(next);
  }
  return out;
}

// Cyclically reduced letter list, computed letter by letter.
inline std::vector<int> cyclic_letters(std::vector<int> l) {
  while (l.size() >= 2 && l.front() == -l.back()) l = std::vector<int>(l.begin() + 1, l.end() - 1);
  return l;
}

inline bool same_cyclic_word(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    bool eq = true;
    for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[(i + k) % a.size()] == b[i];
    if (eq) return true;
  }
  return false;
}

// The Heisenberg group of order p^3: (x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy').
inline propp::FiniteGroup heisenberg(unsigned p) {
  const int q = static_cast<int>(p), n = q * q * q;
  auto idx = [q](int x, int y, int z) { return x % q + q * (y % q) + q * q * (z % q); };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int x = i % q, y = (i / q) % q, z = i / (q * q);
      int x2 = j % q, y2 = (j / q) % q, z2 = j / (q * q);
      t[i][j] = idx(x + x2, y + y2, z + z2 + x * y2);
    }
  return propp::FiniteGroup::from_cayley(p, t, {idx(1, 0, 0), idx(0, 1, 0)}, {"a", "b"});
}

// Does c lie in a proper free factor of the free pro-p group F(a,b)?
// Every u with u^k conjugate to c is tried as a generator of the factor;
// u is primitive iff its image in a two-generated p-group Q with
// Q/Phi(Q) of rank 2 is the first entry of a generating pair
// Nielsen-equivalent (with unit power moves) to (a, b) within `depth`
// moves.
class FreeFactorOracle {
 public:
  FreeFactorOracle(const propp::FiniteGroup& q, int depth) : q_(q) {
    const int a = q.evaluate(propp::parse_symword("a")), b = q.evaluate(propp::parse_symword("b"));
    std::set<std::pair<int, int>> seen{{a, b}};
    std::vector<std::pair<int, int>> layer{{a, b}};
    std::vector<int> units;
    for (int k = 2; k <= static_cast<int>(q.prime()) + 1; ++k)
      if (k % static_cast<int>(q.prime())) units.push_back(k);
    for (int d = 0; d < depth; ++d) {
      std::vector<std::pair<int, int>> next;
      for (auto [x, y] : layer) {
        const int xi = q.inv(x), yi = q.inv(y);
        std::vector<std::pair<int, int>> moves{
            {q.mul(x, y), y}, {q.mul(x, yi), y}, {q.mul(y, x), y}, {q.mul(yi, x), y},
            {x, q.mul(y, x)}, {x, q.mul(y, xi)}, {x, q.mul(x, y)}, {x, q.mul(xi, y)},
            {y, x},           {xi, y},           {x, yi}};
        for (int k : units) {
          moves.push_back({q.pow(x, k), y});
          moves.push_back({x, q.pow(y, k)});
        }
        for (auto m : moves)
          if (seen.insert(m).second) next.push_back(m);
      }
      layer = std::move(next);
    }
    for (auto [x, y] : seen) firsts_.insert(x);
  }

  int eval(const propp::Word& w) const {
    int x = q_.identity();
    const int a = q_.evaluate(propp::parse_symword("a")), b = q_.evaluate(propp::parse_symword("b"));
    for (int l : w.letters()) {
      int g = std::abs(l) == 1 ? a : b;
      x = q_.mul(x, l > 0 ? g : q_.inv(g));
    }
    return x;
  }

  bool in_proper_factor(const propp::Word& c) {
    auto it = cache_.find(c);
    if (it != cache_.end()) return it->second;
    const auto core = cyclic_letters(c.letters());
    bool found = false;
    for (const auto& u : reduced_words(2, static_cast<int>(core.size()))) {
      const auto uc = cyclic_letters(u.letters());
      if (uc.empty() || core.size() % uc.size() != 0) continue;
      std::vector<int> pw;
      for (std::size_t k = 0; k < core.size() / uc.size(); ++k) pw.insert(pw.end(), uc.begin(), uc.end());
      if (!same_cyclic_word(pw, core)) continue;
      if (firsts_.count(eval(u))) {
        found = true;
        break;
      }
    }
    return cache_[c] = found;
  }

 private:
  propp::FiniteGroup q_;
  std::set<int> firsts_;
  std::map<propp::Word, bool> cache_;
};

}  // namespace oracles
