#include "propp/free_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "propp/error.hpp"

namespace propp {

FreeGroup::FreeGroup(unsigned prime, std::vector<std::string> names) : prime_(prime), names_(std::move(names)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) fail(ErrorCode::Schema, "duplicate free generator name");
}

FpVector exponent_vector_mod_p(const Word& w, int rank, unsigned p) {
  FpVector v(p, rank);
  std::vector<long long> sums(rank, 0);
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    if (i >= rank) fail(ErrorCode::UnknownSymbol, "letter outside free basis");
    sums[i] += l > 0 ? 1 : -1;
  }
  for (int i = 0; i < rank; ++i) v.coords[i] = mod_p(sums[i], p);
  return v;
}

FpVector exponent_vector_mod_p(const std::vector<int>& raw_letters, int rank, unsigned p) {
  for (std::size_t i = 0; i + 1 < raw_letters.size(); ++i)
    if (raw_letters[i] == -raw_letters[i + 1]) fail(ErrorCode::UnreducedWord, "word is not freely reduced");
  for (int l : raw_letters)
    if (l == 0) fail(ErrorCode::Schema, "letter 0 is not a generator");
  return exponent_vector_mod_p(Word(raw_letters), rank, p);
}

FreeFactorResult is_cyclic_free_factor(const Word& c, const FreeGroup& f) {
  if (c.empty()) fail(ErrorCode::TrivialWord, "trivial word");
  FreeFactorResult r;
  FpVector v = exponent_vector_mod_p(c, f.rank(), f.prime());
  int j = -1;
  for (int i = 0; i < f.rank(); ++i)
    if (v.coords[i]) {
      j = i;
      break;
    }
  if (j < 0) {
    r.transcript.push_back("exponent vector of " + f.format(c) + " vanishes mod " + std::to_string(f.prime()) +
                           ": word lies in the Frattini subgroup");
    return r;
  }
  r.free_factor = true;
  for (int i = 0; i < f.rank(); ++i) r.basis.push_back(i == j ? c : Word::generator(i));
  r.transcript.push_back("coefficient of " + f.names()[j] + " is " + std::to_string(v.coords[j]) +
                         ", a unit mod " + std::to_string(f.prime()));
  r.transcript.push_back("replace " + f.names()[j] + " by " + f.format(c) +
                         "; the exponent matrix stays invertible, so the images still span F/Phi");
  return r;
}

std::optional<Word> conjugator(const Word& a, const Word& b) {
  Word u, v;
  Word a0 = a.cyclic_core(&u), b0 = b.cyclic_core(&v);
  if (a0.size() != b0.size()) return std::nullopt;
  const auto& al = a0.letters();
  const std::size_t n = al.size();
  if (n == 0) return Word();
  for (std::size_t k = 0; k < n; ++k) {
    // a0 = s t with |s| = k; rotation t s = s^-1 a0 s
    std::vector<int> rot(al.begin() + k, al.end());
    rot.insert(rot.end(), al.begin(), al.begin() + k);
    if (Word(rot) == b0) {
      Word s(std::vector<int>(al.begin(), al.begin() + k));
      return v * s.inverse() * u.inverse();
    }
  }
  return std::nullopt;
}

Word root(const Word& w, int* exponent) {
  Word u;
  Word c = w.cyclic_core(&u);
  const auto& l = c.letters();
  const std::size_t n = l.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = l[i] == l[i - d];
    if (periodic) {
      if (exponent) *exponent = static_cast<int>(n / d);
      return u * Word(std::vector<int>(l.begin(), l.begin() + d)) * u.inverse();
    }
  }
  if (exponent) *exponent = 1;
  return w;
}

namespace {

struct FoldEdge {
  int from, to, gen;  // reads generator gen (0-based) from -> to
  Word label;
  bool alive = true;
};

}  // namespace

SubgroupAutomaton::SubgroupAutomaton(int rank, const std::vector<Word>& gens) : rank_(rank) {
  int nstates = 1;
  std::vector<FoldEdge> edges;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& ls = gens[j].letters();
    if (ls.empty()) {
      injective_ = false;
      continue;
    }
    for (int l : ls)
      if (std::abs(l) > rank) fail(ErrorCode::UnknownSymbol, "letter outside free basis");
    int cur = 0;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int nxt = i + 1 == ls.size() ? 0 : nstates++;
      Word lab = i == 0 ? Word::generator(static_cast<int>(j)) : Word();
      if (ls[i] > 0)
        edges.push_back({cur, nxt, ls[i] - 1, lab});
      else
        edges.push_back({nxt, cur, -ls[i] - 1, lab.inverse()});
      cur = nxt;
    }
  }
  std::vector<bool> alive_state(nstates, true);
  // fold until deterministic
  while (true) {
    std::map<std::pair<int, int>, std::pair<std::size_t, bool>> seen;  // (state, slot) -> (edge, forward)
    bool changed = false;
    for (std::size_t e = 0; e < edges.size() && !changed; ++e) {
      if (!edges[e].alive) continue;
      for (int dir = 0; dir < 2 && !changed; ++dir) {
        const bool fwd = dir == 0;
        int u = fwd ? edges[e].from : edges[e].to;
        int slot = 2 * edges[e].gen + (fwd ? 0 : 1);
        auto [it, fresh] = seen.emplace(std::make_pair(u, slot), std::make_pair(e, fwd));
        if (fresh) continue;
        std::size_t e1 = it->second.first;
        bool f1 = it->second.second;
        int v1 = f1 ? edges[e1].to : edges[e1].from;
        Word l1 = f1 ? edges[e1].label : edges[e1].label.inverse();
        int v2 = fwd ? edges[e].to : edges[e].from;
        Word l2 = fwd ? edges[e].label : edges[e].label.inverse();
        if (v1 == v2) {
          if (l1 != l2) injective_ = false;
          edges[e].alive = false;
        } else {
          int keep = v1, drop = v2;
          Word lk = l1, ld = l2;
          if (drop == 0) {
            std::swap(keep, drop);
            std::swap(lk, ld);
          }
          Word delta = ld.inverse() * lk;
          for (auto& x : edges) {
            if (!x.alive) continue;
            if (x.to == drop) x.label = x.label * delta;
            if (x.from == drop) x.label = delta.inverse() * x.label;
            if (x.to == drop) x.to = keep;
            if (x.from == drop) x.from = keep;
          }
          alive_state[drop] = false;
        }
        changed = true;
      }
    }
    if (!changed) break;
  }
  // renumber states breadth-first from the base, letters in slot order
  std::map<int, int> old_to_new;
  std::vector<int> order{0};
  old_to_new[0] = 0;
  std::map<std::pair<int, int>, std::pair<int, Word>> trans;  // (old state, slot) -> (old target, label)
  for (const auto& x : edges) {
    if (!x.alive) continue;
    trans[{x.from, 2 * x.gen}] = {x.to, x.label};
    trans[{x.to, 2 * x.gen + 1}] = {x.from, x.label.inverse()};
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int slot = 0; slot < 2 * rank_; ++slot) {
      auto it = trans.find({order[i], slot});
      if (it == trans.end()) continue;
      int t = it->second.first;
      if (old_to_new.emplace(t, static_cast<int>(order.size())).second) order.push_back(t);
    }
  const std::size_t n = order.size();
  next_.assign(n, std::vector<int>(2 * rank_, -1));
  label_.assign(n, std::vector<Word>(2 * rank_));
  for (const auto& [key, val] : trans) {
    int s = old_to_new.at(key.first);
    next_[s][key.second] = old_to_new.at(val.first);
    label_[s][key.second] = val.second;
  }
  tree_word_.assign(n, Word());
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> q{0};
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int slot = 0; slot < 2 * rank_; ++slot) {
      int t = next_[s][slot];
      if (t < 0 || seen[t]) continue;
      seen[t] = true;
      int letter = slot % 2 == 0 ? slot / 2 + 1 : -(slot / 2 + 1);
      tree_word_[t] = tree_word_[s] * Word({letter});
      q.push_back(t);
    }
  }
}

int SubgroupAutomaton::edge_count() const {
  int c = 0;
  for (const auto& row : next_)
    for (int slot = 0; slot < 2 * rank_; slot += 2)
      if (row[slot] >= 0) ++c;
  return c;
}

bool SubgroupAutomaton::is_full() const { return states() == 1 && finite_index(); }

bool SubgroupAutomaton::finite_index() const {
  for (const auto& row : next_)
    for (int t : row)
      if (t < 0) return false;
  return true;
}

int SubgroupAutomaton::step(int state, int letter) const {
  if (std::abs(letter) > rank_ || letter == 0) return -1;
  return next_[state][letter_slot(letter)];
}

bool SubgroupAutomaton::contains(const Word& w) const {
  int s = 0;
  for (int l : w.letters()) {
    s = step(s, l);
    if (s < 0) return false;
  }
  return s == 0;
}

std::optional<Word> SubgroupAutomaton::preimage(const Word& w) const {
  int s = 0;
  Word lab;
  for (int l : w.letters()) {
    int t = step(s, l);
    if (t < 0) return std::nullopt;
    lab *= label_[s][letter_slot(l)];
    s = t;
  }
  if (s != 0) return std::nullopt;
  return lab;
}

Word SubgroupAutomaton::right_coset_rep(const Word& y) const {
  int s = 0;
  std::size_t i = 0;
  const auto& ls = y.letters();
  for (; i < ls.size(); ++i) {
    int t = step(s, ls[i]);
    if (t < 0) break;
    s = t;
  }
  return tree_word_[s] * Word(std::vector<int>(ls.begin() + i, ls.end()));
}

Word SubgroupAutomaton::left_coset_rep(const Word& x) const { return right_coset_rep(x.inverse()).inverse(); }

std::vector<Word> SubgroupAutomaton::left_transversal(std::size_t max_len) const {
  std::set<Word> reps;
  // right cosets H p_q v with v not starting with a readable letter at q
  std::vector<std::pair<int, Word>> frontier;
  for (int s = 0; s < states(); ++s) frontier.push_back({s, Word()});
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto [s, v] = frontier[i];
    Word r = tree_word_[s] * v;
    if (r.size() <= max_len) reps.insert(r.inverse());
    if (v.size() >= max_len) continue;
    for (int slot = 0; slot < 2 * rank_; ++slot) {
      int letter = slot % 2 == 0 ? slot / 2 + 1 : -(slot / 2 + 1);
      if (v.empty() && next_[s][slot] >= 0) continue;
      if (!v.empty() && v.letters().back() == -letter) continue;
      Word nv = v * Word({letter});
      if (tree_word_[s].size() + nv.size() <= max_len) frontier.push_back({s, nv});
    }
  }
  std::vector<Word> out(reps.begin(), reps.end());
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_malnormal_free(int rank, const std::vector<Word>& gens, Word* witness, Word* element) {
  SubgroupAutomaton a(rank, gens);
  const int n = a.states();
  // off-diagonal components of the fiber product; a cycle in one of them
  // gives an element of H meeting a conjugate H^g with g outside H
  std::vector<int> comp(n * n, -1);
  for (int start = 0; start < n * n; ++start) {
    int q1 = start / n, q2 = start % n;
    if (q1 == q2 || comp[start] >= 0) continue;
    // BFS with parent words to find a cycle
    std::map<int, Word> path{{start, Word()}};
    std::deque<int> dq{start};
    comp[start] = start;
    int edges = 0, verts = 0;
    std::optional<std::pair<int, int>> closing;  // (state, letter) closing a cycle
    std::set<std::pair<int, int>> tree_edges;
    while (!dq.empty()) {
      int cur = dq.front();
      dq.pop_front();
      ++verts;
      int c1 = cur / n, c2 = cur % n;
      for (int l = 1; l <= rank; ++l) {
        for (int sgn : {1, -1}) {
          int letter = sgn * l;
          int t1 = a.step(c1, letter), t2 = a.step(c2, letter);
          if (t1 < 0 || t2 < 0) continue;
          int t = t1 * n + t2;
          if (sgn > 0) ++edges;
          if (comp[t] < 0) {
            comp[t] = start;
            path[t] = path[cur] * Word({letter});
            tree_edges.insert({t, -letter});
            dq.push_back(t);
          } else if (!closing && !tree_edges.count({cur, letter})) {
            closing = std::make_pair(cur, letter);
          }
        }
      }
    }
    if (edges >= verts && closing) {
      // loop: path to cur, letter, back along tree path
      int cur = closing->first, letter = closing->second;
      int t = a.step(cur / n, letter) * n + a.step(cur % n, letter);
      Word w = path[cur] * Word({letter}) * path[t].inverse();
      // w is a loop at (q1,q2) reading the same word in both coordinates
      Word p1 = a.tree_word(q1), p2 = a.tree_word(q2);
      if (witness) *witness = p2 * p1.inverse();
      if (element) *element = p1 * w * p1.inverse();
      return false;
    }
  }
  return true;
}

}  // namespace propp
