#include "propp/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "propp/error.hpp"

namespace propp {

namespace {

bool is_p_power(int n, unsigned p) {
  if (n < 1) return false;
  while (n % static_cast<int>(p) == 0) n /= static_cast<int>(p);
  return n == 1;
}

std::vector<std::string> default_names(std::size_t k) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < k; ++i) n.push_back("g" + std::to_string(i));
  return n;
}

}  // namespace

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = id_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != id_; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup FiniteGroup::from_permutations(unsigned prime, const std::vector<std::vector<int>>& gens,
                                           std::vector<std::string> names) {
  if (gens.empty()) return trivial(prime);
  const std::size_t deg = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != deg) fail(ErrorCode::Schema, "permutations of different degree");
    std::vector<bool> seen(deg, false);
    for (int x : g) {
      if (x < 0 || static_cast<std::size_t>(x) >= deg || seen[x]) fail(ErrorCode::Schema, "not a permutation");
      seen[x] = true;
    }
  }
  std::vector<int> idp(deg);
  for (std::size_t i = 0; i < deg; ++i) idp[i] = static_cast<int>(i);
  auto compose = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r(deg);
    for (std::size_t i = 0; i < deg; ++i) r[i] = y[x[i]];
    return r;
  };
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[idp] = 0;
  elems.push_back(idp);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      auto y = compose(elems[i], g);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > static_cast<std::size_t>(kMaxFiniteOrder))
          fail(ErrorCode::TooLarge, "permutation group exceeds 512 elements");
      }
    }
  }
  const std::size_t n = elems.size();
  FiniteGroup g;
  g.prime_ = prime;
  g.table_.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table_[i][j] = index.at(compose(elems[i], elems[j]));
  g.id_ = 0;
  std::vector<int> gi;
  for (const auto& p : gens) gi.push_back(index.at(p));
  if (names.empty()) names = default_names(gi.size());
  g.finish(std::move(gi), std::move(names));
  return g;
}

FiniteGroup FiniteGroup::from_cayley(unsigned prime, std::vector<std::vector<int>> table, std::vector<int> gens,
                                     std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorCode::BadIdentity, "empty Cayley table");
  if (n > static_cast<std::size_t>(kMaxFiniteOrder)) fail(ErrorCode::TooLarge, "Cayley table exceeds 512 elements");
  for (const auto& row : table) {
    if (row.size() != n) fail(ErrorCode::Schema, "Cayley table is not square");
    for (int x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= n) fail(ErrorCode::Schema, "Cayley entry out of range");
  }
  FiniteGroup g;
  g.prime_ = prime;
  g.table_ = std::move(table);
  g.id_ = -1;
  for (std::size_t e = 0; e < n && g.id_ < 0; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g.table_[e][x] == static_cast<int>(x) && g.table_[x][e] == static_cast<int>(x);
    if (ok) g.id_ = static_cast<int>(e);
  }
  if (g.id_ < 0) fail(ErrorCode::BadIdentity, "no two-sided identity in Cayley table");
  for (int x : gens)
    if (x < 0 || static_cast<std::size_t>(x) >= n) fail(ErrorCode::Schema, "generator index out of range");
  if (g.id_ != 0) {
    // relabel so the identity is element 0
    const int e = g.id_;
    auto sw = [e](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[sw(static_cast<int>(a))][sw(static_cast<int>(b))] = sw(g.table_[a][b]);
    g.table_ = std::move(t);
    for (int& x : gens) x = sw(x);
    g.id_ = 0;
  }
  if (gens.empty()) {
    // inverses are needed for the Frattini computation below
    g.inv_.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (g.table_[x][y] == g.id_ && g.table_[y][x] == g.id_) g.inv_[x] = static_cast<int>(y);
    for (int v : g.inv_)
      if (v < 0) fail(ErrorCode::BadIdentity, "element without inverse");
    gens = frattini_quotient(g).basis;
  }
  if (names.empty()) names = default_names(gens.size());
  g.finish(std::move(gens), std::move(names));
  return g;
}

FiniteGroup FiniteGroup::trivial(unsigned prime) {
  FiniteGroup g;
  g.prime_ = prime;
  g.table_ = {{0}};
  g.id_ = 0;
  g.finish({}, {});
  return g;
}

void FiniteGroup::finish(std::vector<int> gens, std::vector<std::string> names) {
  const int n = order();
  if (names.size() != gens.size()) fail(ErrorCode::Schema, "generator names do not match generators");
  gens_ = std::move(gens);
  names_ = std::move(names);
  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (table_[x][y] == id_ && table_[y][x] == id_) {
        inv_[x] = y;
        break;
      }
  for (int v : inv_)
    if (v < 0) fail(ErrorCode::BadIdentity, "element without inverse");
  words_.assign(n, SymWord());
  bfs_parent_.assign(n, -1);
  bfs_gen_.assign(n, -1);
  std::vector<bool> seen(n, false);
  seen[id_] = true;
  std::deque<int> q{id_};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      int y = mul(x, gens_[k]);
      if (seen[y]) continue;
      seen[y] = true;
      bfs_parent_[y] = x;
      bfs_gen_[y] = static_cast<int>(k);
      words_[y] = words_[x] * SymWord::symbol(names_[k]);
      q.push_back(y);
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) fail(ErrorCode::Schema, "generators do not generate the group");
}

int FiniteGroup::evaluate(const SymWord& w) const {
  int r = id_;
  for (const auto& l : w.letters()) {
    auto it = std::find(names_.begin(), names_.end(), l.sym);
    if (it == names_.end()) fail(ErrorCode::UnknownSymbol, "unknown generator '" + l.sym + "'");
    int g = gens_[it - names_.begin()];
    r = mul(r, l.exp > 0 ? g : inv(g));
  }
  return r;
}

std::vector<SymWord> FiniteGroup::relators() const {
  std::vector<SymWord> rel;
  for (int x = 0; x < order(); ++x) {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      int y = mul(x, gens_[k]);
      if (bfs_parent_[y] == x && bfs_gen_[y] == static_cast<int>(k)) continue;
      SymWord r = words_[x] * SymWord::symbol(names_[k]) * words_[y].inverse();
      if (!r.empty()) rel.push_back(std::move(r));
    }
  }
  return rel;
}

void validate_p_group(const FiniteGroup& g) {
  const int n = g.order();
  const int e = g.identity();
  for (int x = 0; x < n; ++x)
    if (g.mul(e, x) != x || g.mul(x, e) != x) fail(ErrorCode::BadIdentity, "identity fails on element " + std::to_string(x));
  for (int x = 0; x < n; ++x)
    if (g.mul(x, g.inv(x)) != e) fail(ErrorCode::BadIdentity, "missing inverse for element " + std::to_string(x));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          fail(ErrorCode::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                              std::to_string(c) + " differs");
    }
  if (!is_p_power(n, g.prime()))
    fail(ErrorCode::NotPPower, "order " + std::to_string(n) + " is not a power of " + std::to_string(g.prime()));
}

Subgroup closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (int x : elements) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[g.identity()]) return false;
  for (int a : elements)
    for (int b : elements)
      if (!in[g.mul(a, g.inv(b))]) return false;
  return true;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, int x) {
  Subgroup r;
  for (int y : h) r.push_back(g.mul(g.mul(x, y), g.inv(x)));
  std::sort(r.begin(), r.end());
  return r;
}

std::optional<int> conjugating_element(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (h.size() != k.size()) return std::nullopt;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x) == k) return x;
  return std::nullopt;
}

Subgroup normalizer(const FiniteGroup& g, const std::vector<int>& h) {
  if (!is_subgroup(g, h)) fail(ErrorCode::NotASubgroup, "element set is not a subgroup");
  Subgroup hs = h;
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  Subgroup n;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate(g, hs, x) == hs) n.push_back(x);
  return n;
}

bool is_malnormal(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> in(g.order(), false);
  for (int y : h) in[y] = true;
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    for (int y : h)
      if (y != g.identity() && in[g.mul(g.mul(x, y), g.inv(x))]) return false;
  }
  return true;
}

FrattiniQuotient frattini_quotient(const FiniteGroup& g) {
  const int n = g.order();
  const unsigned p = g.prime();
  std::vector<int> gens;
  Subgroup phi{g.identity()};
  std::vector<bool> in(n, false);
  in[g.identity()] = true;
  auto add = [&](int x) {
    if (in[x]) return;
    gens.push_back(x);
    phi = closure(g, gens);
    std::fill(in.begin(), in.end(), false);
    for (int y : phi) in[y] = true;
  };
  for (int x = 0; x < n; ++x) add(g.pow(x, p));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) add(g.commutator(x, y));

  FrattiniQuotient fq;
  fq.phi = phi;
  std::vector<int> span_gens = gens;
  for (int x = 0; x < n; ++x) {
    if (in[x]) continue;
    fq.basis.push_back(x);
    span_gens.push_back(x);
    for (int y : closure(g, span_gens)) in[y] = true;
  }
  fq.dim = static_cast<int>(fq.basis.size());
  fq.coords.assign(n, FpVector(p, fq.dim));
  std::vector<unsigned> c(fq.dim, 0);
  while (true) {
    int b = g.identity();
    for (int i = 0; i < fq.dim; ++i) b = g.mul(b, g.pow(fq.basis[i], c[i]));
    for (int f : fq.phi) fq.coords[g.mul(b, f)].coords = c;
    int i = 0;
    while (i < fq.dim && ++c[i] == p) c[i++] = 0;
    if (i == fq.dim) break;
  }
  return fq;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const std::string& name_prefix) {
  if (!is_subgroup(g, h)) fail(ErrorCode::NotASubgroup, "element set is not a subgroup");
  Subgroup hs = h;
  std::sort(hs.begin(), hs.end());
  std::map<int, int> local;
  for (std::size_t i = 0; i < hs.size(); ++i) local[hs[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(hs.size(), std::vector<int>(hs.size()));
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < hs.size(); ++j) t[i][j] = local.at(g.mul(hs[i], hs[j]));
  // pick the minimal generating set first, then name it
  FiniteGroup tmp = FiniteGroup::from_cayley(g.prime(), t);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < tmp.generators().size(); ++i) names.push_back(name_prefix + std::to_string(i));
  SubgroupGroup sg;
  sg.group = FiniteGroup::from_cayley(g.prime(), std::move(t), tmp.generators(), std::move(names));
  sg.embedding = hs;
  return sg;
}

bool GroupHom::injective() const {
  std::vector<int> s = image;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

GroupHom hom_from_generators(const FiniteGroup& src, const FiniteGroup& tgt, const std::vector<int>& gen_images) {
  if (gen_images.size() != src.generators().size()) fail(ErrorCode::Schema, "wrong number of generator images");
  GroupHom h;
  h.image.assign(src.order(), -1);
  h.image[src.identity()] = tgt.identity();
  std::vector<int> order{src.identity()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t k = 0; k < src.generators().size(); ++k) {
      int y = src.mul(order[i], src.generators()[k]);
      if (h.image[y] < 0) {
        h.image[y] = tgt.mul(h.image[order[i]], gen_images[k]);
        order.push_back(y);
      }
    }
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (h.image[src.mul(a, b)] != tgt.mul(h.image[a], h.image[b]))
        fail(ErrorCode::NotHomomorphism, "generator images do not define a homomorphism");
  return h;
}

}  // namespace propp
