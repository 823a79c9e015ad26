#include "propp/path_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "propp/error.hpp"

namespace propp {

namespace {

bool is_qualified_symbol(const std::string& sym, const Vertex& v, std::string* local) {
  const std::string prefix = v.name + ".";
  if (sym.compare(0, prefix.size(), prefix) != 0) return false;
  std::string rest = sym.substr(prefix.size());
  const auto& syms = v.group->symbols();
  if (std::find(syms.begin(), syms.end(), rest) == syms.end()) return false;
  if (local) *local = rest;
  return true;
}

}  // namespace

FlatGraph flatten(const GraphOfGroups& g) {
  bool any = false;
  for (const auto& v : g.vertices) any = any || v.group->kind() == Group::Kind::Composite;
  if (!any) {
    FlatGraph f{g, default_spanning_tree(g), {}, {}};
    for (std::size_t v = 0; v < g.vertices.size(); ++v) f.owner.push_back(static_cast<int>(v));
    for (std::size_t e = 0; e < g.edges.size(); ++e) f.outer_edge.push_back(static_cast<int>(e));
    return f;
  }

  FlatGraph out;
  out.graph.prime = g.prime;
  const std::size_t n = g.vertices.size();
  std::vector<int> simple_index(n, -1), offset(n, -1);
  std::vector<FlatGraph> inner(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& vx = g.vertices[v];
    if (vx.group->kind() != Group::Kind::Composite) {
      simple_index[v] = static_cast<int>(out.graph.vertices.size());
      out.graph.vertices.push_back(vx);
      out.owner.push_back(static_cast<int>(v));
      continue;
    }
    inner[v] = flatten(vx.group->as_composite());
    offset[v] = static_cast<int>(out.graph.vertices.size());
    const int eoff = static_cast<int>(out.graph.edges.size());
    for (const auto& iv : inner[v].graph.vertices) {
      out.graph.vertices.push_back(iv);
      out.owner.push_back(static_cast<int>(v));
    }
    for (auto ie : inner[v].graph.edges) {
      ie.from += offset[v];
      ie.to += offset[v];
      out.graph.edges.push_back(std::move(ie));
      out.outer_edge.push_back(-1);
    }
    for (int t : inner[v].tree) out.tree.push_back(t + eoff);
  }
  const auto outer_tree = default_spanning_tree(g);
  std::vector<bool> outer_in_tree(g.edges.size(), false);
  for (int t : outer_tree) outer_in_tree[t] = true;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Edge ne = g.edges[e];
    for (int side = 0; side < 2; ++side) {
      int v = ne.end(side);
      if (simple_index[v] >= 0) {
        (side == 0 ? ne.from : ne.to) = simple_index[v];
        continue;
      }
      const auto& ig = inner[v].graph;
      std::set<std::string> syms;
      for (const auto& w : ne.attach(side))
        for (const auto& l : w.letters()) syms.insert(l.sym);
      int target = -1;
      for (std::size_t u = 0; u < ig.vertices.size() && target < 0; ++u) {
        bool all = true;
        for (const auto& s : syms) all = all && is_qualified_symbol(s, ig.vertices[u], nullptr);
        if (all) target = static_cast<int>(u);
      }
      if (target < 0)
        fail(ErrorCode::UnsupportedCosetTest,
             "edge '" + ne.name + "' attaches to composite '" + g.vertices[v].name + "' outside a single inner vertex");
      for (auto& w : ne.attach(side)) {
        std::vector<SymLetter> ls;
        for (const auto& l : w.letters()) {
          std::string local;
          is_qualified_symbol(l.sym, ig.vertices[target], &local);
          ls.push_back({local, l.exp});
        }
        w = SymWord(std::move(ls));
      }
      (side == 0 ? ne.from : ne.to) = offset[v] + target;
    }
    if (outer_in_tree[e]) out.tree.push_back(static_cast<int>(out.graph.edges.size()));
    out.graph.edges.push_back(std::move(ne));
    out.outer_edge.push_back(static_cast<int>(e));
  }
  std::set<std::string> names;
  for (const auto& v : out.graph.vertices)
    if (!names.insert(v.name).second) fail(ErrorCode::Schema, "vertex name '" + v.name + "' repeats after flattening");
  names.clear();
  for (const auto& e : out.graph.edges)
    if (!names.insert(e.name).second) fail(ErrorCode::Schema, "edge name '" + e.name + "' repeats after flattening");
  std::sort(out.tree.begin(), out.tree.end());
  return out;
}

PathGroup::PathGroup(FlatGraph flat)
    : g_(std::move(flat.graph)),
      tree_(std::move(flat.tree)),
      owner_(std::move(flat.owner)),
      outer_edge_(std::move(flat.outer_edge)) {
  if (owner_.size() != g_.vertices.size()) {
    owner_.resize(g_.vertices.size());
    for (std::size_t v = 0; v < owner_.size(); ++v) owner_[v] = static_cast<int>(v);
  }
  if (outer_edge_.size() != g_.edges.size()) {
    outer_edge_.resize(g_.edges.size());
    for (std::size_t e = 0; e < outer_edge_.size(); ++e) outer_edge_[e] = static_cast<int>(e);
  }
  in_tree_.assign(g_.edges.size(), false);
  for (int t : tree_) in_tree_[t] = true;
  for (const auto& v : g_.vertices)
    if (v.group->kind() == Group::Kind::Composite)
      fail(ErrorCode::UnsupportedCosetTest, "composite vertex group '" + v.name + "' in a flat graph");
  ends_.resize(2 * g_.edges.size());
  for (std::size_t e = 0; e < g_.edges.size(); ++e) {
    const auto& ed = g_.edges[e];
    const Group& E = *ed.group;
    if (E.kind() == Group::Kind::Composite) fail(ErrorCode::UnsupportedCosetTest, "composite edge group");
    for (int side = 0; side < 2; ++side) {
      EndData& d = ends_[2 * e + side];
      const Group& T = *g_.vertices[ed.end(side)].group;
      const auto& words = ed.attach(side);
      if (E.is_trivial()) {
        d.trivial_into_free = T.kind() == Group::Kind::Free;
        if (T.kind() == Group::Kind::Finite) {
          const auto& tg = T.as_finite();
          d.image = {0};
          d.rep.resize(tg.order());
          d.pre.assign(tg.order(), 0);
          for (int x = 0; x < tg.order(); ++x) d.rep[x] = x;
        }
        continue;
      }
      if (E.kind() == Group::Kind::Finite && T.kind() == Group::Kind::Finite) {
        const auto& eg = E.as_finite();
        const auto& tg = T.as_finite();
        std::vector<int> imgs;
        for (const auto& w : words) imgs.push_back(tg.evaluate(w));
        GroupHom h = hom_from_generators(eg, tg, imgs);
        if (!h.injective()) fail(ErrorCode::NonInjectiveAttachment, "edge '" + ed.name + "' attachment not injective");
        d.image = h.image;
        std::vector<int> inv_image(tg.order(), -1);
        for (int x = 0; x < eg.order(); ++x) inv_image[d.image[x]] = x;
        d.rep.assign(tg.order(), -1);
        d.pre.assign(tg.order(), -1);
        for (int x = 0; x < tg.order(); ++x) {
          int best = x;
          for (int y : d.image) best = std::min(best, tg.mul(x, y));
          d.rep[x] = best;
          d.pre[x] = inv_image[tg.mul(tg.inv(best), x)];
        }
      } else if (E.kind() == Group::Kind::Free && T.kind() == Group::Kind::Free) {
        const auto& tf = T.as_free();
        for (const auto& w : words) d.gen_images.push_back(tf.parse(w));
        d.aut = std::make_shared<SubgroupAutomaton>(tf.rank(), d.gen_images);
        if (!d.aut->injective())
          fail(ErrorCode::NonInjectiveAttachment, "edge '" + ed.name + "' attachment not injective");
      } else {
        fail(ErrorCode::NonInjectiveAttachment, "edge '" + ed.name + "': no injective map between these groups");
      }
    }
  }
  // tree paths from the base
  gamma_.assign(g_.vertices.size(), PathElem());
  std::vector<bool> seen(g_.vertices.size(), false);
  gamma_[0] = identity(0);
  seen[0] = true;
  std::deque<int> q{0};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int t : tree_) {
      const auto& ed = g_.edges[t];
      for (int dir = 0; dir < 2; ++dir) {
        int a = dir == 0 ? ed.from : ed.to, b = dir == 0 ? ed.to : ed.from;
        if (a != v || seen[b]) continue;
        seen[b] = true;
        gamma_[b] = multiply(gamma_[v], edge_path({t, dir}));
        q.push_back(b);
      }
    }
  }
  for (std::size_t v = 0; v < g_.vertices.size(); ++v)
    if (!seen[v]) fail(ErrorCode::NotSpanningTree, "tree does not span the flattened graph");
  // presentation symbols
  for (std::size_t v = 0; v < g_.vertices.size(); ++v) {
    const auto& syms = g_.vertices[v].group->symbols();
    for (const auto& s : syms) {
      std::string q = g_.qualify(static_cast<int>(v), s);
      PathElem x = vertex_path(static_cast<int>(v), vertex_element(static_cast<int>(v), SymWord::symbol(s)));
      PathElem loop = multiply(multiply(gamma_[v], x), inverse(gamma_[v]));
      sym_index_[q] = static_cast<int>(symbols_.size());
      symbols_.push_back(q);
      sym_path_.push_back(loop);
      sym_path_inv_.push_back(inverse(loop));
    }
  }
  for (std::size_t e = 0; e < g_.edges.size(); ++e) {
    if (in_tree_[e]) continue;
    const auto& ed = g_.edges[e];
    std::string q = GraphOfGroups::stable_letter(ed.name);
    PathElem loop = multiply(multiply(gamma_[ed.from], edge_path({static_cast<int>(e), 0})), inverse(gamma_[ed.to]));
    sym_index_[q] = static_cast<int>(symbols_.size());
    symbols_.push_back(q);
    sym_path_.push_back(loop);
    sym_path_inv_.push_back(inverse(loop));
  }
}

Elem PathGroup::id(int v) const {
  return vertex_finite(v) ? Elem{0, {}} : Elem{-1, {}};
}

Elem PathGroup::mul(int v, const Elem& a, const Elem& b) const {
  if (vertex_finite(v)) return Elem{g_.vertices[v].group->as_finite().mul(a.f, b.f), {}};
  return Elem{-1, a.w * b.w};
}

Elem PathGroup::inv(int v, const Elem& a) const {
  if (vertex_finite(v)) return Elem{g_.vertices[v].group->as_finite().inv(a.f), {}};
  return Elem{-1, a.w.inverse()};
}

Elem PathGroup::vertex_element(int v, const SymWord& local) const {
  const Group& G = *g_.vertices[v].group;
  if (G.kind() == Group::Kind::Finite) return Elem{G.as_finite().evaluate(local), {}};
  return Elem{-1, G.as_free().parse(local)};
}

SymWord PathGroup::local_word(int v, const Elem& x) const {
  const Group& G = *g_.vertices[v].group;
  if (G.kind() == Group::Kind::Finite) return G.as_finite().word_of(x.f);
  return G.as_free().to_sym(x.w);
}

long PathGroup::elem_order(int v, const Elem& x) const {
  if (vertex_finite(v)) return g_.vertices[v].group->as_finite().element_order(x.f);
  return x.w.empty() ? 1 : 0;
}

Elem PathGroup::edge_id(int e) const { return edge_finite(e) ? Elem{0, {}} : Elem{-1, {}}; }

Elem PathGroup::edge_mul(int e, const Elem& a, const Elem& b) const {
  if (edge_finite(e)) return Elem{g_.edges[e].group->as_finite().mul(a.f, b.f), {}};
  return Elem{-1, a.w * b.w};
}

Elem PathGroup::edge_inv(int e, const Elem& a) const {
  if (edge_finite(e)) return Elem{g_.edges[e].group->as_finite().inv(a.f), {}};
  return Elem{-1, a.w.inverse()};
}

Elem PathGroup::edge_element(int e, const SymWord& local) const {
  const Group& E = *g_.edges[e].group;
  if (E.kind() == Group::Kind::Finite) return Elem{E.as_finite().evaluate(local), {}};
  return Elem{-1, E.as_free().parse(local)};
}

SymWord PathGroup::edge_word(int e, const Elem& h) const {
  const Group& E = *g_.edges[e].group;
  if (E.kind() == Group::Kind::Finite) return E.as_finite().word_of(h.f);
  return E.as_free().to_sym(h.w);
}

Elem PathGroup::edge_map(int e, int side, const Elem& h) const {
  const EndData& d = end(e, side);
  int v = g_.edges[e].end(side);
  if (g_.edges[e].group->is_trivial()) return id(v);
  if (!d.image.empty()) return Elem{d.image[h.f], {}};
  Word out;
  for (int l : h.w.letters()) out *= l > 0 ? d.gen_images[l - 1] : d.gen_images[-l - 1].inverse();
  return Elem{-1, out};
}

Elem PathGroup::decompose(int e, int side, const Elem& x, Elem* h) const {
  const EndData& d = end(e, side);
  if (g_.edges[e].group->is_trivial()) {
    if (h) *h = edge_id(e);
    return x;
  }
  if (!d.rep.empty()) {
    if (h) *h = Elem{d.pre[x.f], {}};
    return Elem{d.rep[x.f], {}};
  }
  Word r = d.aut->left_coset_rep(x.w);
  if (h) {
    auto pre = d.aut->preimage(r.inverse() * x.w);
    if (!pre) fail(ErrorCode::InvalidArgument, "coset decomposition failed");
    *h = Elem{-1, *pre};
  }
  return Elem{-1, r};
}

bool PathGroup::in_image(int e, int side, const Elem& x, Elem* h) const { return is_id(decompose(e, side, x, h)); }

std::vector<Elem> PathGroup::transversal(int e, int side, std::size_t max_len, bool* truncated) const {
  const EndData& d = end(e, side);
  std::vector<Elem> out;
  if (truncated) *truncated = false;
  if (!d.rep.empty()) {
    std::set<int> reps(d.rep.begin(), d.rep.end());
    for (int r : reps) out.push_back(Elem{r, {}});
    return out;
  }
  int v = g_.edges[e].end(side);
  if (d.aut) {
    for (auto& w : d.aut->left_transversal(max_len)) out.push_back(Elem{-1, std::move(w)});
    if (truncated) *truncated = !d.aut->finite_index();
    return out;
  }
  // trivial edge group into a free vertex group: every reduced word
  int rank = g_.vertices[v].group->as_free().rank();
  std::vector<Word> words{Word()};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() >= max_len) continue;
    for (int l = 1; l <= rank; ++l)
      for (int s : {1, -1}) {
        Word w = words[i] * Word({s * l});
        if (w.size() == words[i].size() + 1) words.push_back(w);
      }
  }
  for (auto& w : words) out.push_back(Elem{-1, std::move(w)});
  if (truncated) *truncated = rank > 0;
  return out;
}

long PathGroup::index(int e, int side) const {
  const EndData& d = end(e, side);
  if (!d.rep.empty()) {
    std::set<int> reps(d.rep.begin(), d.rep.end());
    return static_cast<long>(reps.size());
  }
  if (d.aut) return d.aut->finite_index() ? d.aut->states() : 0;
  return g_.vertices[g_.edges[e].end(side)].group->as_free().rank() == 0 ? 1 : 0;
}

std::vector<Elem> PathGroup::edge_elements(int e) const {
  if (!edge_finite(e)) fail(ErrorCode::NotFinite, "edge group is infinite");
  std::vector<Elem> out;
  for (int x = 0; x < g_.edges[e].group->as_finite().order(); ++x) out.push_back(Elem{x, {}});
  return out;
}

std::vector<Elem> PathGroup::edge_generators(int e) const {
  std::vector<Elem> out;
  const Group& E = *g_.edges[e].group;
  if (E.kind() == Group::Kind::Finite) {
    for (int x : E.as_finite().generators()) out.push_back(Elem{x, {}});
  } else {
    for (int i = 0; i < E.as_free().rank(); ++i) out.push_back(Elem{-1, Word::generator(i)});
  }
  return out;
}

PathElem PathGroup::identity(int v) const {
  PathElem p;
  p.start = p.finish = v;
  p.tail = id(v);
  return p;
}

PathElem PathGroup::vertex_path(int v, const Elem& x) const {
  PathElem p = identity(v);
  p.tail = x;
  return p;
}

PathElem PathGroup::edge_path(OEdge e) const {
  const auto& ed = g_.edges[e.edge];
  int a = ed.end(e.src_side()), b = ed.end(e.dst_side());
  PathElem p;
  p.start = a;
  p.finish = b;
  p.syl.push_back({id(a), e});
  p.tail = id(b);
  return p;
}

int PathGroup::vertex_after(int start, const std::vector<Syllable>& syl) const {
  int v = start;
  for (const auto& s : syl) {
    const auto& ed = g_.edges[s.e.edge];
    if (ed.end(s.e.src_side()) != v) fail(ErrorCode::InvalidArgument, "path syllables are not composable");
    v = ed.end(s.e.dst_side());
  }
  return v;
}

PathElem PathGroup::normalize(int start, const std::vector<Syllable>& syl, const Elem& tail) const {
  PathElem out;
  out.start = start;
  int cur_v = start;
  Elem cur = id(start);
  for (const auto& s : syl) {
    cur = mul(cur_v, cur, s.x);
    const auto& ed = g_.edges[s.e.edge];
    if (ed.end(s.e.src_side()) != cur_v) fail(ErrorCode::InvalidArgument, "path syllables are not composable");
    Elem h;
    Elem r = decompose(s.e.edge, s.e.src_side(), cur, &h);
    if (is_id(r) && !out.syl.empty() && out.syl.back().e == s.e.reversed()) {
      Syllable top = out.syl.back();
      out.syl.pop_back();
      cur_v = ed.end(s.e.dst_side());
      cur = mul(cur_v, top.x, edge_map(s.e.edge, s.e.dst_side(), h));
    } else {
      out.syl.push_back({r, s.e});
      cur_v = ed.end(s.e.dst_side());
      cur = edge_map(s.e.edge, s.e.dst_side(), h);
    }
  }
  out.tail = mul(cur_v, cur, tail);
  out.finish = cur_v;
  return out;
}

PathElem PathGroup::multiply(const PathElem& a, const PathElem& b) const {
  if (a.finish != b.start) fail(ErrorCode::InvalidArgument, "paths are not composable");
  std::vector<Syllable> syl = a.syl;
  Elem tail;
  if (b.syl.empty()) {
    tail = mul(a.finish, a.tail, b.tail);
  } else {
    syl.push_back({mul(a.finish, a.tail, b.syl[0].x), b.syl[0].e});
    syl.insert(syl.end(), b.syl.begin() + 1, b.syl.end());
    tail = b.tail;
  }
  return normalize(a.start, syl, tail);
}

PathElem PathGroup::inverse(const PathElem& a) const {
  std::vector<Syllable> syl;
  // vertices along the path
  std::vector<int> vs{a.start};
  for (const auto& s : a.syl) vs.push_back(g_.edges[s.e.edge].end(s.e.dst_side()));
  const std::size_t n = a.syl.size();
  Elem first = inv(a.finish, a.tail);
  for (std::size_t i = n; i-- > 0;) {
    syl.push_back({first, a.syl[i].e.reversed()});
    first = inv(vs[i], a.syl[i].x);
  }
  return normalize(a.finish, syl, first);
}

PathElem PathGroup::power(const PathElem& a, long k) const {
  PathElem base = k < 0 ? inverse(a) : a;
  PathElem r = identity(a.start);
  for (long i = 0; i < std::labs(k); ++i) r = multiply(r, base);
  return r;
}

PathElem PathGroup::gamma(int v) const { return gamma_[v]; }

PathElem PathGroup::from_presentation(const SymWord& w) const {
  PathElem r = identity(base());
  for (const auto& l : w.letters()) {
    auto it = sym_index_.find(l.sym);
    if (it == sym_index_.end()) fail(ErrorCode::UnknownSymbol, "unknown presentation symbol '" + l.sym + "'");
    r = multiply(r, l.exp > 0 ? sym_path_[it->second] : sym_path_inv_[it->second]);
  }
  return r;
}

SymWord PathGroup::to_presentation(const PathElem& loop) const {
  SymWord out;
  int v = loop.start;
  for (const auto& s : loop.syl) {
    out *= g_.qualify(v, local_word(v, s.x));
    if (!in_tree_[s.e.edge])
      out *= SymWord::symbol(GraphOfGroups::stable_letter(g_.edges[s.e.edge].name), s.e.dir == 0 ? 1 : -1);
    v = g_.edges[s.e.edge].end(s.e.dst_side());
  }
  out *= g_.qualify(v, local_word(v, loop.tail));
  return out;
}

std::shared_ptr<const PathGroup> composite_engine(const Group& g) {
  if (!g.engine_) g.engine_ = std::make_shared<PathGroup>(flatten(g.as_composite()));
  return g.engine_;
}

}  // namespace propp
