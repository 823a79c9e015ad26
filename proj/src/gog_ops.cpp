#include "propp/gog_ops.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "propp/error.hpp"
#include "propp/path_group.hpp"
#include "propp/presentation.hpp"

namespace propp {

namespace {

std::vector<PathElem> composite_images(const PathGroup& pg, const std::vector<SymWord>& words) {
  std::vector<PathElem> out;
  for (const auto& w : words) out.push_back(pg.from_presentation(w));
  return out;
}

// Product of images along a word in the edge group's generator names.
PathElem evaluate_in(const PathGroup& pg, const std::vector<std::string>& names, const std::vector<PathElem>& imgs,
                     const SymWord& w) {
  PathElem r = pg.identity(pg.base());
  for (const auto& l : w.letters()) {
    auto it = std::find(names.begin(), names.end(), l.sym);
    if (it == names.end()) fail(ErrorCode::UnknownSymbol, "unknown edge generator '" + l.sym + "'");
    const PathElem& x = imgs[it - names.begin()];
    r = pg.multiply(r, l.exp > 0 ? x : pg.inverse(x));
  }
  return r;
}

}  // namespace

bool end_injective(const GraphOfGroups& g, int e, int side, std::string* why) {
  const Edge& ed = g.edges[e];
  const Group& E = *ed.group;
  const Group& T = *g.vertices[ed.end(side)].group;
  const auto& words = ed.attach(side);
  auto no = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (E.is_trivial()) return true;
  if (T.kind() == Group::Kind::Composite) {
    if (E.kind() == Group::Kind::Free) {
      if (T.is_finite()) return no("free group into a finite group");
      return true;  // not decided; accepted
    }
    auto pg = composite_engine(T);
    const auto& eg = E.as_finite();
    auto imgs = composite_images(*pg, words);
    for (const auto& r : eg.relators())
      if (evaluate_in(*pg, eg.names(), imgs, r) != pg->identity(pg->base())) return no("not a homomorphism");
    std::set<PathElem> seen;
    for (int x = 0; x < eg.order(); ++x)
      if (!seen.insert(evaluate_in(*pg, eg.names(), imgs, eg.word_of(x))).second) return no("kernel is nontrivial");
    return true;
  }
  if (E.kind() == Group::Kind::Finite && T.kind() == Group::Kind::Finite) {
    const auto& tg = T.as_finite();
    std::vector<int> imgs;
    for (const auto& w : words) imgs.push_back(tg.evaluate(w));
    try {
      if (!hom_from_generators(E.as_finite(), tg, imgs).injective()) return no("kernel is nontrivial");
    } catch (const Error& err) {
      if (err.code() == ErrorCode::NotHomomorphism) return no("not a homomorphism");
      throw;
    }
    return true;
  }
  if (E.kind() == Group::Kind::Free && T.kind() == Group::Kind::Free) {
    std::vector<Word> imgs;
    for (const auto& w : words) imgs.push_back(T.as_free().parse(w));
    if (!SubgroupAutomaton(T.as_free().rank(), imgs).injective()) return no("images are not a free basis");
    return true;
  }
  if (E.kind() == Group::Kind::Finite) return no("nontrivial finite group into a free group");
  return no("free group into a finite group");
}

bool end_bijective(const GraphOfGroups& g, int e, int side) {
  const Edge& ed = g.edges[e];
  const Group& E = *ed.group;
  const Group& T = *g.vertices[ed.end(side)].group;
  if (E.is_trivial()) return T.is_trivial();
  if (T.kind() == Group::Kind::Composite) {
    if (E.kind() != Group::Kind::Finite || !T.is_finite()) return false;
    return *T.order() == E.as_finite().order() && end_injective(g, e, side);
  }
  if (E.kind() == Group::Kind::Finite && T.kind() == Group::Kind::Finite)
    return E.as_finite().order() == T.as_finite().order();
  if (E.kind() == Group::Kind::Free && T.kind() == Group::Kind::Free) {
    std::vector<Word> imgs;
    for (const auto& w : ed.attach(side)) imgs.push_back(T.as_free().parse(w));
    SubgroupAutomaton a(T.as_free().rank(), imgs);
    return a.injective() && a.is_full();
  }
  return false;
}

std::map<std::string, SymWord> end_inverse(const GraphOfGroups& g, int e, int side) {
  const Edge& ed = g.edges[e];
  const Group& E = *ed.group;
  const Group& T = *g.vertices[ed.end(side)].group;
  std::map<std::string, SymWord> out;
  const auto& words = ed.attach(side);
  if (T.kind() == Group::Kind::Composite) {
    auto pg = composite_engine(T);
    if (E.is_trivial()) {
      for (const auto& s : T.symbols()) out[s] = SymWord();
      return out;
    }
    const auto& eg = E.as_finite();
    auto imgs = composite_images(*pg, words);
    std::map<PathElem, int> lookup;
    for (int x = 0; x < eg.order(); ++x) lookup[evaluate_in(*pg, eg.names(), imgs, eg.word_of(x))] = x;
    for (const auto& s : T.symbols()) {
      auto it = lookup.find(pg->from_presentation(SymWord::symbol(s)));
      if (it == lookup.end()) fail(ErrorCode::NotFictitious, "attachment is not onto");
      out[s] = eg.word_of(it->second);
    }
    return out;
  }
  if (T.kind() == Group::Kind::Finite) {
    const auto& tg = T.as_finite();
    if (E.kind() == Group::Kind::Free) {
      for (const auto& s : T.symbols()) out[s] = SymWord();
      return out;
    }
    const auto& eg = E.as_finite();
    std::vector<int> imgs;
    for (const auto& w : words) imgs.push_back(tg.evaluate(w));
    GroupHom h = hom_from_generators(eg, tg, imgs);
    for (const auto& s : T.symbols()) {
      int x = tg.evaluate(SymWord::symbol(s));
      auto it = std::find(h.image.begin(), h.image.end(), x);
      if (it == h.image.end()) fail(ErrorCode::NotFictitious, "attachment is not onto");
      out[s] = eg.word_of(static_cast<int>(it - h.image.begin()));
    }
    return out;
  }
  const auto& tf = T.as_free();
  std::vector<Word> imgs;
  for (const auto& w : words) imgs.push_back(tf.parse(w));
  SubgroupAutomaton a(tf.rank(), imgs);
  for (int i = 0; i < tf.rank(); ++i) {
    auto pre = a.preimage(Word::generator(i));
    if (!pre) fail(ErrorCode::NotFictitious, "attachment is not onto");
    out[tf.names()[i]] = to_symword(*pre, E.symbols());
  }
  return out;
}

bool is_fictitious(const GraphOfGroups& g, int e, int* iso_side) {
  const Edge& ed = g.edges[e];
  if (ed.is_loop()) return false;
  for (int side = 0; side < 2; ++side)
    if (end_bijective(g, e, side)) {
      if (iso_side) *iso_side = side;
      return true;
    }
  return false;
}

GraphOfGroups reduction_move(const GraphOfGroups& g, const std::string& edge, ReductionStep* step) {
  const int e = g.edge_index(edge);
  int side = 0;
  if (!is_fictitious(g, e, &side)) fail(ErrorCode::NotFictitious, "edge '" + edge + "' is not fictitious");
  const Edge& ed = g.edges[e];
  const int u = ed.end(side), w = ed.end(1 - side);
  auto inv = end_inverse(g, e, side);
  std::map<std::string, SymWord> egen_to_w;
  const auto& esyms = ed.group->symbols();
  for (std::size_t k = 0; k < esyms.size(); ++k) egen_to_w[esyms[k]] = ed.attach(1 - side)[k];
  std::map<std::string, SymWord> transport;
  for (const auto& s : g.vertices[u].group->symbols()) transport[s] = substitute(inv.at(s), egen_to_w);

  GraphOfGroups out;
  out.prime = g.prime;
  out.aliases = g.aliases;
  std::vector<int> newidx(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (static_cast<int>(v) == u) continue;
    newidx[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(g.vertices[v]);
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (static_cast<int>(i) == e) continue;
    Edge ne = g.edges[i];
    for (int s = 0; s < 2; ++s) {
      int& endv = s == 0 ? ne.from : ne.to;
      if (endv == u) {
        endv = w;
        for (auto& word : ne.attach(s)) word = substitute(word, transport);
      }
      endv = newidx[endv];
    }
    out.edges.push_back(std::move(ne));
  }
  const int nw = newidx[w];
  for (const auto& s : g.vertices[u].group->symbols())
    out.aliases[g.qualify(u, s)] = out.qualify(nw, transport.at(s));
  if (step) *step = {edge, g.vertices[u].name, g.vertices[w].name};
  return out;
}

std::pair<GraphOfGroups, ReductionTrace> reduce(const GraphOfGroups& g) {
  GraphOfGroups cur = g;
  ReductionTrace trace;
  while (true) {
    int found = -1;
    for (std::size_t e = 0; e < cur.edges.size() && found < 0; ++e)
      if (is_fictitious(cur, static_cast<int>(e))) found = static_cast<int>(e);
    if (found < 0) break;
    ReductionStep st;
    cur = reduction_move(cur, cur.edges[found].name, &st);
    trace.steps.push_back(st);
  }
  return {cur, trace};
}

bool is_reduced(const GraphOfGroups& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (is_fictitious(g, static_cast<int>(e))) return false;
  return true;
}

bool composite_is_finite(const GraphOfGroups& g, long* order) {
  auto r = reduce(g).first;
  if (r.vertices.size() != 1 || !r.edges.empty()) return false;
  const Group& G = *r.vertices[0].group;
  if (!G.is_finite()) return false;
  if (order) *order = *G.order();
  return true;
}

GraphOfGroups expansion_move(const GraphOfGroups& g, const std::string& v, const std::string& new_vertex,
                             const std::string& edge, const std::vector<SymWord>& sub_gens,
                             const std::vector<std::pair<std::string, int>>& moved) {
  const int vi = g.vertex_index(v);
  if (g.find_vertex(new_vertex) >= 0) fail(ErrorCode::BadExpansion, "vertex '" + new_vertex + "' already exists");
  if (g.find_edge(edge) >= 0) fail(ErrorCode::BadExpansion, "edge '" + edge + "' already exists");
  const Group& G = *g.vertices[vi].group;
  GraphOfGroups out = g;
  GroupPtr K;
  std::vector<SymWord> into_v;
  std::function<SymWord(const SymWord&)> to_k;
  if (G.kind() == Group::Kind::Finite) {
    const auto& fg = G.as_finite();
    std::vector<int> gens;
    for (const auto& w : sub_gens) gens.push_back(fg.evaluate(w));
    Subgroup sub = closure(fg, gens);
    auto sg = subgroup_as_group(fg, sub, "k");
    for (int x : sg.group.generators()) into_v.push_back(fg.word_of(sg.embedding[x]));
    auto emb = sg.embedding;
    FiniteGroup kg = sg.group;
    to_k = [fg, emb, kg](const SymWord& w) {
      int x = fg.evaluate(w);
      auto it = std::find(emb.begin(), emb.end(), x);
      if (it == emb.end()) fail(ErrorCode::BadExpansion, "moved edge image leaves the new vertex group");
      return kg.word_of(static_cast<int>(it - emb.begin()));
    };
    K = Group::finite(sg.group, new_vertex);
  } else if (G.kind() == Group::Kind::Free) {
    const auto& fr = G.as_free();
    std::vector<Word> gens;
    for (const auto& w : sub_gens) gens.push_back(fr.parse(w));
    auto aut = std::make_shared<SubgroupAutomaton>(fr.rank(), gens);
    if (!aut->injective()) fail(ErrorCode::BadExpansion, "subgroup generators are not a free basis");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("k" + std::to_string(i));
    FreeGroup kf(g.prime, names);
    into_v = sub_gens;
    to_k = [fr, aut, kf](const SymWord& w) {
      auto pre = aut->preimage(fr.parse(w));
      if (!pre) fail(ErrorCode::BadExpansion, "moved edge image leaves the new vertex group");
      return kf.to_sym(*pre);
    };
    K = Group::free(kf, new_vertex);
  } else {
    fail(ErrorCode::BadExpansion, "expansion at a composite vertex is not supported");
  }
  const int xi = static_cast<int>(out.vertices.size());
  out.vertices.push_back({new_vertex, K});
  for (const auto& [ename, side] : moved) {
    int ei = out.edge_index(ename);
    Edge& ed = out.edges[ei];
    if (side < 0 || side > 1 || ed.end(side) != vi)
      fail(ErrorCode::BadExpansion, "edge end '" + ename + "' is not at vertex '" + v + "'");
    for (auto& w : ed.attach(side)) w = to_k(w);
    (side == 0 ? ed.from : ed.to) = xi;
  }
  Edge ne;
  ne.name = edge;
  ne.from = xi;
  ne.to = vi;
  ne.group = K;
  for (const auto& s : K->symbols()) ne.attach_from.push_back(SymWord::symbol(s));
  ne.attach_to = into_v;
  out.edges.push_back(std::move(ne));
  return out;
}

GraphOfGroups collapse_subgraph(const GraphOfGroups& g, const std::vector<std::string>& vertices,
                                const std::vector<std::string>& edges, const std::string& new_name) {
  if (vertices.empty()) fail(ErrorCode::NotConnected, "empty subgraph");
  std::vector<bool> in_d(g.vertices.size(), false);
  std::vector<int> dv;
  for (const auto& n : vertices) {
    int i = g.vertex_index(n);
    if (!in_d[i]) dv.push_back(i);
    in_d[i] = true;
  }
  std::sort(dv.begin(), dv.end());
  std::vector<bool> e_in(g.edges.size(), false);
  if (edges.empty()) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) e_in[e] = in_d[g.edges[e].from] && in_d[g.edges[e].to];
  } else {
    for (const auto& n : edges) {
      int e = g.edge_index(n);
      if (!in_d[g.edges[e].from] || !in_d[g.edges[e].to])
        fail(ErrorCode::NotConnected, "edge '" + n + "' leaves the subgraph");
      e_in[e] = true;
    }
  }
  if (dv.size() == 1 && std::none_of(e_in.begin(), e_in.end(), [](bool b) { return b; })) return g;
  // connectivity inside the subgraph
  {
    std::vector<bool> seen(g.vertices.size(), false);
    std::deque<int> q{dv[0]};
    seen[dv[0]] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!e_in[e]) continue;
        int w = g.edges[e].from == v ? g.edges[e].to : (g.edges[e].to == v ? g.edges[e].from : -1);
        if (w >= 0 && !seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
      }
    }
    for (int v : dv)
      if (!seen[v]) fail(ErrorCode::NotConnected, "subgraph is not connected");
  }
  auto inner = std::make_shared<GraphOfGroups>();
  inner->prime = g.prime;
  std::vector<int> inner_idx(g.vertices.size(), -1);
  for (int v : dv) {
    inner_idx[v] = static_cast<int>(inner->vertices.size());
    inner->vertices.push_back(g.vertices[v]);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!e_in[e]) continue;
    Edge ne = g.edges[e];
    ne.from = inner_idx[ne.from];
    ne.to = inner_idx[ne.to];
    inner->edges.push_back(std::move(ne));
  }
  std::string name = new_name;
  if (name.empty()) {
    for (std::size_t i = 0; i < dv.size(); ++i) name += (i ? "+" : "") + g.vertices[dv[i]].name;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (!in_d[v] && g.vertices[v].name == name) fail(ErrorCode::Schema, "vertex name '" + name + "' already used");
  GraphOfGroups out;
  out.prime = g.prime;
  out.aliases = g.aliases;
  std::vector<int> idx(g.vertices.size(), -1);
  int comp = -1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (in_d[v]) {
      if (comp < 0) {
        comp = static_cast<int>(out.vertices.size());
        out.vertices.push_back({name, Group::composite(inner, name)});
      }
      idx[v] = comp;
    } else {
      idx[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(g.vertices[v]);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (e_in[e]) continue;
    Edge ne = g.edges[e];
    for (int s = 0; s < 2; ++s) {
      int v = ne.end(s);
      if (in_d[v])
        for (auto& w : ne.attach(s)) w = g.qualify(v, w);
      (s == 0 ? ne.from : ne.to) = idx[v];
    }
    out.edges.push_back(std::move(ne));
  }
  return out;
}

namespace {

// Images at v as presentation words of the inner graph.
struct RefineFrame {
  bool composite = false;
  std::string survivor;  // inner vertex carrying G_v when v is simple
};

RefineFrame refine_frame(const GraphOfGroups& g, int v, const GraphOfGroups& inner) {
  const Group& G = *g.vertices[v].group;
  RefineFrame f;
  if (G.kind() == Group::Kind::Composite) {
    GraphOfGroups a = G.as_composite(), b = inner;
    a.aliases.clear();
    b.aliases.clear();
    if (!a.same_as(b)) fail(ErrorCode::InvalidArgument, "inner graph differs from the composite vertex group");
    f.composite = true;
    return f;
  }
  auto r = reduce(inner).first;
  if (r.vertices.size() != 1 || !r.edges.empty() || !r.vertices[0].group->same_as(G))
    fail(ErrorCode::InvalidArgument, "inner graph does not reduce to the vertex group");
  f.survivor = r.vertices[0].name;
  return f;
}

SymWord to_inner(const RefineFrame& f, const SymWord& local) {
  return f.composite ? local : local.qualified(f.survivor + ".");
}

}  // namespace

AttachMap default_attach_map(const GraphOfGroups& g, const std::string& v, const GraphOfGroups& inner) {
  const int vi = g.vertex_index(v);
  RefineFrame f = refine_frame(g, vi, inner);
  AttachMap m;
  for (auto [e, side] : g.incident(vi)) {
    std::set<std::string> syms;
    for (const auto& w : g.edges[e].attach(side)) {
      SymWord x = to_inner(f, w);
      for (const auto& l : x.letters()) syms.insert(l.sym);
    }
    for (const auto& u : inner.vertices) {
      if (u.group->kind() == Group::Kind::Composite) continue;
      bool all = true;
      for (const auto& s : syms) {
        const std::string pre = u.name + ".";
        all = all && s.compare(0, pre.size(), pre) == 0 &&
              std::count(u.group->symbols().begin(), u.group->symbols().end(), s.substr(pre.size()));
      }
      if (all) {
        m[{g.edges[e].name, side}] = {u.name, SymWord()};
        break;
      }
    }
  }
  return m;
}

GraphOfGroups refine_at_vertex(const GraphOfGroups& g, const std::string& v, const GraphOfGroups& inner,
                               const AttachMap& attach) {
  const int vi = g.vertex_index(v);
  validate(inner);
  RefineFrame f = refine_frame(g, vi, inner);
  PathGroup pg(flatten(inner));
  GraphOfGroups out;
  out.prime = g.prime;
  out.aliases = g.aliases;
  for (const auto& [k, val] : inner.aliases) out.aliases[k] = val;
  std::vector<int> idx(g.vertices.size(), -1);
  std::vector<int> inner_idx(inner.vertices.size(), -1);
  for (std::size_t w = 0; w < g.vertices.size(); ++w) {
    if (static_cast<int>(w) == vi) {
      for (std::size_t u = 0; u < inner.vertices.size(); ++u) {
        inner_idx[u] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(inner.vertices[u]);
      }
    } else {
      idx[w] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(g.vertices[w]);
    }
  }
  std::set<std::string> names;
  for (const auto& x : out.vertices)
    if (!names.insert(x.name).second) fail(ErrorCode::Schema, "vertex name '" + x.name + "' clashes after refinement");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Edge ne = g.edges[e];
    for (int s = 0; s < 2; ++s) {
      int w = ne.end(s);
      if (w != vi) {
        (s == 0 ? ne.from : ne.to) = idx[w];
        continue;
      }
      auto it = attach.find({ne.name, s});
      if (it == attach.end())
        fail(ErrorCode::InvalidArgument, "no attachment given for edge '" + ne.name + "' end " + std::to_string(s));
      const int u = inner.vertex_index(it->second.inner_vertex);
      if (inner.vertices[u].group->kind() == Group::Kind::Composite)
        fail(ErrorCode::UnsupportedCosetTest, "attachment into a composite inner vertex");
      const int fu = pg.graph().vertex_index(inner.vertices[u].name);
      const PathElem gu = pg.gamma(fu), gu_inv = pg.inverse(gu);
      for (auto& word : ne.attach(s)) {
        SymWord x = to_inner(f, word).conjugated_by(it->second.conjugator);
        PathElem q = pg.multiply(pg.multiply(gu_inv, pg.from_presentation(x)), gu);
        if (!q.syl.empty())
          fail(ErrorCode::EdgeGroupNotElliptic,
               "image of edge '" + ne.name + "' does not lie in inner vertex '" + it->second.inner_vertex + "'");
        word = pg.local_word(fu, q.tail);
      }
      (s == 0 ? ne.from : ne.to) = inner_idx[u];
    }
    out.edges.push_back(std::move(ne));
  }
  for (const auto& ie : inner.edges) {
    Edge ne = ie;
    ne.from = inner_idx[ne.from];
    ne.to = inner_idx[ne.to];
    out.edges.push_back(std::move(ne));
  }
  names.clear();
  for (const auto& x : out.edges)
    if (!names.insert(x.name).second) fail(ErrorCode::Schema, "edge name '" + x.name + "' clashes after refinement");
  return out;
}

int rank_mod_p(const GraphOfGroups& g) {
  Presentation p = fundamental_presentation(g);
  return static_cast<int>(abelianization_mod_p(p, g.prime).dim());
}

GrushkoResult grushko_components(const GraphOfGroups& g) {
  const std::size_t n = g.vertices.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int trivial_edges = 0;
  for (const auto& e : g.edges) {
    if (e.group->is_trivial()) {
      ++trivial_edges;
      continue;
    }
    parent[find(e.from)] = find(e.to);
  }
  std::map<int, std::vector<int>> comps;
  for (std::size_t v = 0; v < n; ++v) comps[find(static_cast<int>(v))].push_back(static_cast<int>(v));
  GrushkoResult r;
  r.free_rank = trivial_edges - (static_cast<int>(comps.size()) - 1);
  // order parts by their first vertex
  std::vector<std::vector<int>> ordered;
  for (auto& [root, vs] : comps) ordered.push_back(vs);
  std::sort(ordered.begin(), ordered.end());
  for (const auto& vs : ordered) {
    if (vs.size() == 1 && g.vertices[vs[0]].group->is_trivial()) continue;
    GraphOfGroups part;
    part.prime = g.prime;
    std::vector<int> idx(n, -1);
    for (int v : vs) {
      idx[v] = static_cast<int>(part.vertices.size());
      part.vertices.push_back(g.vertices[v]);
    }
    for (const auto& e : g.edges) {
      if (e.group->is_trivial() || idx[e.from] < 0) continue;
      Edge ne = e;
      ne.from = idx[e.from];
      ne.to = idx[e.to];
      part.edges.push_back(std::move(ne));
    }
    r.parts.push_back(std::move(part));
  }
  return r;
}

std::vector<IncidentEdgeGroup> incident_edge_groups(const GraphOfGroups& g, const std::string& v) {
  const int vi = g.vertex_index(v);
  std::vector<IncidentEdgeGroup> out;
  for (auto [e, side] : g.incident(vi)) {
    IncidentEdgeGroup x;
    x.edge = g.edges[e].name;
    x.side = side;
    x.images = g.edges[e].attach(side);
    auto o = g.edges[e].group->order();
    x.order = o ? *o : 0;
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

// Compare the image tuples of two edge ends into the same group.
bool same_images(const Group& T, const std::vector<SymWord>& a, const std::vector<SymWord>& b) {
  if (a.size() != b.size()) return false;
  switch (T.kind()) {
    case Group::Kind::Finite: {
      const auto& fg = T.as_finite();
      std::vector<int> xa, xb;
      for (const auto& w : a) xa.push_back(fg.evaluate(w));
      for (const auto& w : b) xb.push_back(fg.evaluate(w));
      if (xa == xb) return true;
      for (int c = 0; c < fg.order(); ++c) {
        bool ok = true;
        for (std::size_t k = 0; k < xa.size() && ok; ++k) ok = fg.mul(fg.mul(c, xa[k]), fg.inv(c)) == xb[k];
        if (ok) return true;
      }
      return false;
    }
    case Group::Kind::Free: {
      const auto& fr = T.as_free();
      for (std::size_t k = 0; k < a.size(); ++k)
        if (fr.parse(a[k]) != fr.parse(b[k])) return false;
      return true;
    }
    default: {
      auto pg = composite_engine(T);
      for (std::size_t k = 0; k < a.size(); ++k)
        if (pg->from_presentation(a[k]) != pg->from_presentation(b[k])) return false;
      return true;
    }
  }
}

bool edges_match(const GraphOfGroups& a, const Edge& ea, const GraphOfGroups& b, const Edge& eb,
                 const std::vector<int>& phi, bool reversed) {
  if (!ea.group->same_as(*eb.group)) return false;
  for (int s = 0; s < 2; ++s) {
    int sb = reversed ? 1 - s : s;
    if (phi[ea.end(s)] != eb.end(sb)) return false;
    if (!same_images(*a.vertices[ea.end(s)].group, ea.attach(s), eb.attach(sb))) return false;
  }
  (void)b;
  return true;
}

}  // namespace

bool isomorphic(const GraphOfGroups& a, const GraphOfGroups& b) {
  if (a.prime != b.prime || a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  const std::size_t n = a.vertices.size();
  auto degree = [](const GraphOfGroups& g, int v) { return g.incident(v).size(); };
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) {
      std::vector<bool> taken(b.edges.size(), false);
      for (const auto& ea : a.edges) {
        bool found = false;
        for (std::size_t j = 0; j < b.edges.size() && !found; ++j) {
          if (taken[j]) continue;
          if (edges_match(a, ea, b, b.edges[j], phi, false) || edges_match(a, ea, b, b.edges[j], phi, true)) {
            taken[j] = true;
            found = true;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (degree(a, static_cast<int>(i)) != degree(b, static_cast<int>(j))) continue;
      if (!a.vertices[i].group->same_as(*b.vertices[j].group)) continue;
      phi[i] = static_cast<int>(j);
      used[j] = true;
      if (assign(i + 1)) return true;
      used[j] = false;
      phi[i] = -1;
    }
    return false;
  };
  return assign(0);
}

std::string describe_group(const Group& g) {
  std::ostringstream os;
  switch (g.kind()) {
    case Group::Kind::Finite: os << "finite of order " << g.as_finite().order(); break;
    case Group::Kind::Free: os << "free of rank " << g.as_free().rank(); break;
    default: {
      const auto& c = g.as_composite();
      os << "graph of groups (" << c.vertices.size() << " vertices, " << c.edges.size() << " edges)";
      if (auto o = g.order()) os << " of order " << *o;
    }
  }
  return os.str();
}

}  // namespace propp
