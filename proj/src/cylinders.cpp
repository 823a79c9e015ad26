#include "propp/cylinders.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "propp/error.hpp"
#include "propp/finite_group.hpp"
#include "propp/free_group.hpp"

namespace propp {

const char* relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::Equality:
      return "equality";
    case RelationKind::Commensurability:
      return "commensurability";
    default:
      return "partition";
  }
}

EdgeRelation parse_relation(const std::string& name) {
  if (name == "equality") return EdgeRelation::equality();
  if (name == "commensurability") return EdgeRelation::commensurability();
  fail(ErrorCode::UnsupportedRelation, "unknown relation '" + name + "'");
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// Stabilizer generators of the edge cell k, as loops at the base.
std::vector<PathElem> edge_stabilizer(const TreeBall& ball, int k) {
  const PathGroup& pg = ball.tree->pg();
  const BallEdge& be = ball.edges[k];
  const int from = pg.graph().edges[be.edge].from;
  PathElem g = pg.multiply(be.g, pg.gamma(from));
  std::vector<PathElem> out;
  for (const auto& h : pg.edge_generators(be.edge)) {
    Elem x = pg.edge_map(be.edge, 0, h);
    if (pg.is_id(x)) continue;
    out.push_back(pg.multiply(pg.multiply(g, pg.vertex_path(from, x)), pg.inverse(g)));
  }
  return out;
}

// Relation on the edge cells of a ball, with containment of stabilizers.
class BallRelation {
 public:
  BallRelation(const TreeBall& ball, const EdgeRelation& rel) : ball_(ball), rel_(rel) {
    const auto& g = ball.tree->graph();
    if (rel.kind == RelationKind::UserPartition && rel.classes.size() != g.edges.size())
      fail(ErrorCode::InvalidArgument, "partition must give a class for every edge");
    if (rel.kind == RelationKind::Commensurability)
      for (const auto& e : g.edges)
        if (!e.group->is_finite())
          fail(ErrorCode::UnsupportedRelation, "commensurability is supported for finite edge groups only");
    const std::size_t n = ball.edges.size();
    std::vector<std::vector<PathElem>> stab(n);
    for (std::size_t k = 0; k < n; ++k) stab[k] = edge_stabilizer(ball, static_cast<int>(k));
    const StandardTree& t = *ball.tree;
    sub_.assign(n, std::vector<bool>(n, true));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const auto& f = ball.edges[b];
        bool in = true;
        for (const auto& h : stab[a])
          if (!t.fixes(h, ball.vertices[f.d0].path) || !t.fixes(h, ball.vertices[f.d1].path)) {
            in = false;
            break;
          }
        sub_[a][b] = in;
      }
  }

  /// Stab(a) <= Stab(b).
  bool contained(int a, int b) const { return sub_[a][b]; }

  bool related(int a, int b) const {
    switch (rel_.kind) {
      case RelationKind::Equality:
        return sub_[a][b] && sub_[b][a];
      case RelationKind::Commensurability:
        return true;
      default:
        return rel_.classes[ball_.edges[a].edge] == rel_.classes[ball_.edges[b].edge];
    }
  }

  /// First axiom violation found on the ball, if any.
  std::optional<std::string> violation() const {
    const int n = static_cast<int>(ball_.edges.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && contained(a, b) && !related(a, b))
          return "nesting: Stab(" + ball_.edge_label(a) + ") <= Stab(" + ball_.edge_label(b) +
                 ") but the edges are not equivalent";
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (!related(a, b)) continue;
        auto path = geodesic(ball_, ball_.edges[a].d0, ball_.edges[b].d0);
        for (int c : path.edges)
          if (c != a && c != b && !related(a, c))
            return "geodesic: " + ball_.edge_label(c) + " lies between equivalent " + ball_.edge_label(a) + " and " +
                   ball_.edge_label(b) + " but is not equivalent to them";
      }
    return std::nullopt;
  }

 private:
  const TreeBall& ball_;
  const EdgeRelation& rel_;
  std::vector<std::vector<bool>> sub_;
};

bool equality_certified(const GraphOfGroups& g) {
  if (g.edges.size() <= 1) return true;
  std::optional<long> order;
  for (const auto& e : g.edges) {
    auto o = e.group->order();
    if (!o) return false;
    if (order && *order != *o) return false;
    order = o;
  }
  return true;
}

}  // namespace

Verdict check_admissible(const GraphOfGroups& g, const EdgeRelation& rel, int r) {
  Verdict v;
  if (rel.kind == RelationKind::Equality && equality_certified(g)) {
    v.status = Status::ProvenYes;
    v.witness = "equality: edge stabilizers cannot be properly nested";
    return v;
  }
  if (rel.kind == RelationKind::Commensurability) {
    bool finite = true;
    for (const auto& e : g.edges) finite = finite && e.group->is_finite();
    if (finite) {
      v.status = Status::ProvenYes;
      v.witness = "commensurability of finite edge groups: one class per component";
      return v;
    }
    v.witness = "commensurability of infinite edge groups is not supported";
    return v;
  }
  try {
    TreeBall ball = tree_ball(g, r);
    v.budget_used = static_cast<long>(ball.vertices.size() + ball.edges.size());
    BallRelation br(ball, rel);
    if (auto bad = br.violation()) {
      v.status = Status::ProvenNo;
      v.witness = *bad;
      return v;
    }
    v.witness = "axioms hold on the radius " + std::to_string(r) + " ball";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::UnsupportedCosetTest) throw;
    v.witness = e.what();
  }
  return v;
}

CylinderPartition cylinder_partition(const TreeBall& ball, const EdgeRelation& rel) {
  BallRelation br(ball, rel);
  if (auto bad = br.violation()) fail(ErrorCode::NotAdmissible, *bad);
  const int n = static_cast<int>(ball.edges.size());
  DisjointSets ds(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (br.related(a, b)) ds.join(a, b);
  CylinderPartition out;
  out.cls.assign(static_cast<std::size_t>(n), -1);
  std::map<int, int> number;
  for (int a = 0; a < n; ++a) {
    int root = ds.find(a);
    auto it = number.find(root);
    if (it == number.end()) {
      it = number.emplace(root, static_cast<int>(out.members.size())).first;
      out.members.emplace_back();
    }
    out.cls[a] = it->second;
    out.members[it->second].push_back(a);
  }
  for (const auto& m : out.members) {
    std::set<int> verts;
    for (int k : m) {
      verts.insert(ball.edges[k].d0);
      verts.insert(ball.edges[k].d1);
    }
    out.vertices.emplace_back(verts.begin(), verts.end());
    // connected: |V| = |E| + 1 for a sub-forest of a tree
    if (verts.size() != m.size() + 1) out.subtrees = false;
  }
  for (std::size_t a = 0; a < out.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(out.vertices[a].begin(), out.vertices[a].end(), out.vertices[b].begin(),
                            out.vertices[b].end(), std::back_inserter(common));
      if (common.size() > 1) out.meet_once = false;
    }
  return out;
}

// ---- tree of cylinders ----

std::map<std::string, std::string> TcQuotient::dot_ids() const {
  std::map<std::string, std::string> ids;
  for (std::size_t v = static_cast<std::size_t>(v0_count); v < graph.vertices.size(); ++v)
    ids[graph.vertices[v].name] = "cyl:" + std::to_string(v - static_cast<std::size_t>(v0_count));
  return ids;
}

namespace {

// One conjugacy class of incident edge images at a vertex.
struct EndClass {
  std::pair<int, int> rep;  // (edge, side)
  GroupPtr normalizer;
  std::vector<SymWord> gens_in_vertex;  // normalizer generators as local words
  std::function<SymWord(const SymWord&)> in_normalizer;  // local word -> normalizer word
};

struct EndData {
  int cls = -1;
  SymWord c;  // local word with c^-1 (image) c = image of the class rep
};

struct VertexClasses {
  std::vector<EndClass> classes;
  std::map<std::pair<int, int>, EndData> ends;
};

VertexClasses finite_classes(const GraphOfGroups& g, int v) {
  const FiniteGroup& G = g.vertices[v].group->as_finite();
  VertexClasses out;
  std::vector<Subgroup> reps;
  for (auto [e, side] : g.incident(v)) {
    std::vector<int> gens;
    for (const auto& w : g.edges[e].attach(side)) gens.push_back(G.evaluate(w));
    Subgroup A = closure(G, gens);
    EndData d;
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (auto x = conjugating_element(G, A, reps[k])) {
        d.cls = static_cast<int>(k);
        d.c = G.word_of(G.inv(*x));
        break;
      }
    if (d.cls < 0) {
      d.cls = static_cast<int>(reps.size());
      reps.push_back(A);
      Subgroup N = normalizer(G, A);
      auto sg = std::make_shared<SubgroupGroup>(subgroup_as_group(G, N, "n"));
      EndClass c;
      c.rep = {e, side};
      c.normalizer = Group::finite(sg->group);
      for (int gen : sg->group.generators()) c.gens_in_vertex.push_back(G.word_of(sg->embedding[gen]));
      c.in_normalizer = [sg, &G](const SymWord& w) {
        int y = G.evaluate(w);
        auto it = std::lower_bound(sg->embedding.begin(), sg->embedding.end(), y);
        if (it == sg->embedding.end() || *it != y) fail(ErrorCode::InvalidArgument, "element outside the normalizer");
        return sg->group.word_of(static_cast<int>(it - sg->embedding.begin()));
      };
      out.classes.push_back(std::move(c));
    }
    out.ends[{e, side}] = d;
  }
  return out;
}

VertexClasses free_classes(const GraphOfGroups& g, int v) {
  const GroupPtr& gv = g.vertices[v].group;
  const FreeGroup& F = gv->as_free();
  VertexClasses out;
  std::vector<std::optional<Word>> reps;  // nullopt: trivial image
  for (auto [e, side] : g.incident(v)) {
    std::vector<Word> gens;
    for (const auto& w : g.edges[e].attach(side)) {
      Word x = F.parse(w);
      if (!x.empty()) gens.push_back(x);
    }
    if (gens.size() > 1)
      fail(ErrorCode::ConjugacyUndecided,
           "non-cyclic edge image at " + g.vertices[v].name + ": normalizer and conjugacy not supported");
    std::optional<Word> u;
    if (!gens.empty()) u = gens[0];
    EndData d;
    for (std::size_t k = 0; k < reps.size() && d.cls < 0; ++k) {
      if (!u && !reps[k]) {
        d.cls = static_cast<int>(k);
      } else if (u && reps[k]) {
        for (const Word& target : {*reps[k], reps[k]->inverse()})
          if (auto x = conjugator(*u, target)) {
            d.cls = static_cast<int>(k);
            d.c = F.to_sym(x->inverse());
            break;
          }
      }
    }
    if (d.cls < 0) {
      d.cls = static_cast<int>(reps.size());
      reps.push_back(u);
      EndClass c;
      c.rep = {e, side};
      if (!u) {
        c.normalizer = gv;
        for (const auto& s : F.names()) c.gens_in_vertex.push_back(SymWord::symbol(s));
        c.in_normalizer = [](const SymWord& w) { return w; };
      } else {
        Word r = root(*u);
        c.normalizer = Group::free(FreeGroup(F.prime(), {"n0"}));
        c.gens_in_vertex.push_back(F.to_sym(r));
        c.in_normalizer = [r, F](const SymWord& w) {
          Word y = F.parse(w);
          const long k = static_cast<long>(y.size() / std::max<std::size_t>(r.size(), 1));
          for (long s : {k, -k})
            if (r.power(s) == y) return SymWord::symbol("n0").power(s);
          fail(ErrorCode::InvalidArgument, "element outside the normalizer");
        };
      }
      out.classes.push_back(std::move(c));
    }
    out.ends[{e, side}] = d;
  }
  return out;
}

}  // namespace

TcQuotient tree_of_cylinders(const GraphOfGroups& g, const EdgeRelation& rel) {
  if (rel.kind != RelationKind::Equality)
    fail(ErrorCode::UnsupportedRelation, std::string("tree of cylinders for ") + relation_name(rel.kind));
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());

  std::vector<VertexClasses> at(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    switch (g.vertices[v].group->kind()) {
      case Group::Kind::Finite:
        at[v] = finite_classes(g, v);
        break;
      case Group::Kind::Free:
        at[v] = free_classes(g, v);
        break;
      default:
        fail(ErrorCode::InvalidArgument, "tree of cylinders needs finite or free vertex groups");
    }
  }
  auto end_of = [&](int e, int side) -> const EndData& { return at[g.edges[e].end(side)].ends.at({e, side}); };

  // cylinders: edges linked through classes at their endpoints
  DisjointSets ds(static_cast<std::size_t>(ne));
  for (int v = 0; v < nv; ++v) {
    std::map<int, int> first;
    for (const auto& [end, d] : at[v].ends) {
      auto [it, fresh] = first.emplace(d.cls, end.first);
      if (!fresh) ds.join(end.first, it->second);
    }
  }
  std::vector<int> cyl(static_cast<std::size_t>(ne));
  std::map<int, int> number;
  for (int e = 0; e < ne; ++e) {
    auto [it, fresh] = number.emplace(ds.find(e), static_cast<int>(number.size()));
    cyl[e] = it->second;
  }
  const int ncyl = static_cast<int>(number.size());

  TcQuotient tc;
  GraphOfGroups& out = tc.graph;
  out.prime = g.prime;
  tc.v0_count = nv;
  for (const auto& v : g.vertices) {
    out.vertices.push_back(v);
    tc.provenance[v.name] = "vertex " + v.name;
  }

  // Tc edges, one per (vertex, class); inner vertices of each cylinder
  struct TcEdge {
    int v, cls, cyl;
    std::string name;
  };
  std::vector<TcEdge> tce;
  std::map<std::pair<int, int>, int> tce_of;  // (vertex, class) -> Tc edge
  for (int v = 0; v < nv; ++v)
    for (std::size_t k = 0; k < at[v].classes.size(); ++k) {
      auto [e, side] = at[v].classes[k].rep;
      tce_of[{v, static_cast<int>(k)}] = static_cast<int>(tce.size());
      tce.push_back({v, static_cast<int>(k), cyl[e], g.edges[e].name + "." + std::to_string(side)});
    }
  std::vector<GraphOfGroups> inner(static_cast<std::size_t>(ncyl));
  std::vector<int> inner_index(tce.size());
  for (std::size_t i = 0; i < tce.size(); ++i) {
    auto& I = inner[tce[i].cyl];
    I.prime = g.prime;
    inner_index[i] = static_cast<int>(I.vertices.size());
    I.vertices.push_back({"N(" + tce[i].name + ")", at[tce[i].v].classes[tce[i].cls].normalizer});
  }
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = g.edges[e];
    Edge h;
    h.name = "H(" + ed.name + ")";
    h.group = ed.group;
    for (int side = 0; side < 2; ++side) {
      const int v = ed.end(side);
      const EndData& d = end_of(e, side);
      const int t = tce_of.at({v, d.cls});
      (side == 0 ? h.from : h.to) = inner_index[t];
      for (const auto& w : ed.attach(side))
        h.attach(side).push_back(at[v].classes[d.cls].in_normalizer(d.c.inverse() * w * d.c));
    }
    inner[cyl[e]].edges.push_back(std::move(h));
  }
  for (int k = 0; k < ncyl; ++k) {
    std::string members;
    for (int e = 0; e < ne; ++e)
      if (cyl[e] == k) members += (members.empty() ? "" : ", ") + g.edges[e].name;
    const std::string name = "cyl" + std::to_string(k);
    out.vertices.push_back({name, Group::composite(std::make_shared<const GraphOfGroups>(inner[k]))});
    tc.provenance[name] = "cylinder of edges " + members;
  }
  for (const auto& t : tce) {
    const EndClass& c = at[t.v].classes[t.cls];
    Edge E;
    E.name = t.name;
    E.from = t.v;
    E.to = nv + t.cyl;
    E.group = c.normalizer;
    E.attach_from = c.gens_in_vertex;
    const std::string inner_name = "N(" + t.name + ")";
    const int iv = inner[t.cyl].vertex_index(inner_name);
    for (const auto& s : c.normalizer->symbols()) E.attach_to.push_back(SymWord::symbol(inner[t.cyl].qualify(iv, s)));
    out.edges.push_back(std::move(E));
    std::string ends;
    for (const auto& [end, d] : at[t.v].ends)
      if (d.cls == t.cls) ends += (ends.empty() ? "" : ", ") + g.edges[end.first].name + "." + std::to_string(end.second);
    tc.provenance[t.name] = "normalizer at " + g.vertices[t.v].name + " of the images of " + ends;
  }

  // Base change: delta per original vertex, rho per Tc edge (input words).
  auto src_tree = default_spanning_tree(g);
  std::set<int> src_in_tree(src_tree.begin(), src_tree.end());
  auto stable = [&](int e) {
    return src_in_tree.count(e) ? SymWord() : SymWord::symbol(GraphOfGroups::stable_letter(g.edges[e].name));
  };
  auto cword = [&](int e, int side) { return g.qualify(g.edges[e].end(side), end_of(e, side).c); };
  auto tc_tree = default_spanning_tree(out);
  std::set<int> tc_in_tree(tc_tree.begin(), tc_tree.end());
  std::vector<std::set<int>> inner_tree(static_cast<std::size_t>(ncyl));
  for (int k = 0; k < ncyl; ++k) {
    auto t = default_spanning_tree(inner[k]);
    inner_tree[k] = std::set<int>(t.begin(), t.end());
  }
  std::vector<std::optional<SymWord>> delta(static_cast<std::size_t>(nv));
  std::vector<std::optional<SymWord>> rho(tce.size());
  std::vector<std::vector<int>> inner_to_tce(static_cast<std::size_t>(ncyl));
  for (std::size_t i = 0; i < tce.size(); ++i) inner_to_tce[tce[i].cyl].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> inner_edges_src(static_cast<std::size_t>(ncyl));
  for (int e = 0; e < ne; ++e) inner_edges_src[cyl[e]].push_back(e);

  std::vector<bool> cyl_seen(static_cast<std::size_t>(ncyl), false);
  std::deque<int> queue;
  if (nv > 0) {
    delta[0] = SymWord();
    queue.push_back(0);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < tce.size(); ++i) {
      if (tce[i].v != v || !tc_in_tree.count(static_cast<int>(i)) || cyl_seen[tce[i].cyl]) continue;
      const int k = tce[i].cyl;
      cyl_seen[k] = true;
      rho[i] = *delta[v];
      // spread over the inner spanning tree
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t j = 0; j < inner_edges_src[k].size(); ++j) {
          if (!inner_tree[k].count(static_cast<int>(j))) continue;
          const int e = inner_edges_src[k][j];
          const int a = inner_to_tce[k][inner[k].edges[j].from], b = inner_to_tce[k][inner[k].edges[j].to];
          if (rho[a] && !rho[b]) {
            rho[b] = cword(e, 1).inverse() * stable(e).inverse() * cword(e, 0) * *rho[a];
            grew = true;
          } else if (rho[b] && !rho[a]) {
            rho[a] = cword(e, 0).inverse() * stable(e) * cword(e, 1) * *rho[b];
            grew = true;
          }
        }
      }
      for (int j : inner_to_tce[k]) {
        const int w = tce[j].v;
        if (tc_in_tree.count(j) && !delta[w]) {
          delta[w] = *rho[j];
          queue.push_back(w);
        }
      }
    }
  }

  // symbol translation into the input
  bool base_trivial = true;
  for (int v = 0; v < nv; ++v) {
    base_trivial = base_trivial && delta[v]->empty();
    for (const auto& s : g.vertices[v].group->symbols()) {
      SymWord x = SymWord::symbol(g.qualify(v, s));
      tc.to_source[out.qualify(v, s)] = delta[v]->inverse() * x * *delta[v];
    }
  }
  for (std::size_t i = 0; i < tce.size(); ++i) {
    const int k = tce[i].cyl;
    const EndClass& c = at[tce[i].v].classes[tce[i].cls];
    const std::string inner_name = "N(" + tce[i].name + ")";
    const int iv = inner[k].vertex_index(inner_name);
    const auto& syms = c.normalizer->symbols();
    for (std::size_t s = 0; s < syms.size(); ++s)
      tc.to_source[out.qualify(nv + k, inner[k].qualify(iv, syms[s]))] =
          rho[i]->inverse() * g.qualify(tce[i].v, c.gens_in_vertex[s]) * *rho[i];
    if (!tc_in_tree.count(static_cast<int>(i)))
      tc.to_source[GraphOfGroups::stable_letter(tce[i].name)] = delta[tce[i].v]->inverse() * *rho[i];
  }
  for (int k = 0; k < ncyl; ++k)
    for (std::size_t j = 0; j < inner_edges_src[k].size(); ++j) {
      if (inner_tree[k].count(static_cast<int>(j))) continue;
      const int e = inner_edges_src[k][j];
      const int a = inner_to_tce[k][inner[k].edges[j].from], b = inner_to_tce[k][inner[k].edges[j].to];
      tc.to_source[out.qualify(nv + k, GraphOfGroups::stable_letter(inner[k].edges[j].name))] =
          rho[a]->inverse() * cword(e, 0).inverse() * stable(e) * cword(e, 1) * *rho[b];
    }

  // input stable letters in Tc words, when every vertex keeps its base point
  if (base_trivial) {
    auto theta_rho = [&](int i) {
      return tc_in_tree.count(i) ? SymWord() : SymWord::symbol(GraphOfGroups::stable_letter(tce[i].name));
    };
    for (int k = 0; k < ncyl; ++k)
      for (std::size_t j = 0; j < inner_edges_src[k].size(); ++j) {
        const int e = inner_edges_src[k][j];
        if (src_in_tree.count(e)) continue;
        const int a = inner_to_tce[k][inner[k].edges[j].from], b = inner_to_tce[k][inner[k].edges[j].to];
        SymWord mid;
        if (!inner_tree[k].count(static_cast<int>(j)))
          mid = SymWord::symbol(out.qualify(nv + k, GraphOfGroups::stable_letter(inner[k].edges[j].name)));
        out.aliases[GraphOfGroups::stable_letter(g.edges[e].name)] =
            cword(e, 0) * theta_rho(a) * mid * theta_rho(b).inverse() * cword(e, 1).inverse();
      }
  }

  validate(out);
  auto [red, trace] = reduce(out);
  tc.reduced = std::move(red);
  tc.trace = std::move(trace);
  return tc;
}

// ---- Aut splitting shapes ----

namespace {

bool malnormal_in(const Group& G, const std::vector<SymWord>& image) {
  if (G.kind() == Group::Kind::Finite) {
    const auto& f = G.as_finite();
    std::vector<int> gens;
    for (const auto& w : image) gens.push_back(f.evaluate(w));
    return is_malnormal(f, closure(f, gens));
  }
  if (G.kind() == Group::Kind::Free) {
    const auto& F = G.as_free();
    std::vector<Word> gens;
    for (const auto& w : image) gens.push_back(F.parse(w));
    return is_malnormal_free(F.rank(), gens);
  }
  return false;
}

struct Term {
  std::string s, t;
};
Term aut(const Term& x) { return {"(Aut " + x.s + ")", "Aut_G(" + x.t + ")"}; }
Term cap(const Term& a, const Term& b) { return {"(cap " + a.s + " " + b.s + ")", a.t + " ∩ " + b.t}; }
Term amalgam(const Term& a, const Term& c, const Term& b) {
  return {"(amalgam " + a.s + " " + c.s + " " + b.s + ")", a.t + " ⨿_{" + c.t + "} " + b.t};
}

}  // namespace

AutShape aut_splitting_shape(const GraphOfGroups& g, bool rigid1, bool rigid2, bool swap) {
  if (g.edges.size() != 1 || g.edges[0].is_loop() || g.vertices.size() != 2)
    fail(ErrorCode::NotOneEdge, "Aut splitting shapes need a one-edge amalgam");
  const Edge& e = g.edges[0];
  const std::string n1 = g.vertices[e.from].name, n2 = g.vertices[e.to].name;
  AutShape out;
  if (!rigid1 || !rigid2) {
    out.applies = false;
    const std::string which = !rigid1 ? n1 : n2;
    out.sexpr = "(none (not-rigid " + which + "))";
    out.text = "no formula: " + which + " is not asserted rigid";
    return out;
  }
  out.malnormal1 = malnormal_in(*g.vertices[e.from].group, e.attach_from);
  out.malnormal2 = malnormal_in(*g.vertices[e.to].group, e.attach_to);
  const Term G1{n1, n1}, G2{n2, n2}, H{"H", "H"};
  Term result;
  if (out.malnormal1 && out.malnormal2) {
    result = swap ? aut(G1) : amalgam(aut(G1), aut(H), aut(G2));
  } else {
    Term N{"(N G H)", "N_G(H)"};
    if (out.malnormal2) N = {"(N " + n1 + " H)", "N_" + n1 + "(H)"};
    if (out.malnormal1) N = {"(N " + n2 + " H)", "N_" + n2 + "(H)"};
    Term left = amalgam(aut(G1), cap(aut(G1), aut(N)), aut(N));
    result = swap ? left : amalgam(left, cap(aut(G2), aut(N)), aut(G2));
  }
  out.sexpr = result.s;
  out.text = "Aut(G) = " + result.t;
  return out;
}

}  // namespace propp
