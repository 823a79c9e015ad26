#include "propp/bass_serre.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>

#include "propp/error.hpp"
#include "propp/gog_ops.hpp"

namespace propp {

const char* status_name(Status s) {
  switch (s) {
    case Status::ProvenYes:
      return "ProvenYes";
    case Status::ProvenNo:
      return "ProvenNo";
    default:
      return "Unknown";
  }
}

long default_budget() {
  if (const char* env = std::getenv("PROPP_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 50000;
}

StandardTree::StandardTree(const GraphOfGroups& g) : g_(g) {
  for (const auto& v : g.vertices) flat_ = flat_ && v.group->kind() != Group::Kind::Composite;
  pg_ = std::make_shared<PathGroup>(flatten(g));
}

std::string StandardTree::format(const PathElem& p) const {
  const auto& fg = pg_->graph();
  std::ostringstream os;
  int v = p.start;
  for (const auto& s : p.syl) {
    os << fg.vertices[v].name << "[" << to_string(pg_->local_word(v, s.x)) << "] ";
    const auto& name = fg.edges[s.e.edge].name;
    os << (s.e.dir == 0 ? "-" + name + "-> " : "<-" + name + "- ");
    v = fg.edges[s.e.edge].end(s.e.dst_side());
  }
  os << fg.vertices[v].name << "[" << to_string(pg_->local_word(v, p.tail)) << "]";
  return os.str();
}

PathElem StandardTree::vertex_of(const PathElem& path) const {
  PathElem p = path;
  p.tail = pg_->id(p.finish);
  return p;
}

PathElem StandardTree::act(const PathElem& h, const PathElem& p) const { return vertex_of(pg_->multiply(h, p)); }

bool StandardTree::fixes(const PathElem& h, const PathElem& p) const {
  return pg_->multiply(pg_->multiply(pg_->inverse(p), h), p).syl.empty();
}

int StandardTree::distance(const PathElem& p, const PathElem& q) const {
  return static_cast<int>(pg_->multiply(pg_->inverse(p), q).syl.size());
}

PathElem StandardTree::coset_element(const PathElem& p) const {
  return pg_->multiply(p, pg_->inverse(pg_->gamma(p.finish)));
}

PathElem StandardTree::stable_element(int e) const {
  if (pg_->in_tree(e)) return base_point();
  const auto& ed = pg_->graph().edges[e];
  return pg_->multiply(pg_->multiply(pg_->gamma(ed.from), pg_->edge_path({e, 0})), pg_->inverse(pg_->gamma(ed.to)));
}

std::optional<PathElem> StandardTree::project_to_fixed(const PathElem& h, const PathElem& p) const {
  PathElem q = pg_->multiply(pg_->multiply(pg_->inverse(p), h), p);
  const std::size_t d = q.syl.size();
  if (d % 2 == 1) return std::nullopt;
  std::vector<Syllable> half(q.syl.begin(), q.syl.begin() + static_cast<long>(d / 2));
  int end = pg_->vertex_after(q.start, half);
  PathElem m = vertex_of(pg_->multiply(p, pg_->normalize(q.start, half, pg_->id(end))));
  if (!fixes(h, m)) return std::nullopt;
  return m;
}

PathElem StandardTree::cyclic_core(const PathElem& h, PathElem* conj) const {
  PathElem cur = h;
  PathElem c = pg_->identity(h.start);
  while (!cur.syl.empty()) {
    std::vector<Syllable> first{cur.syl[0]};
    int after = pg_->vertex_after(cur.start, first);
    PathElem step = pg_->normalize(cur.start, first, pg_->id(after));
    PathElem next = pg_->multiply(pg_->multiply(pg_->inverse(step), cur), step);
    if (next.syl.size() >= cur.syl.size()) break;
    c = pg_->multiply(c, step);
    cur = next;
  }
  if (conj) *conj = c;
  return cur;
}

bool StandardTree::hyperbolic_outer(const PathElem& h) const {
  PathElem core = cyclic_core(h);
  for (const auto& s : core.syl)
    if (pg_->outer_edge(s.e.edge) >= 0) return true;
  return false;
}

PathElem normal_form(const GraphOfGroups& g, const SymWord& w) { return StandardTree(g).element(w); }

std::string format_normal_form(const GraphOfGroups& g, const SymWord& w) {
  StandardTree t(g);
  return t.format(t.element(w));
}

// ---- balls ----

int TreeBall::find(const PathElem& vertex_path) const {
  auto it = index.find(vertex_path);
  return it == index.end() ? -1 : it->second;
}

std::string TreeBall::vertex_label(int i) const {
  const auto& v = vertices[i];
  SymWord g = tree->word(tree->coset_element(v.path));
  std::string w = g.empty() ? "1" : to_string(g);
  return w + " G(" + tree->pg().graph().vertices[v.vertex].name + ")";
}

std::string TreeBall::edge_label(int i) const {
  const auto& e = edges[i];
  SymWord g = tree->word(e.g);
  std::string w = g.empty() ? "1" : to_string(g);
  return w + " G(" + tree->pg().graph().edges[e.edge].name + ")";
}

TreeBall tree_ball(const GraphOfGroups& g, int r, long budget) {
  if (r < 0) fail(ErrorCode::InvalidArgument, "radius must be non-negative");
  if (budget <= 0) budget = default_budget();
  auto tree = std::make_shared<StandardTree>(g);
  if (!tree->flat()) fail(ErrorCode::UnsupportedCosetTest, "tree balls need finite or free vertex groups");
  const PathGroup& pg = tree->pg();
  const GraphOfGroups& fg = pg.graph();
  TreeBall ball;
  ball.radius = r;
  ball.tree = tree;
  auto add_vertex = [&](const PathElem& p, int depth, int parent) {
    int i = static_cast<int>(ball.vertices.size());
    ball.vertices.push_back({p, p.finish, depth, parent, {}});
    ball.index[p] = i;
    if (static_cast<long>(ball.vertices.size() + ball.edges.size()) > budget)
      fail(ErrorCode::BudgetExceeded, "tree ball exceeds " + std::to_string(budget) + " cells");
    return i;
  };
  add_vertex(tree->base_point(), 0, -1);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (ball.vertices[i].depth >= r) continue;
    const int v = ball.vertices[i].vertex;
    for (auto [e, side] : fg.incident(v)) {
      bool trunc = false;
      auto reps = pg.transversal(e, side, static_cast<std::size_t>(r), &trunc);
      ball.truncated = ball.truncated || trunc;
      const OEdge oe{e, side};
      for (const auto& x : reps) {
        std::vector<Syllable> syl = ball.vertices[i].path.syl;
        syl.push_back({x, oe});
        const int dst = fg.edges[e].end(oe.dst_side());
        PathElem w = tree->vertex_of(pg.normalize(pg.base(), syl, pg.id(dst)));
        if (ball.index.count(w)) continue;
        const PathElem u = ball.vertices[i].path;
        int j = add_vertex(w, ball.vertices[i].depth + 1, static_cast<int>(i));
        BallEdge be;
        be.edge = e;
        if (side == 0) {
          be.d0 = static_cast<int>(i);
          be.d1 = j;
          be.g = pg.multiply(pg.multiply(u, pg.vertex_path(v, x)), pg.inverse(pg.gamma(v)));
        } else {
          be.d0 = j;
          be.d1 = static_cast<int>(i);
          be.g = tree->coset_element(w);
        }
        int k = static_cast<int>(ball.edges.size());
        ball.edges.push_back(be);
        ball.vertices[i].edges.push_back(k);
        ball.vertices[j].edges.push_back(k);
      }
    }
  }
  return ball;
}

Geodesic geodesic(const TreeBall& ball, int v, int w) {
  const int n = static_cast<int>(ball.vertices.size());
  if (v < 0 || v >= n || w < 0 || w >= n) fail(ErrorCode::NotInBall, "vertex outside the ball");
  auto parent_edge = [&](int x) {
    for (int k : ball.vertices[x].edges) {
      const auto& e = ball.edges[k];
      if (e.d0 == ball.vertices[x].parent || e.d1 == ball.vertices[x].parent) return k;
    }
    return -1;
  };
  std::vector<int> left{v}, right{w};
  std::vector<int> le, re;
  int a = v, b = w;
  while (a != b) {
    if (ball.vertices[a].depth >= ball.vertices[b].depth) {
      le.push_back(parent_edge(a));
      a = ball.vertices[a].parent;
      left.push_back(a);
    } else {
      re.push_back(parent_edge(b));
      b = ball.vertices[b].parent;
      right.push_back(b);
    }
  }
  Geodesic out;
  out.vertices = left;
  for (int i = static_cast<int>(right.size()) - 2; i >= 0; --i) out.vertices.push_back(right[i]);
  out.edges = le;
  for (int i = static_cast<int>(re.size()) - 1; i >= 0; --i) out.edges.push_back(re[i]);

  // Stab(v) and Stab(w) meet inside each edge stabilizer on the path.
  const StandardTree& t = *ball.tree;
  const PathGroup& pg = t.pg();
  int s = v, o = w;
  if (!pg.vertex_finite(ball.vertices[s].vertex)) std::swap(s, o);
  if (pg.vertex_finite(ball.vertices[s].vertex)) {
    out.stabilizers_checked = true;
    const PathElem& p = ball.vertices[s].path;
    const int vv = ball.vertices[s].vertex;
    const int order = pg.graph().vertices[vv].group->as_finite().order();
    for (int x = 0; x < order; ++x) {
      PathElem h = pg.multiply(pg.multiply(p, pg.vertex_path(vv, Elem{x, {}})), pg.inverse(p));
      if (!t.fixes(h, ball.vertices[o].path)) continue;
      for (int k : out.edges) {
        const auto& e = ball.edges[k];
        out.stabilizers_ok = out.stabilizers_ok && t.fixes(h, ball.vertices[e.d0].path) &&
                             t.fixes(h, ball.vertices[e.d1].path);
      }
    }
  }
  return out;
}

namespace {

FixedSet fixed_cells(const TreeBall& ball, const std::vector<PathElem>& hs) {
  const StandardTree& t = *ball.tree;
  FixedSet out;
  std::vector<bool> fixed(ball.vertices.size(), false);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    bool all = true;
    for (const auto& h : hs) all = all && t.fixes(h, ball.vertices[i].path);
    fixed[i] = all;
    if (all) out.vertices.push_back(static_cast<int>(i));
  }
  for (std::size_t k = 0; k < ball.edges.size(); ++k)
    if (fixed[ball.edges[k].d0] && fixed[ball.edges[k].d1]) out.edges.push_back(static_cast<int>(k));
  // components and diameters of the fixed forest (double sweep per component)
  std::vector<std::vector<int>> adj(ball.vertices.size());
  for (int k : out.edges) {
    adj[ball.edges[k].d0].push_back(ball.edges[k].d1);
    adj[ball.edges[k].d1].push_back(ball.edges[k].d0);
  }
  std::vector<int> comp(ball.vertices.size(), -1);
  auto bfs = [&](int src, std::vector<int>& dist) {
    dist.assign(ball.vertices.size(), -1);
    dist[src] = 0;
    std::deque<int> q{src};
    int far = src;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (dist[x] > dist[far]) far = x;
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    return far;
  };
  std::vector<int> dist;
  for (int v : out.vertices) {
    if (comp[v] >= 0) continue;
    int far = bfs(v, dist);
    for (std::size_t i = 0; i < dist.size(); ++i)
      if (dist[i] >= 0) comp[i] = out.components;
    ++out.components;
    int other = bfs(far, dist);
    out.diameter = std::max(out.diameter, dist[other]);
  }
  return out;
}

}  // namespace

FixedSet fixed_subtree(const TreeBall& ball, const std::vector<SymWord>& gens) {
  std::vector<PathElem> hs;
  for (const auto& w : gens) hs.push_back(ball.tree->element(w));
  return fixed_cells(ball, hs);
}

// ---- ellipticity ----

Conjugation elliptic_subgroup(const StandardTree& t, const std::vector<SymWord>& gens, long budget) {
  if (budget <= 0) budget = default_budget();
  const PathGroup& pg = t.pg();
  Conjugation out;
  std::vector<PathElem> hs;
  for (const auto& w : gens) hs.push_back(t.element(w));
  auto no = [&](const SymWord& witness, const PathElem& h, const std::string& why) {
    out.hyperbolic = witness;
    bool sure = t.flat() || t.hyperbolic_outer(h);
    out.verdict.status = sure ? Status::ProvenNo : Status::Unknown;
    out.verdict.witness = why + (sure ? "" : " (in the flattened tree only)");
    return out;
  };
  PathElem p = t.base_point();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    out.verdict.budget_used += static_cast<long>(hs[i].length()) + static_cast<long>(p.length());
    if (out.verdict.budget_used > budget) {
      out.verdict.status = Status::Unknown;
      out.verdict.witness = "budget exhausted";
      return out;
    }
    auto q = t.project_to_fixed(hs[i], p);
    if (!q) return no(gens[i], hs[i], to_string(gens[i]) + " is hyperbolic");
    p = *q;
    bool all = true;
    for (std::size_t j = 0; j < i && all; ++j) all = t.fixes(hs[j], p);
    if (all) continue;
    // Helly: some earlier generator has a fixed set disjoint from Fix(h_i),
    // and then the product is hyperbolic
    for (std::size_t j = 0; j < i; ++j) {
      PathElem prod_e = pg.multiply(hs[j], hs[i]);
      if (t.project_to_fixed(prod_e, t.base_point())) continue;
      SymWord prod = gens[j] * gens[i];
      return no(prod, prod_e,
                "fixed sets of " + to_string(gens[j]) + " and " + to_string(gens[i]) + " are disjoint; " +
                    to_string(prod) + " is hyperbolic");
    }
    out.verdict.status = Status::Unknown;
    out.verdict.witness = "no common fixed vertex found";
    return out;
  }
  const int fv = p.finish;
  out.vertex = pg.graph().vertices[fv].name;
  if (!t.flat()) out.vertex = t.graph().vertices[pg.owner(fv)].name;
  out.conjugator = t.word(t.coset_element(p));
  out.verdict.status = Status::ProvenYes;
  out.verdict.witness = "fixes " + (out.conjugator.empty() ? std::string("1") : to_string(out.conjugator)) + " G(" +
                        out.vertex + ")";
  return out;
}

Conjugation conjugate_into_vertex(const GraphOfGroups& g, const std::vector<SymWord>& gens, long budget) {
  StandardTree t(g);
  const PathGroup& pg = t.pg();
  for (const auto& w : gens) {
    PathElem core = t.cyclic_core(t.element(w));
    if (!core.syl.empty()) fail(ErrorCode::NotFinite, to_string(w) + " has infinite order (hyperbolic)");
    if (pg.elem_order(core.start, core.tail) == 0) fail(ErrorCode::NotFinite, to_string(w) + " has infinite order");
  }
  Conjugation c = elliptic_subgroup(t, gens, budget);
  if (c.verdict.status == Status::ProvenNo)
    fail(ErrorCode::NotFinite, "the generated subgroup fixes no vertex, so it is infinite: " + c.verdict.witness);
  return c;
}

// ---- acylindricity ----

namespace {

// Incident edge images at every vertex form a malnormal family.
bool malnormal_families(const GraphOfGroups& g, std::string* why) {
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Group& G = *g.vertices[v].group;
    std::vector<std::vector<SymWord>> ends;
    for (auto [e, side] : g.incident(static_cast<int>(v)))
      if (!g.edges[e].group->is_trivial()) ends.push_back(g.edges[e].attach(side));
    if (ends.empty()) continue;
    if (G.kind() == Group::Kind::Finite) {
      const auto& fg = G.as_finite();
      std::vector<std::vector<int>> subs;
      for (const auto& ws : ends) {
        std::vector<int> gens;
        for (const auto& w : ws) gens.push_back(fg.evaluate(w));
        subs.push_back(closure(fg, gens));
      }
      for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j)
          for (int x = 0; x < fg.order(); ++x) {
            if (i == j && std::binary_search(subs[i].begin(), subs[i].end(), x)) continue;
            auto cj = conjugate(fg, subs[j], x);
            std::vector<int> both;
            std::set_intersection(subs[i].begin(), subs[i].end(), cj.begin(), cj.end(), std::back_inserter(both));
            if (both.size() > 1) {
              if (why) *why = "edge images at " + g.vertices[v].name + " are not a malnormal family";
              return false;
            }
          }
    } else if (G.kind() == Group::Kind::Free) {
      const auto& F = G.as_free();
      std::vector<Word> roots;
      for (const auto& ws : ends) {
        std::vector<Word> gens;
        for (const auto& w : ws) gens.push_back(F.parse(w));
        if (!is_malnormal_free(F.rank(), gens, nullptr, nullptr)) {
          if (why) *why = "edge image at " + g.vertices[v].name + " is not malnormal";
          return false;
        }
        if (gens.size() != 1) {
          if (ends.size() > 1) {
            if (why) *why = "several non-cyclic edge images at " + g.vertices[v].name;
            return false;
          }
          continue;
        }
        roots.push_back(gens[0].cyclic_core());
      }
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          std::string a, b, bi;
          const Word inv = roots[j].inverse();
          for (int l : roots[i].letters()) a += std::to_string(l) + ",";
          for (int l : roots[j].letters()) b += std::to_string(l) + ",";
          for (int l : inv.letters()) bi += std::to_string(l) + ",";
          if (a.size() == b.size() && ((a + a).find(b) != std::string::npos || (a + a).find(bi) != std::string::npos)) {
            if (why) *why = "conjugate edge images at " + g.vertices[v].name;
            return false;
          }
        }
    } else {
      if (why) *why = "composite vertex " + g.vertices[v].name;
      return false;
    }
  }
  return true;
}

}  // namespace

Verdict check_acylindrical(const GraphOfGroups& g, int k, int r) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "k must be non-negative");
  if (r < k + 2) fail(ErrorCode::InvalidArgument, "radius must be at least k+2");
  Verdict v;
  bool all_trivial = true;
  for (const auto& e : g.edges) all_trivial = all_trivial && e.group->is_trivial();
  if (all_trivial) {
    v.status = Status::ProvenYes;
    v.witness = "all edge groups trivial: 0-acylindrical";
    return v;
  }
  std::string why;
  if (k >= 2 && malnormal_families(g, &why)) {
    v.status = Status::ProvenYes;
    v.witness = "edge images form malnormal families at every vertex: fixed sets have diameter at most 2";
    return v;
  }
  TreeBall ball;
  try {
    ball = tree_ball(g, r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    v.witness = e.what();
    return v;
  }
  v.budget_used = static_cast<long>(ball.vertices.size() + ball.edges.size());
  const StandardTree& t = *ball.tree;
  const PathGroup& pg = t.pg();
  int best = -1;
  for (std::size_t e = 0; e < pg.graph().edges.size(); ++e) {
    std::vector<Elem> cands;
    if (pg.edge_finite(static_cast<int>(e))) {
      cands = pg.edge_elements(static_cast<int>(e));
    } else {
      cands = pg.edge_generators(static_cast<int>(e));
      const std::size_t n = cands.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          cands.push_back(pg.edge_mul(static_cast<int>(e), cands[i], cands[j]));
    }
    const int from = pg.graph().edges[e].from;
    for (const auto& c : cands) {
      Elem x = pg.edge_map(static_cast<int>(e), 0, c);
      if (pg.is_id(x)) continue;
      PathElem h =
          pg.multiply(pg.multiply(pg.gamma(from), pg.vertex_path(from, x)), pg.inverse(pg.gamma(from)));
      FixedSet fs = fixed_cells(ball, {h});
      if (fs.diameter > best) best = fs.diameter;
      if (fs.diameter > k) {
        SymWord w = t.word(h);
        v.status = Status::ProvenNo;
        v.witness = to_string(w) + " fixes a subtree of diameter " + std::to_string(fs.diameter) + " > " +
                    std::to_string(k) + " in the radius " + std::to_string(r) + " ball";
        return v;
      }
    }
  }
  v.witness = "largest fixed diameter observed " + std::to_string(best) + (why.empty() ? "" : "; " + why);
  return v;
}

}  // namespace propp
