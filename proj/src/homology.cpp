#include "propp/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "propp/error.hpp"
#include "propp/gog_ops.hpp"

namespace propp {

namespace {

std::string join_basis(const std::vector<SymWord>& basis) {
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? " ⨿ ⟨" : "⟨") + to_string(basis[i]) + "⟩";
  return s;
}

bool unit(unsigned x) { return x != 0; }

// Rank of a set of vectors of length n.
std::size_t span_rank(unsigned p, std::size_t n, const std::vector<FpVector>& vs) {
  if (vs.empty()) return 0;
  return FpMatrix::from_columns(p, n, vs).rank();
}

const FreeGroup& free_vertex(const GraphOfGroups& g, int v) {
  if (g.vertices[v].group->kind() != Group::Kind::Free)
    fail(ErrorCode::NonFreeVertex, "vertex " + g.vertices[v].name + " is not a free group");
  return g.vertices[v].group->as_free();
}

// True for an infinite cyclic edge group, false for a trivial one.
bool cyclic_edge(const GraphOfGroups& g, int e) {
  const Group& E = *g.edges[e].group;
  if (E.is_trivial()) return false;
  if (E.kind() != Group::Kind::Free || E.as_free().rank() != 1)
    fail(ErrorCode::InvalidArgument, "edge " + g.edges[e].name + " must carry an infinite cyclic group");
  return true;
}

Word end_word(const GraphOfGroups& g, int e, int side) {
  const auto& F = g.vertices[g.edges[e].end(side)].group->as_free();
  Word w = F.parse(g.edges[e].attach(side).at(0));
  if (w.empty()) fail(ErrorCode::TrivialEdgeWord, "edge " + g.edges[e].name + " has a trivial attachment word");
  return w;
}

FpVector vec(const FreeGroup& F, const Word& w) { return exponent_vector_mod_p(w, F.rank(), F.prime()); }

// Completed basis with the factor generator first.
std::vector<SymWord> factor_basis(const FreeGroup& F, const Word& w) {
  auto ff = is_cyclic_free_factor(w, F);
  std::vector<SymWord> out{F.to_sym(w)};
  for (const auto& b : ff.basis)
    if (b != w) out.push_back(F.to_sym(b));
  return out;
}

// Solve the single relation for the last generator whose exponent sum is
// a unit; everything else survives as a basis.
void solve_relation(const GraphOfGroups& g, SplitResult& r, const std::string& note) {
  Presentation P = fundamental_presentation(g);
  int idx = -1;
  for (std::size_t i = 0; i < P.relations.size(); ++i)
    if (!P.relations[i].relator().empty()) idx = static_cast<int>(i);
  FpVector v = exponent_vector(P.relations.at(idx).relator(), P.generators, g.prime);
  int pick = -1;
  for (std::size_t i = 0; i < P.generators.size(); ++i)
    if (unit(v.coords[i])) pick = static_cast<int>(i);
  if (pick < 0) fail(ErrorCode::InvalidArgument, "relation has no unit exponent sum");
  r.transcript.push_back({P.generators[pick], idx, note});
  for (std::size_t i = 0; i < P.generators.size(); ++i)
    if (static_cast<int>(i) != pick) r.basis.push_back(SymWord::symbol(P.generators[i]));
  r.free = true;
  r.rank = static_cast<int>(r.basis.size());
}

}  // namespace

int h1_dim(const FiniteGroup& g) { return frattini_quotient(g).dim; }
int h1_dim(const FreeGroup& f) { return f.rank(); }
int h1_dim(const GraphOfGroups& g) { return rank_mod_p(g); }

int h1_dim(const Group& g) {
  switch (g.kind()) {
    case Group::Kind::Finite: return h1_dim(g.as_finite());
    case Group::Kind::Free: return h1_dim(g.as_free());
    case Group::Kind::Composite: return h1_dim(g.as_composite());
  }
  return 0;
}

FpVector h1_vector(const Group& g, const SymWord& w) {
  switch (g.kind()) {
    case Group::Kind::Finite: {
      const auto& G = g.as_finite();
      return frattini_quotient(G).project(G.evaluate(w));
    }
    case Group::Kind::Free: return exponent_vector(w, g.as_free().names(), g.prime());
    case Group::Kind::Composite: {
      Presentation P = fundamental_presentation(g.as_composite());
      return abelianization_mod_p(P, g.prime()).project(exponent_vector(w, P.generators, g.prime()));
    }
  }
  return {};
}

namespace {

// Words in the edge group lifting its H1 basis.
std::vector<SymWord> h1_basis_words(const Group& edge) {
  std::vector<SymWord> out;
  if (edge.kind() == Group::Kind::Finite) {
    const auto& G = edge.as_finite();
    for (int b : frattini_quotient(G).basis) out.push_back(G.word_of(b));
  } else if (edge.kind() == Group::Kind::Free) {
    for (const auto& n : edge.as_free().names()) out.push_back(SymWord::symbol(n));
  } else {
    fail(ErrorCode::InvalidArgument, "corestriction needs a finite or free edge group");
  }
  return out;
}

}  // namespace

FpMatrix corestriction_matrix(const Group& edge, const Group& vertex, const std::vector<SymWord>& images) {
  std::map<std::string, SymWord> subst;
  for (std::size_t i = 0; i < edge.symbols().size(); ++i) subst[edge.symbols()[i]] = images.at(i);
  std::vector<FpVector> cols;
  for (const auto& w : h1_basis_words(edge)) cols.push_back(h1_vector(vertex, substitute(w, subst)));
  return FpMatrix::from_columns(vertex.prime(), static_cast<std::size_t>(h1_dim(vertex)), cols);
}

MayerVietoris mayer_vietoris_edge_map(const GraphOfGroups& g) {
  MayerVietoris mv;
  int rows = 0, cols = 0;
  for (const auto& v : g.vertices) {
    mv.row_offset.push_back(rows);
    rows += h1_dim(*v.group);
  }
  for (const auto& e : g.edges) {
    mv.col_offset.push_back(cols);
    cols += e.group->is_trivial() ? 0 : h1_dim(*e.group);
  }
  mv.map = FpMatrix(g.prime, rows, cols);
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const Edge& e = g.edges[ei];
    if (e.group->is_trivial()) continue;
    for (int side = 0; side < 2; ++side) {
      FpMatrix c = corestriction_matrix(*e.group, *g.vertices[e.end(side)].group, e.attach(side));
      const int r0 = mv.row_offset[e.end(side)], c0 = mv.col_offset[ei];
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
          unsigned& x = mv.map.at(r0 + i, c0 + j);
          x = side == 1 ? (x + c.at(i, j)) % g.prime : mod_p(static_cast<long long>(x) - c.at(i, j), g.prime);
        }
    }
  }
  mv.kernel = mv.map.kernel();
  mv.injective = mv.kernel.empty();
  return mv;
}

Presentation replay_tietze(const Presentation& p, unsigned prime, const std::vector<TietzeStep>& steps) {
  Presentation q = p;
  for (const auto& s : steps) {
    auto git = std::find(q.generators.begin(), q.generators.end(), s.generator);
    if (git == q.generators.end()) fail(ErrorCode::InvalidArgument, "tietze: no generator " + s.generator);
    if (s.relation < 0 || s.relation >= static_cast<int>(q.relations.size()))
      fail(ErrorCode::InvalidArgument, "tietze: no relation " + std::to_string(s.relation));
    for (std::size_t i = 0; i < q.relations.size(); ++i) {
      if (static_cast<int>(i) == s.relation) continue;
      const SymWord rel = q.relations[i].relator();
      for (const auto& l : rel.letters())
        if (l.sym == s.generator)
          fail(ErrorCode::InvalidArgument, "tietze: " + s.generator + " occurs in relation " + std::to_string(i));
    }
    long sum = 0;
    const SymWord rel = q.relations[s.relation].relator();
    for (const auto& l : rel.letters())
      if (l.sym == s.generator) sum += l.exp;
    if (mod_p(sum, prime) == 0)
      fail(ErrorCode::InvalidArgument, "tietze: exponent sum of " + s.generator + " is not a unit");
    q.generators.erase(git);
    q.relations.erase(q.relations.begin() + s.relation);
  }
  return q;
}

const char* split_status_name(SplitStatus s) {
  switch (s) {
    case SplitStatus::Splits: return "Splits";
    case SplitStatus::NoSplit: return "NoSplit";
    case SplitStatus::FreeOfRank: return "FreeOfRank";
    case SplitStatus::NotFree: return "NotFree";
    case SplitStatus::Undecided: return "Undecided";
  }
  return "?";
}

bool verify_free_basis(const GraphOfGroups& g, const SplitResult& r, std::string* why) {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!r.free) return bad("no free verdict");
  Presentation P = fundamental_presentation(g);
  Presentation Q;
  try {
    Q = replay_tietze(P, g.prime, r.transcript);
  } catch (const Error& e) {
    return bad(e.what());
  }
  for (const auto& rel : Q.relations)
    if (!rel.relator().empty()) return bad("relations survive the transcript");
  std::set<std::string> left(Q.generators.begin(), Q.generators.end()), claimed;
  for (const auto& b : r.basis) {
    if (b.size() != 1) return bad("basis element " + to_string(b) + " is not a generator");
    claimed.insert(b.letters()[0].sym);
  }
  if (left != claimed || static_cast<int>(claimed.size()) != r.rank) return bad("basis differs from the generators left");
  FpQuotient A = abelianization_mod_p(P, g.prime);
  if (static_cast<int>(A.dim()) != r.rank) return bad("dim H1 is " + std::to_string(A.dim()));
  std::vector<FpVector> cols;
  for (const auto& b : r.basis) cols.push_back(A.project(exponent_vector(b, P.generators, g.prime)));
  if (!cols.empty() && !FpMatrix::from_columns(g.prime, A.dim(), cols).invertible())
    return bad("basis does not span H1");
  if (!mayer_vietoris_edge_map(g).injective) return bad("Mayer-Vietoris map not injective");
  return true;
}

GraphOfGroups cyclic_amalgam(const FreeGroup& f1, const FreeGroup& f2, const Word& c1, const Word& c2) {
  if (c1.empty() || c2.empty()) fail(ErrorCode::TrivialEdgeWord, "edge words must be nontrivial");
  GraphOfGroups g;
  g.prime = f1.prime();
  g.vertices = {{"F1", Group::free(f1)}, {"F2", Group::free(f2)}};
  g.edges.push_back({"e", 0, 1, Group::free(FreeGroup(g.prime, {"c"})), {f1.to_sym(c1)}, {f2.to_sym(c2)}});
  return g;
}

GraphOfGroups cyclic_hnn(const FreeGroup& f, const Word& c, const Word& ct) {
  if (c.empty() || ct.empty()) fail(ErrorCode::TrivialEdgeWord, "edge words must be nontrivial");
  GraphOfGroups g;
  g.prime = f.prime();
  g.vertices = {{"F", Group::free(f)}};
  g.edges.push_back({"e", 0, 0, Group::free(FreeGroup(g.prime, {"c"})), {f.to_sym(c)}, {f.to_sym(ct)}});
  return g;
}

SplitResult amalgam_free_splitting(const FreeGroup& f1, const FreeGroup& f2, const Word& c1, const Word& c2) {
  return amalgam_free_splitting(cyclic_amalgam(f1, f2, c1, c2));
}

SplitResult amalgam_free_splitting(const GraphOfGroups& g) {
  if (g.vertices.size() != 2 || g.edges.size() != 1 || g.edges[0].is_loop())
    fail(ErrorCode::NotOneEdge, "expected a single edge between two vertices");
  const FreeGroup* F[2] = {&free_vertex(g, g.edges[0].from), &free_vertex(g, g.edges[0].to)};
  if (!cyclic_edge(g, 0)) fail(ErrorCode::TrivialEdgeWord, "edge group is trivial");
  Word c[2] = {end_word(g, 0, 0), end_word(g, 0, 1)};
  const std::string vname[2] = {g.vertices[g.edges[0].from].name, g.vertices[g.edges[0].to].name};
  const SymWord C = SymWord::symbol(g.edges[0].group->symbols()[0]);

  SplitResult r;
  bool primitive[2], in_factor[2];
  Word rt[2];
  for (int i = 0; i < 2; ++i) {
    primitive[i] = !vec(*F[i], c[i]).is_zero();
    int k = 1;
    rt[i] = root(c[i], &k);
    // C lies in a proper free factor iff its root is primitive
    in_factor[i] = F[i]->rank() >= 2 && !vec(*F[i], rt[i]).is_zero();
  }
  r.c1 = primitive[0] ? std::vector<SymWord>{C} : std::vector<SymWord>{};
  r.c2 = primitive[1] ? std::vector<SymWord>{C} : std::vector<SymWord>{};
  r.c1p = primitive[0] && !primitive[1] ? std::vector<SymWord>{C} : std::vector<SymWord>{};
  r.c2p = primitive[1] && !primitive[0] ? std::vector<SymWord>{C} : std::vector<SymWord>{};

  int side = in_factor[0] ? 0 : in_factor[1] ? 1 : -1;
  if (primitive[0] || primitive[1]) side = primitive[0] ? 0 : 1;
  if (side < 0) {
    r.status = SplitStatus::NoSplit;
    bool frattini = !primitive[0] && !primitive[1];
    std::string why;
    for (int i = 0; i < 2; ++i) {
      if (i) why += "; ";
      why += F[i]->rank() < 2 ? vname[i] + " has rank " + std::to_string(F[i]->rank())
                              : "root " + F[i]->format(rt[i]) + " of " + F[i]->format(c[i]) + " lies in Φ(" + vname[i] + ")";
    }
    r.witness = (frattini ? "C ≤ Φ(" + vname[0] + ") ∩ Φ(" + vname[1] + "); " : "") + why +
                ", so C lies in no proper free factor";
    return r;
  }
  r.status = SplitStatus::Splits;
  r.factor_vertex = vname[side];
  r.factor_basis = factor_basis(*F[side], rt[side]);
  r.witness = vname[side] + " = " + join_basis(r.factor_basis) + ", C ≤ ⟨" + to_string(r.factor_basis[0]) + "⟩";
  if (primitive[side])
    solve_relation(g, r, "c" + std::to_string(side + 1) + " is a free factor of " + vname[side] +
                             "; drop the generator and the edge relation");
  return r;
}

SplitResult hnn_free_splitting(const FreeGroup& f, const Word& c, const Word& ct) {
  return hnn_free_splitting(cyclic_hnn(f, c, ct));
}

SplitResult hnn_free_splitting(const GraphOfGroups& g) {
  if (g.vertices.size() != 1 || g.edges.size() != 1) fail(ErrorCode::NotOneLoop, "expected one vertex with one loop");
  const FreeGroup& F = free_vertex(g, 0);
  if (!cyclic_edge(g, 0)) fail(ErrorCode::TrivialEdgeWord, "edge group is trivial");
  Word c = end_word(g, 0, 0), ct = end_word(g, 0, 1);
  FpVector v = vec(F, c), vt = vec(F, ct);
  const SymWord C = SymWord::symbol(g.edges[0].group->symbols()[0]);
  const std::string& name = g.vertices[0].name;

  SplitResult r;
  r.c1 = v.is_zero() ? std::vector<SymWord>{} : std::vector<SymWord>{C};
  r.c2 = v.is_zero() ? std::vector<SymWord>{C} : std::vector<SymWord>{};
  if (v == vt) {
    r.status = SplitStatus::NotFree;
    r.witness = "CΦ(" + name + ") = C^tΦ(" + name + "): both words have exponent vector " + to_string(v);
    return r;
  }
  r.status = SplitStatus::FreeOfRank;
  const Word& prim = v.is_zero() ? ct : c;
  r.factor_vertex = name;
  r.factor_basis = factor_basis(F, prim);
  std::string note = !vt.is_zero() && !v.is_zero() ? "case 1: c_t outside Φ with a different vector"
                                                   : "case 2: one word lies in Φ; substitute through the stable letter";
  solve_relation(g, r, note);
  r.witness = "CΦ(" + name + ") ≠ C^tΦ(" + name + "); free of rank " + std::to_string(r.rank);
  return r;
}

SplitResult hnn_one_loop_decision(const GraphOfGroups& g) {
  if (g.vertices.size() != 1 || g.edges.size() != 1) fail(ErrorCode::NotOneLoop, "expected one vertex with one loop");
  const Group& V = *g.vertices[0].group;
  const Group& E = *g.edges[0].group;
  const std::string& name = g.vertices[0].name;
  SplitResult r;
  if (E.is_trivial()) {
    r.status = SplitStatus::Splits;
    r.witness = "trivial edge group: G = " + name + " ⨿ ⟨" + GraphOfGroups::stable_letter(g.edges[0].name) + "⟩";
    if (V.kind() == Group::Kind::Free) {
      r.free = true;
      for (const auto& s : fundamental_presentation(g).generators) r.basis.push_back(SymWord::symbol(s));
      r.rank = static_cast<int>(r.basis.size());
    }
    return r;
  }
  if (V.kind() == Group::Kind::Finite) {
    r.status = SplitStatus::NoSplit;
    r.witness = "finite vertex group " + name + " has no proper free factor meeting the edge group";
    return r;
  }
  if (V.kind() != Group::Kind::Free) fail(ErrorCode::NonFreeVertex, "vertex group must be free or finite");
  r = hnn_free_splitting(g);
  if (r.status != SplitStatus::NotFree) return r;

  const FreeGroup& F = V.as_free();
  Word c = end_word(g, 0, 0), ct = end_word(g, 0, 1);
  Word rc = root(c), rct = root(ct);
  bool fc = F.rank() >= 2 && !vec(F, rc).is_zero(), fct = F.rank() >= 2 && !vec(F, rct).is_zero();
  if (!fc && !fct) {
    r.status = SplitStatus::NoSplit;
    r.witness += "; neither C nor C^t lies in a proper free factor";
    return r;
  }
  // t' = t w with c_t = w c^{±1} w^-1 turns the loop into a centralizer
  if (fc && (conjugator(c, ct) || conjugator(c.inverse(), ct))) {
    r.status = SplitStatus::Splits;
    r.factor_vertex = name;
    r.factor_basis = factor_basis(F, rc);
    r.witness += "; c_t is conjugate to c^{±1}, so G = ⟨" + to_string(r.factor_basis[0]) + ", t⟩ ⨿ rest of " +
                 join_basis(std::vector<SymWord>(r.factor_basis.begin() + 1, r.factor_basis.end()));
    return r;
  }
  r.status = SplitStatus::Undecided;
  r.witness += "; C or C^t lies in a proper free factor, which is necessary but not sufficient";
  return r;
}

RelativeSplit relative_split(const std::string& vertex, const FreeGroup& f, const std::vector<SymWord>& family) {
  RelativeSplit out;
  out.vertex = vertex;
  out.family = family;
  const unsigned p = f.prime();
  const std::size_t n = f.rank();
  std::vector<FpVector> vs;
  for (const auto& w : family) vs.push_back(exponent_vector(w, f.names(), p));
  if (span_rank(p, n, vs) != vs.size()) {
    out.note = "family images are dependent in H1(" + vertex + ")";
    return out;
  }
  out.basis = family;
  for (std::size_t i = 0; i < n && vs.size() < n; ++i) {
    FpVector e(p, n);
    e.coords[i] = 1;
    vs.push_back(e);
    if (span_rank(p, n, vs) == vs.size())
      out.basis.push_back(SymWord::symbol(f.names()[i]));
    else
      vs.pop_back();
  }
  out.ok = true;
  out.proper = out.basis.size() > out.family.size();
  out.note = vertex + " = " + join_basis(out.basis);
  return out;
}

StarSplitting star_splitting(const GraphOfGroups& g) {
  const int nv = static_cast<int>(g.vertices.size());
  int center = -1;
  for (int c = 0; c < nv && center < 0; ++c) {
    bool ok = true;
    std::vector<int> deg(nv, 0);
    for (const auto& e : g.edges) {
      if (e.from != c && e.to != c) ok = false;
      if (!e.is_loop()) ++deg[e.from == c ? e.to : e.from];
    }
    for (int v = 0; v < nv; ++v)
      if (v != c && deg[v] != 1) ok = false;
    if (ok) center = c;
  }
  if (center < 0) fail(ErrorCode::NotStar, "underlying graph is not a star");
  for (int v = 0; v < nv; ++v) free_vertex(g, v);
  for (const auto& e : g.edges)
    if (e.group->kind() != Group::Kind::Free)
      fail(ErrorCode::NonFreeVertex, "edge " + e.name + " does not carry a free group");

  StarSplitting out;
  out.center = g.vertices[center].name;
  out.mv_injective = mayer_vietoris_edge_map(g).injective;
  const unsigned p = g.prime;
  const FreeGroup& Fc = g.vertices[center].group->as_free();
  std::vector<SymWord> center_family;
  std::map<int, std::vector<SymWord>> pending_family;

  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const Edge& e = g.edges[ei];
    const FreeGroup& E = e.group->as_free();
    const std::size_t m = E.rank();
    // the center plays the role of d0
    const int cs = e.from == center ? 0 : 1, os = 1 - cs;
    FpMatrix cor0 = corestriction_matrix(*e.group, *g.vertices[e.end(cs)].group, e.attach(cs));
    std::vector<FpVector> ker = cor0.kernel();
    std::vector<FpVector> all = ker;
    std::vector<FpVector> comp;
    for (std::size_t i = 0; i < m && all.size() < m; ++i) {
      FpVector x(p, m);
      x.coords[i] = 1;
      all.push_back(x);
      if (span_rank(p, m, all) == all.size())
        comp.push_back(x);
      else
        all.pop_back();
    }
    auto lift = [&](const FpVector& x) {
      SymWord w;
      for (std::size_t i = 0; i < m; ++i) w *= SymWord::symbol(E.names()[i]).power(x.coords[i]);
      return w;
    };
    StarEdgeSplit s;
    s.edge = e.name;
    for (const auto& x : ker) s.f1.push_back(lift(x));
    for (const auto& x : comp) s.f0.push_back(lift(x));
    std::map<std::string, SymWord> to_c, to_o;
    for (std::size_t i = 0; i < m; ++i) {
      to_c[E.names()[i]] = e.attach(cs)[i];
      to_o[E.names()[i]] = e.attach(os)[i];
    }
    for (const auto& w : s.f0) center_family.push_back(substitute(w, to_c));
    if (e.is_loop()) {
      for (const auto& w : s.f1) center_family.push_back(substitute(w, to_o));
    } else {
      auto& fam = pending_family[e.end(os)];
      for (const auto& w : s.f1) fam.push_back(substitute(w, to_o));
    }
    out.edges.push_back(std::move(s));
  }
  out.center_split = relative_split(out.center, Fc, center_family);
  for (int v = 0; v < nv; ++v) {
    if (v == center) continue;
    out.pending.push_back(relative_split(g.vertices[v].name, g.vertices[v].group->as_free(), pending_family[v]));
  }
  return out;
}

RelativeSplit tree_vertex_relative_split(const GraphOfGroups& g) {
  if (g.betti() != 0 || !g.connected()) fail(ErrorCode::NotTree, "underlying graph is not a tree");
  const int nv = static_cast<int>(g.vertices.size());
  for (int v = 0; v < nv; ++v) free_vertex(g, v);
  for (std::size_t e = 0; e < g.edges.size(); ++e) cyclic_edge(g, static_cast<int>(e));

  // pending vertices first, as in the induction
  std::vector<int> order;
  for (int v = 0; v < nv; ++v)
    if (g.incident(v).size() <= 1) order.push_back(v);
  for (int v = 0; v < nv; ++v)
    if (g.incident(v).size() > 1) order.push_back(v);

  std::string notes;
  for (int v : order) {
    const FreeGroup& F = g.vertices[v].group->as_free();
    std::vector<SymWord> family;
    bool frattini = false;
    for (auto [e, side] : g.incident(v)) {
      if (g.edges[e].group->is_trivial()) continue;
      const SymWord& w = g.edges[e].attach(side)[0];
      if (exponent_vector(w, F.names(), g.prime).is_zero()) frattini = true;
      family.push_back(w);
    }
    if (frattini) {
      notes += g.vertices[v].name + ": an incident edge image lies in Φ; ";
      continue;
    }
    RelativeSplit r = relative_split(g.vertices[v].name, F, family);
    if (r.ok) return r;
    notes += r.note + "; ";
  }
  auto mv = mayer_vietoris_edge_map(g);
  fail(ErrorCode::NoSuchVertex, "no vertex splits relative to its incident edge groups (" + notes +
                                    (mv.injective ? "Mayer-Vietoris map injective)"
                                                  : "Mayer-Vietoris map has a kernel, so the group is not free)"));
}

}  // namespace propp
