// Acceptance run: one PASS/FAIL line per criterion, with its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "propp/bass_serre.hpp"
#include "propp/cylinders.hpp"
#include "propp/error.hpp"
#include "propp/gog_ops.hpp"
#include "propp/homology.hpp"
#include "propp/jsj.hpp"
#include "samples.hpp"

using namespace propp;
using samples::fixture;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Brute-force normalizer order of <h> in a finite group.
int normalizer_order_brute(const FiniteGroup& g, int h) {
  std::set<int> H;
  for (int x = h;; x = g.mul(x, h)) {
    H.insert(x);
    if (x == g.identity()) break;
  }
  int n = 0;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : H) ok = ok && H.count(g.mul(g.mul(x, y), g.inv(x)));
    n += ok;
  }
  return n;
}

long edge_order(const GraphOfGroups& g, int e) { return g.edges[e].group->order().value_or(0); }

Outcome c1() {
  Outcome o;
  GraphOfGroups g = fixture("amalg_d4_s_d4");
  const auto& G = g.vertices[0].group->as_finite();
  const int expected = normalizer_order_brute(G, G.evaluate(parse_symword("s")));
  auto tc = tree_of_cylinders(g);
  o.require(expected == 4, "brute-force normalizer order is not 4");
  o.require(tc.graph.vertices.size() == 3 && tc.graph.edges.size() == 2, "not a 3-vertex path");
  if (!o.ok) return o;
  for (int e = 0; e < 2; ++e) {
    o.require(edge_order(tc.graph, e) == expected, "edge group order differs from the normalizer");
    o.require(tc.graph.edges[e].to == 2 && tc.graph.edges[e].from != 2, "edges do not meet at the cylinder");
  }
  const auto& mid = tc.graph.vertices[2].group;
  o.require(mid->kind() == Group::Kind::Composite, "middle vertex is not a graph of groups");
  if (!o.ok) return o;
  const auto& m = mid->as_composite();
  o.require(m.vertices.size() == 2 && m.edges.size() == 1, "middle group is not a one-edge amalgam");
  if (!o.ok) return o;
  o.require(m.vertices[0].group->order() == std::optional<long>(expected) &&
                m.vertices[1].group->order() == std::optional<long>(expected),
            "middle factors are not the normalizers");
  o.require(m.edges[0].group->order() == std::optional<long>(2), "middle amalgamated subgroup is not H");
  o.detail = "path G1 - cyl0 - G2, edge groups of order " + std::to_string(expected);
  return o;
}

Outcome c2() {
  Outcome o;
  auto tc = tree_of_cylinders(fixture("amalg_c4_c2_c4"));
  o.require(tc.reduced.vertices.size() == 1 && tc.reduced.edges.empty(), "reduced quotient is not a single vertex");
  o.detail = "reduced quotient: 1 vertex, 0 edges";
  return o;
}

Outcome c3() {
  Outcome o;
  auto one = tree_of_cylinders(fixture("hnn_d4_nonconj"));
  auto two = tree_of_cylinders(fixture("hnn_d4_conj"));
  o.require(one.graph.edges.size() == 2, "non-conjugate case does not give two edges");
  o.require(two.graph.edges.size() == 1, "conjugate case does not give one edge");
  o.detail = "non-conjugate: " + std::to_string(one.graph.edges.size()) +
             " edges, conjugate: " + std::to_string(two.graph.edges.size()) + " edge";
  return o;
}

Outcome c4() {
  Outcome o;
  GraphOfGroups g = fixture("hnn_free_cyclic");
  o.require(g.edges.size() == 1 && to_string(g.edges[0].attach_from[0]) == "b" &&
                g.edges[0].group->kind() == Group::Kind::Free,
            "fixture is not the expected HNN extension");
  SplitResult r = hnn_free_splitting(g);
  std::string why;
  o.require(r.status == SplitStatus::FreeOfRank && r.rank == 2, "not FreeOfRank(2)");
  o.require(verify_free_basis(g, r, &why), "basis verification failed: " + why);
  o.require(mayer_vietoris_edge_map(g).injective, "Mayer-Vietoris map not injective");
  if (o.ok) o.detail = "FreeOfRank(2), transcript of " + std::to_string(r.transcript.size()) + " step(s) verified";
  return o;
}

Outcome c5() {
  Outcome o;
  FreeGroup F1(2, {"a", "b"}), F2(2, {"x", "y"});
  SplitResult r = amalgam_free_splitting(F1, F2, F1.parse(parse_symword("a^2 [a,b]")), F2.parse(parse_symword("x^2 [x,y]")));
  o.require(r.status == SplitStatus::NoSplit, "expected NoSplit");
  SplitResult f = amalgam_free_splitting(fixture("amalg_free_frattini"));
  o.require(f.status == SplitStatus::NoSplit, "fixture verdict is not NoSplit");
  if (o.ok) o.detail = "NoSplit";
  return o;
}

Outcome c6() {
  Outcome o;
  long pairs = 0, mismatches = 0;
  for (unsigned p : {2u, 3u}) {
    FiniteGroup q = p == 2 ? FiniteGroup::from_cayley(2, samples::d4().table(), samples::d4().generators(), {"a", "b"})
                           : oracles::heisenberg(3);
    oracles::FreeFactorOracle oracle(q, 6);
    FreeGroup F1(p, {"a", "b"}), F2(p, {"x", "y"});
    auto ws = oracles::reduced_words(2, 4);
    for (const auto& c1 : ws)
      for (const auto& c2 : ws) {
        ++pairs;
        const bool expect = oracle.in_proper_factor(c1) || oracle.in_proper_factor(c2);
        const bool got = amalgam_free_splitting(F1, F2, c1, c2).status == SplitStatus::Splits;
        mismatches += expect != got;
      }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(pairs) + " pairs disagree");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, 100% agreement";
  return o;
}

Outcome c7(unsigned long seed) {
  Outcome o;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  int violations = 0, graphs = 0;
  std::string first;
  auto audit = [&](const GraphOfGroups& raw) {
    validate(raw);
    GraphOfGroups g = reduce(raw).first;
    AccessibilityReport rep = accessibility_audit(g);
    ++graphs;
    if (!rep.ok) {
      ++violations;
      for (const auto& b : rep.bounds)
        if (!b.pass && first.empty()) first = b.name;
    }
  };
  for (int i = 0; i < 100; ++i) audit(gen::finite_graph(rng, i % 4 == 3 ? 3 : 2, 5, 6));
  for (int i = 0; i < 100; ++i) audit(gen::free_graph(rng, i % 4 == 3 ? 3 : 2, 4, 6));
  o.require(violations == 0, std::to_string(violations) + " violations, first: " + first);
  if (o.ok) o.detail = std::to_string(graphs) + " reduced graphs, 0 violations";
  return o;
}

// Independent model of the tree of C4 *_{C2} C4: the quotient by the centre
// is the infinite dihedral group acting on the line, G1.a as x -> -x and
// G2.a as x -> 2 - x. Vertex cosets are the orbit points, edge cosets the
// images of [0, 1].
struct Affine {
  int sign = 1, shift = 0;
  int operator()(int x) const { return sign * x + shift; }
};

Affine act(const SymWord& w) {
  Affine m;
  for (const auto& l : w.letters()) {
    Affine g = l.sym == "G1.a" ? Affine{-1, 0} : Affine{-1, 2};
    m = {m.sign * g.sign, m.sign * g.shift + m.shift};
  }
  return m;
}

Outcome c8() {
  Outcome o;
  const int r = 3;
  GraphOfGroups g = fixture("amalg_c4_c2_c4");
  TreeBall ball = tree_ball(g, r);
  const StandardTree& t = *ball.tree;
  const auto& pg = t.pg();
  // coset enumeration in the line model
  std::set<int> points;
  std::set<std::pair<int, int>> segments;
  std::vector<Affine> layer{Affine{}};
  std::set<std::pair<int, int>> seen{{1, 0}};
  for (int len = 0; len <= 2 * r + 2; ++len) {
    std::vector<Affine> next;
    for (const auto& m : layer) {
      for (int x : {m(0), m(1)})
        if (std::abs(x) <= r) points.insert(x);
      if (std::abs(m(0)) <= r && std::abs(m(1)) <= r) segments.insert(std::minmax(m(0), m(1)));
      for (Affine gen : {Affine{-1, 0}, Affine{-1, 2}}) {
        Affine n{m.sign * gen.sign, m.sign * gen.shift + m.shift};
        if (seen.insert({n.sign, n.shift}).second) next.push_back(n);
      }
    }
    layer = std::move(next);
  }
  o.require(ball.vertices.size() == points.size(), "vertex count " + std::to_string(ball.vertices.size()) +
                                                       " vs oracle " + std::to_string(points.size()));
  o.require(ball.edges.size() == segments.size(), "edge count " + std::to_string(ball.edges.size()) + " vs oracle " +
                                                      std::to_string(segments.size()));
  std::vector<int> pos(ball.vertices.size());
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto& v = ball.vertices[i];
    pos[i] = act(t.word(t.coset_element(v.path)))(v.vertex == 0 ? 0 : 1);
    o.require(points.count(pos[i]) == 1, "ball vertex outside the oracle's ball");
    if (v.depth < r) {
      long expected = 0;
      for (auto [e, side] : g.incident(v.vertex)) expected += pg.index(e, side);
      o.require(static_cast<long>(v.edges.size()) == expected, "degree differs from the edge-image index");
    }
  }
  for (const auto& e : ball.edges) {
    const auto& ed = g.edges[e.edge];
    PathElem v0 = t.vertex_of(pg.multiply(e.g, pg.gamma(ed.from)));
    PathElem v1 = t.vertex_of(pg.multiply(pg.multiply(e.g, t.stable_element(e.edge)), pg.gamma(ed.to)));
    o.require(ball.vertices[e.d0].path == v0 && ball.vertices[e.d1].path == v1, "incidence formula fails");
    Affine m = act(t.word(e.g));
    o.require(pos[e.d0] == m(0) && pos[e.d1] == m(1), "edge coset disagrees with the line model");
  }
  if (o.ok)
    o.detail = std::to_string(ball.vertices.size()) + " vertices, " + std::to_string(ball.edges.size()) +
               " edges, incidence and degrees exact";
  return o;
}

Outcome c9() {
  Outcome o;
  GraphOfGroups g = fixture("amalg_free_malnormal");
  const auto& e = g.edges[0];
  for (int side = 0; side < 2; ++side) {
    const auto& F = g.vertices[e.end(side)].group->as_free();
    o.require(is_malnormal_free(F.rank(), {F.parse(e.attach(side)[0])}), "edge group not malnormal");
  }
  Verdict yes = check_acylindrical(g, 2, 4);
  o.require(yes.status == Status::ProvenYes, "free amalgam not ProvenYes 2-acylindrical: " + yes.witness);
  Verdict no = check_acylindrical(fixture("amalg_c4_c2_c4"), 1, 3);
  o.require(no.status == Status::ProvenNo, "C4 amalgam not ProvenNo for k = 1");
  o.require(no.witness.find("G1.a^2") != std::string::npos, "witness is not the central element");
  if (o.ok) o.detail = "ProvenYes (k=2); ProvenNo (k=1) witnessed by G1.a^2";
  return o;
}

GraphOfGroups random_graph(std::mt19937& rng, int i, double trivial_rate) {
  const unsigned p = i % 4 == 3 ? 3 : 2;
  GraphOfGroups g = i % 2 ? gen::finite_graph(rng, p, 4, 5, trivial_rate) : gen::free_graph(rng, p, 4, 5, trivial_rate);
  validate(g);
  return g;
}

Outcome c10(unsigned long seed) {
  Outcome o;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed) + 1);
  int expansions = 0, collapses = 0;
  for (int i = 0; i < 200 && o.ok; ++i) {
    GraphOfGroups g = random_graph(rng, i, 0.1);
    const std::string tag = "graph " + std::to_string(i) + ": ";
    auto [r, trace] = reduce(g);
    auto [rr, trace2] = reduce(r);
    o.require(trace2.steps.empty() && rr.same_as(r), tag + "reduce is not idempotent");
    o.require(rank_mod_p(r) == rank_mod_p(g), tag + "rank_mod_p changes under reduction");

    // collapse an edge (or everything) and refine back
    std::vector<std::string> verts;
    for (const auto& e : g.edges)
      if (!e.is_loop()) {
        verts = {g.vertices[e.from].name, g.vertices[e.to].name};
        break;
      }
    if (verts.empty())
      for (const auto& v : g.vertices) verts.push_back(v.name);
    GraphOfGroups c = collapse_subgraph(g, verts, {}, "K");
    if (c.same_as(g)) {
      // a lone vertex without edges: collapse is the identity
      ++collapses;
      continue;
    }
    const GraphOfGroups& inner = c.vertices[c.vertex_index("K")].group->as_composite();
    // ends that sat on collapsed vertices go back to the same inner vertex
    AttachMap attach;
    for (const auto& e : c.edges) {
      const auto& orig = g.edges[g.edge_index(e.name)];
      for (int side = 0; side < 2; ++side)
        if (c.vertices[e.end(side)].name == "K") attach[{e.name, side}] = {g.vertices[orig.end(side)].name, {}};
    }
    GraphOfGroups back = refine_at_vertex(c, "K", inner, attach);
    o.require(isomorphic(back, g), tag + "refine does not undo collapse");
    ++collapses;

    // expand at the end of some edge and reduce the new edge
    for (const auto& e : g.edges) {
      if (e.group->is_trivial()) continue;
      const std::string v = g.vertices[e.from].name;
      GraphOfGroups x = expansion_move(g, v, "N", "fnew", e.attach_from, {{e.name, 0}});
      validate(x);
      int side = -1;
      o.require(is_fictitious(x, x.edge_index("fnew"), &side), tag + "new edge is not fictitious");
      o.require(isomorphic(reduction_move(x, "fnew"), g), tag + "reduction does not undo expansion");
      o.require(rank_mod_p(x) == rank_mod_p(g), tag + "rank_mod_p changes under expansion");
      ++expansions;
      break;
    }
  }
  if (o.ok)
    o.detail = "200 graphs, " + std::to_string(collapses) + " collapse/refine and " + std::to_string(expansions) +
               " expansion/reduction round trips";
  return o;
}

Outcome c11() {
  Outcome o;
  const char* names[] = {"amalg_c4_c2_c4",  "amalg_d4_s_d4",   "hnn_d4_nonconj", "hnn_d4_conj",
                         "hnn_c4_central",  "amalg_free_malnormal", "hnn_free_cyclic", "star_free",
                         "path_free3",      "free_product_c2", "amalg_free_split", "amalg_free_frattini",
                         "audit_corrupt"};
  int checks = 0, triples = 0;
  for (const char* name : names) {
    GraphOfGroups t = fixture(name);
    auto tc = tree_of_cylinders(t);
    struct Member {
      std::string label;
      GraphOfGroups g;
      const std::map<std::string, SymWord>* out = nullptr;  // translation into the other members' symbols
    };
    std::vector<Member> fam{{"T", t}, {"Tc", tc.graph, &tc.to_source}, {"red", reduce(t).first}};
    if (t.vertices.size() >= 2) {
      std::vector<std::string> all;
      for (const auto& v : t.vertices) all.push_back(v.name);
      fam.push_back({"point", collapse_subgraph(t, all)});
    }
    const std::size_t n = fam.size();
    std::vector<std::vector<Status>> d(n, std::vector<Status>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = dominates(fam[i].g, fam[j].g, 0, i == j ? nullptr : fam[i].out).overall.status;
    const std::string tag = std::string(name) + ": ";
    for (std::size_t i = 0; i < n; ++i) {
      o.require(d[i][i] == Status::ProvenYes, tag + fam[i].label + " does not dominate itself");
      ++checks;
    }
    o.require(d[0][1] == Status::ProvenYes, tag + "T does not dominate Tc");
    ++checks;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (d[i][j] == Status::ProvenYes && d[j][k] == Status::ProvenYes) {
            ++triples;
            o.require(d[i][k] == Status::ProvenYes,
                      tag + fam[i].label + " > " + fam[j].label + " > " + fam[k].label + " but not transitive");
          }
  }
  if (o.ok)
    o.detail = std::to_string(checks) + " reflexivity/Tc checks, " + std::to_string(triples) + " transitive triples";
  return o;
}

Outcome c12(unsigned long seed) {
  Outcome o;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed) + 2);
  int done = 0;
  for (int i = 0; done < 100; ++i) {
    GraphOfGroups g = random_graph(rng, i, 0.4);
    if (std::none_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.group->is_trivial(); })) continue;
    GrushkoResult gr = grushko_components(g);
    int sum = gr.free_rank;
    for (const auto& part : gr.parts) sum += h1_dim(part);
    o.require(h1_dim(g) == sum, "graph " + std::to_string(i) + ": h1 " + std::to_string(h1_dim(g)) + " vs " +
                                    std::to_string(sum));
    ++done;
  }
  if (o.ok) o.detail = "100 graphs with trivial edges, additive";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  unsigned long seed = argc > 1 ? std::stoul(argv[1]) : 0;
  struct Criterion {
    int id;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, 1.0, c1},   {2, 1.0, c2},   {3, 1.0, c3},
      {4, 1.0, c4},   {5, 1.0, c5},   {6, 300.0, c6},
      {7, 120.0, [&] { return c7(seed); }},   {8, 10.0, c8},  {9, 10.0, c9},
      {10, 120.0, [&] { return c10(seed); }}, {11, 60.0, c11}, {12, 60.0, [&] { return c12(seed); }}};
  int failed = 0;
  for (const auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.ok = false;
      o.detail = std::string(error_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < c.limit;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  (%.3f s, limit %.0f s)  %s\n", c.id, pass ? "PASS" : "FAIL", secs, c.limit,
                o.ok ? o.detail.c_str() : o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
