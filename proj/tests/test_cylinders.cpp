#include <functional>
#include <map>

#include "doctest.h"
#include "propp/cylinders.hpp"
#include "propp/error.hpp"
#include "propp/presentation.hpp"
#include "samples.hpp"

using namespace propp;
using samples::fixture;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

SymWord substitute(const SymWord& w, const std::map<std::string, SymWord>& m) {
  SymWord out;
  for (const auto& l : w.letters()) {
    auto it = m.find(l.sym);
    SymWord x = it == m.end() ? SymWord::symbol(l.sym) : it->second;
    out *= l.exp > 0 ? x : x.inverse();
  }
  return out;
}

// Brute-force normalizer order of <h> in a finite group, from the table.
int normalizer_order(const FiniteGroup& G, int h) {
  std::vector<int> H{G.identity()};
  for (int x = h; x != G.identity(); x = G.mul(x, h)) H.push_back(x);
  int count = 0;
  for (int x = 0; x < G.order(); ++x) {
    int c = G.mul(G.mul(x, h), G.inv(x));
    if (std::find(H.begin(), H.end(), c) != H.end()) ++count;
  }
  return count;
}

long edge_order(const GraphOfGroups& g, int e) { return *g.edges[e].group->order(); }

// Shape of a graph of groups with group orders, nested graphs included.
std::string signature(const GraphOfGroups& g) {
  auto order = [](const Group& G) {
    if (G.kind() == Group::Kind::Composite) return "[" + signature(G.as_composite()) + "]";
    auto o = G.order();
    return o ? std::to_string(*o) : std::string("inf");
  };
  std::string s;
  for (const auto& v : g.vertices) s += "v" + order(*v.group) + ";";
  for (const auto& e : g.edges)
    s += "e" + std::to_string(e.from) + ">" + std::to_string(e.to) + ":" + order(*e.group) + ";";
  return s;
}

const char* kFixtures[] = {"amalg_c4_c2_c4", "amalg_d4_s_d4",       "hnn_d4_nonconj", "hnn_d4_conj",
                           "hnn_c4_central", "amalg_free_malnormal", "hnn_free_cyclic", "star_free",
                           "path_free3",     "free_product_c2",      "amalg_free_split"};

}  // namespace

TEST_CASE("amalgam with central edge group is totally reduced") {
  auto tc = tree_of_cylinders(fixture("amalg_c4_c2_c4"));
  CHECK(tc.graph.vertices.size() == 3);
  CHECK(tc.graph.edges.size() == 2);
  CHECK(tc.v0_count == 2);
  CHECK(tc.graph.vertices[2].name == "cyl0");
  CHECK(edge_order(tc.graph, 0) == 4);
  CHECK(tc.reduced.vertices.size() == 1);
  CHECK(tc.reduced.edges.empty());
  CHECK(tc.dot_ids().at("cyl0") == "cyl:0");
}

TEST_CASE("reflection amalgam gives the normalizer path") {
  auto g = fixture("amalg_d4_s_d4");
  auto tc = tree_of_cylinders(g);
  const auto& G = g.vertices[0].group->as_finite();
  const int expected = normalizer_order(G, G.evaluate(parse_symword("s")));
  CHECK(expected == 4);
  REQUIRE(tc.graph.vertices.size() == 3);
  REQUIRE(tc.graph.edges.size() == 2);
  for (int e = 0; e < 2; ++e) {
    CHECK(edge_order(tc.graph, e) == expected);
    CHECK(tc.graph.edges[e].to == 2);
  }
  const auto& mid = tc.graph.vertices[2].group->as_composite();
  REQUIRE(mid.vertices.size() == 2);
  REQUIRE(mid.edges.size() == 1);
  CHECK(*mid.vertices[0].group->order() == 4);
  CHECK(*mid.vertices[1].group->order() == 4);
  CHECK(*mid.edges[0].group->order() == 2);
  CHECK(tc.reduced.edges.size() == 2);
}

TEST_CASE("HNN dichotomy") {
  auto one = tree_of_cylinders(fixture("hnn_d4_nonconj"));
  CHECK(one.graph.vertices.size() == 2);
  CHECK(one.graph.edges.size() == 2);
  auto two = tree_of_cylinders(fixture("hnn_d4_conj"));
  CHECK(two.graph.vertices.size() == 2);
  REQUIRE(two.graph.edges.size() == 1);
  const auto& inner = two.graph.vertices[1].group->as_composite();
  REQUIRE(inner.edges.size() == 1);
  CHECK(inner.edges[0].is_loop());
}

TEST_CASE("symbol maps are inverse isomorphisms") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto g = fixture(name);
    auto tc = tree_of_cylinders(g);
    StandardTree src(g), dst(tc.graph);
    // relators of the quotient go to the identity of the input
    for (const auto& r : fundamental_presentation(tc.graph).relators())
      CHECK(src.element(substitute(r, tc.to_source)) == src.base_point());
    // input stable letters come back
    for (const auto& [sym, w] : tc.graph.aliases) CHECK(src.element(substitute(w, tc.to_source)) == src.element(SymWord::symbol(sym)));
    bool reverse = !tc.graph.aliases.empty() || g.betti() == 0;
    if (!reverse) continue;
    for (const auto& [sym, w] : tc.to_source)
      CHECK(dst.element(substitute(w, tc.graph.aliases)) == dst.element(SymWord::symbol(sym)));
  }
}

TEST_CASE("quotient invariants") {
  for (const char* name : kFixtures) {
    CAPTURE(name);
    auto g = fixture(name);
    auto tc = tree_of_cylinders(g);
    for (const auto& e : tc.graph.edges) {
      CHECK_FALSE(tc.is_cylinder(e.from));
      CHECK(tc.is_cylinder(e.to));
    }
    if (g.betti() == 0) CHECK(tc.graph.betti() == 0);
    for (int v = 0; v < tc.v0_count; ++v) CHECK(tc.graph.vertices[v].group->same_as(*g.vertices[v].group));
    CHECK(rank_mod_p(tc.graph) == rank_mod_p(g));
  }
}

TEST_CASE("refining the cylinder and reducing returns the amalgam") {
  for (const char* name : {"amalg_d4_s_d4", "amalg_free_malnormal"}) {
    CAPTURE(name);
    auto g = fixture(name);
    auto tc = tree_of_cylinders(g);
    const auto& inner = tc.graph.vertices[2].group->as_composite();
    auto refined = refine_at_vertex(tc.graph, "cyl0", inner, default_attach_map(tc.graph, "cyl0", inner));
    CHECK(refined.vertices.size() == 4);
    auto [red, trace] = reduce(refined);
    CHECK(isomorphic(red, g));
  }
}

TEST_CASE("conjugated edge groups give isomorphic quotients") {
  auto g = fixture("amalg_d4_s_d4");
  auto h = g;
  h.edges[0].attach_to = {parse_symword("r s r^-1")};
  auto a = tree_of_cylinders(g), b = tree_of_cylinders(h);
  CHECK(signature(a.graph) == signature(b.graph));
  CHECK(signature(a.reduced) == signature(b.reduced));
}

TEST_CASE("admissibility") {
  CHECK(check_admissible(fixture("amalg_d4_s_d4"), EdgeRelation::equality(), 2).status == Status::ProvenYes);
  auto corrupt = fixture("audit_corrupt");
  CHECK(check_admissible(corrupt, EdgeRelation::equality(), 2).status == Status::ProvenYes);
  auto split = check_admissible(corrupt, EdgeRelation::partition({0, 1}), 2);
  CHECK(split.status == Status::ProvenNo);
  CHECK(split.witness.find("nesting") == 0);
  CHECK(check_admissible(corrupt, EdgeRelation::partition({0, 0}), 2).status == Status::Unknown);
  CHECK(check_admissible(corrupt, EdgeRelation::commensurability(), 2).status == Status::ProvenYes);
  CHECK(check_admissible(fixture("amalg_free_malnormal"), EdgeRelation::commensurability(), 2).status ==
        Status::Unknown);
  CHECK(code_of([] { tree_of_cylinders(fixture("amalg_d4_s_d4"), EdgeRelation::commensurability()); }) ==
        ErrorCode::UnsupportedRelation);
}

TEST_CASE("cylinder partitions of balls") {
  auto c4 = cylinder_partition(tree_ball(fixture("amalg_c4_c2_c4"), 2), EdgeRelation::equality());
  CHECK(c4.members.size() == 1);
  auto triv = cylinder_partition(tree_ball(fixture("free_product_c2"), 2), EdgeRelation::equality());
  CHECK(triv.members.size() == 1);
  auto mal_ball = tree_ball(fixture("amalg_free_malnormal"), 2);
  auto mal = cylinder_partition(mal_ball, EdgeRelation::equality());
  CHECK(mal.members.size() == mal_ball.edges.size());
  for (const char* name : {"amalg_d4_s_d4", "hnn_d4_nonconj", "hnn_d4_conj"}) {
    auto p = cylinder_partition(tree_ball(fixture(name), 3), EdgeRelation::equality());
    CHECK(p.subtrees);
    CHECK(p.meet_once);
    CHECK(p.members.size() > 1);
  }
  auto ball = tree_ball(fixture("audit_corrupt"), 2);
  CHECK(cylinder_partition(ball, EdgeRelation::commensurability()).members.size() == 1);
  CHECK(code_of([&] { cylinder_partition(ball, EdgeRelation::partition({0, 1})); }) == ErrorCode::NotAdmissible);
}

TEST_CASE("Aut splitting shapes") {
  auto g = fixture("amalg_d4_s_d4");
  auto three = aut_splitting_shape(g, true, true, false);
  CHECK(three.text == "Aut(G) = Aut_G(G1) ⨿_{Aut_G(G1) ∩ Aut_G(N_G(H))} Aut_G(N_G(H)) ⨿_{Aut_G(G2) ∩ "
                      "Aut_G(N_G(H))} Aut_G(G2)");
  auto two = aut_splitting_shape(g, true, true, true);
  CHECK(two.text == "Aut(G) = Aut_G(G1) ⨿_{Aut_G(G1) ∩ Aut_G(N_G(H))} Aut_G(N_G(H))");
  CHECK(two.sexpr == "(amalgam (Aut G1) (cap (Aut G1) (Aut (N G H))) (Aut (N G H)))");
  auto mal = aut_splitting_shape(fixture("amalg_free_malnormal"), true, true, false);
  CHECK(mal.malnormal1);
  CHECK(mal.malnormal2);
  CHECK(mal.text == "Aut(G) = Aut_G(A) ⨿_{Aut_G(H)} Aut_G(B)");
  CHECK_FALSE(aut_splitting_shape(g, false, true, false).applies);
  CHECK(code_of([] { aut_splitting_shape(fixture("hnn_d4_conj"), true, true, false); }) == ErrorCode::NotOneEdge);
}
