#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "propp/error.hpp"
#include "propp/gog_ops.hpp"
#include "propp/homology.hpp"
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

FreeGroup fab(unsigned p = 2) { return FreeGroup(p, {"a", "b"}); }
FreeGroup fxy(unsigned p = 2) { return FreeGroup(p, {"x", "y"}); }

std::vector<std::string> words(const std::vector<SymWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

// A free verdict must survive replay and the H1 change of basis.
void check_free(const GraphOfGroups& g, const SplitResult& r) {
  std::string why;
  CHECK_MESSAGE(verify_free_basis(g, r, &why), why);
  CHECK(mayer_vietoris_edge_map(g).injective);
}

}  // namespace

TEST_CASE("h1 dimensions") {
  CHECK(h1_dim(samples::d4()) == 2);
  CHECK(h1_dim(FreeGroup(2, {"a", "b", "c"})) == 3);
  GraphOfGroups g;
  g.prime = 2;
  g.vertices = {{"A", samples::fin(samples::cyclic(4, 2, "a"))}, {"B", samples::fin(samples::cyclic(4, 2, "b"))}};
  g.edges.push_back(samples::edge("e", 0, 1, samples::fin(samples::cyclic(2, 2, "c")), {"a^2"}, {"b^2"}));
  CHECK(h1_dim(g) == 2);
}

TEST_CASE("corestriction matrices") {
  auto C = Group::free(FreeGroup(2, {"c"}));
  auto F = Group::free(fab());
  auto m = corestriction_matrix(*C, *F, {parse_symword("a")});
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 0) == 0);
  auto z = corestriction_matrix(*C, *F, {parse_symword("a^2 [a,b]")});
  CHECK(z.rank() == 0);
  auto sq = corestriction_matrix(*samples::fin(samples::cyclic(2, 2, "c")), *samples::fin(samples::cyclic(4, 2)),
                                 {parse_symword("a^2")});
  CHECK(sq.rank() == 0);
}

TEST_CASE("Mayer-Vietoris edge map") {
  auto prim = cyclic_amalgam(fab(), fxy(), fab().parse("a"), fxy().parse("x"));
  CHECK(mayer_vietoris_edge_map(prim).injective);
  auto frat = mayer_vietoris_edge_map(fixture("amalg_free_frattini"));
  CHECK_FALSE(frat.injective);
  CHECK(frat.kernel.size() == 1);
  auto triv = mayer_vietoris_edge_map(fixture("free_product_c2"));
  CHECK(triv.map.cols() == 0);
  CHECK(triv.injective);
}

TEST_CASE("cyclic amalgams of free groups") {
  SUBCASE("primitive against Frattini") {
    auto r = amalgam_free_splitting(fab(), fxy(), fab().parse("a"), fxy().parse("x^2 [x,y]"));
    CHECK(r.status == SplitStatus::Splits);
    CHECK(r.factor_vertex == "F1");
    CHECK(words(r.factor_basis) == std::vector<std::string>{"a", "b"});
    CHECK(r.rank == 3);
    check_free(cyclic_amalgam(fab(), fxy(), fab().parse("a"), fxy().parse("x^2 [x,y]")), r);
  }
  SUBCASE("both in Frattini") {
    auto r = amalgam_free_splitting(fab(), fxy(), fab().parse("a^2 [a,b]"), fxy().parse("x^2 [x,y]"));
    CHECK(r.status == SplitStatus::NoSplit);
    CHECK(r.witness.find("C ≤ Φ(F1) ∩ Φ(F2)") == 0);
    CHECK(amalgam_free_splitting(fixture("amalg_free_frattini")).status == SplitStatus::NoSplit);
  }
  SUBCASE("both primitive") {
    auto g = cyclic_amalgam(fab(), fxy(), fab().parse("a"), fxy().parse("x"));
    auto r = amalgam_free_splitting(g);
    CHECK(r.status == SplitStatus::Splits);
    REQUIRE(r.transcript.size() == 1);
    CHECK(r.transcript[0].generator == "F2.x");
    CHECK(words(r.basis) == std::vector<std::string>{"F1.a", "F1.b", "F2.y"});
    check_free(g, r);
    CHECK(r.c1.size() == 1);
    CHECK(r.c2.size() == 1);
  }
  SUBCASE("a proper power of a primitive element") {
    auto r = amalgam_free_splitting(fab(), fxy(), fab().parse("a^2"), fxy().parse("x^2 [x,y]"));
    CHECK(r.status == SplitStatus::Splits);
    CHECK_FALSE(r.free);
    CHECK(to_string(r.factor_basis[0]) == "a");
  }
  SUBCASE("errors") {
    CHECK(code_of([] { amalgam_free_splitting(fab(), fxy(), Word(), fxy().parse("x")); }) ==
          ErrorCode::TrivialEdgeWord);
    CHECK(code_of([] { amalgam_free_splitting(fixture("hnn_free_cyclic")); }) == ErrorCode::NotOneEdge);
  }
}

TEST_CASE("cyclic HNN extensions of free groups") {
  auto ex = fixture("hnn_free_cyclic");
  auto r = hnn_free_splitting(ex);
  CHECK(r.status == SplitStatus::FreeOfRank);
  CHECK(r.rank == 2);
  CHECK(words(r.basis) == std::vector<std::string>{"F.a", "t.e"});
  check_free(ex, r);
  CHECK(hnn_one_loop_decision(ex).status == SplitStatus::FreeOfRank);

  FreeGroup fa(2, {"a"});
  auto eq = hnn_free_splitting(fa, fa.parse("a"), fa.parse("a"));
  CHECK(eq.status == SplitStatus::NotFree);
  CHECK(hnn_one_loop_decision(cyclic_hnn(fa, fa.parse("a"), fa.parse("a"))).status == SplitStatus::NoSplit);

  auto g = cyclic_hnn(fab(), fab().parse("a"), fab().parse("b"));
  auto ab = hnn_free_splitting(g);
  CHECK(ab.status == SplitStatus::FreeOfRank);
  CHECK(words(ab.basis) == std::vector<std::string>{"F.a", "t.e"});
  check_free(g, ab);

  // centralizer of a primitive element inside a rank-two group
  auto cent = hnn_one_loop_decision(cyclic_hnn(fab(), fab().parse("a"), fab().parse("b a b^-1")));
  CHECK(cent.status == SplitStatus::Splits);
}

TEST_CASE("one loop over finite or trivial groups") {
  GraphOfGroups d;
  d.prime = 2;
  d.vertices = {{"D", samples::fin(samples::d4())}};
  d.edges.push_back(samples::edge("e", 0, 0, samples::fin(samples::cyclic(2, 2, "c")), {"s"}, {"r s"}));
  CHECK(hnn_one_loop_decision(d).status == SplitStatus::NoSplit);

  GraphOfGroups t;
  t.prime = 2;
  t.vertices = {{"F", samples::free_group({"a"})}};
  t.edges.push_back(samples::edge("e", 0, 0, samples::fin(FiniteGroup::trivial(2)), {}, {}));
  auto r = hnn_one_loop_decision(t);
  CHECK(r.status == SplitStatus::Splits);
  CHECK(r.rank == 2);
  CHECK(code_of([] { hnn_one_loop_decision(fixture("amalg_free_split")); }) == ErrorCode::NotOneLoop);
}

TEST_CASE("star splittings") {
  auto g = fixture("star_free");
  auto s = star_splitting(g);
  CHECK(s.center == "M");
  CHECK(s.mv_injective);
  REQUIRE(s.edges.size() == 2);
  CHECK(words(s.edges[0].f0) == std::vector<std::string>{"c"});
  CHECK(s.edges[0].f1.empty());
  CHECK(s.edges[1].f0.empty());
  CHECK(words(s.edges[1].f1) == std::vector<std::string>{"c"});
  CHECK(s.center_split.ok);
  CHECK(s.center_split.proper);
  CHECK(words(s.center_split.basis) == std::vector<std::string>{"a", "b"});
  REQUIRE(s.pending.size() == 2);
  CHECK(s.pending[1].ok);
  CHECK(words(s.pending[1].family) == std::vector<std::string>{"u"});

  // kernel condition and direct sum on every edge
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    auto cor0 = corestriction_matrix(*e.group, *g.vertices[e.from].group, e.attach_from);
    std::vector<FpVector> all;
    for (const auto& w : s.edges[ei].f1) {
      auto v = exponent_vector(w, e.group->symbols(), 2);
      CHECK(cor0.apply(v).is_zero());
      all.push_back(v);
    }
    for (const auto& w : s.edges[ei].f0) all.push_back(exponent_vector(w, e.group->symbols(), 2));
    CHECK(all.size() == static_cast<std::size_t>(h1_dim(*e.group)));
    CHECK(FpMatrix::from_columns(2, all.size(), all).invertible());
    // F0 trivial exactly when d0 lies in Phi
    CHECK(s.edges[ei].f0.empty() == (cor0.rank() == 0));
  }

  GraphOfGroups one;
  one.prime = 2;
  one.vertices = {{"A", samples::free_group({"a"})}, {"X", samples::free_group({"x"})}};
  one.edges.push_back(samples::edge("e", 0, 1, samples::free_group({"c"}), {"a"}, {"x"}));
  auto deg = star_splitting(one);
  CHECK(words(deg.edges[0].f0) == std::vector<std::string>{"c"});
  CHECK(deg.edges[0].f1.empty());
  CHECK_FALSE(deg.center_split.proper);

  GraphOfGroups triv;
  triv.prime = 2;
  triv.vertices = {{"A", samples::free_group({"a", "b"})}, {"X", samples::free_group({"x"})}};
  triv.edges.push_back(samples::edge("e", 0, 1, samples::free_group({}), {}, {}));
  auto ts = star_splitting(triv);
  CHECK(ts.edges[0].f0.empty());
  CHECK(ts.edges[0].f1.empty());

  CHECK(code_of([] { star_splitting(fixture("amalg_d4_s_d4")); }) == ErrorCode::NonFreeVertex);
  auto path = fixture("path_free3");
  path.vertices.push_back({"Z", samples::free_group({"z"})});
  path.edges.push_back(samples::edge("e3", 2, 3, samples::free_group({"c"}), {"u"}, {"z"}));
  CHECK(code_of([&] { star_splitting(path); }) == ErrorCode::NotStar);
}

TEST_CASE("tree vertex relative splitting") {
  auto one = tree_vertex_relative_split(cyclic_amalgam(fab(), fxy(), fab().parse("a"), fxy().parse("x^2 [x,y]")));
  CHECK(one.vertex == "F1");
  CHECK(words(one.basis) == std::vector<std::string>{"a", "b"});
  CHECK(one.proper);
  auto path = tree_vertex_relative_split(fixture("path_free3"));
  CHECK(path.vertex == "X");
  GraphOfGroups single;
  single.prime = 2;
  single.vertices = {{"F", samples::free_group({"a", "b"})}};
  auto s = tree_vertex_relative_split(single);
  CHECK(s.vertex == "F");
  CHECK(s.ok);
  CHECK(code_of([] { tree_vertex_relative_split(fixture("hnn_free_cyclic")); }) == ErrorCode::NotTree);
  CHECK(code_of([] { tree_vertex_relative_split(fixture("amalg_free_frattini")); }) == ErrorCode::NoSuchVertex);
}

TEST_CASE("tietze replay rejects illegal moves") {
  auto g = cyclic_amalgam(fab(), fxy(), fab().parse("a"), fxy().parse("x^2 [x,y]"));
  auto P = fundamental_presentation(g);
  CHECK(code_of([&] { replay_tietze(P, 2, {{"F2.x", 0, ""}}); }) == ErrorCode::InvalidArgument);
  CHECK(replay_tietze(P, 2, {{"F1.a", 0, ""}}).relations.empty());
}

TEST_CASE("amalgam verdicts agree with the Nielsen oracle") {
  for (unsigned p : {2u, 3u}) {
    CAPTURE(p);
    // D4 with a -> r, b -> s
    FiniteGroup q = p == 2 ? FiniteGroup::from_cayley(2, samples::d4().table(), samples::d4().generators(), {"a", "b"})
                           : oracles::heisenberg(3);
    oracles::FreeFactorOracle o(q, 6);
    FreeGroup F1(p, {"a", "b"}), F2(p, {"x", "y"});
    auto ws = oracles::reduced_words(2, 4);
    int mismatches = 0;
    for (const auto& c1 : ws)
      for (std::size_t j = 0; j < ws.size(); j += 7) {
        const auto& c2 = ws[j];
        bool expect = o.in_proper_factor(c1) || o.in_proper_factor(c2);
        bool got = amalgam_free_splitting(F1, F2, c1, c2).status == SplitStatus::Splits;
        if (expect != got) ++mismatches;
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("h1 is additive over Grushko components") {
  for (const char* name : {"free_product_c2", "amalg_free_split", "star_free", "hnn_c4_central"}) {
    CAPTURE(name);
    auto g = fixture(name);
    auto gr = grushko_components(g);
    int sum = gr.free_rank;
    for (const auto& part : gr.parts) sum += h1_dim(part);
    CHECK(h1_dim(g) == sum);
  }
}
