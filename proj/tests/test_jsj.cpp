#include <functional>
#include <optional>

#include "doctest.h"
#include "propp/cylinders.hpp"
#include "propp/error.hpp"
#include "propp/io.hpp"
#include "propp/jsj.hpp"
#include "samples.hpp"

using namespace propp;
using samples::fixture;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

GraphOfGroups c4_free_c4() {
  return graph_from_json(Json::parse(R"({
    "prime": 2,
    "groups": {
      "C4": {"kind": "finite", "perm_gens": [[1, 2, 3, 0]], "names": ["a"]},
      "1": {"kind": "finite", "trivial": true}
    },
    "vertices": {"G1": "C4", "G2": "C4"},
    "edges": [{"name": "e", "from": "G1", "to": "G2", "group": "1", "attach_from": [], "attach_to": []}]
  })"));
}

}  // namespace

TEST_CASE("domination of refinements and collapses") {
  for (const char* name : {"amalg_c4_c2_c4", "amalg_d4_s_d4", "audit_corrupt", "hnn_d4_conj"}) {
    CAPTURE(name);
    GraphOfGroups g = fixture(name);
    CHECK(dominates(g, g).overall.status == Status::ProvenYes);
  }

  GraphOfGroups chain = fixture("audit_corrupt");
  GraphOfGroups partial = collapse_subgraph(chain, {"G1", "G2"});
  GraphOfGroups point = collapse_subgraph(chain, {"G1", "G2", "G3"});
  CHECK(dominates(chain, partial).overall.status == Status::ProvenYes);
  CHECK(dominates(partial, point).overall.status == Status::ProvenYes);
  CHECK(dominates(chain, point).overall.status == Status::ProvenYes);

  // a collapse has bigger vertex groups, which are no longer elliptic
  auto back = dominates(point, chain);
  CHECK(back.overall.status == Status::ProvenNo);
  CHECK(back.overall.witness.find("G1+G2+G3") == 0);
  CHECK(dominates(partial, chain).overall.status == Status::ProvenNo);

  auto per = dominates(chain, partial);
  REQUIRE(per.vertices.size() == 3);
  for (const auto& v : per.vertices) CHECK(v.result.verdict.status == Status::ProvenYes);
}

TEST_CASE("domination and the tree of cylinders") {
  for (const char* name : {"amalg_c4_c2_c4", "amalg_d4_s_d4", "hnn_d4_conj", "hnn_d4_nonconj"}) {
    CAPTURE(name);
    GraphOfGroups g = fixture(name);
    auto tc = tree_of_cylinders(g);
    CHECK(dominates(g, tc.graph).overall.status == Status::ProvenYes);
  }
}

TEST_CASE("same deformation space") {
  GraphOfGroups g = fixture("amalg_d4_s_d4");
  GraphOfGroups x = expansion_move(g, "G1", "N", "f", {parse_symword("s"), parse_symword("r^2")}, {{"e", 0}});
  GraphOfGroups r = reduce(x).first;
  CHECK(same_deformation_space(x, r).status == Status::ProvenYes);
  CHECK(same_deformation_space(r, x).status == Status::ProvenYes);
  CHECK(same_deformation_space(g, g).status == Status::ProvenYes);

  auto no = same_deformation_space(fixture("amalg_c4_c2_c4"), c4_free_c4());
  CHECK(no.status == Status::ProvenNo);
  CHECK(no.witness.find("hyperbolic") != std::string::npos);

  GraphOfGroups odd = fixture("star_free");
  odd.prime = 3;
  CHECK(code_of([&] { dominates(fixture("amalg_c4_c2_c4"), odd); }) == ErrorCode::PrimeMismatch);
  CHECK(code_of([] { dominates(fixture("amalg_c4_c2_c4"), fixture("free_product_c2")); }) ==
        ErrorCode::IncompatiblePresentations);
}

TEST_CASE("explicit translation") {
  GraphOfGroups a = fixture("amalg_c4_c2_c4");
  GraphOfGroups b = fixture("amalg_c4_c2_c4");
  // swap the two vertices
  std::map<std::string, SymWord> swap{{"G1.a", parse_symword("G2.a")}, {"G2.a", parse_symword("G1.a")}};
  CHECK(dominates(a, b, 0, &swap).overall.status == Status::ProvenYes);
  // a^2 = a^2 read through a -> a and a -> a^-1 still holds since a^2 is central of order 2
  std::map<std::string, SymWord> bad{{"G1.a", parse_symword("G1.a")}, {"G2.a", parse_symword("G2.a^2")}};
  auto r = dominates(a, b, 0, &bad);
  CHECK(r.overall.status == Status::ProvenNo);
}

TEST_CASE("universally elliptic edges") {
  auto fin = universally_elliptic_edges(fixture("amalg_d4_s_d4"));
  REQUIRE(fin.size() == 1);
  CHECK(fin[0].status == Status::ProvenYes);
  auto triv = universally_elliptic_edges(fixture("free_product_c2"));
  CHECK(triv[0].status == Status::ProvenYes);
  CHECK(triv[0].reason == "trivial edge group");
  auto inf = universally_elliptic_edges(fixture("path_free3"));
  REQUIRE(inf.size() == 2);
  for (const auto& e : inf) CHECK(e.status == Status::Unknown);
}

TEST_CASE("JSJ certificate over finite edge groups") {
  auto c = jsj_certify_finite(fixture("amalg_d4_s_d4"));
  CHECK(c.certified);
  CHECK(c.reduced);
  CHECK(c.trace.steps.empty());

  GraphOfGroups g = fixture("amalg_d4_s_d4");
  GraphOfGroups x = expansion_move(g, "G1", "N", "f", {parse_symword("s"), parse_symword("r^2")}, {{"e", 0}});
  auto u = jsj_certify_finite(x);
  CHECK_FALSE(u.certified);
  CHECK_FALSE(u.reduced);
  CHECK(u.trace.steps.size() == 1);

  GraphOfGroups single = collapse_subgraph(fixture("amalg_c4_c2_c4"), {"G1", "G2"});
  CHECK(code_of([&] { jsj_certify_finite(single); }) == ErrorCode::InfiniteVertexGroup);
  GraphOfGroups one;
  one.prime = 2;
  one.vertices.push_back(g.vertices[0]);
  CHECK(jsj_certify_finite(one).certified);

  CHECK(code_of([] { jsj_certify_finite(fixture("path_free3")); }) == ErrorCode::InfiniteVertexGroup);
}

TEST_CASE("accessibility audit") {
  GraphOfGroups chain = fixture("audit_corrupt");
  auto honest = accessibility_audit(chain);
  CHECK(honest.d_computed == 3);
  CHECK(honest.d == 3);
  CHECK(honest.ok);

  AuditClaims lie;
  lie.d = 1;
  auto bad = accessibility_audit(chain, lie);
  CHECK_FALSE(bad.ok);
  bool wilkes_failed = false;
  for (const auto& b : bad.bounds)
    if (b.name == "finite edge groups") {
      CHECK(b.bound == 1);
      CHECK(b.observed == 2);
      wilkes_failed = !b.pass;
    }
  CHECK(wilkes_failed);

  // C4 *_{C2} C4: d = 2, one edge of order 2, bound 2*2*1 + 1 = 5
  auto two = accessibility_audit(fixture("amalg_c4_c2_c4"));
  CHECK(two.d == 2);
  REQUIRE(!two.bounds.empty());
  CHECK(two.bounds[0].bound == 5);
  CHECK(two.ok);

  // procyclic bounds on a free splitting
  auto pf = accessibility_audit(fixture("path_free3"));
  CHECK(pf.ok);
  bool saw_cyclic = false;
  for (const auto& b : pf.bounds) saw_cyclic = saw_cyclic || b.name.find("procyclic") == 0;
  CHECK(saw_cyclic);

  AuditClaims acyl;
  acyl.acylindrical_k = 1;
  acyl.acylindrical = check_acylindrical(fixture("amalg_d4_s_d4"), 1, 4);
  auto ac = accessibility_audit(fixture("amalg_d4_s_d4"), acyl);
  if (acyl.acylindrical.status == Status::ProvenYes) {
    bool saw = false;
    for (const auto& b : ac.bounds) saw = saw || b.name.find("acylindrical") == 0;
    CHECK(saw);
  }
  CHECK(ac.ok);

  GraphOfGroups x = expansion_move(fixture("amalg_d4_s_d4"), "G1", "N", "f",
                                   {parse_symword("s"), parse_symword("r^2")}, {{"e", 0}});
  CHECK(code_of([&] { accessibility_audit(x); }) == ErrorCode::NotReduced);
}

TEST_CASE("expansion through a one-edge refinement") {
  GraphOfGroups g = fixture("amalg_d4_s_d4");
  GraphOfGroups x = expansion_move(g, "G1", "N", "f", {parse_symword("s"), parse_symword("r^2")}, {{"e", 0}});
  GraphOfGroups c = collapse_subgraph(x, {"N", "G1"}, {"f"});
  const std::string cv = c.vertices[0].group->kind() == Group::Kind::Composite ? c.vertices[0].name
                                                                                : c.vertices[1].name;
  const GraphOfGroups& inner = c.vertices[c.vertex_index(cv)].group->as_composite();
  GraphOfGroups y = propp::expansion_move(c, cv, inner, default_attach_map(c, cv, inner));
  validate(y);
  CHECK(isomorphic(y, x));
  CHECK(isomorphic(reduction_move(y, "f"), g));

  // the amalgam edge is not fictitious, so it is no expansion
  GraphOfGroups whole = collapse_subgraph(g, {"G1", "G2"});
  const GraphOfGroups& amalg = whole.vertices[0].group->as_composite();
  CHECK(code_of([&] { propp::expansion_move(whole, "G1+G2", amalg, {}); }) == ErrorCode::BadExpansion);
  GraphOfGroups three = fixture("audit_corrupt");
  CHECK(code_of([&] { propp::expansion_move(g, "G1", three, {}); }) == ErrorCode::BadExpansion);
}
