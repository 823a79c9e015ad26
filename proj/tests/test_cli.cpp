#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "propp/cli.hpp"
#include "propp/io.hpp"

using namespace propp;

namespace {

std::string fx(const std::string& name) { return std::string(PROPP_FIXTURES) + "/" + name + ".json"; }

struct Out {
  int code;
  std::string text;
  Json json() const { return Json::parse(text); }
};

Out call(RunConfig c) {
  std::ostringstream os;
  int rc = run(c, os);
  return {rc, os.str()};
}

RunConfig cfg(const std::string& command, std::vector<std::string> inputs, const std::string& mode = "") {
  RunConfig c;
  c.command = command;
  c.mode = mode;
  c.inputs = std::move(inputs);
  return c;
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("propp_cli_" + name + ".json");
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("reduce on a reduced fixture") {
  auto o = call(cfg("reduce", {fx("amalg_c4_c2_c4")}));
  CHECK(o.code == 0);
  auto j = o.json();
  CHECK(j["trace"].empty());
  CHECK(j["already_reduced"] == true);
}

TEST_CASE("free-split hnn on the cyclic HNN fixture") {
  auto o = call(cfg("free-split", {fx("hnn_free_cyclic")}, "hnn"));
  CHECK(o.code == 0);
  auto j = o.json();
  CHECK(j["result"]["status"] == "FreeOfRank");
  CHECK(j["result"]["rank"] == 2);
  CHECK(j["result"]["verified"] == true);
}

TEST_CASE("free-split verdicts map to exit codes") {
  CHECK(call(cfg("free-split", {fx("amalg_free_frattini")}, "amalgam")).code == 1);
  CHECK(call(cfg("free-split", {fx("amalg_free_split")}, "amalgam")).code == 0);
  CHECK(call(cfg("free-split", {fx("star_free")}, "star")).code == 0);
  CHECK(call(cfg("free-split", {fx("path_free3")}, "tree")).code == 0);
  CHECK(call(cfg("free-split", {fx("path_free3")}, "bogus")).code == 3);
}

TEST_CASE("audit reports a corrupted claim") {
  auto o = call(cfg("audit", {fx("audit_corrupt")}));
  CHECK(o.code == 1);
  auto j = o.json();
  CHECK(j["ok"] == false);
  CHECK(j["d"] == 1);
  CHECK(j["d_computed"] == 3);
  REQUIRE(!j["violated"].empty());
  CHECK(j["violated"][0].get<std::string>().find("2 > 1") != std::string::npos);
  CHECK(call(cfg("audit", {fx("amalg_c4_c2_c4")})).code == 0);
}

TEST_CASE("input errors") {
  const std::string base =
      R"({"prime": 2, "groups": {"C4": {"kind": "finite", "perm_gens": [[1,2,3,0]], "names": ["a"]},
          "C2": {"kind": "finite", "perm_gens": [[1,0]], "names": ["z"]}},
          "vertices": {"G1": "C4", "G2": "C4"}, "edges": [{"name": "edge7", "from": "G1", "to": "G2", "group": "C2", )";
  auto missing = call(cfg("validate", {write_temp("missing", base + R"("attach_from": ["a^2"]}]})")}));
  CHECK(missing.code == 3);
  CHECK(missing.json()["error"] == "Schema");
  CHECK(missing.json()["message"].get<std::string>().find("edge7") != std::string::npos);

  auto bad = call(cfg("validate", {write_temp("noninj", base + R"("attach_from": ["a^2"], "attach_to": ["1"]}]})")}));
  CHECK(bad.code == 3);
  CHECK(bad.json()["error"] == "NonInjectiveAttachment");

  CHECK(call(cfg("validate", {"/nonexistent/x.json"})).code == 3);
  CHECK(call(cfg("nope", {fx("amalg_c4_c2_c4")})).code == 3);
  RunConfig p = cfg("rank", {fx("amalg_c4_c2_c4")});
  p.prime = 4;
  CHECK(call(p).code == 3);
  p.prime = 3;
  CHECK(call(p).json()["error"] == "PrimeMismatch");
  RunConfig r = cfg("ball", {fx("amalg_c4_c2_c4")});
  r.radius = -1;
  CHECK(call(r).code == 3);
}

TEST_CASE("every fixture validates and round-trips") {
  for (const auto& entry : std::filesystem::directory_iterator(PROPP_FIXTURES)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    auto o = call(cfg("validate", {entry.path().string()}));
    CHECK(o.code == 0);
    CHECK(o.json()["round_trip"] == true);
    GraphOfGroups g = load_graph(entry.path().string());
    CHECK(graph_to_json(graph_from_json(graph_to_json(g))) == graph_to_json(g));
  }
}

TEST_CASE("output is deterministic") {
  std::vector<RunConfig> runs{cfg("cylinders", {fx("amalg_d4_s_d4")}), cfg("ball", {fx("amalg_d4_s_d4")}),
                              cfg("free-split", {fx("star_free")}, "star"),
                              cfg("dominates", {fx("audit_corrupt"), fx("audit_corrupt")}),
                              cfg("acyl", {fx("amalg_free_malnormal")})};
  runs.back().k = 2;
  for (auto c : runs) {
    CAPTURE(c.command);
    for (auto f : {OutputFormat::Json, OutputFormat::Text}) {
      c.format = f;
      c.seed = 7;
      auto a = call(c), b = call(c);
      CHECK(a.code == b.code);
      CHECK(a.text == b.text);
    }
  }
}

TEST_CASE("DOT ids") {
  RunConfig c = cfg("cylinders", {fx("amalg_d4_s_d4")});
  c.format = OutputFormat::Dot;
  auto o = call(c);
  CHECK(o.code == 0);
  CHECK(o.text.find("\"v:G1\"") != std::string::npos);
  CHECK(o.text.find("\"cyl:0\"") != std::string::npos);

  RunConfig b = cfg("ball", {fx("amalg_c4_c2_c4")});
  b.radius = 1;
  b.dot_path = "";
  auto ob = call(b);
  CHECK(ob.text.rfind("graph ball", 0) == 0);

  RunConfig m = cfg("mv", {fx("amalg_c4_c2_c4")});
  m.format = OutputFormat::Dot;
  CHECK(call(m).code == 3);
}

TEST_CASE("remaining commands") {
  CHECK(call(cfg("present", {fx("hnn_d4_conj")})).json()["generators"].size() == 3);
  CHECK(call(cfg("rank", {fx("audit_corrupt")})).json()["rank_mod_p"] == 3);
  auto gr = call(cfg("grushko", {fx("free_product_c2")})).json();
  CHECK(gr["additive"] == true);
  CHECK(gr["h1_dim"] == 2);

  RunConfig col = cfg("collapse", {fx("audit_corrupt")});
  col.vertices = {"G1", "G2"};
  CHECK(call(col).json()["graph"]["edges"].size() == 1);

  RunConfig geo = cfg("geodesic", {fx("amalg_c4_c2_c4")});
  geo.radius = 2;
  geo.from = 0;
  geo.to = 4;
  auto go = call(geo);
  CHECK(go.code == 0);
  RunConfig ball = cfg("ball", {fx("amalg_c4_c2_c4")});
  ball.radius = 2;
  CHECK(go.json()["length"] == call(ball).json()["vertices"][4]["depth"]);

  RunConfig fix = cfg("fixed", {fx("amalg_c4_c2_c4")});
  fix.elements = {"G1.a"};
  auto fo = call(fix).json();
  CHECK(fo["vertices"].size() == 1);

  RunConfig acyl = cfg("acyl", {fx("amalg_c4_c2_c4")});
  acyl.radius = 3;
  CHECK(call(acyl).code == 1);
  acyl.inputs = {fx("amalg_free_malnormal")};
  acyl.k = 2;
  CHECK(call(acyl).code == 0);

  RunConfig aut = cfg("aut-shape", {fx("amalg_free_malnormal")});
  aut.rigid1 = aut.rigid2 = true;
  CHECK(call(aut).code == 0);

  CHECK(call(cfg("mv", {fx("amalg_free_frattini")})).code == 1);
  CHECK(call(cfg("mv", {fx("star_free")})).code == 0);
  CHECK(call(cfg("jsj", {fx("amalg_d4_s_d4")}, "certify")).code == 0);
  CHECK(call(cfg("jsj-certify", {fx("path_free3")})).code == 3);
  CHECK(call(cfg("deformation", {fx("audit_corrupt"), fx("audit_corrupt")})).code == 0);

  RunConfig dom = cfg("dominates", {fx("audit_corrupt")});
  CHECK(call(dom).code == 3);

  RunConfig ex = cfg("moves", {fx("amalg_d4_s_d4")});
  ex.vertex = "G1";
  ex.name = "N";
  ex.edge = "f";
  ex.subgroup = {"s", "r^2"};
  ex.moved = {"e:0"};
  auto xo = call(ex);
  REQUIRE(xo.code == 0);
  auto expanded = write_temp("expanded", xo.json()["graph"].dump());
  auto listed = call(cfg("moves", {expanded})).json();
  REQUIRE(listed["reductions"].size() == 1);
  CHECK(listed["reductions"][0]["edge"] == "f");
  RunConfig red = cfg("moves", {expanded});
  red.edge = "f";
  auto ro = call(red);
  CHECK(ro.code == 0);
  CHECK(ro.json()["step"]["removed"] == "N");
}
