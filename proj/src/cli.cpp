#include "propp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "propp/bass_serre.hpp"
#include "propp/cylinders.hpp"
#include "propp/error.hpp"
#include "propp/gog_ops.hpp"
#include "propp/homology.hpp"
#include "propp/io.hpp"
#include "propp/jsj.hpp"
#include "propp/presentation.hpp"

namespace propp {

namespace {

struct Report {
  Json body = Json::object();
  int code = 0;
  std::string dot;  // DOT rendering, when the command has one
  std::string text; // preformatted text, overrides the generic renderer
};

Json words(const std::vector<SymWord>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(w.empty() ? "1" : to_string(w));
  return a;
}

std::string show(const SymWord& w) { return w.empty() ? "1" : to_string(w); }

int exit_of(Status s) {
  switch (s) {
    case Status::ProvenYes: return 0;
    case Status::ProvenNo: return 1;
    default: return 2;
  }
}

int exit_of(SplitStatus s) {
  switch (s) {
    case SplitStatus::Splits:
    case SplitStatus::FreeOfRank: return 0;
    case SplitStatus::NoSplit:
    case SplitStatus::NotFree: return 1;
    default: return 2;
  }
}

Json verdict_json(const Verdict& v) {
  return Json{{"status", status_name(v.status)}, {"witness", v.witness}, {"budget_used", v.budget_used}};
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

GraphOfGroups load(const RunConfig& c, std::size_t i) {
  if (c.inputs.size() <= i) fail(ErrorCode::InvalidArgument, "missing --input");
  GraphOfGroups g = load_graph(c.inputs[i]);
  if (c.prime && *c.prime != g.prime) {
    g.prime = *c.prime;
    validate(g);
  }
  return g;
}

Json trace_json(const ReductionTrace& t) {
  Json a = Json::array();
  for (const auto& s : t.steps) a.push_back({{"edge", s.edge}, {"removed", s.removed}, {"kept", s.kept}});
  return a;
}

Json graph_summary(const GraphOfGroups& g) {
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : g.vertices) vs.push_back({{"name", v.name}, {"group", describe_group(*v.group)}});
  for (const auto& e : g.edges)
    es.push_back({{"name", e.name},
                  {"from", g.vertices[e.from].name},
                  {"to", g.vertices[e.to].name},
                  {"group", describe_group(*e.group)}});
  return {{"prime", g.prime}, {"vertices", vs}, {"edges", es}};
}

Report graph_report(const GraphOfGroups& g) {
  Report r;
  r.body["graph"] = graph_to_json(g);
  r.dot = to_dot(g);
  return r;
}

std::string ball_dot(const TreeBall& ball, const FixedSet* fixed) {
  std::set<int> fv, fe;
  if (fixed) {
    fv.insert(fixed->vertices.begin(), fixed->vertices.end());
    fe.insert(fixed->edges.begin(), fixed->edges.end());
  }
  const GraphOfGroups& g = ball.tree->graph();
  std::ostringstream os;
  os << "graph ball {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    os << "  " << dot_quote("b:" + std::to_string(i)) << " [label=" << dot_quote(ball.vertex_label(static_cast<int>(i)))
       << (fv.count(static_cast<int>(i)) ? ", style=filled, fillcolor=lightblue" : "") << "];\n";
  }
  for (std::size_t i = 0; i < ball.edges.size(); ++i) {
    const auto& e = ball.edges[i];
    os << "  " << dot_quote("b:" + std::to_string(e.d0)) << " -- " << dot_quote("b:" + std::to_string(e.d1))
       << " [label=" << dot_quote(g.edges[e.edge].name) << (fe.count(static_cast<int>(i)) ? ", color=blue, penwidth=2" : "")
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json ball_json(const TreeBall& ball) {
  const GraphOfGroups& g = ball.tree->graph();
  Json vs = Json::array(), es = Json::array();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto& v = ball.vertices[i];
    vs.push_back({{"id", i},
                  {"label", ball.vertex_label(static_cast<int>(i))},
                  {"vertex", g.vertices[v.vertex].name},
                  {"depth", v.depth},
                  {"degree", v.edges.size()}});
  }
  for (std::size_t i = 0; i < ball.edges.size(); ++i) {
    const auto& e = ball.edges[i];
    es.push_back({{"id", i}, {"label", ball.edge_label(static_cast<int>(i))}, {"d0", e.d0}, {"d1", e.d1}});
  }
  return {{"radius", ball.radius},
          {"truncated", ball.truncated},
          {"vertex_count", ball.vertices.size()},
          {"edge_count", ball.edges.size()},
          {"vertices", vs},
          {"edges", es}};
}

Json split_json(const GraphOfGroups& g, const SplitResult& s) {
  Json j{{"status", split_status_name(s.status)}, {"witness", s.witness}};
  if (!s.factor_vertex.empty()) {
    j["factor_vertex"] = s.factor_vertex;
    j["factor_basis"] = words(s.factor_basis);
  }
  j["free"] = s.free;
  if (s.free) {
    j["rank"] = s.rank;
    j["basis"] = words(s.basis);
    Json t = Json::array();
    for (const auto& st : s.transcript)
      t.push_back({{"eliminate", st.generator}, {"relation", st.relation}, {"note", st.note}});
    j["transcript"] = t;
    std::string why;
    j["verified"] = verify_free_basis(g, s, &why);
    if (!why.empty()) j["verify_note"] = why;
  }
  if (!s.c1.empty() || !s.c2.empty() || !s.c1p.empty() || !s.c2p.empty())
    j["decomposition"] = {{"C1", words(s.c1)}, {"C2", words(s.c2)}, {"C1'", words(s.c1p)}, {"C2'", words(s.c2p)}};
  return j;
}

Json relative_json(const RelativeSplit& r) {
  return {{"vertex", r.vertex}, {"family", words(r.family)}, {"basis", words(r.basis)},
          {"ok", r.ok},         {"proper", r.proper},        {"note", r.note}};
}

std::vector<std::pair<std::string, int>> parse_ends(const std::vector<std::string>& ends) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& s : ends) {
    auto pos = s.rfind(':');
    if (pos == std::string::npos || (s.substr(pos + 1) != "0" && s.substr(pos + 1) != "1"))
      fail(ErrorCode::InvalidArgument, "edge end '" + s + "' must look like <edge>:0 or <edge>:1");
    out.emplace_back(s.substr(0, pos), s.back() - '0');
  }
  return out;
}

// ---- commands ----

Report cmd_validate(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  Report r;
  r.body["valid"] = true;
  r.body["summary"] = graph_summary(g);
  r.body["round_trip"] = graph_from_json(graph_to_json(g)).same_as(g);
  r.dot = to_dot(g);
  return r;
}

Report cmd_present(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  Presentation p = c.tree.empty() ? fundamental_presentation(g)
                                  : fundamental_presentation(g, spanning_tree_from_names(g, c.tree));
  Report r;
  Json rels = Json::array();
  for (const auto& rel : p.relations) rels.push_back({{"lhs", show(rel.lhs)}, {"rhs", show(rel.rhs)}});
  r.body["generators"] = p.generators;
  r.body["relations"] = rels;
  r.body["tree_edges"] = p.tree_edges;
  r.text = p.to_text();
  return r;
}

Report cmd_reduce(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  auto [red, trace] = reduce(g);
  Report r = graph_report(red);
  r.body["trace"] = trace_json(trace);
  r.body["already_reduced"] = trace.steps.empty();
  return r;
}

Report cmd_collapse(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  if (c.vertices.empty()) fail(ErrorCode::InvalidArgument, "collapse needs --vertices");
  return graph_report(collapse_subgraph(g, c.vertices, c.edges, c.name));
}

Report cmd_refine(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  if (c.vertex.empty() || c.inner.empty()) fail(ErrorCode::InvalidArgument, "refine needs --vertex and --inner");
  GraphOfGroups inner = load_graph(c.inner);
  return graph_report(refine_at_vertex(g, c.vertex, inner, default_attach_map(g, c.vertex, inner)));
}

Report cmd_grushko(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  GrushkoResult gr = grushko_components(g);
  Report r;
  Json parts = Json::array();
  int sum = gr.free_rank;
  for (const auto& part : gr.parts) {
    const int h = h1_dim(part);
    sum += h;
    parts.push_back({{"summary", graph_summary(part)}, {"h1_dim", h}});
  }
  const int total = h1_dim(g);
  r.body["parts"] = parts;
  r.body["free_rank"] = gr.free_rank;
  r.body["h1_dim"] = total;
  r.body["additive"] = total == sum;
  r.code = total == sum ? 0 : 1;
  return r;
}

Report cmd_rank(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  Report r;
  r.body["prime"] = g.prime;
  r.body["rank_mod_p"] = rank_mod_p(g);
  r.body["betti"] = g.betti();
  return r;
}

Report cmd_ball(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  TreeBall ball = tree_ball(g, c.radius, c.budget);
  Report r;
  r.body = ball_json(ball);
  r.dot = ball_dot(ball, nullptr);
  return r;
}

Report cmd_geodesic(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  TreeBall ball = tree_ball(g, c.radius, c.budget);
  const int n = static_cast<int>(ball.vertices.size());
  const int a = c.from.value_or(0), b = c.to.value_or(n - 1);
  if (a < 0 || a >= n || b < 0 || b >= n)
    fail(ErrorCode::NotInBall, "ball vertex index out of range (ball has " + std::to_string(n) + " vertices)");
  Geodesic geo = geodesic(ball, a, b);
  Report r;
  Json vs = Json::array(), es = Json::array();
  for (int v : geo.vertices) vs.push_back(ball.vertex_label(v));
  for (int e : geo.edges) es.push_back(ball.edge_label(e));
  r.body = {{"from", a},
            {"to", b},
            {"length", geo.edges.size()},
            {"vertices", vs},
            {"edges", es},
            {"stabilizers_checked", geo.stabilizers_checked},
            {"stabilizers_ok", geo.stabilizers_ok}};
  r.code = geo.stabilizers_ok ? 0 : 1;
  return r;
}

Report cmd_fixed(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  if (c.elements.empty()) fail(ErrorCode::InvalidArgument, "fixed needs at least one --element");
  std::vector<SymWord> gens;
  for (const auto& s : c.elements) gens.push_back(parse_symword(s));
  TreeBall ball = tree_ball(g, c.radius, c.budget);
  FixedSet fs = fixed_subtree(ball, gens);
  Report r;
  Json vs = Json::array(), es = Json::array();
  for (int v : fs.vertices) vs.push_back(ball.vertex_label(v));
  for (int e : fs.edges) es.push_back(ball.edge_label(e));
  r.body = {{"elements", c.elements}, {"radius", c.radius},       {"vertices", vs},
            {"edges", es},            {"diameter", fs.diameter}, {"components", fs.components}};
  r.dot = ball_dot(ball, &fs);
  r.code = fs.vertices.empty() ? 1 : 0;
  return r;
}

Report cmd_acyl(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  const int radius = std::max(c.radius, c.k + 2);
  Verdict v = check_acylindrical(g, c.k, radius);
  Report r;
  r.body = verdict_json(v);
  r.body["k"] = c.k;
  r.body["radius"] = radius;
  r.code = exit_of(v.status);
  return r;
}

Report cmd_cylinders(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  TcQuotient tc = tree_of_cylinders(g, parse_relation(c.relation));
  Report r;
  r.body["relation"] = c.relation;
  r.body["graph"] = graph_to_json(tc.graph);
  r.body["v0_count"] = tc.v0_count;
  Json prov = Json::object();
  for (const auto& [k, v] : tc.provenance) prov[k] = v;
  r.body["provenance"] = prov;
  Json src = Json::object();
  for (const auto& [k, v] : tc.to_source) src[k] = show(v);
  r.body["to_source"] = src;
  r.body["reduced"] = graph_to_json(tc.reduced);
  r.body["reduction_trace"] = trace_json(tc.trace);
  r.dot = to_dot(tc.graph, tc.dot_ids());
  return r;
}

Report cmd_aut_shape(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  AutShape a = aut_splitting_shape(g, c.rigid1, c.rigid2, c.swap);
  Report r;
  r.body = {{"applies", a.applies},
            {"malnormal1", a.malnormal1},
            {"malnormal2", a.malnormal2},
            {"sexpr", a.sexpr},
            {"text", a.text}};
  r.code = a.applies ? 0 : 2;
  return r;
}

Report cmd_free_split(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  Report r;
  r.body["mode"] = c.mode;
  if (c.mode == "amalgam") {
    SplitResult s = amalgam_free_splitting(g);
    r.body["result"] = split_json(g, s);
    r.code = exit_of(s.status);
  } else if (c.mode == "hnn") {
    const bool free_vertex = g.vertices.size() == 1 && g.vertices[0].group->kind() == Group::Kind::Free;
    const bool cyclic_edge = g.edges.size() == 1 && !g.edges[0].group->is_trivial();
    SplitResult d = hnn_one_loop_decision(g);
    if (free_vertex && cyclic_edge) {
      SplitResult s = hnn_free_splitting(g);
      r.body["result"] = split_json(g, s);
      r.code = exit_of(s.status);
      if (d.status != s.status) r.body["splitting"] = split_json(g, d);
    } else {
      r.body["result"] = split_json(g, d);
      r.code = exit_of(d.status);
    }
  } else if (c.mode == "star") {
    StarSplitting s = star_splitting(g);
    Json es = Json::array();
    for (const auto& e : s.edges) es.push_back({{"edge", e.edge}, {"F0", words(e.f0)}, {"F1", words(e.f1)}});
    Json pend = Json::array();
    for (const auto& p : s.pending) pend.push_back(relative_json(p));
    r.body["center"] = s.center;
    r.body["mv_injective"] = s.mv_injective;
    r.body["edges"] = es;
    r.body["center_split"] = relative_json(s.center_split);
    r.body["pending"] = pend;
    r.code = s.center_split.ok ? 0 : 2;
  } else if (c.mode == "tree") {
    try {
      RelativeSplit s = tree_vertex_relative_split(g);
      r.body["result"] = relative_json(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSuchVertex) throw;
      r.body["result"] = {{"status", "Unknown"}, {"note", e.what()}};
      r.code = 2;
    }
  } else {
    fail(ErrorCode::InvalidArgument, "free-split mode must be amalgam, hnn, star or tree");
  }
  return r;
}

Report cmd_mv(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  MayerVietoris mv = mayer_vietoris_edge_map(g);
  Report r;
  Json rows = Json::array();
  for (std::size_t i = 0; i < mv.map.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < mv.map.cols(); ++j) row.push_back(mv.map.at(i, j));
    rows.push_back(row);
  }
  Json kernel = Json::array();
  for (const auto& v : mv.kernel) kernel.push_back(v.coords);
  Json ro = Json::object(), co = Json::object();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) ro[g.vertices[v].name] = mv.row_offset[v];
  for (std::size_t e = 0; e < g.edges.size(); ++e) co[g.edges[e].name] = mv.col_offset[e];
  r.body = {{"prime", g.prime}, {"rows", mv.map.rows()},   {"cols", mv.map.cols()}, {"matrix", rows},
            {"row_offset", ro}, {"col_offset", co},        {"injective", mv.injective}, {"kernel", kernel}};
  r.code = mv.injective ? 0 : 1;
  return r;
}

Report cmd_dominates(const RunConfig& c) {
  GraphOfGroups a = load(c, 0), b = load(c, 1);
  DominationReport d = dominates(a, b, c.budget);
  Report r;
  Json vs = Json::array();
  std::ostringstream tab;
  tab << "vertex\tstatus\twitness\n";
  for (const auto& v : d.vertices) {
    Json x{{"vertex", v.vertex}, {"status", status_name(v.result.verdict.status)}, {"witness", v.result.verdict.witness}};
    if (v.result.verdict.status == Status::ProvenYes) {
      x["into"] = v.result.vertex;
      x["conjugator"] = show(v.result.conjugator);
    }
    if (!v.result.hyperbolic.empty()) x["hyperbolic"] = show(v.result.hyperbolic);
    vs.push_back(x);
    tab << v.vertex << '\t' << status_name(v.result.verdict.status) << '\t' << v.result.verdict.witness << '\n';
  }
  r.body = verdict_json(d.overall);
  r.body["vertices"] = vs;
  tab << "overall\t" << status_name(d.overall.status) << '\t' << d.overall.witness << '\n';
  r.text = tab.str();
  r.code = exit_of(d.overall.status);
  return r;
}

Report cmd_deformation(const RunConfig& c) {
  GraphOfGroups a = load(c, 0), b = load(c, 1);
  Verdict v = same_deformation_space(a, b, c.budget);
  Report r;
  r.body = verdict_json(v);
  r.code = exit_of(v.status);
  return r;
}

Report cmd_jsj_certify(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  JsjCertificate cert = jsj_certify_finite(g);
  Report r;
  Json ue = Json::array();
  for (const auto& e : universally_elliptic_edges(g))
    ue.push_back({{"edge", e.edge}, {"status", status_name(e.status)}, {"reason", e.reason}});
  r.body = {{"certified", cert.certified},
            {"reduced", cert.reduced},
            {"edges_finite", cert.edges_finite},
            {"text", cert.text},
            {"trace", trace_json(cert.trace)},
            {"universally_elliptic", ue}};
  r.code = cert.certified ? 0 : 1;
  return r;
}

Report cmd_audit(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  AuditClaims claims;
  Json raw = load_json(c.inputs[0]);
  if (raw.contains("audit_claims")) {
    const Json& a = raw.at("audit_claims");
    if (!a.is_object()) fail(ErrorCode::Schema, "'audit_claims' must be an object");
    if (a.contains("d")) claims.d = a.at("d").get<int>();
    if (a.contains("acylindrical_k")) claims.acylindrical_k = a.at("acylindrical_k").get<int>();
  }
  if (claims.acylindrical_k) claims.acylindrical = check_acylindrical(g, *claims.acylindrical_k, std::max(c.radius, *claims.acylindrical_k + 2));
  AccessibilityReport rep = accessibility_audit(g, claims);
  Report r;
  Json bs = Json::array();
  std::ostringstream tab;
  tab << "d = " << rep.d << " (computed " << rep.d_computed << ")\n";
  tab << "bound\tformula\tbound\tobserved\tpass\n";
  for (const auto& b : rep.bounds) {
    bs.push_back({{"name", b.name}, {"formula", b.formula}, {"bound", b.bound}, {"observed", b.observed}, {"pass", b.pass}});
    tab << b.name << '\t' << b.formula << '\t' << b.bound << '\t' << b.observed << '\t' << (b.pass ? "yes" : "NO")
        << '\n';
  }
  r.body = {{"d", rep.d}, {"d_computed", rep.d_computed}, {"ok", rep.ok}, {"bounds", bs}};
  if (claims.acylindrical_k) r.body["acylindrical"] = verdict_json(claims.acylindrical);
  std::vector<std::string> violated;
  for (const auto& b : rep.bounds)
    if (!b.pass) violated.push_back(b.name + ": " + std::to_string(b.observed) + " > " + std::to_string(b.bound));
  r.body["violated"] = violated;
  r.text = tab.str();
  r.code = rep.ok ? 0 : 1;
  return r;
}

Report cmd_moves(const RunConfig& c) {
  GraphOfGroups g = load(c, 0);
  if (!c.vertex.empty()) {
    if (c.name.empty() || c.edge.empty() || c.subgroup.empty())
      fail(ErrorCode::InvalidArgument, "expansion needs --vertex, --name, --edge and --subgroup");
    std::vector<SymWord> sub;
    for (const auto& s : c.subgroup) sub.push_back(parse_symword(s));
    Report r = graph_report(expansion_move(g, c.vertex, c.name, c.edge, sub, parse_ends(c.moved)));
    r.body["move"] = "expansion";
    return r;
  }
  if (!c.edge.empty()) {
    ReductionStep st;
    Report r = graph_report(reduction_move(g, c.edge, &st));
    r.body["move"] = "reduction";
    r.body["step"] = {{"edge", st.edge}, {"removed", st.removed}, {"kept", st.kept}};
    return r;
  }
  // no move requested: list the available reductions
  Report r;
  Json avail = Json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int side = -1;
    if (is_fictitious(g, static_cast<int>(e), &side))
      avail.push_back({{"edge", g.edges[e].name}, {"removes", g.vertices[g.edges[e].end(side)].name}});
  }
  r.body["reductions"] = avail;
  r.body["reduced"] = avail.empty();
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& table() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> t{
      {"validate", cmd_validate},       {"present", cmd_present},     {"reduce", cmd_reduce},
      {"collapse", cmd_collapse},       {"refine", cmd_refine},       {"grushko", cmd_grushko},
      {"rank", cmd_rank},               {"ball", cmd_ball},           {"geodesic", cmd_geodesic},
      {"fixed", cmd_fixed},             {"acyl", cmd_acyl},           {"cylinders", cmd_cylinders},
      {"aut-shape", cmd_aut_shape},     {"free-split", cmd_free_split}, {"mv", cmd_mv},
      {"dominates", cmd_dominates},     {"deformation", cmd_deformation}, {"jsj-certify", cmd_jsj_certify},
      {"audit", cmd_audit},             {"moves", cmd_moves}};
  return t;
}

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << k << ":\n";
      for (const auto& x : v) {
        out << indent << "  -\n";
        render_text(x, out, indent + "    ");
      }
    } else if (v.is_string()) {
      out << indent << k << ": " << v.get<std::string>() << '\n';
    } else {
      out << indent << k << ": " << v.dump() << '\n';
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "validate", "present",   "reduce",    "collapse", "refine",      "grushko", "rank",
      "ball",     "geodesic",  "fixed",     "acyl",     "cylinders",   "aut-shape", "free-split",
      "mv",       "dominates", "deformation", "jsj-certify", "audit", "moves"};
  return names;
}

void check_config(const RunConfig& c) {
  if (c.radius < 0) fail(ErrorCode::InvalidArgument, "radius must be >= 0");
  if (c.budget < 0) fail(ErrorCode::InvalidArgument, "budget must be >= 1");
  if (c.prime && !is_prime(*c.prime)) fail(ErrorCode::InvalidArgument, std::to_string(*c.prime) + " is not prime");
  if (c.k < 0) fail(ErrorCode::InvalidArgument, "k must be >= 0");
}

int run(const RunConfig& config, std::ostream& out) {
  RunConfig c = config;
  // "jsj certify|dominates|deformation|audit"
  if (c.command == "jsj") {
    if (c.mode == "certify") c.command = "jsj-certify";
    else if (c.mode == "dominates" || c.mode == "deformation" || c.mode == "audit") c.command = c.mode;
    else c.command = "jsj-" + c.mode;
  }
  Report r;
  try {
    check_config(c);
    auto it = table().find(c.command);
    if (it == table().end()) fail(ErrorCode::InvalidArgument, "unknown command '" + c.command + "'");
    r = it->second(c);
  } catch (const Error& e) {
    Json err{{"command", c.command}, {"error", std::string(error_name(e.code()))}, {"message", e.what()}};
    if (c.format == OutputFormat::Json) out << err.dump(2) << '\n';
    else out << "error " << error_name(e.code()) << ": " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    Json err{{"command", c.command}, {"error", "Schema"}, {"message", e.what()}};
    if (c.format == OutputFormat::Json) out << err.dump(2) << '\n';
    else out << "error Schema: " << e.what() << '\n';
    return 3;
  }

  if (c.dot_path && !c.dot_path->empty()) {
    if (r.dot.empty()) {
      out << "error InvalidArgument: '" << c.command << "' has no DOT rendering\n";
      return 3;
    }
    std::ofstream f(*c.dot_path);
    if (!f) {
      out << "error InvalidArgument: cannot write " << *c.dot_path << '\n';
      return 3;
    }
    f << r.dot;
  }
  const bool dot_stdout = c.format == OutputFormat::Dot || (c.dot_path && c.dot_path->empty());
  if (dot_stdout) {
    if (r.dot.empty()) {
      out << "error InvalidArgument: '" << c.command << "' has no DOT rendering\n";
      return 3;
    }
    out << r.dot;
    return r.code;
  }
  Json full{{"command", c.command}};
  if (!c.mode.empty()) full["mode"] = c.mode;
  full["exit_code"] = r.code;
  for (const auto& [k, v] : r.body.items()) full[k] = v;
  if (c.format == OutputFormat::Json) {
    out << full.dump(2) << '\n';
  } else if (!r.text.empty()) {
    out << r.text;
    if (r.text.back() != '\n') out << '\n';
  } else {
    render_text(full, out, "");
  }
  return r.code;
}

}  // namespace propp
