#include "propp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "propp/error.hpp"
#include "propp/gog_ops.hpp"

namespace propp {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(ErrorCode::Schema, where + ": missing '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Schema, where + ": bad '" + key + "': " + e.what());
  }
}

GroupPtr group_from_json(const Json& j, unsigned prime, const std::string& label) {
  const std::string where = "group '" + label + "'";
  if (!j.is_object()) fail(ErrorCode::Schema, where + " is not an object");
  std::string kind = get_field<std::string>(j, "kind", where);
  unsigned p = j.contains("prime") ? get_field<unsigned>(j, "prime", where) : prime;
  if (kind == "finite") {
    std::vector<std::string> names;
    if (j.contains("names")) names = get_field<std::vector<std::string>>(j, "names", where);
    if (j.contains("perm_gens")) {
      auto gens = get_field<std::vector<std::vector<int>>>(j, "perm_gens", where);
      if (names.empty())
        for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i));
      return Group::finite(FiniteGroup::from_permutations(p, gens, names), label);
    }
    if (j.contains("cayley")) {
      auto table = get_field<std::vector<std::vector<int>>>(j, "cayley", where);
      std::vector<int> gens;
      if (j.contains("generators")) gens = get_field<std::vector<int>>(j, "generators", where);
      return Group::finite(FiniteGroup::from_cayley(p, table, gens, names), label);
    }
    if (j.contains("trivial")) return Group::finite(FiniteGroup::trivial(p), label);
    fail(ErrorCode::Schema, where + ": finite group needs 'perm_gens' or 'cayley'");
  }
  if (kind == "free") {
    auto gens = get_field<std::vector<std::string>>(j, "generators", where);
    return Group::free(FreeGroup(p, gens), label);
  }
  if (kind == "graph") {
    if (!j.contains("graph")) fail(ErrorCode::Schema, where + ": missing 'graph'");
    auto inner = std::make_shared<GraphOfGroups>(graph_from_json(j.at("graph")));
    return Group::composite(inner, label);
  }
  fail(ErrorCode::Schema, where + ": unknown kind '" + kind + "'");
}

std::vector<SymWord> words_from_json(const Json& j, const char* key, const std::string& where) {
  std::vector<SymWord> out;
  for (const auto& s : get_field<std::vector<std::string>>(j, key, where)) out.push_back(parse_symword(s));
  return out;
}

}  // namespace

GraphOfGroups graph_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::Schema, "graph must be a JSON object");
  GraphOfGroups g;
  g.prime = j.contains("prime") ? get_field<unsigned>(j, "prime", "graph") : 2;
  std::map<std::string, GroupPtr> groups;
  if (j.contains("groups")) {
    if (!j.at("groups").is_object()) fail(ErrorCode::Schema, "'groups' must be an object");
    for (const auto& [name, val] : j.at("groups").items()) groups[name] = group_from_json(val, g.prime, name);
  }
  auto resolve = [&](const Json& ref, const std::string& where) -> GroupPtr {
    if (ref.is_string()) {
      auto it = groups.find(ref.get<std::string>());
      if (it == groups.end()) fail(ErrorCode::Schema, where + ": unknown group '" + ref.get<std::string>() + "'");
      return it->second;
    }
    return group_from_json(ref, g.prime, "");
  };
  if (!j.contains("vertices") || !j.at("vertices").is_object())
    fail(ErrorCode::Schema, "'vertices' must be an object of name -> group");
  for (const auto& [name, ref] : j.at("vertices").items())
    g.vertices.push_back({name, resolve(ref, "vertex '" + name + "'")});
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) fail(ErrorCode::Schema, "'edges' must be an array");
    std::size_t k = 0;
    for (const auto& ej : j.at("edges")) {
      std::string where = "edge #" + std::to_string(k++);
      Edge e;
      e.name = get_field<std::string>(ej, "name", where);
      where = "edge '" + e.name + "'";
      e.from = g.find_vertex(get_field<std::string>(ej, "from", where));
      e.to = g.find_vertex(get_field<std::string>(ej, "to", where));
      if (e.from < 0 || e.to < 0) fail(ErrorCode::Schema, where + ": unknown endpoint");
      if (!ej.contains("group")) fail(ErrorCode::Schema, where + ": missing 'group'");
      e.group = resolve(ej.at("group"), where);
      e.attach_from = words_from_json(ej, "attach_from", where);
      e.attach_to = words_from_json(ej, "attach_to", where);
      g.edges.push_back(std::move(e));
    }
  }
  if (j.contains("aliases")) {
    for (const auto& [k, v] : j.at("aliases").items()) {
      if (!v.is_string()) fail(ErrorCode::Schema, "alias values must be word strings");
      g.aliases[k] = parse_symword(v.get<std::string>());
    }
  }
  return g;
}

Json group_to_json(const Group& g) {
  Json j;
  switch (g.kind()) {
    case Group::Kind::Finite: {
      const auto& f = g.as_finite();
      j["kind"] = "finite";
      j["prime"] = f.prime();
      j["cayley"] = f.table();
      j["generators"] = f.generators();
      j["names"] = f.names();
      break;
    }
    case Group::Kind::Free:
      j["kind"] = "free";
      j["prime"] = g.as_free().prime();
      j["generators"] = g.as_free().names();
      break;
    default:
      j["kind"] = "graph";
      j["graph"] = graph_to_json(g.as_composite());
  }
  return j;
}

Json graph_to_json(const GraphOfGroups& g) {
  Json j;
  j["prime"] = g.prime;
  // name every distinct group object once
  std::vector<const Group*> order;
  std::map<const Group*, std::string> names;
  std::set<std::string> used;
  auto name_of = [&](const GroupPtr& p) {
    auto it = names.find(p.get());
    if (it != names.end()) return it->second;
    std::string base = p->label().empty() ? "grp" : p->label();
    std::string n = base;
    for (int k = 1; used.count(n); ++k) n = base + "#" + std::to_string(k);
    used.insert(n);
    names[p.get()] = n;
    order.push_back(p.get());
    return n;
  };
  Json verts = Json::object();
  for (const auto& v : g.vertices) verts[v.name] = name_of(v.group);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json ej;
    ej["name"] = e.name;
    ej["from"] = g.vertices[e.from].name;
    ej["to"] = g.vertices[e.to].name;
    ej["group"] = name_of(e.group);
    Json af = Json::array(), at = Json::array();
    for (const auto& w : e.attach_from) af.push_back(to_string(w));
    for (const auto& w : e.attach_to) at.push_back(to_string(w));
    ej["attach_from"] = af;
    ej["attach_to"] = at;
    edges.push_back(ej);
  }
  Json groups = Json::object();
  for (const Group* p : order) groups[names[p]] = group_to_json(*p);
  j["groups"] = groups;
  j["vertices"] = verts;
  j["edges"] = edges;
  if (!g.aliases.empty()) {
    Json a = Json::object();
    for (const auto& [k, v] : g.aliases) a[k] = to_string(v);
    j["aliases"] = a;
  }
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Schema, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Schema, "'" + path + "' is not valid JSON: " + e.what());
  }
}

GraphOfGroups load_graph(const std::string& path) {
  GraphOfGroups g = graph_from_json(load_json(path));
  validate(g);
  return g;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

}  // namespace

std::string to_dot(const GraphOfGroups& g, const std::map<std::string, std::string>& ids) {
  auto id = [&](const std::string& name) {
    auto it = ids.find(name);
    return it == ids.end() ? "v:" + name : it->second;
  };
  std::ostringstream os;
  os << "digraph gog {\n";
  for (const auto& v : g.vertices)
    os << "  \"" << dot_escape(id(v.name)) << "\" [label=\"" << dot_escape(v.name) << "\\n"
       << dot_escape(describe_group(*v.group)) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  \"" << dot_escape(id(g.vertices[e.from].name)) << "\" -> \"" << dot_escape(id(g.vertices[e.to].name))
       << "\" [label=\"" << dot_escape(e.name) << ": " << dot_escape(describe_group(*e.group)) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace propp
