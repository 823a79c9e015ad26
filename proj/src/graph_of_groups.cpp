#include "propp/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "propp/error.hpp"
#include "propp/gog_ops.hpp"

namespace propp {

int GraphOfGroups::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return static_cast<int>(i);
  return -1;
}

int GraphOfGroups::find_edge(const std::string& name) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].name == name) return static_cast<int>(i);
  return -1;
}

int GraphOfGroups::vertex_index(const std::string& name) const {
  int i = find_vertex(name);
  if (i < 0) fail(ErrorCode::NoSuchVertex, "no vertex '" + name + "'");
  return i;
}

int GraphOfGroups::edge_index(const std::string& name) const {
  int i = find_edge(name);
  if (i < 0) fail(ErrorCode::NoSuchEdge, "no edge '" + name + "'");
  return i;
}

std::string GraphOfGroups::qualify(int v, const std::string& local) const {
  if (vertices[v].group->kind() == Group::Kind::Composite) return local;
  return vertices[v].name + "." + local;
}

SymWord GraphOfGroups::qualify(int v, const SymWord& local) const {
  if (vertices[v].group->kind() == Group::Kind::Composite) return local;
  return local.qualified(vertices[v].name + ".");
}

std::vector<std::pair<int, int>> GraphOfGroups::incident(int v) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].from == v) out.push_back({static_cast<int>(e), 0});
    if (edges[e].to == v) out.push_back({static_cast<int>(e), 1});
  }
  return out;
}

bool GraphOfGroups::connected() const {
  if (vertices.empty()) return false;
  std::vector<bool> seen(vertices.size(), false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& e : edges) {
      int w = e.from == v ? e.to : (e.to == v ? e.from : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        q.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool GraphOfGroups::same_as(const GraphOfGroups& o) const {
  if (prime != o.prime || vertices.size() != o.vertices.size() || edges.size() != o.edges.size()) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name != o.vertices[i].name || !vertices[i].group->same_as(*o.vertices[i].group)) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto &a = edges[i], &b = o.edges[i];
    if (a.name != b.name || a.from != b.from || a.to != b.to || !a.group->same_as(*b.group) ||
        a.attach_from != b.attach_from || a.attach_to != b.attach_to)
      return false;
  }
  return aliases == o.aliases;
}

std::vector<int> default_spanning_tree(const GraphOfGroups& g) {
  std::vector<int> tree;
  if (g.vertices.empty()) return tree;
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<int> q{0};
  seen[0] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      int w = ed.from == v ? ed.to : (ed.to == v ? ed.from : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        tree.push_back(static_cast<int>(e));
        q.push_back(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

namespace {

std::size_t generator_count(const Group& g) {
  switch (g.kind()) {
    case Group::Kind::Finite: return g.as_finite().generators().size();
    case Group::Kind::Free: return static_cast<std::size_t>(g.as_free().rank());
    default: fail(ErrorCode::Schema, "edge groups must be finite or free");
  }
}

}  // namespace

void validate(const GraphOfGroups& g) {
  if (!is_prime(g.prime)) fail(ErrorCode::Schema, "prime " + std::to_string(g.prime) + " is not prime");
  if (g.vertices.empty()) fail(ErrorCode::Disconnected, "graph has no vertices");
  std::set<std::string> vn, en;
  for (const auto& v : g.vertices) {
    if (!vn.insert(v.name).second) fail(ErrorCode::Schema, "duplicate vertex name '" + v.name + "'");
    if (!v.group) fail(ErrorCode::Schema, "vertex '" + v.name + "' has no group");
  }
  for (const auto& e : g.edges) {
    if (!en.insert(e.name).second) fail(ErrorCode::Schema, "duplicate edge name '" + e.name + "'");
    if (!e.group) fail(ErrorCode::Schema, "edge '" + e.name + "' has no group");
    if (e.from < 0 || e.to < 0 || e.from >= static_cast<int>(g.vertices.size()) ||
        e.to >= static_cast<int>(g.vertices.size()))
      fail(ErrorCode::Schema, "edge '" + e.name + "' has a bad endpoint");
  }
  auto check_prime = [&](const Group& grp, const std::string& where) {
    if (grp.prime() != g.prime)
      fail(ErrorCode::PrimeMismatch, where + " uses prime " + std::to_string(grp.prime()) + ", graph uses " +
                                         std::to_string(g.prime));
  };
  for (const auto& v : g.vertices) {
    check_prime(*v.group, "vertex '" + v.name + "'");
    if (v.group->kind() == Group::Kind::Finite) validate_p_group(v.group->as_finite());
    if (v.group->kind() == Group::Kind::Composite) validate(v.group->as_composite());
  }
  for (const auto& e : g.edges) {
    check_prime(*e.group, "edge '" + e.name + "'");
    if (e.group->kind() == Group::Kind::Finite) validate_p_group(e.group->as_finite());
  }
  if (!g.connected()) fail(ErrorCode::Disconnected, "underlying graph is disconnected");
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    std::size_t k = generator_count(*e.group);
    for (int side = 0; side < 2; ++side) {
      if (e.attach(side).size() != k)
        fail(ErrorCode::Schema, "edge '" + e.name + "': expected " + std::to_string(k) + " images at " +
                                    (side == 0 ? "from" : "to") + " end");
      std::string why;
      if (!end_injective(g, static_cast<int>(i), side, &why))
        fail(ErrorCode::NonInjectiveAttachment, "edge '" + e.name + "' " + (side == 0 ? "from" : "to") +
                                                    " end: " + why);
    }
  }
}

}  // namespace propp
