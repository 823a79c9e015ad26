#include "propp/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "propp/error.hpp"

namespace propp {

std::vector<SymWord> Presentation::relators() const {
  std::vector<SymWord> out;
  for (const auto& r : relations) out.push_back(r.relator());
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    os << (i ? ", " : "") << to_string(relations[i].lhs);
    if (!relations[i].rhs.empty()) os << " = " << to_string(relations[i].rhs);
  }
  os << " >";
  return os.str();
}

void check_spanning_tree(const GraphOfGroups& g, const std::vector<int>& tree) {
  const std::size_t n = g.vertices.size();
  if (tree.size() + 1 != n)
    fail(ErrorCode::NotSpanningTree, "a spanning tree needs " + std::to_string(n - 1) + " edges");
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<int> seen;
  for (int e : tree) {
    if (e < 0 || e >= static_cast<int>(g.edges.size()) || !seen.insert(e).second)
      fail(ErrorCode::NotSpanningTree, "bad or repeated tree edge");
    int a = find(g.edges[e].from), b = find(g.edges[e].to);
    if (a == b) fail(ErrorCode::NotSpanningTree, "edge '" + g.edges[e].name + "' closes a cycle");
    parent[a] = b;
  }
}

std::vector<int> spanning_tree_from_names(const GraphOfGroups& g, const std::vector<std::string>& names) {
  std::vector<int> t;
  for (const auto& n : names) {
    int e = g.find_edge(n);
    if (e < 0) fail(ErrorCode::NotSpanningTree, "no edge '" + n + "'");
    t.push_back(e);
  }
  check_spanning_tree(g, t);
  std::sort(t.begin(), t.end());
  return t;
}

Presentation fundamental_presentation(const GraphOfGroups& g) {
  return fundamental_presentation(g, default_spanning_tree(g));
}

Presentation fundamental_presentation(const GraphOfGroups& g, const std::vector<int>& tree) {
  check_spanning_tree(g, tree);
  std::vector<bool> in_tree(g.edges.size(), false);
  for (int e : tree) in_tree[e] = true;
  Presentation p;
  for (int e : tree) p.tree_edges.push_back(g.edges[e].name);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Group& grp = *g.vertices[v].group;
    if (grp.kind() == Group::Kind::Composite) {
      Presentation inner = fundamental_presentation(grp.as_composite());
      p.generators.insert(p.generators.end(), inner.generators.begin(), inner.generators.end());
      p.relations.insert(p.relations.end(), inner.relations.begin(), inner.relations.end());
      continue;
    }
    for (const auto& s : grp.symbols()) p.generators.push_back(g.qualify(static_cast<int>(v), s));
    for (const auto& r : grp.relators()) p.relations.push_back({g.qualify(static_cast<int>(v), r), SymWord()});
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    SymWord t;
    if (!in_tree[e]) {
      p.generators.push_back(GraphOfGroups::stable_letter(ed.name));
      t = SymWord::symbol(GraphOfGroups::stable_letter(ed.name));
    }
    for (std::size_t k = 0; k < ed.attach_from.size(); ++k) {
      SymWord d0 = g.qualify(ed.from, ed.attach_from[k]);
      SymWord d1 = g.qualify(ed.to, ed.attach_to[k]);
      p.relations.push_back({t.inverse() * d0 * t, d1});
    }
  }
  std::set<std::string> uniq(p.generators.begin(), p.generators.end());
  if (uniq.size() != p.generators.size()) fail(ErrorCode::Schema, "presentation symbols collide; rename vertices");
  return p;
}

FpVector exponent_vector(const SymWord& w, const std::vector<std::string>& generators, unsigned prime) {
  FpVector v(prime, generators.size());
  std::vector<long long> s(generators.size(), 0);
  for (const auto& l : w.letters()) {
    auto it = std::find(generators.begin(), generators.end(), l.sym);
    if (it == generators.end()) fail(ErrorCode::UnknownSymbol, "unknown symbol '" + l.sym + "'");
    s[it - generators.begin()] += l.exp;
  }
  for (std::size_t i = 0; i < s.size(); ++i) v.coords[i] = mod_p(s[i], prime);
  return v;
}

FpQuotient abelianization_mod_p(const Presentation& p, unsigned prime) {
  std::vector<FpVector> rows;
  for (const auto& r : p.relations) rows.push_back(exponent_vector(r.relator(), p.generators, prime));
  return FpQuotient(prime, p.generators.size(), rows);
}

}  // namespace propp
