#pragma once

#include <map>
#include <string>
#include <vector>

#include "propp/group.hpp"
#include "propp/word.hpp"

namespace propp {

struct Vertex {
  std::string name;
  GroupPtr group;
};

/// Edge from `from` to `to`. attach_from[k] / attach_to[k] are the images
/// of the k-th generator of the edge group, as words in the local symbols
/// of the endpoint groups.
struct Edge {
  std::string name;
  int from = 0, to = 0;
  GroupPtr group;
  std::vector<SymWord> attach_from, attach_to;

  bool is_loop() const { return from == to; }
  int end(int side) const { return side == 0 ? from : to; }
  const std::vector<SymWord>& attach(int side) const { return side == 0 ? attach_from : attach_to; }
  std::vector<SymWord>& attach(int side) { return side == 0 ? attach_from : attach_to; }
};

class GraphOfGroups {
 public:
  unsigned prime = 2;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  /// Symbols no longer (or never) present in this graph's presentation,
  /// with a word standing for the same element: either in this graph's
  /// symbols or in those of the graph it was derived from.
  std::map<std::string, SymWord> aliases;

  int vertex_index(const std::string& name) const;  // throws NoSuchVertex
  int edge_index(const std::string& name) const;    // throws NoSuchEdge
  int find_vertex(const std::string& name) const;   // -1 if absent
  int find_edge(const std::string& name) const;

  /// Symbol of a local generator of vertex v in the fundamental presentation.
  std::string qualify(int v, const std::string& local) const;
  SymWord qualify(int v, const SymWord& local) const;
  /// Stable letter symbol of an edge.
  static std::string stable_letter(const std::string& edge) { return "t." + edge; }

  /// Edge indices incident to v, as (edge, side) pairs.
  std::vector<std::pair<int, int>> incident(int v) const;
  bool connected() const;
  int betti() const { return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1; }

  /// Structural equality including names.
  bool same_as(const GraphOfGroups& o) const;
};

/// Default spanning tree: breadth-first from vertex 0, edges in index order.
std::vector<int> default_spanning_tree(const GraphOfGroups& g);

/// Checks primes, connectivity, names, attachment arity and injectivity.
void validate(const GraphOfGroups& g);

}  // namespace propp
