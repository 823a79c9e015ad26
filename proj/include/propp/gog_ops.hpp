#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "propp/fp_linear.hpp"
#include "propp/graph_of_groups.hpp"

namespace propp {

// ---- edge ends ----

/// The attachment at end `side` of edge e is an injective homomorphism.
bool end_injective(const GraphOfGroups& g, int e, int side, std::string* why = nullptr);
/// The attachment is onto the endpoint group (and injective).
bool end_bijective(const GraphOfGroups& g, int e, int side);
/// For a bijective end: each local symbol of the endpoint group as a word
/// in the edge group's generators.
std::map<std::string, SymWord> end_inverse(const GraphOfGroups& g, int e, int side);

// ---- reduction ----

/// Non-loop edge with an attachment that is an isomorphism. `iso_side`
/// receives the side to eliminate (0 preferred).
bool is_fictitious(const GraphOfGroups& g, int e, int* iso_side = nullptr);

struct ReductionStep {
  std::string edge;
  std::string removed;  // vertex eliminated
  std::string kept;     // vertex keeping its group
};
struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Collapse one fictitious edge (NotFictitious otherwise).
GraphOfGroups reduction_move(const GraphOfGroups& g, const std::string& edge, ReductionStep* step = nullptr);
/// Collapse fictitious edges (lowest index first) until none remain.
std::pair<GraphOfGroups, ReductionTrace> reduce(const GraphOfGroups& g);
bool is_reduced(const GraphOfGroups& g);
/// pi_1 is finite: reduction leaves one vertex with a finite group.
bool composite_is_finite(const GraphOfGroups& g, long* order = nullptr);

/// Inverse of reduction_move: split vertex v, moving `moved` edge ends to a
/// new vertex carrying the subgroup of G_v generated by `sub_gens` (local
/// words); the new edge `edge` joins the new vertex (its `from` end) to v.
GraphOfGroups expansion_move(const GraphOfGroups& g, const std::string& v, const std::string& new_vertex,
                             const std::string& edge, const std::vector<SymWord>& sub_gens,
                             const std::vector<std::pair<std::string, int>>& moved);

// ---- collapse / refine ----

/// Replace the connected subgraph (vertices, edges) by one vertex whose
/// group is the nested graph. Empty `edges` means all edges among the
/// vertices.
GraphOfGroups collapse_subgraph(const GraphOfGroups& g, const std::vector<std::string>& vertices,
                                const std::vector<std::string>& edges = {}, const std::string& new_name = "");

/// Where an edge end at the refined vertex goes: the inner vertex and c
/// with c^-1 (image) c inside that vertex group (presentation words of the
/// inner graph).
struct EndAttachment {
  std::string inner_vertex;
  SymWord conjugator;
};
using AttachMap = std::map<std::pair<std::string, int>, EndAttachment>;

GraphOfGroups refine_at_vertex(const GraphOfGroups& g, const std::string& v, const GraphOfGroups& inner,
                               const AttachMap& attach);
/// Attachment map for ends whose images already lie in one inner vertex.
AttachMap default_attach_map(const GraphOfGroups& g, const std::string& v, const GraphOfGroups& inner);

// ---- invariants ----

/// d(pi_1) for the pro-p completion: minimal number of generators, from
/// the abelianized presentation mod p.
int rank_mod_p(const GraphOfGroups& g);

struct GrushkoResult {
  std::vector<GraphOfGroups> parts;
  int free_rank = 0;
};
/// Components of the subgraph of edges with nontrivial edge group, plus the
/// rank of the free factor from trivial edges.
GrushkoResult grushko_components(const GraphOfGroups& g);

struct IncidentEdgeGroup {
  std::string edge;
  int side = 0;
  std::vector<SymWord> images;  // local words at the vertex
  long order = 0;               // 0 when infinite
};
std::vector<IncidentEdgeGroup> incident_edge_groups(const GraphOfGroups& g, const std::string& v);

/// Isomorphism of graphs of groups ignoring names. Attachments compare
/// exactly, or up to simultaneous conjugation into finite groups.
bool isomorphic(const GraphOfGroups& a, const GraphOfGroups& b);

/// Per-edge-end information used by several modules.
std::string describe_group(const Group& g);

}  // namespace propp
