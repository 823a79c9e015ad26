#pragma once

#include <map>
#include <string>
#include <vector>

#include "propp/bass_serre.hpp"
#include "propp/gog_ops.hpp"
#include "propp/graph_of_groups.hpp"

namespace propp {

enum class RelationKind { Equality, Commensurability, UserPartition };

/// Equivalence on edges of the standard tree, defined on edge orbits.
/// For UserPartition, `classes[e]` is the class id of graph edge e.
struct EdgeRelation {
  RelationKind kind = RelationKind::Equality;
  std::vector<int> classes;

  static EdgeRelation equality() { return {}; }
  static EdgeRelation commensurability() { return {RelationKind::Commensurability, {}}; }
  static EdgeRelation partition(std::vector<int> classes) { return {RelationKind::UserPartition, std::move(classes)}; }
};
const char* relation_name(RelationKind k);
/// "equality", "commensurability" (UserPartition needs explicit classes).
EdgeRelation parse_relation(const std::string& name);

/// Nesting and geodesic closure on the ball; a violation gives ProvenNo
/// with the offending edge cells.
Verdict check_admissible(const GraphOfGroups& g, const EdgeRelation& rel, int r);

struct CylinderPartition {
  std::vector<int> cls;                   // per ball edge
  std::vector<std::vector<int>> members;  // ball edges per class
  std::vector<std::vector<int>> vertices; // ball vertices spanned per class
  bool subtrees = true;                   // each class connected
  bool meet_once = true;                  // distinct classes share <= 1 vertex
};
CylinderPartition cylinder_partition(const TreeBall& ball, const EdgeRelation& rel);

/// Quotient graph of groups of the tree of cylinders. The first `v0_count`
/// vertices are the original ones; the rest are cylinders "cyl<k>" whose
/// groups are nested graphs of normalizers.
struct TcQuotient {
  GraphOfGroups graph;
  int v0_count = 0;
  /// Tc vertex or edge name -> where it came from.
  std::map<std::string, std::string> provenance;
  /// Presentation symbols of `graph` as words in the input's symbols.
  std::map<std::string, SymWord> to_source;
  GraphOfGroups reduced;
  ReductionTrace trace;

  bool is_cylinder(int v) const { return v >= v0_count; }
  /// DOT ids: "v:<name>" for original vertices, "cyl:<k>" for cylinders.
  std::map<std::string, std::string> dot_ids() const;
};
TcQuotient tree_of_cylinders(const GraphOfGroups& g, const EdgeRelation& rel = EdgeRelation::equality());

struct AutShape {
  bool applies = true;        // false when rigidity is not asserted
  bool malnormal1 = false, malnormal2 = false;
  std::string sexpr;
  std::string text;
};
/// Symbolic splitting of Aut(G) for a one-edge amalgam with rigid factors.
/// Malnormality of the edge group in each factor is decided here.
AutShape aut_splitting_shape(const GraphOfGroups& g, bool rigid1, bool rigid2, bool swap);

}  // namespace propp
