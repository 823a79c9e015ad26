#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "propp/graph_of_groups.hpp"
#include "propp/path_group.hpp"

namespace propp {

enum class Status { ProvenYes, ProvenNo, Unknown };
const char* status_name(Status s);

/// Answer of a bounded search. `witness` is a human readable certificate;
/// `budget_used` counts normal form operations or cells.
struct Verdict {
  Status status = Status::Unknown;
  std::string witness;
  long budget_used = 0;
};

/// Cell cap for tree balls: PROPP_BUDGET when set, else 50000.
long default_budget();

/// The standard tree of a graph of groups, explored through normal forms in
/// the flattened graph. Vertices of the tree are paths from the base vertex
/// with trivial tail (one per coset gG(v)).
class StandardTree {
 public:
  explicit StandardTree(const GraphOfGroups& g);

  const GraphOfGroups& graph() const { return g_; }
  const PathGroup& pg() const { return *pg_; }
  std::shared_ptr<const PathGroup> engine() const { return pg_; }
  /// No composite vertex groups: the tree of the flattened graph is the
  /// standard tree itself.
  bool flat() const { return flat_; }

  PathElem element(const SymWord& w) const { return pg_->from_presentation(w); }
  SymWord word(const PathElem& loop) const { return pg_->to_presentation(loop); }
  /// Syllable rendering "x0 -e1-> x1 ..." with local words.
  std::string format(const PathElem& p) const;

  PathElem base_point() const { return pg_->identity(pg_->base()); }
  /// Canonical vertex: normal form with the tail dropped.
  PathElem vertex_of(const PathElem& path) const;
  /// Vertex h.p for a loop h at the base.
  PathElem act(const PathElem& h, const PathElem& p) const;
  bool fixes(const PathElem& h, const PathElem& p) const;
  int distance(const PathElem& p, const PathElem& q) const;
  /// Coset representative g (loop at the base) of the vertex p = gG(v).
  PathElem coset_element(const PathElem& p) const;
  /// Loop at the base standing for t_e (identity on tree edges).
  PathElem stable_element(int e) const;

  /// Midpoint of [p, h p] when h is elliptic; nullopt when h is hyperbolic.
  std::optional<PathElem> project_to_fixed(const PathElem& h, const PathElem& p) const;
  /// Cyclically reduced conjugate: returns the conjugated loop and the
  /// conjugator c (element = c * core * c^-1).
  PathElem cyclic_core(const PathElem& h, PathElem* conj = nullptr) const;
  /// Hyperbolic in the standard tree of the original (unflattened) graph:
  /// the cyclic core crosses an edge that is not inside a composite.
  bool hyperbolic_outer(const PathElem& h) const;

 private:
  GraphOfGroups g_;
  std::shared_ptr<const PathGroup> pg_;
  bool flat_ = true;
};

/// Normal form of a presentation word of g.
PathElem normal_form(const GraphOfGroups& g, const SymWord& w);
std::string format_normal_form(const GraphOfGroups& g, const SymWord& w);

struct BallVertex {
  PathElem path;  // from the base, trivial tail
  int vertex = 0;
  int depth = 0;
  int parent = -1;
  std::vector<int> edges;
};

/// Edge cell gG(e), e oriented as in the graph: d0 = gG(from), d1 = g t_e G(to).
struct BallEdge {
  int edge = 0;
  PathElem g;  // loop at the base
  int d0 = 0, d1 = 0;
};

struct TreeBall {
  int radius = 0;
  bool truncated = false;
  std::vector<BallVertex> vertices;
  std::vector<BallEdge> edges;
  std::map<PathElem, int> index;
  std::shared_ptr<const StandardTree> tree;

  int find(const PathElem& vertex_path) const;
  /// Coset label "g G(v)" / "g G(e)" with g a presentation word.
  std::string vertex_label(int i) const;
  std::string edge_label(int i) const;
};

/// Vertices within distance r of the base. Infinite-index attachments keep
/// coset representatives of length at most r and set `truncated`.
TreeBall tree_ball(const GraphOfGroups& g, int r, long budget = 0);

struct Geodesic {
  std::vector<int> vertices;
  std::vector<int> edges;
  bool stabilizers_checked = false;
  bool stabilizers_ok = true;
};
/// Path in the ball; checks that Stab(v) and Stab(w) meet inside every edge
/// stabilizer on the way (when one endpoint stabilizer is finite).
Geodesic geodesic(const TreeBall& ball, int v, int w);

struct FixedSet {
  std::vector<int> vertices;
  std::vector<int> edges;
  int diameter = -1;  // -1 when empty
  int components = 0;
};
FixedSet fixed_subtree(const TreeBall& ball, const std::vector<SymWord>& gens);

/// Result of conjugating a subgroup into a vertex group: c^-1 H c lies in
/// the group of `vertex`.
struct Conjugation {
  Verdict verdict;
  std::string vertex;
  SymWord conjugator;
  SymWord hyperbolic;  // element without fixed point, for ProvenNo
};
/// Common fixed vertex of the generators (any subgroup).
Conjugation elliptic_subgroup(const StandardTree& t, const std::vector<SymWord>& gens, long budget);
/// Finite subgroup into a vertex group (NotFinite when H is infinite).
Conjugation conjugate_into_vertex(const GraphOfGroups& g, const std::vector<SymWord>& gens, long budget = 0);

Verdict check_acylindrical(const GraphOfGroups& g, int k, int r);

}  // namespace propp
