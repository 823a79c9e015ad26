#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "propp/finite_group.hpp"
#include "propp/free_group.hpp"
#include "propp/graph_of_groups.hpp"

namespace propp {

/// Graph of groups with only finite and free vertex groups, plus the
/// spanning tree that reproduces the presentation symbols of the graph it
/// was flattened from.
struct FlatGraph {
  GraphOfGroups graph;
  std::vector<int> tree;
  std::vector<int> owner;       // flat vertex -> vertex of the original graph
  std::vector<int> outer_edge;  // flat edge -> edge of the original graph, -1 when inner
};

/// Replace composite vertices by their inner graphs. Attachments into a
/// composite must lie in a single inner vertex; otherwise
/// UnsupportedCosetTest.
FlatGraph flatten(const GraphOfGroups& g);

/// Element of a finite or free group: `f` indexes a finite group element,
/// `w` is a free word (used when f < 0).
struct Elem {
  int f = -1;
  Word w;
  auto operator<=>(const Elem&) const = default;
  bool operator==(const Elem&) const = default;
};

/// Edge traversed in direction `dir` (0: from -> to, 1: to -> from).
struct OEdge {
  int edge = 0;
  int dir = 0;
  int src_side() const { return dir; }
  int dst_side() const { return 1 - dir; }
  OEdge reversed() const { return {edge, 1 - dir}; }
  auto operator<=>(const OEdge&) const = default;
  bool operator==(const OEdge&) const = default;
};

struct Syllable {
  Elem x;
  OEdge e;
  auto operator<=>(const Syllable&) const = default;
  bool operator==(const Syllable&) const = default;
};

/// Element of the path group: x0 t_{e1} x1 ... t_{en} xn, kept in normal
/// form: each x_i is the chosen representative of its coset modulo the
/// image of the next edge group, and no t_e a t_e^-1 pinch remains.
struct PathElem {
  int start = 0;
  int finish = 0;
  std::vector<Syllable> syl;
  Elem tail;
  std::size_t length() const { return syl.size(); }
  auto operator<=>(const PathElem&) const = default;
  bool operator==(const PathElem&) const = default;
};

/// Normal forms in the fundamental group of a flat graph of groups.
class PathGroup {
 public:
  explicit PathGroup(FlatGraph flat);

  const GraphOfGroups& graph() const { return g_; }
  const std::vector<int>& tree() const { return tree_; }
  bool in_tree(int e) const { return in_tree_[e]; }
  /// Vertex of the unflattened graph containing flat vertex v.
  int owner(int v) const { return owner_[v]; }
  /// Edge of the unflattened graph, -1 for edges inside a composite.
  int outer_edge(int e) const { return outer_edge_[e]; }
  int base() const { return 0; }

  // vertex groups
  bool vertex_finite(int v) const { return g_.vertices[v].group->kind() == Group::Kind::Finite; }
  Elem id(int v) const;
  bool is_id(const Elem& x) const { return x.f >= 0 ? x.f == 0 : x.w.empty(); }
  Elem mul(int v, const Elem& a, const Elem& b) const;
  Elem inv(int v, const Elem& a) const;
  Elem vertex_element(int v, const SymWord& local) const;
  SymWord local_word(int v, const Elem& x) const;
  /// Order of a vertex element, 0 when infinite.
  long elem_order(int v, const Elem& x) const;

  // edge groups
  Elem edge_id(int e) const;
  Elem edge_mul(int e, const Elem& a, const Elem& b) const;
  Elem edge_inv(int e, const Elem& a) const;
  Elem edge_element(int e, const SymWord& local) const;
  SymWord edge_word(int e, const Elem& h) const;
  /// Image of an edge group element in the group at end `side`.
  Elem edge_map(int e, int side, const Elem& h) const;
  /// x = rep * edge_map(e, side, h).
  Elem decompose(int e, int side, const Elem& x, Elem* h) const;
  bool in_image(int e, int side, const Elem& x, Elem* h = nullptr) const;
  /// Left coset representatives of the image at end `side` (identity
  /// first). Infinite index is cut at words of length `max_len` and
  /// reported through `truncated`.
  std::vector<Elem> transversal(int e, int side, std::size_t max_len, bool* truncated) const;
  /// Index of the image at end `side`, 0 when infinite.
  long index(int e, int side) const;
  /// Edge group elements (finite edge groups only).
  std::vector<Elem> edge_elements(int e) const;
  std::vector<Elem> edge_generators(int e) const;
  bool edge_finite(int e) const { return g_.edges[e].group->kind() == Group::Kind::Finite; }

  // path elements
  PathElem identity(int v) const;
  PathElem vertex_path(int v, const Elem& x) const;
  PathElem edge_path(OEdge e) const;
  PathElem multiply(const PathElem& a, const PathElem& b) const;
  PathElem inverse(const PathElem& a) const;
  PathElem power(const PathElem& a, long k) const;
  /// Normal form of an arbitrary alternating sequence.
  PathElem normalize(int start, const std::vector<Syllable>& syl, const Elem& tail) const;
  int vertex_after(int start, const std::vector<Syllable>& syl) const;

  /// Tree path from the base to v.
  PathElem gamma(int v) const;
  /// Word in the presentation symbols -> loop at the base.
  PathElem from_presentation(const SymWord& w) const;
  /// Loop at the base -> word in the presentation symbols.
  SymWord to_presentation(const PathElem& loop) const;
  const std::vector<std::string>& presentation_symbols() const { return symbols_; }
  bool has_symbol(const std::string& s) const { return sym_index_.count(s) > 0; }

 private:
  struct EndData {
    // finite edge into finite vertex
    std::vector<int> image;     // edge element -> vertex element
    std::vector<int> rep;       // vertex element -> coset representative
    std::vector<int> pre;       // vertex element -> edge element h with x = rep * image[h]
    // free targets
    std::vector<Word> gen_images;
    std::shared_ptr<SubgroupAutomaton> aut;
    bool trivial_into_free = false;
  };
  const EndData& end(int e, int side) const { return ends_[2 * e + side]; }

  GraphOfGroups g_;
  std::vector<int> tree_;
  std::vector<bool> in_tree_;
  std::vector<int> owner_, outer_edge_;
  std::vector<EndData> ends_;
  std::vector<PathElem> gamma_;
  std::vector<std::string> symbols_;
  std::map<std::string, int> sym_index_;
  std::vector<PathElem> sym_path_, sym_path_inv_;
};

/// Path group for a composite group (cached on the group).
std::shared_ptr<const PathGroup> composite_engine(const Group& g);

}  // namespace propp
