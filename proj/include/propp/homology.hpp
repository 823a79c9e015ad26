#pragma once

#include <string>
#include <vector>

#include "propp/finite_group.hpp"
#include "propp/fp_linear.hpp"
#include "propp/free_group.hpp"
#include "propp/graph_of_groups.hpp"
#include "propp/presentation.hpp"

namespace propp {

/// dim H1(-, F_p): Frattini quotient, rank, or rank_mod_p.
int h1_dim(const FiniteGroup& g);
int h1_dim(const FreeGroup& f);
int h1_dim(const GraphOfGroups& g);

/// Basis of H1(G, F_p) used for matrices: generators for free groups, the
/// Frattini basis for finite groups.
int h1_dim(const Group& g);
FpVector h1_vector(const Group& g, const SymWord& w);

/// H1(E) -> H1(V) for an edge group E mapped into V by generator images.
FpMatrix corestriction_matrix(const Group& edge, const Group& vertex, const std::vector<SymWord>& images);

struct MayerVietoris {
  FpMatrix map;                    // rows: vertex blocks, columns: edge blocks
  std::vector<int> row_offset;     // per vertex
  std::vector<int> col_offset;     // per edge
  bool injective = true;
  std::vector<FpVector> kernel;
};
/// f = cor_1 - cor_0 summed over edges.
MayerVietoris mayer_vietoris_edge_map(const GraphOfGroups& g);

/// Pro-p Tietze move: `generator` occurs only in relation `relation`, with
/// exponent sum a unit mod p, so both can be dropped.
struct TietzeStep {
  std::string generator;
  int relation = -1;
  std::string note;
};
/// Applies the steps; throws InvalidArgument on an illegal step.
Presentation replay_tietze(const Presentation& p, unsigned prime, const std::vector<TietzeStep>& steps);

enum class SplitStatus { Splits, NoSplit, FreeOfRank, NotFree, Undecided };
const char* split_status_name(SplitStatus s);

struct SplitResult {
  SplitStatus status = SplitStatus::Undecided;
  std::string witness;
  /// Free factor containing the edge group: vertex and a completed basis
  /// of its group (local words) whose first element generates the factor.
  std::string factor_vertex;
  std::vector<SymWord> factor_basis;
  /// The fundamental group is free: rank, basis (presentation words) and
  /// the transcript reaching the relator-free presentation.
  bool free = false;
  int rank = 0;
  std::vector<SymWord> basis;
  std::vector<TietzeStep> transcript;
  /// C = C1 * C'2 = C'1 * C2 (edge group words; empty means trivial).
  std::vector<SymWord> c1, c2, c1p, c2p;
};

/// Checks the transcript and the H1 change of basis of a free verdict.
bool verify_free_basis(const GraphOfGroups& g, const SplitResult& r, std::string* why = nullptr);

/// One-edge amalgam of free groups over a cyclic group.
SplitResult amalgam_free_splitting(const GraphOfGroups& g);
SplitResult amalgam_free_splitting(const FreeGroup& f1, const FreeGroup& f2, const Word& c1, const Word& c2);
/// The graph used by the word-level overload: vertices F1, F2, edge e.
GraphOfGroups cyclic_amalgam(const FreeGroup& f1, const FreeGroup& f2, const Word& c1, const Word& c2);

/// HNN extension of a free group over a cyclic group (one loop).
SplitResult hnn_free_splitting(const GraphOfGroups& g);
SplitResult hnn_free_splitting(const FreeGroup& f, const Word& c, const Word& ct);
/// Vertex F, loop e.
GraphOfGroups cyclic_hnn(const FreeGroup& f, const Word& c, const Word& ct);

/// One loop over a free or finite vertex group.
SplitResult hnn_one_loop_decision(const GraphOfGroups& g);

/// Relative free splitting of a vertex group: the family images are
/// independent in H1, so they extend to a basis.
struct RelativeSplit {
  std::string vertex;
  std::vector<SymWord> family;  // local words
  std::vector<SymWord> basis;   // completed basis, family images first
  bool ok = false;
  bool proper = false;          // basis longer than the family
  std::string note;
};

struct StarEdgeSplit {
  std::string edge;
  std::vector<SymWord> f0, f1;  // edge group words
};
struct StarSplitting {
  std::string center;
  bool mv_injective = true;
  std::vector<StarEdgeSplit> edges;
  RelativeSplit center_split;
  std::vector<RelativeSplit> pending;
};
StarSplitting star_splitting(const GraphOfGroups& g);

/// A vertex whose group splits relative to all incident edge groups.
RelativeSplit tree_vertex_relative_split(const GraphOfGroups& g);

/// Extend independent H1 vectors of family words to a basis of a free
/// group (greedy over the generators).
RelativeSplit relative_split(const std::string& vertex, const FreeGroup& f, const std::vector<SymWord>& family);

}  // namespace propp
