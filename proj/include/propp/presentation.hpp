#pragma once

#include <string>
#include <vector>

#include "propp/fp_linear.hpp"
#include "propp/graph_of_groups.hpp"

namespace propp {

/// lhs = rhs; vertex relators have rhs = 1.
struct Relation {
  SymWord lhs, rhs;
  SymWord relator() const { return lhs * rhs.inverse(); }
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::vector<std::string> tree_edges;

  std::vector<SymWord> relators() const;
  std::string to_text() const;
};

/// Vertex generators, vertex relators, stable letters for edges outside the
/// tree and the relation t^-1 d0(g) t = d1(g) per edge generator (t = 1 on
/// tree edges).
Presentation fundamental_presentation(const GraphOfGroups& g);
Presentation fundamental_presentation(const GraphOfGroups& g, const std::vector<int>& tree);
/// Edge indices from names; throws NotSpanningTree unless they form one.
std::vector<int> spanning_tree_from_names(const GraphOfGroups& g, const std::vector<std::string>& names);
void check_spanning_tree(const GraphOfGroups& g, const std::vector<int>& tree);

/// H_1(-, F_p) of a presentation as a quotient of F_p^{generators}.
FpQuotient abelianization_mod_p(const Presentation& p, unsigned prime);
FpVector exponent_vector(const SymWord& w, const std::vector<std::string>& generators, unsigned prime);

}  // namespace propp
