#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "propp/finite_group.hpp"
#include "propp/free_group.hpp"

namespace propp {

class GraphOfGroups;
class PathGroup;

/// Vertex or edge group: a finite p-group, a free (pro-p) group, or a
/// composite given by a nested graph of groups.
class Group {
 public:
  enum class Kind { Finite, Free, Composite };

  static std::shared_ptr<const Group> finite(FiniteGroup g, std::string label = "");
  static std::shared_ptr<const Group> free(FreeGroup g, std::string label = "");
  static std::shared_ptr<const Group> composite(std::shared_ptr<const GraphOfGroups> g, std::string label = "");

  Kind kind() const;
  unsigned prime() const;
  const std::string& label() const { return label_; }

  const FiniteGroup& as_finite() const;
  const FreeGroup& as_free() const;
  const GraphOfGroups& as_composite() const;
  std::shared_ptr<const GraphOfGroups> composite_graph() const;

  /// Generator symbols used by attachment words into this group. For a
  /// composite these are the symbols of its fundamental presentation.
  const std::vector<std::string>& symbols() const { return symbols_; }
  /// Relators in the local symbols.
  std::vector<SymWord> relators() const;

  bool is_trivial() const;
  bool is_finite() const;
  /// Order when finite.
  std::optional<long> order() const;

  /// Structural equality (composites compare their graphs).
  bool same_as(const Group& o) const;

 private:
  Group() = default;
  std::variant<FiniteGroup, FreeGroup, std::shared_ptr<const GraphOfGroups>> v_;
  std::string label_;
  std::vector<std::string> symbols_;
  mutable std::optional<bool> finite_cache_;
  mutable std::optional<long> order_cache_;
  mutable std::shared_ptr<const PathGroup> engine_;
  friend std::shared_ptr<const PathGroup> composite_engine(const Group& g);
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace propp
