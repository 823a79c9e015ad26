#include "propp/group.hpp"

#include "propp/error.hpp"
#include "propp/graph_of_groups.hpp"
#include "propp/gog_ops.hpp"
#include "propp/presentation.hpp"

namespace propp {

std::shared_ptr<const Group> Group::finite(FiniteGroup g, std::string label) {
  auto p = std::shared_ptr<Group>(new Group());
  p->symbols_ = g.names();
  p->v_ = std::move(g);
  p->label_ = std::move(label);
  return p;
}

std::shared_ptr<const Group> Group::free(FreeGroup g, std::string label) {
  auto p = std::shared_ptr<Group>(new Group());
  p->symbols_ = g.names();
  p->v_ = std::move(g);
  p->label_ = std::move(label);
  return p;
}

std::shared_ptr<const Group> Group::composite(std::shared_ptr<const GraphOfGroups> g, std::string label) {
  auto p = std::shared_ptr<Group>(new Group());
  p->symbols_ = fundamental_presentation(*g).generators;
  p->v_ = std::move(g);
  p->label_ = std::move(label);
  return p;
}

Group::Kind Group::kind() const {
  switch (v_.index()) {
    case 0: return Kind::Finite;
    case 1: return Kind::Free;
    default: return Kind::Composite;
  }
}

unsigned Group::prime() const {
  switch (kind()) {
    case Kind::Finite: return as_finite().prime();
    case Kind::Free: return as_free().prime();
    default: return as_composite().prime;
  }
}

const FiniteGroup& Group::as_finite() const { return std::get<0>(v_); }
const FreeGroup& Group::as_free() const { return std::get<1>(v_); }
const GraphOfGroups& Group::as_composite() const { return *std::get<2>(v_); }
std::shared_ptr<const GraphOfGroups> Group::composite_graph() const { return std::get<2>(v_); }

std::vector<SymWord> Group::relators() const {
  switch (kind()) {
    case Kind::Finite: return as_finite().relators();
    case Kind::Free: return {};
    default: return fundamental_presentation(as_composite()).relators();
  }
}

bool Group::is_trivial() const {
  auto o = order();
  return o && *o == 1;
}

bool Group::is_finite() const {
  switch (kind()) {
    case Kind::Finite: return true;
    case Kind::Free: return as_free().rank() == 0;
    default:
      if (!finite_cache_) {
        long ord = 0;
        finite_cache_ = composite_is_finite(as_composite(), &ord);
        if (*finite_cache_) order_cache_ = ord;
      }
      return *finite_cache_;
  }
}

std::optional<long> Group::order() const {
  switch (kind()) {
    case Kind::Finite: return as_finite().order();
    case Kind::Free:
      if (as_free().rank() == 0) return 1;
      return std::nullopt;
    default:
      if (!is_finite()) return std::nullopt;
      return order_cache_;
  }
}

bool Group::same_as(const Group& o) const {
  if (kind() != o.kind() || prime() != o.prime()) return false;
  switch (kind()) {
    case Kind::Finite: return as_finite() == o.as_finite();
    case Kind::Free: return as_free() == o.as_free();
    default: return as_composite().same_as(o.as_composite());
  }
}

}  // namespace propp
