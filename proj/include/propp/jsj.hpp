#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "propp/bass_serre.hpp"
#include "propp/gog_ops.hpp"
#include "propp/graph_of_groups.hpp"

namespace propp {

struct VertexDomination {
  std::string vertex;
  Conjugation result;  // into a vertex group of the other graph
};

struct DominationReport {
  std::vector<VertexDomination> vertices;
  Verdict overall;
};

/// Every vertex group of t1 is elliptic in the standard tree of t2. Symbols
/// of t1 are read in t2 through `translation`, then directly, then through
/// t2's aliases (composite prefixes of t1 are peeled off first). A relator
/// of t1 that is nontrivial in t2 gives ProvenNo.
DominationReport dominates(const GraphOfGroups& t1, const GraphOfGroups& t2, long budget = 0,
                           const std::map<std::string, SymWord>* translation = nullptr);
Verdict same_deformation_space(const GraphOfGroups& t1, const GraphOfGroups& t2, long budget = 0);

struct EdgeEllipticity {
  std::string edge;
  Status status = Status::Unknown;  // ProvenYes: certified universally elliptic
  std::string reason;
};
std::vector<EdgeEllipticity> universally_elliptic_edges(const GraphOfGroups& g);

struct JsjCertificate {
  bool reduced = false;
  bool edges_finite = false;
  bool certified = false;
  ReductionTrace trace;  // reduction steps when not reduced
  std::string text;
};
/// Graphs of finite groups: reduced ones are JSJ over finite subgroups.
JsjCertificate jsj_certify_finite(const GraphOfGroups& g);

struct BoundCheck {
  std::string name;
  std::string formula;
  long bound = 0;
  long observed = 0;
  bool pass = true;
};
struct AccessibilityReport {
  int d = 0;           // value used in the bounds
  int d_computed = 0;  // rank_mod_p
  std::vector<BoundCheck> bounds;
  bool ok = true;
};
/// Optional inputs to the audit: a claimed d and an acylindricity
/// certificate (used only when ProvenYes).
struct AuditClaims {
  std::optional<int> d;
  std::optional<int> acylindrical_k;
  Verdict acylindrical;
};
AccessibilityReport accessibility_audit(const GraphOfGroups& g, const AuditClaims& claims = {});

/// refine_at_vertex with a one-edge inner graph whose edge is fictitious.
GraphOfGroups expansion_move(const GraphOfGroups& g, const std::string& v, const GraphOfGroups& inner,
                             const AttachMap& attach);

}  // namespace propp
