#include "propp/jsj.hpp"

#include <algorithm>
#include <set>

#include "propp/error.hpp"
#include "propp/presentation.hpp"

namespace propp {

namespace {

class Translator {
 public:
  Translator(const GraphOfGroups& t1, const GraphOfGroups& t2, const std::map<std::string, SymWord>* extra)
      : t2_(t2), extra_(extra) {
    auto gens = fundamental_presentation(t2).generators;
    gens_.insert(gens.begin(), gens.end());
    for (const auto& v : t1.vertices)
      if (v.group->kind() == Group::Kind::Composite) composite_.insert(v.name + ".");
    for (const auto& v : t2.vertices)
      if (v.group->kind() == Group::Kind::Composite) wrap_.push_back(v.name + ".");
  }

  std::optional<SymWord> word(const SymWord& w) const {
    SymWord out;
    for (const auto& l : w.letters()) {
      auto x = symbol(l.sym, 0);
      if (!x) return std::nullopt;
      out *= l.exp > 0 ? *x : x->inverse();
    }
    return out;
  }

  std::optional<SymWord> symbol(const std::string& s, int depth, bool use_extra = true) const {
    if (depth > 8) return std::nullopt;
    if (extra_ && use_extra) {
      auto it = extra_->find(s);
      if (it != extra_->end()) {
        // the explicit image may itself need reading in t2
        SymWord out;
        for (const auto& l : it->second.letters()) {
          auto x = symbol(l.sym, depth + 1, false);
          if (!x) return std::nullopt;
          out *= l.exp > 0 ? *x : x->inverse();
        }
        return out;
      }
    }
    if (gens_.count(s)) return SymWord::symbol(s);
    for (const auto& pre : wrap_)
      if (gens_.count(pre + s)) return SymWord::symbol(pre + s);
    auto al = t2_.aliases.find(s);
    if (al != t2_.aliases.end()) {
      SymWord out;
      for (const auto& l : al->second.letters()) {
        auto x = symbol(l.sym, depth + 1, use_extra);
        if (!x) return std::nullopt;
        out *= l.exp > 0 ? *x : x->inverse();
      }
      return out;
    }
    for (const auto& pre : composite_)
      if (s.size() > pre.size() && s.compare(0, pre.size(), pre) == 0)
        return symbol(s.substr(pre.size()), depth + 1, use_extra);
    return std::nullopt;
  }

 private:
  const GraphOfGroups& t2_;
  const std::map<std::string, SymWord>* extra_;
  std::set<std::string> gens_;
  std::set<std::string> composite_;
  std::vector<std::string> wrap_;
};

std::string show(const SymWord& w) { return w.empty() ? "1" : to_string(w); }

}  // namespace

DominationReport dominates(const GraphOfGroups& t1, const GraphOfGroups& t2, long budget,
                           const std::map<std::string, SymWord>* translation) {
  if (t1.prime != t2.prime) fail(ErrorCode::PrimeMismatch, "graphs use different primes");
  if (budget <= 0) budget = default_budget();
  Translator tr(t1, t2, translation);
  StandardTree tree(t2);
  DominationReport rep;

  // local symbols of each vertex of t2
  std::map<std::string, int> owner;
  for (std::size_t v = 0; v < t2.vertices.size(); ++v)
    for (const auto& s : t2.vertices[v].group->symbols()) owner[t2.qualify(static_cast<int>(v), s)] = static_cast<int>(v);
  auto common_owner = [&](const std::vector<SymWord>& ws) -> int {
    int at = -1;
    for (const auto& w : ws)
      for (const auto& l : w.letters()) {
        auto it = owner.find(l.sym);
        if (it == owner.end() || (at >= 0 && it->second != at)) return -1;
        at = it->second;
      }
    return at;
  };

  Presentation p1 = fundamental_presentation(t1);
  int translatable = 0;
  for (const auto& s : p1.generators)
    if (tr.symbol(s, 0)) ++translatable;
  if (!p1.generators.empty() && translatable == 0)
    fail(ErrorCode::IncompatiblePresentations, "no symbol of the first graph has a counterpart in the second");

  // the identification of symbols must respect the relations of t1
  for (const auto& rel : p1.relations) {
    auto w = tr.word(rel.relator());
    if (!w) continue;
    PathElem x = tree.element(*w);
    if (x == tree.base_point()) continue;
    bool hyp = !tree.project_to_fixed(x, tree.base_point());
    rep.overall.status = Status::ProvenNo;
    rep.overall.witness = "relation " + show(rel.lhs) + " = " + show(rel.rhs) + " fails in the second graph: " +
                          show(*w) + (hyp ? " is hyperbolic" : " is nontrivial");
    break;
  }

  bool all_yes = true, any_no = false;
  std::string first_no;
  for (std::size_t v = 0; v < t1.vertices.size(); ++v) {
    VertexDomination vd;
    vd.vertex = t1.vertices[v].name;
    std::vector<SymWord> gens;
    bool ok = true;
    for (const auto& s : t1.vertices[v].group->symbols()) {
      auto w = tr.symbol(t1.qualify(static_cast<int>(v), s), 0);
      if (!w) {
        vd.result.verdict.witness = "symbol " + t1.qualify(static_cast<int>(v), s) + " has no counterpart";
        ok = false;
        break;
      }
      gens.push_back(*w);
    }
    if (ok && t2.vertices.size() == 1 && t2.edges.empty()) {
      vd.result.verdict = {Status::ProvenYes, "the second graph is a single vertex", 0};
      vd.result.vertex = t2.vertices[0].name;
    } else if (int at = ok ? common_owner(gens) : -1; at >= 0) {
      vd.result.verdict = {Status::ProvenYes, "generators lie in the vertex group of " + t2.vertices[at].name, 0};
      vd.result.vertex = t2.vertices[at].name;
    } else if (ok) {
      vd.result = elliptic_subgroup(tree, gens, budget);
    }
    rep.overall.budget_used += vd.result.verdict.budget_used;
    if (vd.result.verdict.status != Status::ProvenYes) all_yes = false;
    if (vd.result.verdict.status == Status::ProvenNo && !any_no) {
      any_no = true;
      first_no = vd.vertex + ": " + vd.result.verdict.witness;
    }
    rep.vertices.push_back(std::move(vd));
  }
  if (rep.overall.status == Status::ProvenNo) return rep;
  if (any_no) {
    rep.overall.status = Status::ProvenNo;
    rep.overall.witness = first_no;
  } else if (all_yes) {
    rep.overall.status = Status::ProvenYes;
    rep.overall.witness = "every vertex group fixes a vertex";
  } else {
    rep.overall.status = Status::Unknown;
    for (const auto& vd : rep.vertices)
      if (vd.result.verdict.status == Status::Unknown) {
        rep.overall.witness = vd.vertex + ": " + vd.result.verdict.witness;
        break;
      }
  }
  return rep;
}

Verdict same_deformation_space(const GraphOfGroups& t1, const GraphOfGroups& t2, long budget) {
  auto a = dominates(t1, t2, budget), b = dominates(t2, t1, budget);
  Verdict v;
  v.budget_used = a.overall.budget_used + b.overall.budget_used;
  if (a.overall.status == Status::ProvenNo || b.overall.status == Status::ProvenNo) {
    v.status = Status::ProvenNo;
    v.witness = a.overall.status == Status::ProvenNo ? "first does not dominate second: " + a.overall.witness
                                                      : "second does not dominate first: " + b.overall.witness;
  } else if (a.overall.status == Status::ProvenYes && b.overall.status == Status::ProvenYes) {
    v.status = Status::ProvenYes;
    v.witness = "each dominates the other";
  } else {
    v.status = Status::Unknown;
    v.witness = a.overall.status == Status::Unknown ? a.overall.witness : b.overall.witness;
  }
  return v;
}

std::vector<EdgeEllipticity> universally_elliptic_edges(const GraphOfGroups& g) {
  std::vector<EdgeEllipticity> out;
  for (const auto& e : g.edges) {
    EdgeEllipticity x;
    x.edge = e.name;
    if (e.group->is_trivial()) {
      x.status = Status::ProvenYes;
      x.reason = "trivial edge group";
    } else if (e.group->is_finite()) {
      x.status = Status::ProvenYes;
      x.reason = "finite p-group, elliptic in every tree";
    } else {
      x.status = Status::Unknown;
      x.reason = "infinite edge group";
    }
    out.push_back(std::move(x));
  }
  return out;
}

JsjCertificate jsj_certify_finite(const GraphOfGroups& g) {
  for (const auto& v : g.vertices)
    if (!v.group->is_finite()) fail(ErrorCode::InfiniteVertexGroup, "vertex group of " + v.name + " is infinite");
  JsjCertificate c;
  c.edges_finite = std::all_of(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.group->is_finite(); });
  c.reduced = is_reduced(g);
  c.certified = c.reduced && c.edges_finite;
  if (!c.reduced) c.trace = reduce(g).second;
  c.text = c.certified ? "reduced with finite vertex groups: a JSJ decomposition over finite subgroups"
                       : "not reduced; reduce first (" + std::to_string(c.trace.steps.size()) + " steps)";
  return c;
}

namespace {

bool procyclic(const Group& G) {
  if (G.is_trivial()) return true;
  if (G.kind() == Group::Kind::Free) return G.as_free().rank() <= 1;
  if (G.kind() == Group::Kind::Finite) {
    const auto& f = G.as_finite();
    for (int x = 0; x < f.order(); ++x)
      if (f.element_order(x) == f.order()) return true;
  }
  return false;
}

}  // namespace

AccessibilityReport accessibility_audit(const GraphOfGroups& g, const AuditClaims& claims) {
  if (!is_reduced(g)) fail(ErrorCode::NotReduced, "accessibility bounds need a reduced graph");
  AccessibilityReport rep;
  rep.d_computed = rank_mod_p(g);
  rep.d = claims.d.value_or(rep.d_computed);
  const long d = rep.d, p = g.prime;
  const long V = static_cast<long>(g.vertices.size()), E = static_cast<long>(g.edges.size());
  auto add = [&](std::string name, std::string formula, long bound, long observed) {
    BoundCheck b{std::move(name), std::move(formula), bound, observed, observed <= bound};
    rep.ok = rep.ok && b.pass;
    rep.bounds.push_back(std::move(b));
  };

  bool all_finite = true, all_procyclic = true;
  long k = 1;
  for (const auto& e : g.edges) {
    if (!e.group->is_finite()) {
      all_finite = false;
    } else {
      k = std::max(k, *e.group->order());
    }
    all_procyclic = all_procyclic && procyclic(*e.group);
  }
  if (all_finite && d >= 1)
    add("finite edge groups", "|E| <= pk/(p-1) (d-1) + 1 with k = " + std::to_string(k),
        p * k * (d - 1) / (p - 1) + 1, E);
  if (all_procyclic && d >= 2) {
    add("procyclic edge groups (vertices)", "|V| <= 2d - 1", 2 * d - 1, V);
    add("procyclic edge groups (edges)", "|E| <= 3d - 2", 3 * d - 2, E);
  }
  if (claims.acylindrical_k && claims.acylindrical.status == Status::ProvenYes) {
    const long ka = std::max(1, *claims.acylindrical_k);
    add("acylindrical (edges)", "|E| <= d(4k+1) - 1 with k = " + std::to_string(ka), d * (4 * ka + 1) - 1, E);
    add("acylindrical (vertices)", "|V| <= 4kd with k = " + std::to_string(ka), 4 * ka * d, V);
  }
  if (E >= 1) add("finite edge family", "|V| <= d |E/G| <= d |E|", d * E, V);
  return rep;
}

GraphOfGroups expansion_move(const GraphOfGroups& g, const std::string& v, const GraphOfGroups& inner,
                             const AttachMap& attach) {
  if (inner.vertices.size() != 2 || inner.edges.size() != 1 || inner.edges[0].is_loop())
    fail(ErrorCode::BadExpansion, "an expansion inserts exactly one non-loop edge");
  if (!is_fictitious(inner, 0)) fail(ErrorCode::BadExpansion, "the inserted edge must have an isomorphic end");
  try {
    return refine_at_vertex(g, v, inner, attach);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    fail(ErrorCode::BadExpansion, e.what());
  }
}

}  // namespace propp
