#include "foundalog/validate.hpp"

#include <algorithm>

namespace foundalog {

namespace {

void collect_term(const Term& t, std::set<Constant>& out) {
  if (t.is_const()) out.insert(t.con());
}

void collect_body(const Body& b, std::set<Constant>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          for (const Term& t : n.atom.args) collect_term(t, out);
        } else if constexpr (std::is_same_v<T, Comparison>) {
          for (const Lit& l : n.set.lits)
            for (const Term& t : l.atom.args) collect_term(t, out);
          collect_term(n.rhs, out);
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          for (const Body& p : n.parts) collect_body(p, out);
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          collect_body(n.body.front(), out);
        } else if constexpr (std::is_same_v<T, TermEq> || std::is_same_v<T, TermNeq>) {
          collect_term(n.lhs, out);
          collect_term(n.rhs, out);
        }
      },
      b.node);
}

std::string pred_str(const PredKey& p) {
  return p.name + "/" + std::to_string(p.arity);
}

}  // namespace

std::vector<Constant> constants_of(const Program& prog) {
  std::set<Constant> out;
  for (const Rule& r : prog.clauses) {
    for (const Term& t : r.head.atom.args) collect_term(t, out);
    if (r.body) collect_body(*r.body, out);
  }
  return {out.begin(), out.end()};
}

Program validate_declarations(const Program& prog, const DependencyGraph& dg) {
  Program out = prog;
  out.resolved.clear();

  std::map<PredKey, Declaration> decl;
  for (const Declaration& d : prog.declarations) {
    if (!dg.nodes().count(d.pred))
      throw ValidationError("declaration for unused predicate " + pred_str(d.pred));
    if (!decl.emplace(d.pred, d).second)
      throw ValidationError("duplicate declaration for " + pred_str(d.pred));
  }

  // Uncertainty is forced by circular non-positive dependency and propagates
  // to everything that depends on an uncertain predicate.  Process SCCs in
  // dependency order; members of one SCC depend on each other.
  std::set<PredKey> uncertain;
  for (const auto& scc : dg.scc_order()) {
    bool forced = false;
    for (const PredKey& p : scc) {
      if (dg.circular_non_positive(p)) forced = true;
      auto it = decl.find(p);
      if (it != decl.end() && it->second.certainty == Certainty::Uncertain)
        forced = true;
      for (auto& [to, label] : dg.edges_from(p))
        if (uncertain.count(to)) forced = true;
    }
    if (forced)
      for (const PredKey& p : scc) uncertain.insert(p);
  }

  for (const PredKey& p : dg.nodes()) {
    auto it = decl.find(p);
    const Declaration* d = it == decl.end() ? nullptr : &it->second;
    PredInfo info;
    if (uncertain.count(p)) {
      if (d && d->certainty == Certainty::Certain)
        throw ValidationError(
            pred_str(p) +
            " cannot be certain: it has circular non-positive dependency or "
            "depends on an uncertain predicate");
      info.certainty = Certainty::Uncertain;
    } else {
      info.certainty = d && d->certainty ? *d->certainty : Certainty::Certain;
    }
    if (info.certainty == Certainty::Certain) {
      if (d && (d->complete || d->closed))
        throw ValidationError("complete/closed declared on certain predicate " +
                              pred_str(p));
      info.complete = false;
      info.closed = false;
    } else {
      info.complete = d && d->complete ? *d->complete : true;
      info.closed = d && d->closed ? *d->closed : false;
      if (info.closed && !info.complete)
        throw ValidationError("closed requires complete on " + pred_str(p));
    }
    out.resolved[p] = info;
  }
  out.validated = true;
  return out;
}

Program validate(const Program& prog) {
  return validate_declarations(prog, DependencyGraph::build(prog));
}

}  // namespace foundalog
