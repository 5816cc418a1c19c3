#include "foundalog/semantics.hpp"

#include <functional>

#include "foundalog/depgraph.hpp"
#include "foundalog/errors.hpp"
#include "foundalog/validate.hpp"

namespace foundalog {

namespace {

void for_each_tuple(std::size_t arity, const std::vector<Constant>& domain,
                    const std::function<void(const std::vector<Constant>&)>& fn) {
  if (arity == 0) {
    fn({});
    return;
  }
  if (domain.empty()) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Constant> tup;
  for (;;) {
    tup.clear();
    for (std::size_t i : idx) tup.push_back(domain[i]);
    fn(tup);
    std::size_t i = 0;
    while (i < arity && ++idx[i] == domain.size()) idx[i++] = 0;
    if (i == arity) break;
  }
}

std::set<PredKey> source_preds(const Program& prog) {
  std::set<PredKey> out;
  for (const Rule& r : prog.clauses) {
    out.insert(key_of(r.head.atom));
    if (r.body)
      for (const auto& [p, lbl] : body_occurrences(*r.body)) out.insert(p);
  }
  for (const auto& [p, info] : prog.resolved) out.insert(p);
  return out;
}

}  // namespace

std::vector<GroundAtom> atom_universe(const Program& prog,
                                      const std::vector<Constant>& domain) {
  std::vector<GroundAtom> out;
  for (const PredKey& p : source_preds(prog))
    for_each_tuple(p.arity, domain, [&](const std::vector<Constant>& tup) {
      out.push_back(GroundAtom{p.name, tup});
    });
  return out;
}

void add_neg(Interpretation& I, const std::vector<PredKey>& preds,
             const Program& prog, const std::vector<Constant>& domain) {
  for (const PredKey& p : preds) {
    if (is_neg_name(p.name) || !prog.is_certain(p)) continue;
    for_each_tuple(p.arity, domain, [&](const std::vector<Constant>& tup) {
      GroundAtom a{p.name, tup};
      if (I.truth(a) != Truth::True) I.insert_neg(std::move(a));
    });
  }
}

Interpretation founded0(const Program& renamed,
                        const std::vector<Constant>& domain,
                        const Interpretation& inject, bool reverse_scc) {
  // p and n.p write the same atoms (a derived n.p fact is stored as p being
  // false), so a reader of p must also run after n.p and vice versa.  Tie the
  // pair into one component with scaffold rules visible only to the graph.
  Program graph_prog = renamed;
  std::set<PredKey> preds = source_preds(renamed);
  for (const PredKey& p : preds) {
    if (!is_neg_name(p.name)) continue;
    PredKey base{base_name(p.name), p.arity};
    if (!preds.count(base)) continue;
    std::vector<Term> args;
    for (std::size_t i = 0; i < p.arity; ++i)
      args.push_back(Term::var("$g" + std::to_string(i)));
    Atom na{p.name, args}, ba{base.name, args};
    graph_prog.clauses.push_back(Rule{Lit{true, ba}, Body::lit(Lit{true, na})});
    graph_prog.clauses.push_back(Rule{Lit{true, na}, Body::lit(Lit{true, ba})});
  }
  DependencyGraph dg = DependencyGraph::build(graph_prog);

  std::map<PredKey, std::vector<GroundRule>> by_head;
  for (GroundRule& r : ground_rules(renamed.clauses, domain)) {
    PredKey p{r.head.atom.pred, r.head.atom.args.size()};
    by_head[p].push_back(std::move(r));
  }

  Interpretation I = inject;
  for (const std::vector<PredKey>& scc : dg.scc_order(reverse_scc)) {
    std::vector<GroundRule> rules;
    for (const PredKey& p : scc) {
      auto it = by_head.find(p);
      if (it != by_head.end())
        rules.insert(rules.end(), it->second.begin(), it->second.end());
    }
    I = lfp(rules, std::move(I), domain);
    add_neg(I, scc, renamed, domain);
  }
  return I;
}

std::set<GroundAtom> unfounded_sets_greatest(const Program& prog,
                                             const Interpretation& I) {
  std::set<PredKey> closed;
  for (const auto& [p, info] : prog.resolved)
    if (info.closed) closed.insert(p);
  if (closed.empty()) return {};

  std::vector<Constant> domain = constants_of(prog);

  std::set<GroundAtom> U;
  for (const PredKey& p : closed)
    for_each_tuple(p.arity, domain, [&](const std::vector<Constant>& tup) {
      GroundAtom a{p.name, tup};
      if (I.truth(a) != Truth::True) U.insert(std::move(a));
    });

  std::vector<Rule> relevant;
  for (const Rule& r : prog.clauses)
    if (closed.count(key_of(r.head.atom))) relevant.push_back(r);
  std::map<GroundAtom, std::vector<DnfRule>> concluding;
  for (const GroundRule& gr : ground_rules(relevant, domain))
    for (DnfRule& d : to_dnf(gr))
      concluding[d.head.atom].push_back(std::move(d));

  auto blocked_given = [&](const DnfRule& r, const std::set<GroundAtom>& u,
                           const Interpretation& Iu) {
    for (const Body& h : r.hyps) {
      if (const Lit* l = std::get_if<Lit>(&h.node)) {
        GroundLit gl{l->positive, to_ground(l->atom)};
        if (I.truth(gl) == Truth::False || (l->positive && u.count(gl.atom)))
          return true;
      } else {
        const auto& c = std::get<Comparison>(h.node);
        if (derivable(complement(c), Iu, domain)) return true;
      }
    }
    return false;
  };
  auto assume_false = [&](const std::set<GroundAtom>& u) {
    Interpretation Iu = I;
    for (const GroundAtom& a : u)
      if (Iu.truth(a) == Truth::Undef) Iu.insert_neg(a);
    return Iu;
  };

  // Deletion pass: the greatest fixed point of "every concluding rule is
  // blocked".  Exact whenever blocking grows with the assumed-false set.
  std::set<GroundAtom> Ud = U;
  for (bool changed = true; changed;) {
    changed = false;
    Interpretation Iu = assume_false(Ud);
    for (auto it = Ud.begin(); it != Ud.end();) {
      bool supported = false;
      for (const DnfRule& r : concluding[*it])
        if (!blocked_given(r, Ud, Iu)) {
          supported = true;
          break;
        }
      if (supported) {
        it = Ud.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }

  // Blocking through a comparison is not monotone in the assumed-false set
  // in one corner: an extremum bound that holds over a nonempty undefined
  // set stops being derivable when assuming atoms false empties the set
  // entirely (empty extrema are never derivable).  When that corner is
  // reachable the deletion pass can overshoot, so fall back to the
  // definition: the union of all unfounded subsets of the candidates.
  bool edge = false;
  for (const auto& [head, rules] : concluding) {
    if (!U.count(head)) continue;
    for (const DnfRule& r : rules)
      for (const Body& h : r.hyps) {
        const auto* c = std::get_if<Comparison>(&h.node);
        if (!c || (c->agg != AggOp::Min && c->agg != AggOp::Max)) continue;
        CmpOp cop = complement_op(c->op);
        bool toward = c->agg == AggOp::Max ? (cop == CmpOp::Le || cop == CmpOp::Lt)
                                           : (cop == CmpOp::Ge || cop == CmpOp::Gt);
        if (!toward) continue;
        GiSets gi = gi_by_truth(c->set, I, domain);
        if (gi.t.empty() && !gi.ud.empty()) edge = true;
      }
  }
  if (!edge) return Ud;

  std::vector<GroundAtom> cand(U.begin(), U.end());
  if (cand.size() > 16)
    throw BudgetError("unfounded-set computation needs subset enumeration "
                      "here, but there are " +
                      std::to_string(cand.size()) + " candidate atoms");
  std::set<GroundAtom> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << cand.size()); ++mask) {
    std::set<GroundAtom> u;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask & (std::size_t(1) << i)) u.insert(cand[i]);
    Interpretation Iu = assume_false(u);
    bool unfounded = true;
    for (const GroundAtom& a : u) {
      for (const DnfRule& r : concluding[a])
        if (!blocked_given(r, u, Iu)) {
          unfounded = false;
          break;
        }
      if (!unfounded) break;
    }
    if (unfounded) out.insert(u.begin(), u.end());
  }
  return out;
}

Interpretation founded(const Program& prog, bool reverse_scc) {
  Program renamed = name_neg(cmpl(prog));
  std::vector<Constant> domain = constants_of(prog);
  Interpretation I;
  for (;;) {
    Interpretation J = founded0(renamed, domain, I, reverse_scc);
    for (const GroundAtom& a : unfounded_sets_greatest(prog, J))
      if (J.truth(a) == Truth::Undef) J.insert_neg(a);
    if (J == I) return J;
    I = std::move(J);
  }
}

bool check_model(const Program& prog, const Interpretation& M) {
  std::vector<Constant> domain = constants_of(prog);
  for (const GroundRule& r : ground_rules(prog.clauses, domain)) {
    Truth body = r.is_fact() ? Truth::True : truth_of_body(*r.body, M, domain);
    if (body == Truth::True && M.truth(r.head) != Truth::True) return false;
  }
  return true;
}

ConstraintModels constraint_models(const Program& prog, std::size_t max_models,
                                   std::size_t budget) {
  Interpretation F = founded(prog);
  std::vector<Constant> domain = constants_of(prog);

  std::vector<GroundAtom> ud;
  for (const GroundAtom& a : atom_universe(prog, domain))
    if (F.truth(a) == Truth::Undef) ud.push_back(a);
  if (ud.size() > budget)
    throw BudgetError("enumeration budget exceeded: " +
                      std::to_string(ud.size()) + " undefined atoms, budget " +
                      std::to_string(budget));

  Program comp = cmpl(prog);
  std::vector<GroundRule> comp_rules = ground_rules(comp.clauses, domain);

  std::set<Interpretation> found;
  for (std::size_t mask = 0; mask < (std::size_t(1) << ud.size()); ++mask) {
    Interpretation M = F;
    for (std::size_t i = 0; i < ud.size(); ++i) {
      if (mask & (std::size_t(1) << i))
        M.insert(ud[i]);
      else
        M.insert_neg(ud[i]);
    }
    bool ok = true;
    for (const GroundRule& r : comp_rules) {
      Truth body = r.is_fact() ? Truth::True : truth_of_body(*r.body, M, domain);
      if (body == Truth::True && M.truth(r.head) != Truth::True) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const GroundAtom& a : unfounded_sets_greatest(prog, M))
      if (M.truth(a) != Truth::False) {
        ok = false;
        break;
      }
    if (ok) found.insert(std::move(M));
  }

  ConstraintModels out;
  out.models.assign(found.begin(), found.end());
  if (out.models.size() > max_models) {
    out.models.resize(max_models);
    out.truncated = true;
  }
  return out;
}

}  // namespace foundalog
