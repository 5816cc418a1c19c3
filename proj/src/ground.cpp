#include "foundalog/ground.hpp"

#include <cassert>
#include <functional>

namespace foundalog {

namespace {

// Enumerates all assignments of `vars` to domain constants.
void for_each_assignment(const std::vector<std::string>& vars,
                         const std::vector<Constant>& domain, Subst base,
                         const std::function<void(const Subst&)>& fn) {
  if (vars.empty()) {
    fn(base);
    return;
  }
  std::vector<std::size_t> idx(vars.size(), 0);
  if (domain.empty()) return;
  for (;;) {
    Subst s = base;
    for (std::size_t i = 0; i < vars.size(); ++i)
      s.insert_or_assign(vars[i], domain[idx[i]]);
    fn(s);
    std::size_t i = 0;
    while (i < vars.size() && ++idx[i] == domain.size()) idx[i++] = 0;
    if (i == vars.size()) break;
  }
}

void free_vars_of_body(const Body& b, std::set<std::string> bound,
                       std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          for (const Term& t : n.atom.args)
            if (t.is_var() && !bound.count(t.var_name())) out.insert(t.var_name());
        } else if constexpr (std::is_same_v<T, Comparison>) {
          std::set<std::string> inner = bound;
          inner.insert(n.set.vars.begin(), n.set.vars.end());
          for (const Lit& l : n.set.lits)
            for (const Term& t : l.atom.args)
              if (t.is_var() && !inner.count(t.var_name())) out.insert(t.var_name());
          if (n.rhs.is_var() && !bound.count(n.rhs.var_name()))
            out.insert(n.rhs.var_name());
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          for (const Body& p : n.parts) free_vars_of_body(p, bound, out);
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          std::set<std::string> inner = bound;
          inner.insert(n.vars.begin(), n.vars.end());
          free_vars_of_body(n.body.front(), inner, out);
        } else if constexpr (std::is_same_v<T, TermEq> || std::is_same_v<T, TermNeq>) {
          for (const Term* t : {&n.lhs, &n.rhs})
            if (t->is_var() && !bound.count(t->var_name())) out.insert(t->var_name());
        }
      },
      b.node);
}

Atom subst_atom(const Atom& a, const Subst& s) {
  Atom out;
  out.pred = a.pred;
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(subst_term(t, s));
  return out;
}

Lit subst_lit(const Lit& l, const Subst& s) {
  return Lit{l.positive, subst_atom(l.atom, s)};
}

}  // namespace

GroundAtom to_ground(const Atom& a) {
  GroundAtom g;
  g.pred = a.pred;
  g.args.reserve(a.args.size());
  for (const Term& t : a.args) {
    assert(t.is_const());
    g.args.push_back(t.con());
  }
  return g;
}

Atom from_ground(const GroundAtom& a) {
  Atom out;
  out.pred = a.pred;
  for (const Constant& c : a.args) out.args.emplace_back(c);
  return out;
}

Term subst_term(const Term& t, const Subst& s) {
  if (t.is_var()) {
    auto it = s.find(t.var_name());
    if (it != s.end()) return Term(it->second);
  }
  return t;
}

Body subst_and_expand(const Body& b, const Subst& s,
                      const std::vector<Constant>& domain) {
  return std::visit(
      [&](const auto& n) -> Body {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          return Body::lit(subst_lit(n, s));
        } else if constexpr (std::is_same_v<T, Comparison>) {
          Comparison c = n;
          Subst outer = s;  // bound set variables shadow outer bindings
          for (const std::string& v : c.set.vars) outer.erase(v);
          for (Lit& l : c.set.lits) l = subst_lit(l, outer);
          c.rhs = subst_term(c.rhs, s);
          return Body::cmp(std::move(c));
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          std::vector<Body> parts;
          parts.reserve(n.parts.size());
          for (const Body& p : n.parts) parts.push_back(subst_and_expand(p, s, domain));
          if constexpr (std::is_same_v<T, And>)
            return Body::conj(std::move(parts));
          else
            return Body::disj(std::move(parts));
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          std::vector<Body> parts;
          for_each_assignment(n.vars, domain, s, [&](const Subst& s2) {
            parts.push_back(subst_and_expand(n.body.front(), s2, domain));
          });
          // Quantification over an empty domain: each -> true, some -> false.
          if constexpr (std::is_same_v<T, Exists>)
            return Body::disj(std::move(parts));
          else
            return Body::conj(std::move(parts));
        } else if constexpr (std::is_same_v<T, TermEq>) {
          return Body{TermEq{subst_term(n.lhs, s), subst_term(n.rhs, s)}};
        } else {
          return Body{TermNeq{subst_term(n.lhs, s), subst_term(n.rhs, s)}};
        }
      },
      b.node);
}

std::vector<GroundRule> ground_rules(const std::vector<Rule>& rules,
                                     const std::vector<Constant>& domain) {
  std::vector<GroundRule> out;
  for (const Rule& r : rules) {
    std::set<std::string> fv;
    for (const Term& t : r.head.atom.args)
      if (t.is_var()) fv.insert(t.var_name());
    if (r.body) free_vars_of_body(*r.body, {}, fv);
    std::vector<std::string> vars(fv.begin(), fv.end());
    for_each_assignment(vars, domain, {}, [&](const Subst& s) {
      GroundRule g;
      g.head = GroundLit{r.head.positive, to_ground(subst_atom(r.head.atom, s))};
      if (r.body) g.body = subst_and_expand(*r.body, s, domain);
      out.push_back(std::move(g));
    });
  }
  return out;
}

std::vector<GroundSetInstance> ground_set(const SetExpr& s,
                                          const std::vector<Constant>& domain) {
  std::vector<GroundSetInstance> out;
  for_each_assignment(s.vars, domain, {}, [&](const Subst& sub) {
    GroundSetInstance inst;
    for (const std::string& v : s.vars) inst.tuple.push_back(sub.at(v));
    for (const Lit& l : s.lits)
      inst.lits.push_back(GroundLit{l.positive, to_ground(subst_atom(l.atom, sub))});
    out.push_back(std::move(inst));
  });
  return out;
}

GiSets gi_by_truth(const SetExpr& s, const Interpretation& I,
                   const std::vector<Constant>& domain) {
  GiSets g;
  for (const GroundSetInstance& inst : ground_set(s, domain)) {
    Truth t = Truth::True;
    for (const GroundLit& l : inst.lits) t = kleene_and(t, I.truth(l));
    if (t == Truth::True) {
      g.t.insert(inst.tuple);
    } else if (t == Truth::Undef) {
      g.ud.insert(inst.tuple);
    }
  }
  // A tuple with a true witness is not undefined, whatever other witnesses say.
  for (const auto& tup : g.t) g.ud.erase(tup);
  return g;
}

namespace {

// Disjuncts of the DNF; a dropped disjunct had a false ground (dis)equality.
std::vector<std::vector<Body>> dnf_of(const Body& b) {
  return std::visit(
      [&](const auto& n) -> std::vector<std::vector<Body>> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit> || std::is_same_v<T, Comparison>) {
          return {{b}};
        } else if constexpr (std::is_same_v<T, TermEq> || std::is_same_v<T, TermNeq>) {
          assert(n.lhs.is_const() && n.rhs.is_const());
          bool eq = n.lhs.con() == n.rhs.con();
          bool holds = std::is_same_v<T, TermEq> ? eq : !eq;
          if (holds) return {{}};
          return {};
        } else if constexpr (std::is_same_v<T, Or>) {
          std::vector<std::vector<Body>> out;
          for (const Body& p : n.parts) {
            auto sub = dnf_of(p);
            out.insert(out.end(), sub.begin(), sub.end());
          }
          return out;
        } else if constexpr (std::is_same_v<T, And>) {
          std::vector<std::vector<Body>> acc = {{}};
          for (const Body& p : n.parts) {
            auto sub = dnf_of(p);
            std::vector<std::vector<Body>> next;
            for (const auto& left : acc)
              for (const auto& right : sub) {
                std::vector<Body> d = left;
                d.insert(d.end(), right.begin(), right.end());
                next.push_back(std::move(d));
              }
            acc = std::move(next);
          }
          return acc;
        } else {
          assert(!"quantifier in ground rule body");
          return {};
        }
      },
      b.node);
}

}  // namespace

std::vector<DnfRule> to_dnf(const GroundRule& gr) {
  if (gr.is_fact()) return {DnfRule{gr.head, {}}};
  std::vector<DnfRule> out;
  for (auto& disjunct : dnf_of(*gr.body))
    out.push_back(DnfRule{gr.head, std::move(disjunct)});
  return out;
}

}  // namespace foundalog
