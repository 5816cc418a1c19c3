#include "foundalog/transform.hpp"

#include <algorithm>

namespace foundalog {

namespace {

void rule_free_vars(const Body& b, std::set<std::string> bound,
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
          for (const Body& p : n.parts) rule_free_vars(p, bound, out);
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          std::set<std::string> inner = bound;
          inner.insert(n.vars.begin(), n.vars.end());
          rule_free_vars(n.body.front(), inner, out);
        } else if constexpr (std::is_same_v<T, TermEq> || std::is_same_v<T, TermNeq>) {
          for (const Term* t : {&n.lhs, &n.rhs})
            if (t->is_var() && !bound.count(t->var_name())) out.insert(t->var_name());
        }
      },
      b.node);
}

}  // namespace

std::string fresh_var(std::size_t i) { return "$v" + std::to_string(i + 1); }

Body nnf_negate(const Body& b) {
  return std::visit(
      [&](const auto& n) -> Body {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          return Body::lit(Lit{!n.positive, n.atom});
        } else if constexpr (std::is_same_v<T, Comparison>) {
          Comparison c = n;
          c.op = complement_op(c.op);
          return Body::cmp(std::move(c));
        } else if constexpr (std::is_same_v<T, And>) {
          std::vector<Body> parts;
          for (const Body& p : n.parts) parts.push_back(nnf_negate(p));
          return Body::disj(std::move(parts));
        } else if constexpr (std::is_same_v<T, Or>) {
          std::vector<Body> parts;
          for (const Body& p : n.parts) parts.push_back(nnf_negate(p));
          return Body::conj(std::move(parts));
        } else if constexpr (std::is_same_v<T, Exists>) {
          return Body::forall(n.vars, nnf_negate(n.body.front()));
        } else if constexpr (std::is_same_v<T, Forall>) {
          return Body::exists(n.vars, nnf_negate(n.body.front()));
        } else if constexpr (std::is_same_v<T, TermEq>) {
          return Body{TermNeq{n.lhs, n.rhs}};
        } else {
          return Body{TermEq{n.lhs, n.rhs}};
        }
      },
      b.node);
}

Program combine(const Program& prog) {
  Program out = prog;
  out.clauses.clear();

  std::set<PredKey> combined;
  for (auto& [p, info] : prog.resolved)
    if (info.certainty == Certainty::Uncertain && info.complete) combined.insert(p);

  for (const Rule& r : prog.clauses)
    if (!combined.count(key_of(r.head.atom))) out.clauses.push_back(r);

  for (const PredKey& q : combined) {
    std::vector<Body> disjuncts;
    for (const Rule& r : prog.clauses) {
      if (key_of(r.head.atom) != q) continue;
      std::vector<Body> parts;
      for (std::size_t i = 0; i < q.arity; ++i)
        parts.push_back(Body{TermEq{Term::var(fresh_var(i)), r.head.atom.args[i]}});
      if (r.body) parts.push_back(*r.body);
      // A 0-ary fact leaves an empty conjunction, which is true.
      Body conj = parts.size() == 1 ? std::move(parts.front())
                                    : Body::conj(std::move(parts));
      std::set<std::string> ys;
      for (const Term& t : r.head.atom.args)
        if (t.is_var()) ys.insert(t.var_name());
      if (r.body) rule_free_vars(*r.body, {}, ys);
      if (!ys.empty())
        conj = Body::exists({ys.begin(), ys.end()}, std::move(conj));
      disjuncts.push_back(std::move(conj));
    }
    Rule comb;
    Atom head;
    head.pred = q.name;
    for (std::size_t i = 0; i < q.arity; ++i)
      head.args.push_back(Term::var(fresh_var(i)));
    comb.head = Lit{true, std::move(head)};
    comb.body = disjuncts.size() == 1 ? std::move(disjuncts.front())
                                      : Body::disj(std::move(disjuncts));
    out.clauses.push_back(std::move(comb));
  }
  return out;
}

Program add_inv(const Program& prog) {
  Program out = prog;
  for (const Rule& r : prog.clauses) {
    PredKey q = key_of(r.head.atom);
    if (!r.head.positive || !prog.is_uncertain_complete(q)) continue;
    Rule inv;
    inv.head = Lit{false, r.head.atom};
    inv.body = r.body ? nnf_negate(*r.body) : Body::disj({});  // never-true body
    out.clauses.push_back(std::move(inv));
  }
  return out;
}

Program cmpl(const Program& prog) { return add_inv(combine(prog)); }

namespace {

Body rename_body(const Body& b) {
  return std::visit(
      [&](const auto& n) -> Body {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          if (n.positive) return Body::lit(n);
          return Body::lit(Lit{true, Atom{neg_name(n.atom.pred), n.atom.args}});
        } else if constexpr (std::is_same_v<T, Comparison>) {
          Comparison c = n;
          for (Lit& l : c.set.lits)
            if (!l.positive) l = Lit{true, Atom{neg_name(l.atom.pred), l.atom.args}};
          return Body::cmp(std::move(c));
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          std::vector<Body> parts;
          for (const Body& p : n.parts) parts.push_back(rename_body(p));
          if constexpr (std::is_same_v<T, And>)
            return Body::conj(std::move(parts));
          else
            return Body::disj(std::move(parts));
        } else if constexpr (std::is_same_v<T, Exists>) {
          return Body::exists(n.vars, rename_body(n.body.front()));
        } else if constexpr (std::is_same_v<T, Forall>) {
          return Body::forall(n.vars, rename_body(n.body.front()));
        } else {
          return Body{n};
        }
      },
      b.node);
}

}  // namespace

Program name_neg(const Program& prog) {
  Program out = prog;
  for (Rule& r : out.clauses) {
    if (!r.head.positive)
      r.head = Lit{true, Atom{neg_name(r.head.atom.pred), r.head.atom.args}};
    if (r.body) r.body = rename_body(*r.body);
  }
  return out;
}

Interpretation unname_neg(const std::vector<GroundAtom>& atoms) {
  Interpretation I;
  for (const GroundAtom& a : atoms) I.insert(a);  // n.p handled by insert
  return I;
}

}  // namespace foundalog
