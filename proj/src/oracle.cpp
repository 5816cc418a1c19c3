#include "foundalog/oracle.hpp"

#include <functional>

#include "foundalog/transform.hpp"

namespace foundalog::oracle {

namespace {

using Sub = std::map<std::string, Constant>;
using Tuple = std::vector<Constant>;

Constant value_of(const Term& t, const Sub& s) {
  if (t.is_const()) return t.con();
  return s.at(t.var_name());
}

GroundAtom inst_atom(const Atom& a, const Sub& s) {
  GroundAtom g;
  g.pred = a.pred;
  for (const Term& t : a.args) g.args.push_back(value_of(t, s));
  return g;
}

Truth lit_truth(const Lit& l, const Sub& s, const Interpretation& I) {
  return I.truth(GroundLit{l.positive, inst_atom(l.atom, s)});
}

// Iterates substitutions extending `s` over vars[i..] one variable at a time.
template <typename Fn>
void each_sub(const std::vector<std::string>& vars, std::size_t i,
              const std::vector<Constant>& domain, Sub& s, Fn&& fn) {
  if (i == vars.size()) {
    fn(s);
    return;
  }
  for (const Constant& c : domain) {
    s.insert_or_assign(vars[i], c);
    each_sub(vars, i + 1, domain, s, fn);
  }
  s.erase(vars[i]);
}

// Variables of a body with a free occurrence, given already-bound vars.
void collect_free(const Body& b, std::set<std::string> bound,
                  std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          for (const Term& t : n.atom.args)
            if (t.is_var() && !bound.count(t.var_name())) out.insert(t.var_name());
        } else if constexpr (std::is_same_v<T, Comparison>) {
          std::set<std::string> inner = bound;
          for (const std::string& v : n.set.vars) inner.insert(v);
          for (const Lit& l : n.set.lits)
            for (const Term& t : l.atom.args)
              if (t.is_var() && !inner.count(t.var_name())) out.insert(t.var_name());
          if (n.rhs.is_var() && !bound.count(n.rhs.var_name()))
            out.insert(n.rhs.var_name());
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          for (const Body& p : n.parts) collect_free(p, bound, out);
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          std::set<std::string> inner = bound;
          for (const std::string& v : n.vars) inner.insert(v);
          collect_free(n.body.front(), inner, out);
        } else {
          for (const Term* t : {&n.lhs, &n.rhs})
            if (t->is_var() && !bound.count(t->var_name())) out.insert(t->var_name());
        }
      },
      b.node);
}

std::vector<std::string> rule_vars(const Rule& r) {
  std::set<std::string> fv;
  for (const Term& t : r.head.atom.args)
    if (t.is_var()) fv.insert(t.var_name());
  if (r.body) collect_free(*r.body, {}, fv);
  return {fv.begin(), fv.end()};
}

std::vector<Constant> program_constants(const Program& prog) {
  std::set<Constant> cs;
  std::function<void(const Body&)> walk = [&](const Body& b) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Lit>) {
            for (const Term& t : n.atom.args)
              if (t.is_const()) cs.insert(t.con());
          } else if constexpr (std::is_same_v<T, Comparison>) {
            for (const Lit& l : n.set.lits)
              for (const Term& t : l.atom.args)
                if (t.is_const()) cs.insert(t.con());
            if (n.rhs.is_const()) cs.insert(n.rhs.con());
          } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
            for (const Body& p : n.parts) walk(p);
          } else if constexpr (std::is_same_v<T, Exists> ||
                               std::is_same_v<T, Forall>) {
            walk(n.body.front());
          } else {
            for (const Term* t : {&n.lhs, &n.rhs})
              if (t->is_const()) cs.insert(t->con());
          }
        },
        b.node);
  };
  for (const Rule& r : prog.clauses) {
    for (const Term& t : r.head.atom.args)
      if (t.is_const()) cs.insert(t.con());
    if (r.body) walk(*r.body);
  }
  return {cs.begin(), cs.end()};
}

std::set<PredKey> program_preds(const Program& prog) {
  std::set<PredKey> ps;
  std::function<void(const Body&)> walk = [&](const Body& b) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Lit>) {
            ps.insert(key_of(n.atom));
          } else if constexpr (std::is_same_v<T, Comparison>) {
            for (const Lit& l : n.set.lits) ps.insert(key_of(l.atom));
          } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
            for (const Body& p : n.parts) walk(p);
          } else if constexpr (std::is_same_v<T, Exists> ||
                               std::is_same_v<T, Forall>) {
            walk(n.body.front());
          }
        },
        b.node);
  };
  for (const Rule& r : prog.clauses) {
    ps.insert(key_of(r.head.atom));
    if (r.body) walk(*r.body);
  }
  for (const auto& [p, info] : prog.resolved) ps.insert(p);
  return ps;
}

template <typename Fn>
void each_pred_atom(const PredKey& p, const std::vector<Constant>& domain,
                    Fn&& fn) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < p.arity; ++i) vars.push_back("#" + std::to_string(i));
  Sub s;
  each_sub(vars, 0, domain, s, [&](const Sub& s2) {
    GroundAtom a;
    a.pred = p.name;
    for (const std::string& v : vars) a.args.push_back(s2.at(v));
    fn(std::move(a));
  });
}

// --- Figure-style derivability, case by case -----------------------------

std::optional<std::vector<Number>> numbers(const Tuple& t) {
  std::vector<Number> out;
  for (const Constant& c : t) {
    if (!c.is_number()) return std::nullopt;
    out.push_back(c.num());
  }
  return out;
}

// -1 / 0 / 1 when comparable, nothing otherwise (length mismatch).
std::optional<int> lex_cmp(const std::vector<Number>& a,
                           const std::vector<Number>& b) {
  if (a.size() != b.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool all_num(const std::set<Tuple>& s) {
  for (const Tuple& t : s)
    if (!numbers(t)) return false;
  return true;
}

bool holds(std::optional<int> c, CmpOp op) {
  if (!c) return op == CmpOp::Ne;  // incomparable values are unequal
  switch (op) {
    case CmpOp::Eq: return *c == 0;
    case CmpOp::Ne: return *c != 0;
    case CmpOp::Le: return *c <= 0;
    case CmpOp::Lt: return *c < 0;
    case CmpOp::Ge: return *c >= 0;
    case CmpOp::Gt: return *c > 0;
  }
  return false;
}

std::optional<int> vs_rhs(const std::vector<Number>& v, const Constant& k) {
  if (!k.is_number()) return std::nullopt;
  return lex_cmp(v, {k.num()});
}

bool figure_count(const std::set<Tuple>& t, const std::set<Tuple>& ud, CmpOp op,
                  const Constant& k) {
  Number nt = (long)t.size();
  Number na = (long)(t.size() + ud.size());
  switch (op) {
    case CmpOp::Eq: return ud.empty() && holds(vs_rhs({nt}, k), op);
    case CmpOp::Ne: return ud.empty() && holds(vs_rhs({nt}, k), op);
    case CmpOp::Le:
    case CmpOp::Lt: return holds(vs_rhs({na}, k), op);
    case CmpOp::Ge:
    case CmpOp::Gt: return holds(vs_rhs({nt}, k), op);
  }
  return false;
}

bool figure_extremum(const std::set<Tuple>& t, const std::set<Tuple>& ud,
                     bool is_min, CmpOp op, const Constant& k) {
  std::set<Tuple> all = t;
  all.insert(ud.begin(), ud.end());
  auto ext = [&](const std::set<Tuple>& s) -> std::optional<std::vector<Number>> {
    std::optional<std::vector<Number>> best;
    for (const Tuple& x : s) {
      auto nx = numbers(x);
      if (!nx) return std::nullopt;
      if (!best) {
        best = nx;
        continue;
      }
      auto c = lex_cmp(*nx, *best);
      if (!c) return std::nullopt;
      if (is_min ? *c < 0 : *c > 0) best = nx;
    }
    return best;
  };
  switch (op) {
    case CmpOp::Eq:
    case CmpOp::Ne: {
      if (!ud.empty() || !all_num(t) || t.empty()) return false;
      auto m = ext(t);
      if (!m) return false;
      return holds(vs_rhs(*m, k), op);
    }
    case CmpOp::Le:
    case CmpOp::Lt:
    case CmpOp::Ge:
    case CmpOp::Gt: {
      if (!all_num(all)) return false;
      bool toward_bound = (op == CmpOp::Le || op == CmpOp::Lt) != is_min;
      // Upper bound on a max (or lower bound on a min) must cover the
      // undefined tuples too; the opposite bound needs only the true ones.
      const std::set<Tuple>& side = toward_bound ? all : t;
      auto m = ext(side);
      return m && holds(vs_rhs(*m, k), op);
    }
  }
  return false;
}

bool figure_sum(const std::set<Tuple>& t, const std::set<Tuple>& ud, CmpOp op,
                const Constant& k) {
  auto one = [](const Tuple& x) -> std::optional<Number> {
    if (x.size() != 1 || !x[0].is_number()) return std::nullopt;
    return x[0].num();
  };
  Number st = 0;
  for (const Tuple& x : t) {
    auto v = one(x);
    if (!v) return false;
    st += *v;
  }
  if (op == CmpOp::Eq || op == CmpOp::Ne)
    return ud.empty() && holds(vs_rhs({st}, k), op);
  for (const Tuple& x : ud) {
    auto v = one(x);
    if (!v) return false;
    bool upper = op == CmpOp::Le || op == CmpOp::Lt;
    if (upper && *v > 0) st += *v;
    if (!upper && *v < 0) st += *v;
  }
  return holds(vs_rhs({st}, k), op);
}

CmpOp flip(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Ge: return CmpOp::Lt;
    case CmpOp::Lt: return CmpOp::Ge;
  }
  return CmpOp::Eq;
}

// Ground DNF instances: each disjunct is a list of ground literal and
// comparison hypotheses.  Quantifiers are expanded over the domain.
using Disjunct = std::vector<Body>;

std::vector<Disjunct> dnf(const Body& b, const Sub& s,
                          const std::vector<Constant>& domain) {
  return std::visit(
      [&](const auto& n) -> std::vector<Disjunct> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          Lit g = n;
          g.atom.args.clear();
          for (const Term& t : n.atom.args) g.atom.args.emplace_back(value_of(t, s));
          return {{Body::lit(std::move(g))}};
        } else if constexpr (std::is_same_v<T, Comparison>) {
          Comparison c = n;
          Sub outer = s;
          for (const std::string& v : c.set.vars) outer.erase(v);
          for (Lit& l : c.set.lits) {
            std::vector<Term> args;
            for (const Term& t : l.atom.args)
              args.push_back(t.is_var() && outer.count(t.var_name())
                                 ? Term(outer.at(t.var_name()))
                                 : t);
            l.atom.args = std::move(args);
          }
          c.rhs = c.rhs.is_var() ? Term(s.at(c.rhs.var_name())) : c.rhs;
          return {{Body::cmp(std::move(c))}};
        } else if constexpr (std::is_same_v<T, TermEq> || std::is_same_v<T, TermNeq>) {
          bool eq = value_of(n.lhs, s) == value_of(n.rhs, s);
          bool ok = std::is_same_v<T, TermEq> ? eq : !eq;
          if (ok) return {{}};
          return {};
        } else if constexpr (std::is_same_v<T, Or>) {
          std::vector<Disjunct> out;
          for (const Body& p : n.parts)
            for (Disjunct& d : dnf(p, s, domain)) out.push_back(std::move(d));
          return out;
        } else if constexpr (std::is_same_v<T, And>) {
          std::vector<Disjunct> acc{{}};
          for (const Body& p : n.parts) {
            std::vector<Disjunct> next;
            for (Disjunct& d : dnf(p, s, domain))
              for (const Disjunct& a : acc) {
                Disjunct merged = a;
                merged.insert(merged.end(), d.begin(), d.end());
                next.push_back(std::move(merged));
              }
            acc = std::move(next);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Exists>) {
          std::vector<Disjunct> out;
          Sub s2 = s;
          each_sub(n.vars, 0, domain, s2, [&](const Sub& s3) {
            for (Disjunct& d : dnf(n.body.front(), s3, domain))
              out.push_back(std::move(d));
          });
          return out;
        } else {
          // Universal: conjunction over the domain, then DNF of that.
          Sub s2 = s;
          std::vector<Disjunct> acc{{}};
          each_sub(n.vars, 0, domain, s2, [&](const Sub& s3) {
            std::vector<Disjunct> sub = dnf(n.body.front(), s3, domain);
            std::vector<Disjunct> next;
            for (const Disjunct& a : acc)
              for (const Disjunct& d : sub) {
                Disjunct merged = a;
                merged.insert(merged.end(), d.begin(), d.end());
                next.push_back(std::move(merged));
              }
            acc = std::move(next);
          });
          return acc;
        }
      },
      b.node);
}

}  // namespace

std::optional<std::vector<Number>> aggregate_2valued(
    AggOp agg, const std::set<std::vector<Constant>>& tuples) {
  switch (agg) {
    case AggOp::Count: return std::vector<Number>{Number((long)tuples.size())};
    case AggOp::Min:
    case AggOp::Max: {
      if (tuples.empty()) return std::nullopt;
      std::optional<std::vector<Number>> best;
      for (const Tuple& t : tuples) {
        auto nt = numbers(t);
        if (!nt) return std::nullopt;
        if (!best) {
          best = nt;
          continue;
        }
        auto c = lex_cmp(*nt, *best);
        if (!c) return std::nullopt;
        if (agg == AggOp::Min ? *c < 0 : *c > 0) best = nt;
      }
      return best;
    }
    case AggOp::Sum: {
      Number s = 0;
      for (const Tuple& t : tuples) {
        if (t.size() != 1 || !t[0].is_number()) return std::nullopt;
        s += t[0].num();
      }
      return std::vector<Number>{s};
    }
  }
  return std::nullopt;
}

bool derivable(const Comparison& c, const Interpretation& I,
               const std::vector<Constant>& domain) {
  std::set<Tuple> t, ud;
  Sub s;
  each_sub(c.set.vars, 0, domain, s, [&](const Sub& s2) {
    Truth tv = Truth::True;
    for (const Lit& l : c.set.lits) tv = kleene_and(tv, lit_truth(l, s2, I));
    Tuple tup;
    for (const std::string& v : c.set.vars) tup.push_back(s2.at(v));
    if (tv == Truth::True)
      t.insert(std::move(tup));
    else if (tv == Truth::Undef)
      ud.insert(std::move(tup));
  });
  for (const Tuple& x : t) ud.erase(x);
  const Constant k = value_of(c.rhs, {});
  switch (c.agg) {
    case AggOp::Count: return figure_count(t, ud, c.op, k);
    case AggOp::Max: return figure_extremum(t, ud, false, c.op, k);
    case AggOp::Min: return figure_extremum(t, ud, true, c.op, k);
    case AggOp::Sum: return figure_sum(t, ud, c.op, k);
  }
  return false;
}

Truth truth_of(const Body& b, const Sub& sub, const Interpretation& I,
               const std::vector<Constant>& domain) {
  return std::visit(
      [&](const auto& n) -> Truth {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          return lit_truth(n, sub, I);
        } else if constexpr (std::is_same_v<T, Comparison>) {
          // Instantiate the outer variables, then ask derivability.
          std::vector<Disjunct> unit = dnf(Body::cmp(n), sub, domain);
          const Comparison& g = std::get<Comparison>(unit.front().front().node);
          if (oracle::derivable(g, I, domain)) return Truth::True;
          Comparison neg = g;
          neg.op = flip(neg.op);
          if (oracle::derivable(neg, I, domain)) return Truth::False;
          return Truth::Undef;
        } else if constexpr (std::is_same_v<T, And>) {
          Truth t = Truth::True;
          for (const Body& p : n.parts) t = kleene_and(t, truth_of(p, sub, I, domain));
          return t;
        } else if constexpr (std::is_same_v<T, Or>) {
          Truth t = Truth::False;
          for (const Body& p : n.parts) t = kleene_or(t, truth_of(p, sub, I, domain));
          return t;
        } else if constexpr (std::is_same_v<T, Exists>) {
          Truth t = Truth::False;
          Sub s2 = sub;
          each_sub(n.vars, 0, domain, s2, [&](const Sub& s3) {
            t = kleene_or(t, truth_of(n.body.front(), s3, I, domain));
          });
          return t;
        } else if constexpr (std::is_same_v<T, Forall>) {
          Truth t = Truth::True;
          Sub s2 = sub;
          each_sub(n.vars, 0, domain, s2, [&](const Sub& s3) {
            t = kleene_and(t, truth_of(n.body.front(), s3, I, domain));
          });
          return t;
        } else if constexpr (std::is_same_v<T, TermEq>) {
          return value_of(n.lhs, sub) == value_of(n.rhs, sub) ? Truth::True
                                                              : Truth::False;
        } else {
          return value_of(n.lhs, sub) == value_of(n.rhs, sub) ? Truth::False
                                                              : Truth::True;
        }
      },
      b.node);
}

bool is_model(const Program& prog, const Interpretation& M) {
  std::vector<Constant> domain = program_constants(prog);
  for (const Rule& r : prog.clauses) {
    bool ok = true;
    std::vector<std::string> vars = rule_vars(r);
    Sub s;
    each_sub(vars, 0, domain, s, [&](const Sub& s2) {
      if (!ok) return;
      Truth body = r.body ? truth_of(*r.body, s2, M, domain) : Truth::True;
      if (body == Truth::True &&
          M.truth(GroundLit{r.head.positive, inst_atom(r.head.atom, s2)}) !=
              Truth::True)
        ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::set<GroundAtom> greatest_unfounded_bruteforce(const Program& prog,
                                                   const Interpretation& I) {
  std::vector<Constant> domain = program_constants(prog);
  std::set<PredKey> closed;
  for (const auto& [p, info] : prog.resolved)
    if (info.closed) closed.insert(p);

  std::vector<GroundAtom> cand;
  for (const PredKey& p : closed)
    each_pred_atom(p, domain, [&](GroundAtom a) {
      if (I.truth(a) != Truth::True) cand.push_back(std::move(a));
    });
  if (cand.size() > 16)
    throw OracleScaleError("too many candidate atoms for brute force: " +
                           std::to_string(cand.size()));

  // Ground DNF instances concluding each candidate.
  std::map<GroundAtom, std::vector<Disjunct>> concluding;
  for (const Rule& r : prog.clauses) {
    if (!closed.count(key_of(r.head.atom))) continue;
    std::vector<std::string> vars = rule_vars(r);
    Sub s;
    each_sub(vars, 0, domain, s, [&](const Sub& s2) {
      GroundAtom head = inst_atom(r.head.atom, s2);
      if (r.body) {
        for (Disjunct& d : dnf(*r.body, s2, domain))
          concluding[head].push_back(std::move(d));
      } else {
        concluding[head].push_back({});
      }
    });
  }

  auto is_unfounded = [&](const std::vector<GroundAtom>& u) {
    std::set<GroundAtom> uset(u.begin(), u.end());
    Interpretation ext = I;
    for (const GroundAtom& a : u)
      if (ext.truth(a) == Truth::Undef) ext.insert_neg(a);
    for (const GroundAtom& a : u) {
      for (const Disjunct& d : concluding[a]) {
        bool defeated = false;
        for (const Body& h : d) {
          if (const Lit* l = std::get_if<Lit>(&h.node)) {
            GroundLit gl{l->positive, inst_atom(l->atom, {})};
            if (I.truth(gl) == Truth::False) defeated = true;
            if (l->positive && closed.count(key_of(l->atom)) &&
                uset.count(gl.atom))
              defeated = true;
          } else {
            Comparison neg = std::get<Comparison>(h.node);
            neg.op = flip(neg.op);
            if (oracle::derivable(neg, ext, domain)) defeated = true;
          }
          if (defeated) break;
        }
        if (!defeated) return false;
      }
    }
    return true;
  };

  std::set<GroundAtom> result;
  for (std::size_t mask = 0; mask < (std::size_t(1) << cand.size()); ++mask) {
    std::vector<GroundAtom> u;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask & (std::size_t(1) << i)) u.push_back(cand[i]);
    if (is_unfounded(u)) result.insert(u.begin(), u.end());
  }
  return result;
}

ConstraintModels enumerate_constraint_models_bruteforce(
    const Program& prog, const Interpretation& founded_model,
    std::size_t max_models) {
  std::vector<Constant> domain = program_constants(prog);
  std::vector<GroundAtom> universe;
  for (const PredKey& p : program_preds(prog))
    each_pred_atom(p, domain, [&](GroundAtom a) { universe.push_back(std::move(a)); });
  if (universe.size() > 22)
    throw OracleScaleError("atom universe too large for brute force: " +
                           std::to_string(universe.size()));

  Program comp = cmpl(prog);

  std::set<Interpretation> found;
  for (std::size_t mask = 0; mask < (std::size_t(1) << universe.size()); ++mask) {
    Interpretation M;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask & (std::size_t(1) << i))
        M.insert(universe[i]);
      else
        M.insert_neg(universe[i]);
    }
    if (!founded_model.subset_of(M)) continue;
    if (!is_model(comp, M)) continue;
    bool closed_ok = true;
    for (const GroundAtom& a : greatest_unfounded_bruteforce(prog, M))
      if (M.truth(a) != Truth::False) {
        closed_ok = false;
        break;
      }
    if (!closed_ok) continue;
    found.insert(std::move(M));
  }

  ConstraintModels out;
  out.models.assign(found.begin(), found.end());
  if (out.models.size() > max_models) {
    out.models.resize(max_models);
    out.truncated = true;
  }
  return out;
}

}  // namespace foundalog::oracle
