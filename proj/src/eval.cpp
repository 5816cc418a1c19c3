#include "foundalog/eval.hpp"

#include <cassert>
#include <optional>

namespace foundalog {

namespace {

using Tuple = std::vector<Constant>;
using NumTuple = std::vector<Number>;

std::optional<NumTuple> numeric_tuple(const Tuple& t) {
  NumTuple out;
  out.reserve(t.size());
  for (const Constant& c : t) {
    if (!c.is_number()) return std::nullopt;
    out.push_back(c.num());
  }
  return out;
}

// Lexicographic comparison; only equal-length all-numeric tuples are ordered.
std::optional<int> cmp_tuples(const NumTuple& a, const NumTuple& b) {
  if (a.size() != b.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

// Extremum of a set of tuples; fails on empty sets, non-numeric values, and
// incomparable (mixed-length) tuples.
std::optional<NumTuple> extremum(const std::set<Tuple>& tuples, bool want_max) {
  std::optional<NumTuple> best;
  for (const Tuple& t : tuples) {
    auto nt = numeric_tuple(t);
    if (!nt) return std::nullopt;
    if (!best) {
      best = std::move(nt);
      continue;
    }
    auto c = cmp_tuples(*nt, *best);
    if (!c) return std::nullopt;
    if ((want_max && *c > 0) || (!want_max && *c < 0)) best = std::move(nt);
  }
  return best;  // nullopt when empty: max/min of the empty set do not exist
}

bool all_numeric(const std::set<Tuple>& tuples) {
  for (const Tuple& t : tuples)
    if (!numeric_tuple(t)) return false;
  return true;
}

// The right-hand side as a numeric tuple, when it is a number.
std::optional<NumTuple> rhs_value(const Constant& k) {
  if (!k.is_number()) return std::nullopt;
  return NumTuple{k.num()};
}

bool value_eq(const NumTuple& v, const Constant& k) {
  auto kv = rhs_value(k);
  if (!kv) return false;  // a numeric tuple never equals a symbol
  auto c = cmp_tuples(v, *kv);
  return c && *c == 0;
}

// v `op` k for an order operator; false when incomparable.
bool value_ord(const NumTuple& v, CmpOp op, const Constant& k) {
  auto kv = rhs_value(k);
  if (!kv) return false;
  auto c = cmp_tuples(v, *kv);
  if (!c) return false;
  switch (op) {
    case CmpOp::Le: return *c <= 0;
    case CmpOp::Lt: return *c < 0;
    case CmpOp::Ge: return *c >= 0;
    case CmpOp::Gt: return *c > 0;
    default: return false;
  }
}

bool derivable_count(const GiSets& g, CmpOp op, const Constant& k) {
  Number n_true = (long)g.t.size();
  Number n_all = (long)(g.t.size() + g.ud.size());
  switch (op) {
    case CmpOp::Eq:
      return g.ud.empty() && k.is_number() && n_true == k.num();
    case CmpOp::Ne:
      return g.ud.empty() && !(k.is_number() && n_true == k.num());
    case CmpOp::Le: return k.is_number() && n_all <= k.num();
    case CmpOp::Lt: return k.is_number() && n_all < k.num();
    case CmpOp::Ge: return k.is_number() && n_true >= k.num();
    case CmpOp::Gt: return k.is_number() && n_true > k.num();
  }
  return false;
}

// max family; min is the mirror image with <= and >= swapped.
bool derivable_extremum(const GiSets& g, bool want_max, CmpOp op,
                        const Constant& k) {
  std::set<Tuple> all = g.t;
  all.insert(g.ud.begin(), g.ud.end());
  switch (op) {
    case CmpOp::Eq:
    case CmpOp::Ne: {
      if (!g.ud.empty()) return false;
      auto m = extremum(g.t, want_max);
      if (!m) return false;
      bool eq = value_eq(*m, k);
      return op == CmpOp::Eq ? eq : !eq;
    }
    case CmpOp::Le:
    case CmpOp::Lt: {
      if (!all_numeric(all)) return false;
      // An upper bound on max needs all values bounded; on min only the
      // true ones (undefined values can only lower the min).
      auto m = extremum(want_max ? all : g.t, want_max);
      return m && value_ord(*m, op, k);
    }
    case CmpOp::Ge:
    case CmpOp::Gt: {
      if (!all_numeric(all)) return false;
      auto m = extremum(want_max ? g.t : all, want_max);
      return m && value_ord(*m, op, k);
    }
  }
  return false;
}

bool derivable_sum(const GiSets& g, CmpOp op, const Constant& k) {
  // sum collects one variable, so tuples are single numbers; sum {} = 0.
  auto scalar = [](const Tuple& t) -> std::optional<Number> {
    if (t.size() != 1 || !t[0].is_number()) return std::nullopt;
    return t[0].num();
  };
  Number sum_true = 0;
  for (const Tuple& t : g.t) {
    auto v = scalar(t);
    if (!v) return false;
    sum_true += *v;
  }
  if (op == CmpOp::Eq || op == CmpOp::Ne) {
    if (!g.ud.empty()) return false;
    bool eq = k.is_number() && sum_true == k.num();
    return op == CmpOp::Eq ? eq : !eq;
  }
  if (!k.is_number()) return false;
  Number bound = sum_true;
  for (const Tuple& t : g.ud) {
    auto v = scalar(t);
    if (!v) return false;
    // For an upper bound only positive undefined values matter; for a lower
    // bound only negative ones.
    if ((op == CmpOp::Le || op == CmpOp::Lt) && *v > 0) bound += *v;
    if ((op == CmpOp::Ge || op == CmpOp::Gt) && *v < 0) bound += *v;
  }
  switch (op) {
    case CmpOp::Le: return bound <= k.num();
    case CmpOp::Lt: return bound < k.num();
    case CmpOp::Ge: return bound >= k.num();
    case CmpOp::Gt: return bound > k.num();
    default: return false;
  }
}

}  // namespace

Comparison complement(const Comparison& c) {
  Comparison out = c;
  out.op = complement_op(c.op);
  return out;
}

bool derivable(const Comparison& c, const Interpretation& I,
               const std::vector<Constant>& domain) {
  if (!c.rhs.is_const())
    throw std::logic_error("derivable: comparison rhs is not ground");
  GiSets g = gi_by_truth(c.set, I, domain);
  const Constant& k = c.rhs.con();
  switch (c.agg) {
    case AggOp::Count: return derivable_count(g, c.op, k);
    case AggOp::Max: return derivable_extremum(g, true, c.op, k);
    case AggOp::Min: return derivable_extremum(g, false, c.op, k);
    case AggOp::Sum: return derivable_sum(g, c.op, k);
  }
  return false;
}

Truth truth_of_body(const Body& b, const Interpretation& I,
                    const std::vector<Constant>& domain) {
  return std::visit(
      [&](const auto& n) -> Truth {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          return I.truth(GroundLit{n.positive, to_ground(n.atom)});
        } else if constexpr (std::is_same_v<T, Comparison>) {
          if (derivable(n, I, domain)) return Truth::True;
          if (derivable(complement(n), I, domain)) return Truth::False;
          return Truth::Undef;
        } else if constexpr (std::is_same_v<T, And>) {
          Truth t = Truth::True;
          for (const Body& p : n.parts) {
            t = kleene_and(t, truth_of_body(p, I, domain));
            if (t == Truth::False) break;
          }
          return t;
        } else if constexpr (std::is_same_v<T, Or>) {
          Truth t = Truth::False;
          for (const Body& p : n.parts) {
            t = kleene_or(t, truth_of_body(p, I, domain));
            if (t == Truth::True) break;
          }
          return t;
        } else if constexpr (std::is_same_v<T, TermEq>) {
          return n.lhs.con() == n.rhs.con() ? Truth::True : Truth::False;
        } else if constexpr (std::is_same_v<T, TermNeq>) {
          return n.lhs.con() == n.rhs.con() ? Truth::False : Truth::True;
        } else {
          throw std::logic_error("truth_of_body: body is not ground");
        }
      },
      b.node);
}

Interpretation one_step(const std::vector<GroundRule>& rules,
                        const Interpretation& I,
                        const std::vector<Constant>& domain) {
  Interpretation out;
  for (const GroundRule& r : rules) {
    if (r.is_fact() || truth_of_body(*r.body, I, domain) == Truth::True) {
      if (out.truth(r.head) != Truth::True) out.insert(r.head);
    }
  }
  return out;
}

Interpretation lfp(const std::vector<GroundRule>& rules, Interpretation start,
                   const std::vector<Constant>& domain) {
  Interpretation I = std::move(start);
  for (;;) {
    Interpretation step = one_step(rules, I, domain);
    bool changed = false;
    for (const GroundAtom& a : step.positives())
      if (I.truth(a) != Truth::True) {
        I.insert(a);
        changed = true;
      }
    for (const GroundAtom& a : step.negatives())
      if (I.truth(a) != Truth::False) {
        I.insert_neg(a);
        changed = true;
      }
    if (!changed) return I;
  }
}

}  // namespace foundalog
