#include "foundalog/depgraph.hpp"

#include <algorithm>
#include <functional>

namespace foundalog {

namespace {

// Monotone aggregate/operator families from the positive-occurrence
// definition: counting up (>, >=) and max up, min down are monotone in
// positive set literals; their mirrors are monotone in negative set literals.
bool family_pos_lit(AggOp agg, CmpOp op) {
  bool up = op == CmpOp::Gt || op == CmpOp::Ge;
  bool down = op == CmpOp::Lt || op == CmpOp::Le;
  switch (agg) {
    case AggOp::Count:
    case AggOp::Max: return up;
    case AggOp::Min: return down;
    case AggOp::Sum: return false;
  }
  return false;
}

bool family_neg_lit(AggOp agg, CmpOp op) {
  bool up = op == CmpOp::Gt || op == CmpOp::Ge;
  bool down = op == CmpOp::Lt || op == CmpOp::Le;
  switch (agg) {
    case AggOp::Count:
    case AggOp::Max: return down;
    case AggOp::Min: return up;
    case AggOp::Sum: return false;
  }
  return false;
}

void collect_all(const Body& b, OccLabel label,
                 std::vector<std::pair<PredKey, OccLabel>>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          out.emplace_back(key_of(n.atom), label);
        } else if constexpr (std::is_same_v<T, Comparison>) {
          for (const Lit& l : n.set.lits) out.emplace_back(key_of(l.atom), label);
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          for (const Body& p : n.parts) collect_all(p, label, out);
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          collect_all(n.body.front(), label, out);
        }
      },
      b.node);
}

}  // namespace

std::vector<std::pair<PredKey, OccLabel>> hypothesis_occurrences(const Body& hyp) {
  std::vector<std::pair<PredKey, OccLabel>> out;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          out.emplace_back(key_of(n.atom),
                           n.positive ? OccLabel::Positive : OccLabel::NonPositive);
        } else if constexpr (std::is_same_v<T, Comparison>) {
          for (const Lit& l : n.set.lits) {
            bool pos = l.positive ? family_pos_lit(n.agg, n.op)
                                  : family_neg_lit(n.agg, n.op);
            out.emplace_back(key_of(l.atom),
                             pos ? OccLabel::Positive : OccLabel::NonPositive);
          }
        } else if constexpr (std::is_same_v<T, And>) {
          for (const Body& p : n.parts) {
            auto sub = hypothesis_occurrences(p);
            out.insert(out.end(), sub.begin(), sub.end());
          }
        } else {
          collect_all(hyp, OccLabel::NonPositive, out);
        }
      },
      hyp.node);
  return out;
}

std::vector<std::pair<PredKey, OccLabel>> body_occurrences(const Body& body) {
  return hypothesis_occurrences(body);
}

DependencyGraph DependencyGraph::build(const Program& prog) {
  DependencyGraph g;
  for (const Rule& r : prog.clauses) {
    g.nodes_.insert(key_of(r.head.atom));
    if (!r.body) continue;
    PredKey from = key_of(r.head.atom);
    for (auto& [to, label] : body_occurrences(*r.body)) {
      g.nodes_.insert(to);
      g.edges_[from].emplace(to, label);
    }
  }
  // n.p depends on p: the negation of a predicate is determined after the
  // predicate itself (its completion facts or completion rule).
  for (const PredKey& n : std::vector<PredKey>(g.nodes_.begin(), g.nodes_.end())) {
    if (is_neg_name(n.name)) {
      PredKey base{base_name(n.name), n.arity};
      g.nodes_.insert(base);
      g.edges_[n].emplace(base, OccLabel::Positive);
    }
  }
  return g;
}

const std::set<std::pair<PredKey, OccLabel>>& DependencyGraph::edges_from(
    const PredKey& q) const {
  static const std::set<std::pair<PredKey, OccLabel>> empty;
  auto it = edges_.find(q);
  return it == edges_.end() ? empty : it->second;
}

bool DependencyGraph::depends_on(const PredKey& q, const PredKey& p) const {
  std::set<PredKey> seen;
  std::vector<PredKey> stack{q};
  while (!stack.empty()) {
    PredKey cur = stack.back();
    stack.pop_back();
    for (auto& [to, label] : edges_from(cur)) {
      if (to == p) return true;
      if (seen.insert(to).second) stack.push_back(to);
    }
  }
  return false;
}

std::vector<std::vector<PredKey>> DependencyGraph::scc_order(
    bool reverse_tiebreak) const {
  // Tarjan; components are emitted dependencies-first because edges point
  // from dependent to dependency.
  std::map<PredKey, int> index, low;
  std::vector<PredKey> stack;
  std::set<PredKey> on_stack;
  std::vector<std::vector<PredKey>> sccs;
  int counter = 0;

  std::function<void(const PredKey&)> visit = [&](const PredKey& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (auto& [w, label] : edges_from(v)) {
      if (!index.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<PredKey> comp;
      for (;;) {
        PredKey w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp.push_back(w);
        if (w == v) break;
      }
      std::sort(comp.begin(), comp.end());
      sccs.push_back(std::move(comp));
    }
  };

  std::vector<PredKey> order(nodes_.begin(), nodes_.end());
  if (reverse_tiebreak) std::reverse(order.begin(), order.end());
  for (const PredKey& v : order)
    if (!index.count(v)) visit(v);
  return sccs;
}

bool DependencyGraph::circular_non_positive(const PredKey& p) const {
  auto sccs = scc_order();
  std::map<PredKey, int> id;
  for (std::size_t i = 0; i < sccs.size(); ++i)
    for (const PredKey& n : sccs[i]) id[n] = (int)i;
  auto it = id.find(p);
  if (it == id.end()) return false;
  for (auto& [from, outs] : edges_)
    for (auto& [to, label] : outs)
      if (label == OccLabel::NonPositive && id.at(from) == it->second &&
          id.count(to) && id.at(to) == it->second)
        return true;
  return false;
}

}  // namespace foundalog
