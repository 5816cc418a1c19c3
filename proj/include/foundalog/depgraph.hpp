#pragma once

#include <utility>

#include "foundalog/ast.hpp"

namespace foundalog {

enum class OccLabel { Positive, NonPositive };

// Predicate-atom occurrences of one hypothesis, each labeled positive or
// non-positive.  A positive literal is positive; a comparison labels its set
// literals per the monotone aggregate/operator families; everything else
// (disjunctions, quantifications, negative literals, =, !=, sum) is
// non-positive.
std::vector<std::pair<PredKey, OccLabel>> hypothesis_occurrences(const Body& hyp);

// Occurrences of a whole rule body: the body's top-level conjuncts are its
// hypotheses.
std::vector<std::pair<PredKey, OccLabel>> body_occurrences(const Body& body);

class DependencyGraph {
 public:
  static DependencyGraph build(const Program& prog);

  const std::set<PredKey>& nodes() const { return nodes_; }
  const std::set<std::pair<PredKey, OccLabel>>& edges_from(const PredKey& q) const;

  // Path of length >= 1 from q to p.
  bool depends_on(const PredKey& q, const PredKey& p) const;
  // p lies on a cycle containing a non-positive edge.
  bool circular_non_positive(const PredKey& p) const;

  // SCCs in dependency order: earlier components do not depend on later
  // ones.  reverse_tiebreak selects a different valid linearization.
  std::vector<std::vector<PredKey>> scc_order(bool reverse_tiebreak = false) const;

 private:
  std::set<PredKey> nodes_;
  std::map<PredKey, std::set<std::pair<PredKey, OccLabel>>> edges_;
};

}  // namespace foundalog
