#pragma once

#include "foundalog/eval.hpp"
#include "foundalog/ground.hpp"
#include "foundalog/interp.hpp"
#include "foundalog/transform.hpp"

namespace foundalog {

// All ground predicate atoms of the program: every predicate occurring in the
// clauses or declarations, with every argument tuple over the domain.
// Deterministic order: predicates sorted, tuples in odometer order.
std::vector<GroundAtom> atom_universe(const Program& prog,
                                      const std::vector<Constant>& domain);

// Adds completion facts: for each certain predicate P among `preds` and each
// argument tuple not true in I, makes P of that tuple false.
void add_neg(Interpretation& I, const std::vector<PredKey>& preds,
             const Program& prog, const std::vector<Constant>& domain);

// Least fixed point stratified by SCC over a completed, negation-renamed
// program, with completion facts added per stratum.  `inject` seeds the
// accumulator with extra literals (used by the founded iteration).
// reverse_scc selects a different valid stratum linearization; the result
// must not depend on it.
Interpretation founded0(const Program& renamed,
                        const std::vector<Constant>& domain,
                        const Interpretation& inject = {},
                        bool reverse_scc = false);

// Greatest set U of closed-predicate atoms, none true in I, such that every
// ground DNF rule instance concluding an atom of U has (1) a hypothesis
// false in I, (2) a positive closed-predicate hypothesis in U, or (3) a
// comparison hypothesis whose complement is derivable once all of U is
// false.  Computed by deleting supported atoms until stable.
std::set<GroundAtom> unfounded_sets_greatest(const Program& prog,
                                             const Interpretation& I);

// The founded model: iterate (stratified least fixed point of the completed
// program, then make the greatest unfounded set false) to a fixed point.
Interpretation founded(const Program& prog, bool reverse_scc = false);

// 3-valued model check: every fact is true and every ground rule instance
// with a true body has a true conclusion.  Comparisons are virtual.
bool check_model(const Program& prog, const Interpretation& M);

struct ConstraintModels {
  std::vector<Interpretation> models;  // sorted, each 2-valued
  bool truncated = false;
};

// All 2-valued extensions M of the founded model over the atom universe that
// are models of the completed program and make their own greatest unfounded
// set false.  Throws BudgetError when more than `budget` atoms are
// undefined; keeps at most `max_models` models and flags truncation.
ConstraintModels constraint_models(const Program& prog,
                                   std::size_t max_models,
                                   std::size_t budget = 20);

}  // namespace foundalog
