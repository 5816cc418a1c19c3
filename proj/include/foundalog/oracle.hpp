#pragma once

#include "foundalog/ast.hpp"
#include "foundalog/errors.hpp"
#include "foundalog/interp.hpp"
#include "foundalog/semantics.hpp"

// Brute-force reference implementations for differential testing.  Everything
// here is written directly against the definitions, with its own
// instantiation, evaluation, and enumeration code; the engine's pipeline is
// not reused (shared pieces: the syntax tree, the Interpretation container,
// and the completion transform).
namespace foundalog::oracle {

// Aggregate over fully determined tuples.  count: cardinality; min/max:
// numeric/lexicographic extremum, nothing on empty or non-numeric input;
// sum: single numbers only, 0 on empty.
std::optional<std::vector<Number>> aggregate_2valued(
    AggOp agg, const std::set<std::vector<Constant>>& tuples);

// Independent derivability of a comparison that is ground apart from its
// bound set variables.
bool derivable(const Comparison& c, const Interpretation& I,
               const std::vector<Constant>& domain);

// 3-valued truth of a rule body under a substitution covering its free
// variables; quantifiers evaluated by direct iteration over the domain.
Truth truth_of(const Body& b, const std::map<std::string, Constant>& sub,
               const Interpretation& I, const std::vector<Constant>& domain);

// 3-valued model check by direct instantiation of every rule.
bool is_model(const Program& prog, const Interpretation& M);

// Union of all unfounded subsets of the closed-predicate atoms not true in
// I, each subset tested verbatim against the three-clause definition.
// Throws OracleScaleError beyond 16 candidate atoms.
std::set<GroundAtom> greatest_unfounded_bruteforce(const Program& prog,
                                                   const Interpretation& I);

// All 2-valued interpretations over the full atom universe that are models
// of the completed program, extend `founded_model`, and make their own
// greatest unfounded set false.  Throws OracleScaleError beyond 22 atoms.
ConstraintModels enumerate_constraint_models_bruteforce(
    const Program& prog, const Interpretation& founded_model,
    std::size_t max_models);

}  // namespace foundalog::oracle
