#pragma once

#include "foundalog/ast.hpp"
#include "foundalog/interp.hpp"

namespace foundalog {

using Subst = std::map<std::string, Constant>;

// A rule instance with no free variables and no quantifiers: universal
// quantifications expanded to conjunctions over the domain, existential to
// disjunctions.  Set expressions inside comparisons keep their bound
// variables.
struct GroundRule {
  GroundLit head;
  std::optional<Body> body;
  bool is_fact() const { return !body.has_value(); }
};

// One disjunct of the DNF of a ground rule body: hypotheses are ground
// literals and ground comparisons only.
struct DnfRule {
  GroundLit head;
  std::vector<Body> hyps;
};

struct GroundSetInstance {
  std::vector<Constant> tuple;
  std::vector<GroundLit> lits;
};

GroundAtom to_ground(const Atom& a);
Atom from_ground(const GroundAtom& a);

Term subst_term(const Term& t, const Subst& s);
Body subst_and_expand(const Body& b, const Subst& s,
                      const std::vector<Constant>& domain);

// All ground instances of the given rules over the domain.
std::vector<GroundRule> ground_rules(const std::vector<Rule>& rules,
                                     const std::vector<Constant>& domain);

// Ground instances of a set expression whose free (outer) variables have
// already been substituted away.
std::vector<GroundSetInstance> ground_set(const SetExpr& s,
                                          const std::vector<Constant>& domain);

// Tuple-level truth sets of a set expression: a tuple is in `t` if some
// witness body is true in I, in `ud` if none is true and some is undefined.
struct GiSets {
  std::set<std::vector<Constant>> t, ud;
};
GiSets gi_by_truth(const SetExpr& s, const Interpretation& I,
                   const std::vector<Constant>& domain);

// DNF of a ground rule body, one DnfRule per disjunct.  Ground term
// (dis)equalities are simplified away; disjuncts containing a false one are
// dropped, so the result may be empty.
std::vector<DnfRule> to_dnf(const GroundRule& gr);

}  // namespace foundalog
