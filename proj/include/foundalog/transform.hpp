#pragma once

#include "foundalog/ast.hpp"
#include "foundalog/interp.hpp"

namespace foundalog {

// Negation normal form of the negation of b: De Morgan over and/or,
// quantifier duality, double-negation elimination, comparison negation by
// operator flip, = <-> !=.  The result negates only predicate atoms.
Body nnf_negate(const Body& b);

// Replaces the facts and rules of each uncertain complete predicate with a
// single logically equivalent combined rule with fresh head variables and
// equality guards.
Program combine(const Program& prog);

// Adds, per uncertain complete predicate, the completion rule deriving its
// negative literals (the inverted combined rule in NNF).
Program add_inv(const Program& prog);

// Cmpl = AddInv . Combine
Program cmpl(const Program& prog);

// Renames every negative literal not p(...) to the positive literal
// n.p(...), in conclusions, bodies, and set expressions.
Program name_neg(const Program& prog);

// Interprets a set of (possibly renamed) ground atoms as signed literals.
Interpretation unname_neg(const std::vector<GroundAtom>& atoms);

// Fresh head variables used by combine; unparseable from source.
std::string fresh_var(std::size_t i);

}  // namespace foundalog
