#pragma once

#include "foundalog/ast.hpp"
#include "foundalog/depgraph.hpp"
#include "foundalog/errors.hpp"

namespace foundalog {

// All constants appearing anywhere in the program (facts, rules, set
// expressions, comparison right-hand sides).
std::vector<Constant> constants_of(const Program& prog);

// Resolves every predicate's certain/uncertain, complete, and closed status,
// applying defaults and rejecting illegal declarations.  Idempotent.
Program validate_declarations(const Program& prog, const DependencyGraph& dg);

// Convenience: build the dependency graph and validate.
Program validate(const Program& prog);

}  // namespace foundalog
