#pragma once

#include "foundalog/ground.hpp"
#include "foundalog/interp.hpp"

namespace foundalog {

// 3-valued truth of a ground body under I.  Comparisons are virtual: true if
// derivable, false if the complement is derivable, undefined otherwise.
Truth truth_of_body(const Body& ground_body, const Interpretation& I,
                    const std::vector<Constant>& domain);

// The complement of a comparison, realized by flipping the operator.
Comparison complement(const Comparison& c);

// Derivability of a ground comparison: it must hold in I no matter how the
// undefined atoms resolve.  Case analysis on aggregation and comparison
// operator; false whenever a required numeric-membership or ordering
// condition fails (the comparison is then undefined, not false).
bool derivable(const Comparison& ground_cmp, const Interpretation& I,
               const std::vector<Constant>& domain);

// One-step derivability: facts, conclusions of ground rules whose bodies are
// true in I, plus (virtually) derivable comparisons.
Interpretation one_step(const std::vector<GroundRule>& rules,
                        const Interpretation& I,
                        const std::vector<Constant>& domain);

// Least fixed point of one_step seeded with `start`.
Interpretation lfp(const std::vector<GroundRule>& rules, Interpretation start,
                   const std::vector<Constant>& domain);

}  // namespace foundalog
