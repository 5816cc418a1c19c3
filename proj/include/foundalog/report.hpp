#pragma once

#include <json.hpp>

#include "foundalog/semantics.hpp"

namespace foundalog {

// {"true":[...],"false":[...],"undefined":[...]} over the atom universe,
// each list sorted lexicographically by printed atom.
nlohmann::json founded_to_json(const Program& prog, const Interpretation& F);

// Array of models, each the sorted list of printed true atoms.
nlohmann::json models_to_json(const ConstraintModels& cm);

// Per-predicate truth sections.  False atoms of certain predicates are
// summarized unless show_false is set.
std::string founded_text(const Program& prog, const Interpretation& F,
                         bool show_false);

std::string models_text(const ConstraintModels& cm);

}  // namespace foundalog
