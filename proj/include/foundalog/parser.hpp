#pragma once

#include <string_view>

#include "foundalog/ast.hpp"
#include "foundalog/errors.hpp"

namespace foundalog {

// Parses a .fl program.  Throws ParseError with line/column on bad input.
Program parse(std::string_view text);

// Parses a single declaration override of the form
// "p/1=uncertain,complete,closed" (as accepted by the CLI --declare flag).
Declaration parse_declaration_override(std::string_view text);

}  // namespace foundalog
