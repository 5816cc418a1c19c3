#pragma once

#include <stdexcept>
#include <string>

namespace foundalog {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) +
                           ": " + msg),
        line(line_),
        col(col_) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration budget exceeded (too many undefined atoms).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Oracle asked to work beyond its scale.
struct OracleScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace foundalog
