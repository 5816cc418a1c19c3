#pragma once

#include <string>

#include "foundalog/ast.hpp"

namespace foundalog {

std::string print(const Constant& c);
std::string print(const Term& t);
std::string print(const Atom& a);
std::string print(const GroundAtom& a);
std::string print(const GroundLit& l);
std::string print(const Comparison& c);
std::string print(const Body& b);
std::string print(const Rule& r);
std::string print(const Declaration& d);
std::string print(const Program& p);

}  // namespace foundalog
