#pragma once

#include <string>

#include "foundalog/interp.hpp"
#include "foundalog/parser.hpp"
#include "foundalog/validate.hpp"

namespace test_util {

using namespace foundalog;

inline Program parsed(const std::string& src) { return parse(src); }

inline Program valid(const std::string& src) { return validate(parse(src)); }

inline Constant sym(const std::string& s) { return Constant::symbol(s); }
inline Constant num(long n) { return Constant::integer(n); }

inline GroundAtom ga(const std::string& pred, std::vector<Constant> args = {}) {
  return GroundAtom{pred, std::move(args)};
}

inline Interpretation interp(const std::vector<GroundAtom>& pos,
                             const std::vector<GroundAtom>& neg = {}) {
  Interpretation I;
  for (const GroundAtom& a : pos) I.insert(a);
  for (const GroundAtom& a : neg) I.insert_neg(a);
  return I;
}

}  // namespace test_util
