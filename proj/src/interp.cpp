#include "foundalog/interp.hpp"

#include <algorithm>

#include "foundalog/printer.hpp"

namespace foundalog {

Truth Interpretation::truth(const GroundAtom& a) const {
  if (is_neg_name(a.pred))
    return kleene_not(truth(GroundAtom{base_name(a.pred), a.args}));
  if (pos_.count(a)) return Truth::True;
  if (neg_.count(a)) return Truth::False;
  return Truth::Undef;
}

void Interpretation::insert(const GroundAtom& a) {
  if (is_neg_name(a.pred)) {
    insert_neg(GroundAtom{base_name(a.pred), a.args});
    return;
  }
  if (neg_.count(a))
    throw InconsistentInterpretation("complementary literals for " + print(a));
  pos_.insert(a);
}

void Interpretation::insert(const GroundLit& l) {
  if (l.positive)
    insert(l.atom);
  else
    insert_neg(l.atom);
}

void Interpretation::insert_neg(GroundAtom a) {
  if (is_neg_name(a.pred)) {
    insert(GroundAtom{base_name(a.pred), a.args});
    return;
  }
  if (pos_.count(a))
    throw InconsistentInterpretation("complementary literals for " + print(a));
  neg_.insert(std::move(a));
}

bool Interpretation::subset_of(const Interpretation& o) const {
  return std::includes(o.pos_.begin(), o.pos_.end(), pos_.begin(), pos_.end()) &&
         std::includes(o.neg_.begin(), o.neg_.end(), neg_.begin(), neg_.end());
}

void Interpretation::merge(const Interpretation& o) {
  for (const GroundAtom& a : o.pos_) insert(a);
  for (const GroundAtom& a : o.neg_) insert_neg(a);
}

}  // namespace foundalog
