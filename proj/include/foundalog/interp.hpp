#pragma once

#include "foundalog/ast.hpp"
#include "foundalog/errors.hpp"

namespace foundalog {

// Kleene order: F < UD < T.
enum class Truth { False = 0, Undef = 1, True = 2 };

inline Truth kleene_not(Truth t) {
  return t == Truth::Undef ? t : (t == Truth::True ? Truth::False : Truth::True);
}
inline Truth kleene_and(Truth a, Truth b) { return std::min(a, b); }
inline Truth kleene_or(Truth a, Truth b) { return std::max(a, b); }

struct InconsistentInterpretation : std::logic_error {
  using std::logic_error::logic_error;
};

// A consistent set of signed ground predicate literals with 3-valued lookup.
// Atoms of the renamed predicate "n.p" are transparently stored and looked
// up as the negation of "p".
class Interpretation {
 public:
  Truth truth(const GroundAtom& a) const;
  Truth truth(const GroundLit& l) const {
    Truth t = truth(l.atom);
    return l.positive ? t : kleene_not(t);
  }

  // Throws InconsistentInterpretation if the complement is present.
  void insert(const GroundAtom& a);
  void insert(const GroundLit& l);
  void insert_neg(GroundAtom a);

  bool contains(const GroundLit& l) const { return truth(l) == Truth::True; }

  const std::set<GroundAtom>& positives() const { return pos_; }
  const std::set<GroundAtom>& negatives() const { return neg_; }
  std::size_t size() const { return pos_.size() + neg_.size(); }

  // Set inclusion of literal sets.
  bool subset_of(const Interpretation& o) const;
  void merge(const Interpretation& o);

  bool operator==(const Interpretation&) const = default;
  bool operator<(const Interpretation& o) const {
    if (pos_ != o.pos_) return pos_ < o.pos_;
    return neg_ < o.neg_;
  }

 private:
  std::set<GroundAtom> pos_, neg_;
};

}  // namespace foundalog
