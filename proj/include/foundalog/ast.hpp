#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace foundalog {

using Number = boost::multiprecision::cpp_rational;

// A constant is either a symbol (identity by spelling) or an exact rational
// number.  1 and 1/1 are the same constant; '1' (symbol) and 1 are not.
class Constant {
 public:
  static Constant symbol(std::string s) { return Constant(std::move(s)); }
  static Constant number(Number n) { return Constant(std::move(n)); }
  static Constant integer(long n) { return Constant(Number(n)); }

  bool is_number() const { return std::holds_alternative<Number>(v_); }
  bool is_symbol() const { return std::holds_alternative<std::string>(v_); }
  const Number& num() const { return std::get<Number>(v_); }
  const std::string& sym() const { return std::get<std::string>(v_); }

  bool operator==(const Constant& o) const = default;
  bool operator<(const Constant& o) const {
    if (v_.index() != o.v_.index()) return v_.index() > o.v_.index();  // numbers first
    if (is_number()) return num() < o.num();
    return sym() < o.sym();
  }

 private:
  explicit Constant(std::string s) : v_(std::move(s)) {}
  explicit Constant(Number n) : v_(std::move(n)) {}
  std::variant<std::string, Number> v_;
};

// Term: constant or variable.  Variable names are case-sensitive.
class Term {
 public:
  Term(Constant c) : v_(std::move(c)) {}
  static Term var(std::string name) { return Term(V{std::move(name)}); }

  bool is_var() const { return std::holds_alternative<V>(v_); }
  bool is_const() const { return !is_var(); }
  const std::string& var_name() const { return std::get<V>(v_).name; }
  const Constant& con() const { return std::get<Constant>(v_); }

  bool operator==(const Term& o) const = default;

 private:
  struct V {
    std::string name;
    bool operator==(const V&) const = default;
  };
  explicit Term(V v) : v_(std::move(v)) {}
  std::variant<Constant, V> v_;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;
  std::size_t arity() const { return args.size(); }
  bool operator==(const Atom&) const = default;
};

// Predicates are identified by name and arity.
struct PredKey {
  std::string name;
  std::size_t arity = 0;
  bool operator==(const PredKey&) const = default;
  auto operator<=>(const PredKey&) const = default;
};

inline PredKey key_of(const Atom& a) { return PredKey{a.pred, a.arity()}; }

// Naming convention for the negation-renaming transform: predicate "n.p"
// stands for the negation of "p".  '.' cannot occur in source identifiers.
inline bool is_neg_name(const std::string& pred) {
  return pred.size() > 2 && pred[0] == 'n' && pred[1] == '.';
}
inline std::string neg_name(const std::string& pred) { return "n." + pred; }
inline std::string base_name(const std::string& pred) {
  return is_neg_name(pred) ? pred.substr(2) : pred;
}

struct Lit {
  bool positive = true;
  Atom atom;
  bool operator==(const Lit&) const = default;
};

enum class AggOp { Count, Min, Max, Sum };
enum class CmpOp { Eq, Ne, Le, Lt, Ge, Gt };

// Complement pairing: (=,!=), (<=,>), (>=,<).
inline CmpOp complement_op(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Ge: return CmpOp::Lt;
    case CmpOp::Lt: return CmpOp::Ge;
  }
  return CmpOp::Eq;
}

// Set expression {X1,...,Xa : L1, ..., Lh}.  The body is restricted to a
// conjunction of possibly negated predicate literals; the result variables
// are bound and shadow any same-named outer variables.
struct SetExpr {
  std::vector<std::string> vars;
  std::vector<Lit> lits;
  bool operator==(const SetExpr&) const = default;
};

// Aggregation comparison: agg {..} op rhs, rhs a constant or variable.
struct Comparison {
  AggOp agg;
  SetExpr set;
  CmpOp op;
  Term rhs;
  bool operator==(const Comparison&) const = default;
};

struct Body;

struct And {
  std::vector<Body> parts;
  bool operator==(const And&) const;
};
struct Or {
  std::vector<Body> parts;
  bool operator==(const Or&) const;
};
// Quantifier bodies hold exactly one element.
struct Exists {
  std::vector<std::string> vars;
  std::vector<Body> body;
  bool operator==(const Exists&) const;
};
struct Forall {
  std::vector<std::string> vars;
  std::vector<Body> body;
  bool operator==(const Forall&) const;
};
// Variable (dis)equalities appear only in completion output, never in source.
struct TermEq {
  Term lhs, rhs;
  bool operator==(const TermEq&) const = default;
};
struct TermNeq {
  Term lhs, rhs;
  bool operator==(const TermNeq&) const = default;
};

struct Body {
  std::variant<Lit, Comparison, And, Or, Exists, Forall, TermEq, TermNeq> node;
  bool operator==(const Body&) const = default;

  static Body lit(Lit l) { return Body{std::move(l)}; }
  static Body cmp(Comparison c) { return Body{std::move(c)}; }
  static Body conj(std::vector<Body> ps) { return Body{And{std::move(ps)}}; }
  static Body disj(std::vector<Body> ps) { return Body{Or{std::move(ps)}}; }
  static Body exists(std::vector<std::string> vs, Body b) {
    return Body{Exists{std::move(vs), {std::move(b)}}};
  }
  static Body forall(std::vector<std::string> vs, Body b) {
    return Body{Forall{std::move(vs), {std::move(b)}}};
  }
};

inline bool And::operator==(const And& o) const { return parts == o.parts; }
inline bool Or::operator==(const Or& o) const { return parts == o.parts; }
inline bool Exists::operator==(const Exists& o) const {
  return vars == o.vars && body == o.body;
}
inline bool Forall::operator==(const Forall& o) const {
  return vars == o.vars && body == o.body;
}

inline const Body& quant_body(const Exists& e) { return e.body.front(); }
inline const Body& quant_body(const Forall& f) { return f.body.front(); }

// A fact is a rule without a body; its head arguments are all constants.
// Negative heads appear only in completion output.
struct Rule {
  Lit head;
  std::optional<Body> body;
  bool is_fact() const { return !body.has_value(); }
  bool operator==(const Rule&) const = default;
};

enum class Certainty { Certain, Uncertain };

struct Declaration {
  PredKey pred;
  std::optional<Certainty> certainty;
  std::optional<bool> complete;
  std::optional<bool> closed;
  bool operator==(const Declaration&) const = default;
};

// Resolved per-predicate declaration after validation.
struct PredInfo {
  Certainty certainty = Certainty::Certain;
  bool complete = false;  // meaningful only when uncertain
  bool closed = false;
  bool operator==(const PredInfo&) const = default;
};

struct Program {
  std::vector<Rule> clauses;
  std::vector<Declaration> declarations;
  std::map<PredKey, PredInfo> resolved;  // filled by validate_declarations
  bool validated = false;

  bool operator==(const Program& o) const {
    return clauses == o.clauses && declarations == o.declarations;
  }

  bool is_certain(const PredKey& p) const {
    auto it = resolved.find(p);
    return it != resolved.end() && it->second.certainty == Certainty::Certain;
  }
  bool is_uncertain_complete(const PredKey& p) const {
    auto it = resolved.find(p);
    return it != resolved.end() && it->second.certainty == Certainty::Uncertain &&
           it->second.complete;
  }
  bool is_closed(const PredKey& p) const {
    auto it = resolved.find(p);
    return it != resolved.end() && it->second.closed;
  }
};

// Ground predicate atom.
struct GroundAtom {
  std::string pred;
  std::vector<Constant> args;
  auto tie() const { return std::tie(pred, args); }
  bool operator==(const GroundAtom&) const = default;
  bool operator<(const GroundAtom& o) const {
    if (pred != o.pred) return pred < o.pred;
    if (args.size() != o.args.size()) return args.size() < o.args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == o.args[i]) continue;
      return args[i] < o.args[i];
    }
    return false;
  }
};

struct GroundLit {
  bool positive = true;
  GroundAtom atom;
  bool operator==(const GroundLit&) const = default;
  bool operator<(const GroundLit& o) const {
    if (atom == o.atom) return positive < o.positive;
    return atom < o.atom;
  }
};

}  // namespace foundalog
