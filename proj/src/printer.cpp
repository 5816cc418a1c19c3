#include "foundalog/printer.hpp"

#include <cctype>
#include <sstream>

namespace foundalog {

namespace {

bool bare_symbol_ok(const std::string& s) {
  static const std::set<std::string> reserved = {"not",  "and", "or",  "some",
                                                 "each", "count", "min", "max",
                                                 "sum"};
  if (s.empty() || !std::islower((unsigned char)s[0])) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return !reserved.count(s);
}

std::string print_number(const Number& n) {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(n), den = denominator(n);
  if (den == 1) return num.str();
  // Finite decimal expansion exists iff den = 2^a * 5^b.
  cpp_int d = den;
  int a = 0, b = 0;
  while (d % 2 == 0) { d /= 2; ++a; }
  while (d % 5 == 0) { d /= 5; ++b; }
  if (d != 1) return num.str() + "/" + den.str();
  int digits = std::max(a, b);
  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  cpp_int scaled = num * scale / den;
  bool neg = scaled < 0;
  cpp_int mag = neg ? cpp_int(-scaled) : scaled;
  std::string s = mag.str();
  if ((int)s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

const char* cmp_str(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

const char* agg_str(AggOp op) {
  switch (op) {
    case AggOp::Count: return "count";
    case AggOp::Min: return "min";
    case AggOp::Max: return "max";
    case AggOp::Sum: return "sum";
  }
  return "?";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string print_body(const Body& b, bool nested);

std::string print_parts(const std::vector<Body>& parts, const std::string& sep) {
  std::vector<std::string> ps;
  for (const Body& p : parts) ps.push_back(print_body(p, true));
  return join(ps, sep);
}

std::string print_body(const Body& b, bool nested) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lit>) {
          return (n.positive ? "" : "not ") + print(n.atom);
        } else if constexpr (std::is_same_v<T, Comparison>) {
          return print(n);
        } else if constexpr (std::is_same_v<T, And>) {
          std::string s = print_parts(n.parts, ", ");
          return nested ? "(" + s + ")" : s;
        } else if constexpr (std::is_same_v<T, Or>) {
          std::string s = print_parts(n.parts, "; ");
          return nested ? "(" + s + ")" : s;
        } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
          std::string s = (std::is_same_v<T, Exists> ? "some " : "each ") +
                          join(n.vars, ", ") + " | " +
                          print_body(n.body.front(), false);
          return nested ? "(" + s + ")" : s;
        } else if constexpr (std::is_same_v<T, TermEq>) {
          return print(n.lhs) + " = " + print(n.rhs);
        } else {
          return print(n.lhs) + " != " + print(n.rhs);
        }
      },
      b.node);
}

}  // namespace

std::string print(const Constant& c) {
  if (c.is_number()) return print_number(c.num());
  if (bare_symbol_ok(c.sym())) return c.sym();
  return "'" + c.sym() + "'";
}

std::string print(const Term& t) {
  return t.is_var() ? t.var_name() : print(t.con());
}

std::string print(const Atom& a) {
  if (a.args.empty()) return a.pred;
  std::vector<std::string> args;
  for (const Term& t : a.args) args.push_back(print(t));
  return a.pred + "(" + join(args, ",") + ")";
}

std::string print(const GroundAtom& a) {
  if (a.args.empty()) return a.pred;
  std::vector<std::string> args;
  for (const Constant& c : a.args) args.push_back(print(c));
  return a.pred + "(" + join(args, ",") + ")";
}

std::string print(const GroundLit& l) {
  return (l.positive ? "" : "not ") + print(l.atom);
}

std::string print(const Comparison& c) {
  std::vector<std::string> lits;
  for (const Lit& l : c.set.lits)
    lits.push_back((l.positive ? "" : "not ") + print(l.atom));
  return std::string(agg_str(c.agg)) + " {" + join(c.set.vars, ", ") + ": " +
         join(lits, ", ") + "} " + cmp_str(c.op) + " " + print(c.rhs);
}

std::string print(const Body& b) { return print_body(b, false); }

std::string print(const Rule& r) {
  std::string head = (r.head.positive ? "" : "not ") + print(r.head.atom);
  if (r.is_fact()) return head + ".";
  return head + " :- " + print(*r.body) + ".";
}

std::string print(const Declaration& d) {
  std::string s = "@declare " + d.pred.name + "/" + std::to_string(d.pred.arity);
  if (d.certainty)
    s += *d.certainty == Certainty::Certain ? " certain" : " uncertain";
  if (d.complete) s += *d.complete ? " complete" : " incomplete";
  if (d.closed && *d.closed) s += " closed";
  return s + ".";
}

std::string print(const Program& p) {
  std::ostringstream os;
  for (const Declaration& d : p.declarations) os << print(d) << "\n";
  for (const Rule& r : p.clauses) os << print(r) << "\n";
  return os.str();
}

}  // namespace foundalog
