#include "foundalog/parser.hpp"

#include <cctype>
#include <functional>
#include <set>

namespace foundalog {

namespace {

enum class Tok {
  End,
  Ident,   // lowercase identifier (symbol or predicate or keyword)
  Var,     // capitalized identifier
  Num,
  Str,     // quoted symbol
  If,      // :-
  Comma,
  Semi,
  Dot,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Colon,
  Bar,
  Slash,
  At,
  Eq,
  Ne,
  Le,
  Lt,
  Ge,
  Gt,
};

struct Token {
  Tok kind;
  std::string text;   // Ident/Var/Str
  Number num;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  int cur() const { return pos_ < src_.size() ? (unsigned char)src_[pos_] : -1; }
  int look(std::size_t k) const {
    return pos_ + k < src_.size() ? (unsigned char)src_[pos_ + k] : -1;
  }
  void bump() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    for (;;) {
      int c = cur();
      if (c == '%') {
        while (cur() != -1 && cur() != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        return;
      }
    }
  }

  static bool ident_char(int c) {
    return std::isalnum(c) || c == '_';
  }

  Number lex_number(bool negative) {
    std::string digits;
    while (std::isdigit(cur())) {
      digits.push_back((char)cur());
      bump();
    }
    Number n{boost::multiprecision::cpp_int(digits)};
    if (cur() == '.' && std::isdigit(look(1))) {
      bump();
      std::string frac;
      while (std::isdigit(cur())) {
        frac.push_back((char)cur());
        bump();
      }
      Number scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      n += Number(boost::multiprecision::cpp_int(frac)) / scale;
    } else if (cur() == '/' && std::isdigit(look(1))) {
      bump();
      std::string den;
      while (std::isdigit(cur())) {
        den.push_back((char)cur());
        bump();
      }
      Number d{boost::multiprecision::cpp_int(den)};
      if (d == 0) fail("zero denominator in rational literal");
      n /= d;
    }
    return negative ? Number(-n) : n;
  }

  void advance() {
    skip_ws();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    int c = cur();
    if (c == -1) {
      tok_.kind = Tok::End;
      return;
    }
    if (std::isdigit(c) || (c == '-' && std::isdigit(look(1)))) {
      bool neg = c == '-';
      if (neg) bump();
      tok_.kind = Tok::Num;
      tok_.num = lex_number(neg);
      return;
    }
    if (std::isalpha(c) || c == '_') {
      std::string s;
      while (ident_char(cur())) {
        s.push_back((char)cur());
        bump();
      }
      tok_.kind = std::isupper((unsigned char)s[0]) ? Tok::Var : Tok::Ident;
      tok_.text = std::move(s);
      return;
    }
    if (c == '\'') {
      bump();
      std::string s;
      while (cur() != '\'') {
        if (cur() == -1 || cur() == '\n') fail("unterminated quoted symbol");
        s.push_back((char)cur());
        bump();
      }
      bump();
      tok_.kind = Tok::Str;
      tok_.text = std::move(s);
      return;
    }
    switch (c) {
      case ':':
        bump();
        if (cur() == '-') {
          bump();
          tok_.kind = Tok::If;
        } else {
          tok_.kind = Tok::Colon;
        }
        return;
      case ',': bump(); tok_.kind = Tok::Comma; return;
      case ';': bump(); tok_.kind = Tok::Semi; return;
      case '.': bump(); tok_.kind = Tok::Dot; return;
      case '(': bump(); tok_.kind = Tok::LParen; return;
      case ')': bump(); tok_.kind = Tok::RParen; return;
      case '{': bump(); tok_.kind = Tok::LBrace; return;
      case '}': bump(); tok_.kind = Tok::RBrace; return;
      case '|': bump(); tok_.kind = Tok::Bar; return;
      case '/': bump(); tok_.kind = Tok::Slash; return;
      case '@': bump(); tok_.kind = Tok::At; return;
      case '=': bump(); tok_.kind = Tok::Eq; return;
      case '!':
        bump();
        if (cur() != '=') fail("expected '=' after '!'");
        bump();
        tok_.kind = Tok::Ne;
        return;
      case '<':
        bump();
        if (cur() == '=') {
          bump();
          tok_.kind = Tok::Le;
        } else {
          tok_.kind = Tok::Lt;
        }
        return;
      case '>':
        bump();
        if (cur() == '=') {
          bump();
          tok_.kind = Tok::Ge;
        } else {
          tok_.kind = Tok::Gt;
        }
        return;
      default:
        fail("unexpected character '" + std::string(1, (char)c) + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

const std::set<std::string> kKeywords = {"not", "and", "or",  "some",
                                         "each", "count", "min", "max", "sum"};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Program parse_program() {
    Program p;
    while (lex_.peek().kind != Tok::End) {
      if (lex_.peek().kind == Tok::At) {
        p.declarations.push_back(parse_directive());
      } else {
        p.clauses.push_back(parse_clause());
      }
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().line, lex_.peek().col);
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) fail("expected " + what);
    return lex_.next();
  }

  bool accept(Tok k) {
    if (lex_.peek().kind == k) {
      lex_.next();
      return true;
    }
    return false;
  }

  bool at_keyword(const std::string& kw) {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == kw;
  }

  Declaration parse_directive() {
    expect(Tok::At, "'@'");
    Token t = expect(Tok::Ident, "directive name");
    if (t.text != "declare") fail("unknown directive '@" + t.text + "'");
    Token name = expect(Tok::Ident, "predicate name");
    expect(Tok::Slash, "'/'");
    Token ar = expect(Tok::Num, "arity");
    if (denominator(ar.num) != 1 || ar.num < 0) fail("arity must be a non-negative integer");
    Declaration d;
    d.pred = PredKey{name.text, (std::size_t)numerator(ar.num).convert_to<long>()};
    while (lex_.peek().kind == Tok::Ident) {
      std::string f = lex_.next().text;
      if (f == "certain") d.certainty = Certainty::Certain;
      else if (f == "uncertain") d.certainty = Certainty::Uncertain;
      else if (f == "complete") d.complete = true;
      else if (f == "incomplete") d.complete = false;
      else if (f == "closed") d.closed = true;
      else fail("unknown declaration flag '" + f + "'");
    }
    expect(Tok::Dot, "'.'");
    return d;
  }

  Rule parse_clause() {
    Atom head = parse_atom();
    Rule r;
    r.head = Lit{true, std::move(head)};
    if (accept(Tok::If)) {
      r.body = parse_body();
    }
    expect(Tok::Dot, "'.'");
    check_rule(r);
    return r;
  }

  Atom parse_atom() {
    Token name = expect(Tok::Ident, "predicate name");
    if (kKeywords.count(name.text)) fail("reserved word '" + name.text + "' used as predicate");
    Atom a;
    a.pred = name.text;
    if (accept(Tok::LParen)) {
      if (lex_.peek().kind != Tok::RParen) {
        a.args.push_back(parse_term());
        while (accept(Tok::Comma)) a.args.push_back(parse_term());
      }
      expect(Tok::RParen, "')'");
    }
    return a;
  }

  Term parse_term() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Num: return Term(Constant::number(lex_.next().num));
      case Tok::Str: return Term(Constant::symbol(lex_.next().text));
      case Tok::Var: return Term::var(lex_.next().text);
      case Tok::Ident: {
        if (kKeywords.count(t.text)) fail("reserved word '" + t.text + "' used as constant");
        return Term(Constant::symbol(lex_.next().text));
      }
      default: fail("expected term");
    }
  }

  // body := conj ((';'|'or') conj)*
  Body parse_body() {
    std::vector<Body> parts{parse_conj()};
    while (lex_.peek().kind == Tok::Semi || at_keyword("or")) {
      lex_.next();
      parts.push_back(parse_conj());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Body::disj(std::move(parts));
  }

  // conj := unit ((','|'and') unit)*
  Body parse_conj() {
    std::vector<Body> parts{parse_unit()};
    while (lex_.peek().kind == Tok::Comma || at_keyword("and")) {
      lex_.next();
      parts.push_back(parse_unit());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return Body::conj(std::move(parts));
  }

  Body parse_unit() {
    if (at_keyword("not")) {
      Token t = lex_.next();
      Body b = parse_unit();
      if (std::holds_alternative<Comparison>(b.node))
        throw ParseError("negation applied to a comparison; use the complement operator instead",
                         t.line, t.col);
      if (auto* l = std::get_if<Lit>(&b.node)) {
        if (!l->positive) throw ParseError("double negation", t.line, t.col);
        l->positive = false;
        return b;
      }
      throw ParseError("negation is allowed only on predicate atoms", t.line, t.col);
    }
    if (at_keyword("some") || at_keyword("each")) return parse_quant();
    if (at_keyword("count") || at_keyword("min") || at_keyword("max") ||
        at_keyword("sum"))
      return parse_comparison();
    if (accept(Tok::LParen)) {
      Body b = parse_body();
      expect(Tok::RParen, "')'");
      return b;
    }
    return Body::lit(Lit{true, parse_atom()});
  }

  std::vector<std::string> parse_varlist() {
    std::vector<std::string> vs;
    vs.push_back(expect(Tok::Var, "variable").text);
    while (accept(Tok::Comma)) vs.push_back(expect(Tok::Var, "variable").text);
    return vs;
  }

  // Quantifier bodies extend as far right as possible; parenthesize to limit.
  Body parse_quant() {
    bool existential = lex_.next().text == "some";
    std::vector<std::string> vs = parse_varlist();
    expect(Tok::Bar, "'|'");
    Body b = parse_body();
    for (const std::string& v : vs)
      if (!occurs_free(b, v)) fail("quantified variable " + v + " does not occur in its body");
    return existential ? Body::exists(std::move(vs), std::move(b))
                       : Body::forall(std::move(vs), std::move(b));
  }

  Body parse_comparison() {
    Token agg_tok = lex_.next();
    AggOp agg = agg_tok.text == "count" ? AggOp::Count
                : agg_tok.text == "min" ? AggOp::Min
                : agg_tok.text == "max" ? AggOp::Max
                                        : AggOp::Sum;
    expect(Tok::LBrace, "'{'");
    SetExpr s;
    s.vars = parse_varlist();
    expect(Tok::Colon, "':'");
    s.lits.push_back(parse_setlit());
    while (lex_.peek().kind == Tok::Comma || at_keyword("and")) {
      lex_.next();
      s.lits.push_back(parse_setlit());
    }
    expect(Tok::RBrace, "'}'");
    if (agg == AggOp::Sum && s.vars.size() != 1)
      throw ParseError("sum requires a single result variable", agg_tok.line, agg_tok.col);
    for (const std::string& v : s.vars) {
      bool found = false;
      for (const Lit& l : s.lits)
        for (const Term& t : l.atom.args)
          if (t.is_var() && t.var_name() == v) found = true;
      if (!found)
        throw ParseError("set variable " + v + " does not occur in the set body",
                         agg_tok.line, agg_tok.col);
    }
    CmpOp op;
    switch (lex_.peek().kind) {
      case Tok::Eq: op = CmpOp::Eq; break;
      case Tok::Ne: op = CmpOp::Ne; break;
      case Tok::Le: op = CmpOp::Le; break;
      case Tok::Lt: op = CmpOp::Lt; break;
      case Tok::Ge: op = CmpOp::Ge; break;
      case Tok::Gt: op = CmpOp::Gt; break;
      default: fail("expected comparison operator");
    }
    lex_.next();
    Term rhs = parse_term();
    return Body::cmp(Comparison{agg, std::move(s), op, std::move(rhs)});
  }

  Lit parse_setlit() {
    bool positive = true;
    if (at_keyword("not")) {
      lex_.next();
      positive = false;
    }
    return Lit{positive, parse_atom()};
  }

  // --- static checks -------------------------------------------------------

  // Collects names of variables occurring free in b (set/quantifier bindings
  // shadow), optionally excluding comparison right-hand sides.
  static void free_vars(const Body& b, std::set<std::string> bound,
                        bool include_cmp_rhs, std::set<std::string>& out) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Lit>) {
            for (const Term& t : n.atom.args)
              if (t.is_var() && !bound.count(t.var_name())) out.insert(t.var_name());
          } else if constexpr (std::is_same_v<T, Comparison>) {
            std::set<std::string> inner = bound;
            inner.insert(n.set.vars.begin(), n.set.vars.end());
            for (const Lit& l : n.set.lits)
              for (const Term& t : l.atom.args)
                if (t.is_var() && !inner.count(t.var_name())) out.insert(t.var_name());
            if (include_cmp_rhs && n.rhs.is_var() && !bound.count(n.rhs.var_name()))
              out.insert(n.rhs.var_name());
          } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
            for (const Body& p : n.parts) free_vars(p, bound, include_cmp_rhs, out);
          } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
            std::set<std::string> inner = bound;
            inner.insert(n.vars.begin(), n.vars.end());
            free_vars(n.body.front(), inner, include_cmp_rhs, out);
          } else if constexpr (std::is_same_v<T, TermEq> || std::is_same_v<T, TermNeq>) {
            for (const Term* t : {&n.lhs, &n.rhs})
              if (t->is_var() && !bound.count(t->var_name())) out.insert(t->var_name());
          }
        },
        b.node);
  }

  static bool occurs_free(const Body& b, const std::string& v) {
    std::set<std::string> fv;
    free_vars(b, {}, true, fv);
    return fv.count(v) > 0;
  }

  static void collect_cmp_rhs_vars(const Body& b, std::set<std::string>& out) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Comparison>) {
            if (n.rhs.is_var()) out.insert(n.rhs.var_name());
          } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
            for (const Body& p : n.parts) collect_cmp_rhs_vars(p, out);
          } else if constexpr (std::is_same_v<T, Exists> || std::is_same_v<T, Forall>) {
            collect_cmp_rhs_vars(n.body.front(), out);
          }
        },
        b.node);
  }

  void check_rule(const Rule& r) {
    if (r.is_fact()) {
      for (const Term& t : r.head.atom.args)
        if (t.is_var()) fail("fact arguments must be constants");
      return;
    }
    std::set<std::string> body_fv;
    free_vars(*r.body, {}, false, body_fv);
    for (const Term& t : r.head.atom.args)
      if (t.is_var() && !body_fv.count(t.var_name()))
        fail("unsafe rule: head variable " + t.var_name() + " does not occur in the body");
    // A comparison's rhs variable must be bound by some other hypothesis.
    std::set<std::string> rhs_vars;
    collect_cmp_rhs_vars(*r.body, rhs_vars);
    for (const std::string& v : rhs_vars)
      if (!body_fv.count(v))
        fail("comparison right-hand side variable " + v +
             " is not bound by another hypothesis");
  }

  Lexer lex_;
};

}  // namespace

Program parse(std::string_view text) { return Parser(text).parse_program(); }

Declaration parse_declaration_override(std::string_view text) {
  // form: name/arity=flag[,flag...]
  auto bad = [&] {
    throw ValidationError("bad declaration override '" + std::string(text) +
                          "' (expected p/1=uncertain,complete,closed)");
  };
  auto slash = text.find('/');
  auto eq = text.find('=');
  if (slash == std::string_view::npos || eq == std::string_view::npos || eq < slash) bad();
  Declaration d;
  d.pred.name = std::string(text.substr(0, slash));
  std::string ar(text.substr(slash + 1, eq - slash - 1));
  if (ar.empty() || ar.find_first_not_of("0123456789") != std::string::npos) bad();
  d.pred.arity = std::stoul(ar);
  std::string_view rest = text.substr(eq + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string f(rest.substr(0, comma));
    if (f == "certain") d.certainty = Certainty::Certain;
    else if (f == "uncertain") d.certainty = Certainty::Uncertain;
    else if (f == "complete") d.complete = true;
    else if (f == "incomplete") d.complete = false;
    else if (f == "closed") d.closed = true;
    else bad();
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return d;
}

}  // namespace foundalog
