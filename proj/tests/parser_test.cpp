#include <doctest.h>

#include "foundalog/printer.hpp"
#include "helpers.hpp"

using namespace test_util;

TEST_CASE("single fact") {
  Program p = parsed("p(1).");
  REQUIRE(p.clauses.size() == 1);
  CHECK(p.clauses[0].is_fact());
  CHECK(p.clauses[0].head.atom.pred == "p");
  CHECK(p.clauses[0].head.atom.args[0] == Term(num(1)));
}

TEST_CASE("set expression binds its own variables, outer stay free") {
  Program p = parsed(
      "val(W,0) :- output(W,G), gate(G,'and'), "
      "count {W2 : val(W2,0), input(W2,G)} > 0.");
  REQUIRE(p.clauses.size() == 1);
  const Rule& r = p.clauses[0];
  const auto& conj = std::get<And>(r.body->node);
  const auto& cmp = std::get<Comparison>(conj.parts[2].node);
  CHECK(cmp.set.vars == std::vector<std::string>{"W2"});
  CHECK(cmp.set.lits.size() == 2);
  CHECK(cmp.op == CmpOp::Gt);
  // G is free in the set body and must survive as a variable.
  CHECK(cmp.set.lits[1].atom.args[1] == Term::var("G"));
}

TEST_CASE("inner set variable shadows an outer variable of the same name") {
  Program p = parsed("q(W) :- p(W), count {W : r(W)} >= 1.");
  const auto& conj = std::get<And>(p.clauses[0].body->node);
  const auto& cmp = std::get<Comparison>(conj.parts[1].node);
  CHECK(cmp.set.vars == std::vector<std::string>{"W"});
}

TEST_CASE("negation on a comparison is rejected") {
  CHECK_THROWS_WITH_AS(parsed("q(X) :- p(X), not (count {Y : p(Y)} = 1)."),
                       doctest::Contains("negation applied to a comparison"),
                       ParseError);
}

TEST_CASE("sum needs a single result variable") {
  CHECK_THROWS_AS(parsed("q :- sum {X,Y : p(X,Y)} = 1."), ParseError);
  CHECK_NOTHROW(parsed("q :- sum {X : p(X)} = 1."));
}

TEST_CASE("unsafe rules are rejected") {
  CHECK_THROWS_WITH_AS(parsed("q(X) :- p(1)."), doctest::Contains("unsafe"),
                       ParseError);
  // A variable bound only inside a set expression does not make the head safe.
  CHECK_THROWS_AS(parsed("q(X) :- count {X : p(X)} >= 1."), ParseError);
}

TEST_CASE("facts must be ground") {
  CHECK_THROWS_AS(parsed("p(X)."), ParseError);
}

TEST_CASE("comparison rhs variable must be bound elsewhere") {
  CHECK_THROWS_AS(parsed("q :- count {X : p(X)} = K."), ParseError);
  CHECK_NOTHROW(parsed("q(K) :- r(K), count {X : p(X)} = K."));
}

TEST_CASE("syntax errors carry position") {
  try {
    parsed("p(1)\nq(");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("quantifiers, connectives, declarations") {
  Program p = parsed(
      "% comment\n"
      "r('a').\n"
      "g(S) :- each C | not r(C) or t(S,C).\n"
      "h(X) :- some Y | m(X,Y) and not w(Y).\n"
      "@declare w/1 uncertain complete closed.\n");
  REQUIRE(p.clauses.size() == 3);
  CHECK(std::holds_alternative<Forall>(p.clauses[1].body->node));
  CHECK(std::holds_alternative<Exists>(p.clauses[2].body->node));
  REQUIRE(p.declarations.size() == 1);
  CHECK(p.declarations[0].pred == PredKey{"w", 1});
  CHECK(p.declarations[0].certainty == Certainty::Uncertain);
  CHECK(p.declarations[0].complete == true);
  CHECK(p.declarations[0].closed == true);
}

TEST_CASE("numbers parse to exact rationals") {
  Program p = parsed("p(1). p(0.5). p(2/3). p(-7).");
  CHECK(p.clauses[0].head.atom.args[0] == Term(num(1)));
  CHECK(p.clauses[1].head.atom.args[0] ==
        Term(Constant::number(Number(1) / 2)));
  CHECK(p.clauses[2].head.atom.args[0] ==
        Term(Constant::number(Number(2) / 3)));
  CHECK(p.clauses[3].head.atom.args[0] == Term(num(-7)));
  // 1 and 1/1 are the same constant; '1' the symbol is not.
  CHECK(Constant::number(Number(1)) == Constant::number(Number(2) / 2));
  CHECK(Constant::symbol("1") != Constant::integer(1));
}

TEST_CASE("quoted and bare symbols are the same constant") {
  Program p = parsed("p('abc'). p(abc).");
  CHECK(p.clauses[0].head.atom == p.clauses[1].head.atom);
}

TEST_CASE("declaration overrides") {
  Declaration d = parse_declaration_override("p/2=uncertain,complete,closed");
  CHECK(d.pred == PredKey{"p", 2});
  CHECK(d.certainty == Certainty::Uncertain);
  CHECK(d.complete == true);
  CHECK(d.closed == true);
  CHECK_THROWS_AS(parse_declaration_override("p=certain"), ValidationError);
}
