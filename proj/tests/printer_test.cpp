#include <doctest.h>

#include "foundalog/printer.hpp"
#include "helpers.hpp"

using namespace test_util;

TEST_CASE("number printing") {
  CHECK(print(Constant::integer(7)) == "7");
  CHECK(print(Constant::integer(-7)) == "-7");
  CHECK(print(Constant::number(Number(1) / 2)) == "0.5");
  CHECK(print(Constant::number(Number(-1) / 4)) == "-0.25");
  CHECK(print(Constant::number(Number(2) / 3)) == "2/3");
  CHECK(print(Constant::number(Number(1) / 100)) == "0.01");
}

TEST_CASE("symbols quote when they must") {
  CHECK(print(sym("abc")) == "abc");
  CHECK(print(sym("a_b1")) == "a_b1");
  CHECK(print(sym("and")) == "'and'");
  CHECK(print(sym("Tom")) == "'Tom'");
  CHECK(print(sym("a-b")) == "'a-b'");
  CHECK(print(sym("1")) == "'1'");
}

TEST_CASE("rule printing") {
  CHECK(print(valid("win(X) :- some Y | move(X,Y) and not win(Y).").clauses[0]) ==
        "win(X) :- some Y | move(X,Y), not win(Y).");
  CHECK(print(valid("p :- count {X : q(X)} >= 2.").clauses[0]) ==
        "p :- count {X: q(X)} >= 2.");
  CHECK(print(valid("g(S) :- each C | not r(C) or t(S,C).").clauses[0]) ==
        "g(S) :- each C | not r(C); t(S,C).");
}

TEST_CASE("print then parse is identity") {
  const char* sources[] = {
      "p(1). p('a'). q(X,Y) :- p(X), p(Y).",
      "val(W,0) :- output(W,G), gate(G,'and'), "
      "count {W2 : val(W2,0), input(W2,G)} > 0.",
      "win(X) :- some Y | move(X,Y) and not win(Y).\n"
      "@declare win/1 uncertain complete closed.",
      "s :- sum {X : p(X)} <= 5. m :- max {X : p(X), not q(X)} != 2.",
      "g(S) :- each C | not required(C) or taken(S,C).",
      "p(0.5). p(2/3). p(-3).",
  };
  for (const char* src : sources) {
    Program p1 = parsed(src);
    Program p2 = parsed(print(p1));
    CHECK(p1 == p2);
  }
}

TEST_CASE("ground atoms and literals") {
  CHECK(print(ga("p", {num(1), sym("a")})) == "p(1,a)");
  CHECK(print(ga("q")) == "q");
  CHECK(print(GroundLit{false, ga("p", {num(1)})}) == "not p(1)");
}
