#include <doctest.h>

#include "foundalog/oracle.hpp"
#include "foundalog/semantics.hpp"
#include "foundalog/transform.hpp"
#include "foundalog/validate.hpp"
#include "helpers.hpp"

using namespace test_util;

TEST_CASE("atom_universe covers every predicate over the full domain") {
  Program p = valid("e(1,2). t(X,Y) :- e(X,Y).");
  auto u = atom_universe(p, constants_of(p));
  // Two binary predicates over a 2-element domain.
  CHECK(u.size() == 8);
}

TEST_CASE("add_neg completes certain predicates with negatives") {
  Program p = valid("e(1,2). t(X,Y) :- e(X,Y). t(X,Y) :- e(X,Z), t(Z,Y).");
  std::vector<Constant> domain = constants_of(p);
  Interpretation F = founded(p);
  CHECK(F.truth(ga("e", {num(1), num(2)})) == Truth::True);
  CHECK(F.truth(ga("e", {num(2), num(1)})) == Truth::False);
  CHECK(F.truth(ga("t", {num(1), num(2)})) == Truth::True);
  CHECK(F.truth(ga("t", {num(2), num(2)})) == Truth::False);
  // Nothing undefined in a fully certain program.
  for (const GroundAtom& a : atom_universe(p, domain))
    CHECK(F.truth(a) != Truth::Undef);
}

TEST_CASE("add_neg leaves uncertain predicates open") {
  Program p = valid("p(1). q(X) :- p(X). @declare p/1 uncertain incomplete.");
  Interpretation F = founded(p);
  CHECK(F.truth(ga("p", {num(1)})) == Truth::True);
  // Incomplete: no completion rule, no closure; underived atoms stay open.
  CHECK(F.truth(ga("q", {num(1)})) == Truth::True);
}

TEST_CASE("founded model of self-referential count, all declarations") {
  const char* src = "dom(a). dom(b). p(a) :- count {X : p(X)} = 1.";
  std::vector<Constant> domain = constants_of(parsed(src));
  // Default (uncertain complete): the completion rule refutes every p atom
  // except p(a), whose count condition can still go either way.
  {
    Interpretation F = founded(valid(src));
    CHECK(F.truth(ga("p", {sym("a")})) == Truth::Undef);
    CHECK(F.truth(ga("p", {sym("b")})) == Truth::False);
    CHECK(F.truth(ga("p", {num(1)})) == Truth::False);
    CHECK(F.truth(ga("dom", {sym("a")})) == Truth::True);
  }
  // Incomplete: no completion rule, so nothing is ever refuted.
  {
    Interpretation F = founded(
        valid(std::string(src) + " @declare p/1 uncertain incomplete."));
    for (const Constant& c : domain)
      CHECK(F.truth(ga("p", {c})) == Truth::Undef);
  }
  // Closed: the only derivation of each p atom needs other p atoms, so the
  // whole predicate collapses to false.
  {
    Program p = valid(std::string(src) +
                      " @declare p/1 uncertain complete closed.");
    Interpretation F = founded(p);
    for (const Constant& c : domain)
      CHECK(F.truth(ga("p", {c})) == Truth::False);
  }
}

TEST_CASE("founded model of the threshold attendance program") {
  std::string facts;
  for (int i = 0; i < 19; ++i)
    facts += "att('p" + std::to_string(i) + "').\n";
  std::string rule = "att('tom') :- count {X : att(X)} >= 20.\n";

  // Certain: the rule cannot fire from the 19 facts, so att('tom') is false.
  {
    Interpretation F = founded(valid(facts + rule));
    CHECK(F.truth(ga("att", {sym("tom")})) == Truth::False);
  }
  // Uncertain complete: att('tom') could make the count reach 20 itself.
  {
    Interpretation F =
        founded(valid(facts + rule + "@declare att/1 uncertain complete."));
    CHECK(F.truth(ga("att", {sym("tom")})) == Truth::Undef);
    CHECK(F.truth(ga("att", {sym("p0")})) == Truth::True);
  }
  // Closed: att('tom') only supports itself, so it is false.
  {
    Interpretation F = founded(
        valid(facts + rule + "@declare att/1 uncertain complete closed."));
    CHECK(F.truth(ga("att", {sym("tom")})) == Truth::False);
  }
}

TEST_CASE("greatest unfounded set of the closed count program") {
  Program p = valid(
      "p(1). p(3) :- count {X : p(X)} >= 2. p(2) :- count {X : p(X)} >= 2.\n"
      "@declare p/1 uncertain complete closed.");
  Interpretation I = interp({ga("p", {num(1)})});
  std::set<GroundAtom> U = unfounded_sets_greatest(p, I);
  // p(2) and p(3) only support each other through the count.
  CHECK(U == std::set<GroundAtom>{ga("p", {num(2)}), ga("p", {num(3)})});
}

TEST_CASE("unfounded set is empty without closed declarations") {
  Program p = valid(
      "p(1). p(3) :- count {X : p(X)} >= 2. p(2) :- count {X : p(X)} >= 2.");
  Interpretation I = interp({ga("p", {num(1)})});
  CHECK(unfounded_sets_greatest(p, I).empty());
}

TEST_CASE("evaluation order keeps a predicate and its negation together") {
  // r reads p only through the extremum, and p's false facts are written by
  // the renamed negation rules.  If r's component ran before them it would
  // see p undefined and derive r(1) from max over the undefined tuples.
  Program p = valid(
      "q(1).\n"
      "r(1) :- not r(1), count {Y : not r(Y)} != 0.\n"
      "r(1) :- max {Y : p(Y)} <= 1.\n"
      "@declare p/1 uncertain complete closed.");
  Interpretation F = founded(p);
  CHECK(F == founded(p, true));
  CHECK(F.truth(ga("p", {num(1)})) == Truth::False);
  CHECK(F.truth(ga("r", {num(1)})) == Truth::Undef);
}

TEST_CASE("unfounded set through an extremum that can empty out") {
  // Assuming q(0) and q(1) false together empties the set under the min, so
  // min {Y : q(Y)} > 0 stops being derivable and nothing blocks the rule for
  // q(1).  But {q(0)} alone is unfounded: with q(1) still undefined the bound
  // holds over {1}.  A pure deletion pass would miss it.
  Program p = valid(
      "p(1).\n"
      "q(X) :- p(X), min {Y : q(Y)} <= 0, p(X).\n"
      "@declare p/1 uncertain incomplete.\n"
      "@declare q/1 uncertain complete closed.");
  Interpretation F = founded(p);
  CHECK(F.truth(ga("q", {num(0)})) == Truth::False);
  Interpretation I = interp({ga("p", {num(1)})});
  std::set<GroundAtom> U = unfounded_sets_greatest(p, I);
  CHECK(U == std::set<GroundAtom>{ga("q", {num(0)})});
  CHECK(U == oracle::greatest_unfounded_bruteforce(p, I));
}

TEST_CASE("correlated count rules, founded and constraint views") {
  const char* src =
      "p(1). p(3) :- count {X : p(X)} >= 2. p(2) :- count {X : p(X)} >= 2.";
  // count >= 2 is a positive occurrence, so p defaults to certain: the rules
  // cannot fire from p(1) alone and both heads come out false.
  {
    Program p = valid(src);
    Interpretation F = founded(p);
    CHECK(F.truth(ga("p", {num(1)})) == Truth::True);
    CHECK(F.truth(ga("p", {num(2)})) == Truth::False);
    CHECK(F.truth(ga("p", {num(3)})) == Truth::False);
    ConstraintModels cm = constraint_models(p, 64);
    REQUIRE(cm.models.size() == 1);
  }
  // Uncertain complete: p(2), p(3) stand or fall together.
  {
    Program p = valid(std::string(src) + " @declare p/1 uncertain complete.");
    Interpretation F = founded(p);
    CHECK(F.truth(ga("p", {num(1)})) == Truth::True);
    CHECK(F.truth(ga("p", {num(2)})) == Truth::Undef);
    CHECK(F.truth(ga("p", {num(3)})) == Truth::Undef);
    ConstraintModels cm = constraint_models(p, 64);
    REQUIRE(cm.models.size() == 2);
    // Either both false or both true; never exactly one.
    for (const Interpretation& m : cm.models)
      CHECK(m.truth(ga("p", {num(2)})) == m.truth(ga("p", {num(3)})));
  }
  // Closed: the mutual support is unfounded.
  {
    Program p = valid(std::string(src) +
                      " @declare p/1 uncertain complete closed.");
    ConstraintModels cm = constraint_models(p, 64);
    REQUIRE(cm.models.size() == 1);
    CHECK(cm.models[0].truth(ga("p", {num(2)})) == Truth::False);
  }
}

TEST_CASE("check_model validates against the completed program") {
  Program p = valid(
      "p(1). p(3) :- count {X : p(X)} >= 2. p(2) :- count {X : p(X)} >= 2.");
  Interpretation all =
      interp({ga("p", {num(1)}), ga("p", {num(2)}), ga("p", {num(3)})});
  CHECK(check_model(p, all));

  Interpretation only1 = interp({ga("p", {num(1)})},
                                {ga("p", {num(2)}), ga("p", {num(3)})});
  CHECK(check_model(p, only1));

  // Exactly one of the two dependent atoms violates completion: the count is
  // 2, so the other rule fires too.
  Interpretation bad = interp({ga("p", {num(1)}), ga("p", {num(2)})},
                              {ga("p", {num(3)})});
  CHECK_FALSE(check_model(p, bad));

  // Denying the fact is never a model.
  Interpretation none = interp(
      {}, {ga("p", {num(1)}), ga("p", {num(2)}), ga("p", {num(3)})});
  CHECK_FALSE(check_model(p, none));
}

TEST_CASE("constraint models of the double-win game") {
  Program p = valid(
      "move(1,2). move(1,3).\n"
      "win(X) :- some Y | move(X,Y) and not win(Y).\n"
      "@declare win/1 uncertain complete closed.");
  Interpretation F = founded(p);
  CHECK(F.truth(ga("win", {num(1)})) == Truth::True);
  CHECK(F.truth(ga("win", {num(2)})) == Truth::False);
  CHECK(F.truth(ga("win", {num(3)})) == Truth::False);
  ConstraintModels cm = constraint_models(p, 64);
  REQUIRE(cm.models.size() == 1);
  CHECK(cm.models[0] == F);
}

TEST_CASE("constraint models extend the founded model") {
  Program p = valid("dom(a). dom(b). p(a) :- count {X : p(X)} = 1.");
  Interpretation F = founded(p);
  ConstraintModels cm = constraint_models(p, 64);
  for (const Interpretation& m : cm.models) {
    CHECK(F.subset_of(m));
    CHECK(check_model(p, m));
    // Total over the universe.
    for (const GroundAtom& a : atom_universe(p, constants_of(p)))
      CHECK(m.truth(a) != Truth::Undef);
  }
}

TEST_CASE("model list cap marks truncation") {
  Program p = valid("dom(a). dom(b). p(a) :- count {X : p(X)} = 1.");
  ConstraintModels all = constraint_models(p, 64);
  REQUIRE(all.models.size() > 1);
  ConstraintModels capped = constraint_models(p, 1);
  CHECK(capped.models.size() == 1);
  CHECK(capped.truncated);
  CHECK_FALSE(all.truncated);
  // The capped list is a prefix of the full sorted list.
  CHECK(capped.models[0] == all.models[0]);
}

TEST_CASE("enumeration budget is enforced") {
  std::string src = "d(0).";
  for (int i = 0; i < 6; ++i)
    src += " p" + std::to_string(i) + "(X) :- d(X), not p" +
           std::to_string((i + 1) % 6) + "(X).";
  Program p = valid(src);
  CHECK_THROWS_AS(constraint_models(p, 64, 3), BudgetError);
  CHECK_NOTHROW(constraint_models(p, 64, 20));
}

TEST_CASE("founded model does not depend on the SCC linearization") {
  const char* srcs[] = {
      "dom(a). dom(b). p(a) :- count {X : p(X)} = 1.",
      "move(1,2). move(1,3). win(X) :- some Y | move(X,Y) and not win(Y).\n"
      "@declare win/1 uncertain complete closed.",
      "p(1). p(3) :- count {X : p(X)} >= 2. p(2) :- count {X : p(X)} >= 2.",
      "e(1,2). t(X,Y) :- e(X,Y). t(X,Y) :- e(X,Z), t(Z,Y). q(X) :- not t(X,X).",
  };
  for (const char* src : srcs) {
    Program p = valid(src);
    CHECK(founded(p, false) == founded(p, true));
  }
}
