#include <doctest.h>

#include "foundalog/eval.hpp"
#include "foundalog/validate.hpp"
#include "helpers.hpp"

using namespace test_util;

namespace {

Comparison cmp(AggOp agg, CmpOp op, long rhs, bool lit_pos = true) {
  return Comparison{agg, SetExpr{{"X"}, {Lit{lit_pos, Atom{"p", {Term::var("X")}}}}},
                    op, Term(Constant::integer(rhs))};
}

const std::vector<Constant> dom123 = {Constant::integer(1), Constant::integer(2),
                                      Constant::integer(3)};

}  // namespace

TEST_CASE("count derivability") {
  // True tuples {1}, undefined {2},{3}.
  Interpretation I = interp({ga("p", {num(1)})});
  // Neither count >= 2 nor its complement count < 2 is derivable: the
  // undefined atoms could swing the count either way.
  CHECK_FALSE(derivable(cmp(AggOp::Count, CmpOp::Ge, 2), I, dom123));
  CHECK_FALSE(derivable(cmp(AggOp::Count, CmpOp::Lt, 2), I, dom123));
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Ge, 1), I, dom123));
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Le, 3), I, dom123));
  CHECK_FALSE(derivable(cmp(AggOp::Count, CmpOp::Eq, 1), I, dom123));

  // With everything resolved, equality becomes derivable.
  Interpretation J =
      interp({ga("p", {num(1)})}, {ga("p", {num(2)}), ga("p", {num(3)})});
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Eq, 1), J, dom123));
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Lt, 2), J, dom123));
}

TEST_CASE("count of a fully false set") {
  Interpretation I =
      interp({}, {ga("p", {num(1)}), ga("p", {num(2)}), ga("p", {num(3)})});
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Eq, 0), I, dom123));
  CHECK_FALSE(derivable(cmp(AggOp::Count, CmpOp::Ge, 1), I, dom123));
}

TEST_CASE("sum derivability") {
  // True {3}, undefined {-2},{4}.
  std::vector<Constant> dom = {num(3), num(-2), num(4)};
  Interpretation I = interp({ga("p", {num(3)})});
  // sum could reach 3 + 4 = 7, so sum <= 5 is not derivable.
  CHECK_FALSE(derivable(cmp(AggOp::Sum, CmpOp::Le, 5), I, dom));
  // sum can only drop to 3 - 2 = 1, so sum >= 1 is derivable.
  CHECK(derivable(cmp(AggOp::Sum, CmpOp::Ge, 1), I, dom));
  CHECK_FALSE(derivable(cmp(AggOp::Sum, CmpOp::Eq, 3), I, dom));
  CHECK(derivable(cmp(AggOp::Sum, CmpOp::Le, 7), I, dom));
  // Empty sum is 0.
  Interpretation none =
      interp({}, {ga("p", {num(3)}), ga("p", {num(-2)}), ga("p", {num(4)})});
  CHECK(derivable(cmp(AggOp::Sum, CmpOp::Eq, 0), none, dom));
}

TEST_CASE("sum requires numeric true tuples") {
  std::vector<Constant> dom = {num(3), sym("a")};
  Interpretation I = interp({ga("p", {num(3)}), ga("p", {sym("a")})},
                            {});
  CHECK_FALSE(derivable(cmp(AggOp::Sum, CmpOp::Eq, 3), I, dom));
}

TEST_CASE("max and min derivability") {
  std::vector<Constant> dom = {num(2), sym("a")};
  // True tuples {2} and {'a'}: a non-number in the set blocks max = k.
  Interpretation I = interp({ga("p", {num(2)}), ga("p", {sym("a")})});
  CHECK_FALSE(derivable(cmp(AggOp::Max, CmpOp::Eq, 2), I, dom));

  Interpretation J = interp({ga("p", {num(2)})}, {ga("p", {sym("a")})});
  CHECK(derivable(cmp(AggOp::Max, CmpOp::Eq, 2), J, dom));
  CHECK(derivable(cmp(AggOp::Min, CmpOp::Eq, 2), J, dom));

  // max >= k needs only a true witness, whatever the undefined tuples are,
  // but every possible member must be numeric.
  Interpretation K = interp({ga("p", {num(2)})});
  CHECK_FALSE(derivable(cmp(AggOp::Max, CmpOp::Ge, 2), K, dom));
  std::vector<Constant> numdom = {num(2), num(5)};
  Interpretation L = interp({ga("p", {num(2)})});
  CHECK(derivable(cmp(AggOp::Max, CmpOp::Ge, 2), L, numdom));
  CHECK_FALSE(derivable(cmp(AggOp::Max, CmpOp::Le, 4), L, numdom));
  CHECK(derivable(cmp(AggOp::Max, CmpOp::Le, 5), L, numdom));
  CHECK(derivable(cmp(AggOp::Min, CmpOp::Le, 2), L, numdom));
  // Whatever the undefined tuple does, the minimum stays in [2,2].
  CHECK(derivable(cmp(AggOp::Min, CmpOp::Ge, 2), L, numdom));
  CHECK_FALSE(derivable(cmp(AggOp::Min, CmpOp::Ge, 3), L, numdom));

  // max/min over a set that may be empty is never derivable at =.
  Interpretation empty = interp({}, {ga("p", {num(2)}), ga("p", {num(5)})});
  CHECK_FALSE(derivable(cmp(AggOp::Max, CmpOp::Eq, 2), empty, numdom));
  CHECK_FALSE(derivable(cmp(AggOp::Min, CmpOp::Eq, 2), empty, numdom));
}

TEST_CASE("inequality operators reduce to their mirrors") {
  Interpretation I =
      interp({ga("p", {num(1)})}, {ga("p", {num(2)}), ga("p", {num(3)})});
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Ne, 2), I, dom123));
  CHECK_FALSE(derivable(cmp(AggOp::Count, CmpOp::Ne, 1), I, dom123));
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Lt, 2), I, dom123));
  CHECK(derivable(cmp(AggOp::Count, CmpOp::Gt, 0), I, dom123));
}

TEST_CASE("complement flips the operator") {
  Comparison c = cmp(AggOp::Count, CmpOp::Ge, 2);
  CHECK(complement(c).op == CmpOp::Lt);
  CHECK(complement(complement(c)) == c);
}

TEST_CASE("derivability exclusivity") {
  // A comparison and its complement are never both derivable.
  for (AggOp a : {AggOp::Count, AggOp::Min, AggOp::Max, AggOp::Sum})
    for (CmpOp o : {CmpOp::Eq, CmpOp::Ne, CmpOp::Le, CmpOp::Lt, CmpOp::Ge, CmpOp::Gt})
      for (long k : {0L, 1L, 2L, 3L}) {
        Interpretation I = interp({ga("p", {num(1)})}, {ga("p", {num(3)})});
        Comparison c = cmp(a, o, k);
        CHECK_FALSE((derivable(c, I, dom123) &&
                     derivable(complement(c), I, dom123)));
      }
}

TEST_CASE("derivability is monotone in information") {
  // Resolving an undefined atom never retracts derivability.
  Interpretation I = interp({ga("p", {num(1)})});
  std::vector<Interpretation> exts = {
      interp({ga("p", {num(1)}), ga("p", {num(2)})}),
      interp({ga("p", {num(1)})}, {ga("p", {num(2)})}),
  };
  for (AggOp a : {AggOp::Count, AggOp::Min, AggOp::Max, AggOp::Sum})
    for (CmpOp o : {CmpOp::Eq, CmpOp::Ne, CmpOp::Le, CmpOp::Lt, CmpOp::Ge, CmpOp::Gt})
      for (long k : {0L, 1L, 2L, 3L})
        if (derivable(cmp(a, o, k), I, dom123))
          for (const Interpretation& J : exts)
            CHECK(derivable(cmp(a, o, k), J, dom123));
}

TEST_CASE("body truth is three-valued") {
  Program p = valid("dom(a). dom(b). p(a) :- count {X : p(X)} = 1.");
  std::vector<Constant> domain = constants_of(p);
  Body b = Body::cmp(Comparison{
      AggOp::Count, SetExpr{{"X"}, {Lit{true, Atom{"p", {Term::var("X")}}}}},
      CmpOp::Eq, Term(num(1))});
  // Nothing known about p: the count is open.
  CHECK(truth_of_body(b, interp({}), domain) == Truth::Undef);
  // All p false: count = 1 is refuted.
  Interpretation allf;
  for (const Constant& c : domain) allf.insert_neg(ga("p", {c}));
  CHECK(truth_of_body(b, allf, domain) == Truth::False);

  Body conj = Body::conj({Body::lit(Lit{true, Atom{"dom", {Term(sym("a"))}}}), b});
  Interpretation I = interp({ga("dom", {sym("a")})});
  CHECK(truth_of_body(conj, I, domain) == Truth::Undef);
  CHECK(truth_of_body(Body::lit(Lit{false, Atom{"dom", {Term(sym("a"))}}}), I,
                      domain) == Truth::False);
}

TEST_CASE("one_step and lfp on a positive program") {
  Program p = valid("e(1,2). e(2,3). t(X,Y) :- e(X,Y). t(X,Y) :- e(X,Z), t(Z,Y).");
  std::vector<Constant> domain = constants_of(p);
  auto grs = ground_rules(p.clauses, domain);

  Interpretation I0;
  Interpretation I1 = one_step(grs, I0, domain);
  CHECK(I1.truth(ga("e", {num(1), num(2)})) == Truth::True);
  CHECK(I1.truth(ga("t", {num(1), num(2)})) == Truth::Undef);

  Interpretation F = lfp(grs, {}, domain);
  CHECK(F.truth(ga("t", {num(1), num(2)})) == Truth::True);
  CHECK(F.truth(ga("t", {num(1), num(3)})) == Truth::True);
  CHECK(F.truth(ga("t", {num(2), num(3)})) == Truth::True);
  CHECK(F.truth(ga("t", {num(3), num(1)})) == Truth::Undef);
  // lfp only ever adds what one_step concludes.
  CHECK(one_step(grs, F, domain) == F);
}

TEST_CASE("lfp derives through a monotone comparison") {
  Program p = valid(
      "enrolled('c','s1'). enrolled('c','s2').\n"
      "big(C) :- count {X : enrolled(C,X)} > 1.");
  std::vector<Constant> domain = constants_of(p);
  auto grs = ground_rules(p.clauses, domain);
  Interpretation F = lfp(grs, {}, domain);
  // With no negative info the count could still grow, so > 1 is derivable
  // once two tuples are true.
  CHECK(F.truth(ga("big", {sym("c")})) == Truth::True);
}
