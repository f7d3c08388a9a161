#include <gtest/gtest.h>

#include "lexkit/enumerate.hpp"
#include "lexkit/errors.hpp"
#include "lexkit/json_io.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

TEST(ParseTerm, Examples) {
  Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z"), v = Term::var("v");
  EXPECT_EQ(T("(z y x)[y/x x][x/v]"),
            Term::esub(Term::esub(Term::app(Term::app(z, y), x), "y", Term::app(x, x)), "x", v));
  EXPECT_EQ(T("\\x.x"), Term::lam("x", x));
  EXPECT_EQ(T("?X{x,y}[x/v]"), Term::esub(Term::meta("X", {"x", "y"}), "x", v));
  EXPECT_EQ(T("?X{y,x}"), T("?X{x,y}"));
  EXPECT_EQ(T("x[[x/v]]"), Term::lsub(x, "x", v));
  EXPECT_EQ(T("\\x.x y"), Term::lam("x", Term::app(x, y)));
}

TEST(PrintTerm, Examples) {
  EXPECT_EQ(P(Term::app(Term::lam("x", Term::var("x")), Term::var("y"))), "(\\x.x) y");
  EXPECT_EQ(P(T("(z y x)[y/x x][x/v]")), "(z y x)[y/x x][x/v]");
  EXPECT_EQ(P(Term::lsub(Term::var("x"), "x", Term::var("v"))), "x[[x/v]]");
  EXPECT_EQ(P(T("x (y z)")), "x (y z)");
  EXPECT_EQ(P(T("(\\x.x)[y/z]")), "(\\x.x)[y/z]");
}

TEST(ParseTerm, Errors) {
  for (const char* bad : {"", "(x", "\\x", "\\.x", "x[y/z", "x)", "?X{x", "x[[y/z]"}) {
    EXPECT_THROW(parse_term(bad), ParseError) << bad;
  }
  try {
    parse_term("x y )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span.start, 4u);
  }
}

TEST(Types, ParseAndPrint) {
  EXPECT_EQ(Ty("A&B->C"), Type::arrow(Type::inter(Type::atom("A"), Type::atom("B")), Type::atom("C")));
  EXPECT_EQ(Ty("A"), Type::atom("A"));
  EXPECT_EQ(print_type(Type::arrow(Type::atom("A"), Type::arrow(Type::atom("B"), Type::atom("C")))),
            "A->B->C");
  EXPECT_EQ(print_type(Ty("(A->B)->C")), "(A->B)->C");
  EXPECT_EQ(print_type(Ty("(A->B)&C")), "(A->B)&C");
  EXPECT_THROW(parse_type("A->"), ParseError);
  EXPECT_THROW(parse_type("&A"), ParseError);
}

// print then parse is the identity on every enumerated term up to size 9.
TEST(RoundTrip, TermsUpToSize9) {
  Universe u;
  u.binder_names = {"x", "y", "z", "a", "b", "c"};
  Enumerator e(u);
  std::size_t n = 0;
  e.for_each_up_to(9, [&](const Term& t) {
    ++n;
    EXPECT_EQ(parse_term(P(t)), t) << P(t);
    return true;
  });
  EXPECT_GT(n, 100000u);
}

TEST(RoundTrip, MetaAndLabelled) {
  for (const char* s : {"?X{x}[x/?Y{}]", "(\\a.?X{a,b}) ?Y{b}", "(x y)[[x/\\z.z]][y/w]",
                        "x[[x/y]][[y/z]]", "\\x.x[[x/(\\w.w) a]]"}) {
    EXPECT_EQ(P(T(s)), s);
  }
}

TEST(Json, TraceSchema) {
  Step s{Rule::Var, {0}, T("x[x/y]"), T("y")};
  Json j = trace_to_json(T("(x[x/y]) z"), {s});
  EXPECT_EQ(j.dump(), R"({"root":"x[x/y] z","steps":[{"rule":"Var","position":[0],"to":"y"}],"status":"ok"})");
}

TEST(Json, DerivationRoundTrip) {
  TypeDerivation ax{TypeRule::Ax, {{"x", Ty("A")}}, T("x"), Ty("A"), {}};
  TypeDerivation abs{TypeRule::Abs, {}, T("\\x.x"), Ty("A->A"), {ax}};
  Json j = derivation_to_json(abs);
  TypeDerivation back = derivation_from_json(j);
  EXPECT_EQ(derivation_to_json(back), j);
  EXPECT_TRUE(check_derivation(back).ok);
}

TEST(Json, DerivationRejectsDuplicateBinding) {
  Json j = Json::parse(R"({"rule":"ax","env":[["x","A"],["x","B"]],"term":"x","type":"A"})");
  EXPECT_THROW(derivation_from_json(j), IllFormedInput);
  Json k = Json::parse(R"({"rule":"nope","env":[],"term":"x","type":"A"})");
  EXPECT_THROW(derivation_from_json(k), IllFormedInput);
}
