#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "lexkit/engine.hpp"
#include "lexkit/enumerate.hpp"
#include "lexkit/errors.hpp"
#include "lexkit/json_io.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(Ty("(A&B)&C")), (std::vector<Type>{Ty("A"), Ty("B"), Ty("C")}));
  EXPECT_EQ(flatten(Ty("A->B&C")), (std::vector<Type>{Ty("A->(B&C)")}));
  EXPECT_EQ(flatten(Ty("A")), (std::vector<Type>{Ty("A")}));
}

TEST(Subtype, Examples) {
  EXPECT_TRUE(subtype(Ty("A&B"), Ty("A")));
  EXPECT_TRUE(subtype(Ty("A"), Ty("A")));
  EXPECT_TRUE(subtype(Ty("A&B&C"), Ty("B&C")));
  EXPECT_FALSE(subtype(Ty("A"), Ty("A&B")));
  EXPECT_FALSE(subtype(Ty("A->A&B"), Ty("A->A")));
}

TEST(Subtype, Preorder) {
  std::vector<Type> ts;
  for (const char* s : {"A", "B", "A&B", "B&A", "A&B&C", "A->B", "(A->B)&C", "C&(A->B)&A"})
    ts.push_back(Ty(s));
  for (const Type& a : ts) {
    EXPECT_TRUE(subtype(a, a));
    for (const Type& b : ts)
      for (const Type& c : ts)
        if (subtype(a, b) && subtype(b, c)) EXPECT_TRUE(subtype(a, c));
  }
}

TEST(CheckDerivation, Examples) {
  TypeDerivation ax{TypeRule::Ax, {{"x", Ty("A")}}, T("x"), Ty("A"), {}};
  EXPECT_TRUE(check_derivation(ax).ok);
  TypeDerivation abs{TypeRule::Abs, {}, T("\\x.x"), Ty("A->A"), {ax}};
  EXPECT_TRUE(check_derivation(abs).ok);
  TypeDerivation axab{TypeRule::Ax, {{"x", Ty("A&B")}}, T("x"), Ty("A&B"), {}};
  TypeDerivation bad{TypeRule::InterE, {{"x", Ty("A&B")}}, T("x"), Ty("C"), {axab}};
  DerivationCheck r = check_derivation(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.diagnostics.empty());
  TypeDerivation good{TypeRule::InterE, {{"x", Ty("A&B")}}, T("x"), Ty("B"), {axab}};
  EXPECT_TRUE(check_derivation(good).ok);
  TypeDerivation unbound{TypeRule::Ax, {}, T("x"), Ty("A"), {}};
  EXPECT_FALSE(check_derivation(unbound).ok);
}

TEST(JudgmentSearch, Examples) {
  JudgmentResult a = check_judgment_upto_subtype({{"x", Ty("A&B")}}, T("x"), Ty("A"));
  ASSERT_TRUE(a.derivable);
  EXPECT_TRUE(check_derivation(a.derivation).ok);
  JudgmentResult id = check_judgment_upto_subtype({}, T("\\x.x"), Ty("(A->A)&(B->B)"));
  ASSERT_TRUE(id.derivable);
  EXPECT_EQ(id.derivation.rule, TypeRule::InterI);
  EXPECT_TRUE(check_derivation(id.derivation).ok);
  EXPECT_FALSE(check_judgment_upto_subtype({}, T("\\x.x x"), Ty("A")).derivable);
  EXPECT_FALSE(check_judgment_upto_subtype({}, T("(\\x.x x)(\\x.x x)"), Ty("A")).derivable);
}

TEST(InferSimple, Examples) {
  EXPECT_EQ(print_type(infer_simple({}, T("\\x.x"))), "a->a");
  EXPECT_EQ(print_type(infer_simple({}, T("x[x/\\y.y]"))), "a->a");
  EXPECT_EQ(print_type(infer_simple({}, T("\\x.\\y.x"))), "a->b->a");
  EXPECT_THROW(infer_simple({}, T("\\x.x x")), TypeError);
  EXPECT_EQ(infer_simple({{"f", Ty("A->B")}}, T("\\x.f x")), Ty("A->B"));
}

TEST(Revb, Examples) {
  EXPECT_EQ(revb(T("x[x/y]")), T("(\\x.x) y"));
  EXPECT_EQ(revb(T("\\x.x y")), T("\\x.x y"));
  EXPECT_EQ(revb(T("(x z)[x/y][z/w]")), T("(\\z.(\\x.x z) y) w"));
}

namespace {
std::vector<Term> small_terms(std::size_t n) {
  Universe u;
  u.binder_names = {"x", "y", "z", "a"};
  return Enumerator(u).up_to(n);
}
}  // namespace

TEST(TypesProperty, RevbCommutesWithSubstitution) {
  auto ts = small_terms(5);
  const Term us[] = {T("y"), T("\\z.z"), T("y[y/z]")};
  for (const Term& t : ts)
    for (const Term& u : us)
      EXPECT_TRUE(alpha_eq(subst(revb(t), "x", revb(u)), revb(subst(t, "x", u)))) << P(t);
}

TEST(TypesProperty, TypabilityTransportAndSn) {
  SnOracle oracle(lambda_ex());
  for (const Term& t : small_terms(6)) {
    bool typed = true, typed_revb = true;
    try {
      infer_simple({}, t);
    } catch (const TypeError&) {
      typed = false;
    }
    try {
      infer_simple({}, revb(t));
    } catch (const TypeError&) {
      typed_revb = false;
    }
    EXPECT_EQ(typed, typed_revb) << P(t);
    if (typed) EXPECT_TRUE(oracle.verdict(t).sn()) << P(t);
  }
}

TEST(Golden, DerivationsCheckAndSubjectsAreSn) {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LEXKIT_GOLDEN_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    TypeDerivation d = derivation_from_json(Json::parse(in));
    EXPECT_TRUE(check_derivation(d).ok) << entry.path();
    EXPECT_TRUE(sn_verdict(d.term, lambda_ex()).sn()) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 10u);
}
