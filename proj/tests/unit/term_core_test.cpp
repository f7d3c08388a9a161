#include <gtest/gtest.h>

#include "lexkit/enumerate.hpp"
#include "lexkit/errors.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(T("\\x.y")), (NameSet{"y"}));
  EXPECT_EQ(free_vars(T("(z y x)[y/x x]")), (NameSet{"x", "z"}));
  EXPECT_EQ(free_vars(T("?X{x,y}")), (NameSet{"x", "y"}));
  EXPECT_EQ(free_vars(T("(x y)[[x/z]]")), (NameSet{"y", "z"}));
}

TEST(BoundVars, Examples) {
  EXPECT_TRUE(bound_vars(T("x")).empty());
  EXPECT_EQ(bound_vars(T("\\x.x")), (NameSet{"x"}));
  EXPECT_EQ(bound_vars(T("(\\x.x)[y/z]")), (NameSet{"x", "y"}));
}

TEST(Predicates, Sorts) {
  EXPECT_TRUE(is_term(T("(\\x.x)[y/z]")));
  EXPECT_FALSE(is_term(T("?X{x}")));
  EXPECT_TRUE(is_metaterm(T("?X{x}[x/y]")));
  EXPECT_FALSE(is_metaterm(T("x[[x/y]]")));
  EXPECT_TRUE(is_lambda_term(T("\\x.x y")));
  EXPECT_FALSE(is_lambda_term(T("x[x/y]")));
}

TEST(Alpha, Examples) {
  EXPECT_TRUE(alpha_eq(T("(\\y.x)[x/y]"), T("(\\z.w)[w/y]")));
  EXPECT_TRUE(alpha_eq(T("\\x.x"), T("\\y.y")));
  EXPECT_FALSE(alpha_eq(T("\\x.\\y.x"), T("\\x.\\y.y")));
  EXPECT_FALSE(alpha_eq(T("\\x.y"), T("\\x.z")));
  EXPECT_TRUE(alpha_eq(T("?X{x}[x/y]"), T("?X{z}[z/y]")));
}

TEST(Subst, Examples) {
  Term r = subst(T("\\y.x"), "x", T("y"));
  EXPECT_TRUE(alpha_eq(r, T("\\z.y")));
  EXPECT_NE(r.name(), "y");
  EXPECT_EQ(subst(T("y"), "x", T("v")), T("y"));
  EXPECT_EQ(subst(T("?X{x,y}"), "x", T("v")), T("?X{x,y}[x/v]"));
  EXPECT_EQ(subst(T("?X{y}"), "x", T("v")), T("?X{y}"));
  EXPECT_THROW(subst(T("x[[x/y]]"), "x", T("v")), IllFormedInput);
}

TEST(Canonical, CommutationOfIndependentSubstitutions) {
  EXPECT_EQ(E(T("x[y/a][z/b]")), E(T("x[z/b][y/a]")));
  EXPECT_NE(canonical_key(T("x[y/a][z/b]"), EqMode::Alpha),
            canonical_key(T("x[z/b][y/a]"), EqMode::Alpha));
  EXPECT_EQ(canonical_key(T("x"), EqMode::Alpha).bytes.empty(), false);
  EXPECT_EQ(alpha_key(T("x")), alpha_key(T("x")));
}

TEST(Canonical, EClassExamples) {
  EXPECT_EQ(e_class(T("x[y/a][z/b]"), EqMode::E).size(), 2u);
  // The outer body y is free, so the inner binder is renamed off it and the swap is licensed.
  EXPECT_EQ(e_class(T("x[y/a][z/y]"), EqMode::E).size(), 2u);
  // The outer binder occurs in the inner body: no swap.
  EXPECT_EQ(e_class(T("x[y/z][z/a]"), EqMode::E).size(), 1u);
  EXPECT_EQ(e_class(T("\\x.x"), EqMode::E).size(), 1u);
  // Three pairwise independent substitutions: all 3! orders.
  EXPECT_EQ(e_class(T("w[x1/a][x2/b][x3/c]"), EqMode::E).size(), 6u);
}

TEST(Canonical, LabelledCommutationOnlyInEU) {
  Term t = T("x[y/a][[z/b]]");
  EXPECT_EQ(e_class(t, EqMode::E).size(), 1u);
  EXPECT_EQ(e_class(t, EqMode::EU).size(), 2u);
  EXPECT_EQ(canonical_key(t, EqMode::EU), canonical_key(T("x[[z/b]][y/a]"), EqMode::EU));
}

TEST(Canonical, SwapRoot) {
  EXPECT_EQ(swap_root(T("x[y/a][z/b]"), EqMode::E), T("x[z/b][y/a]"));
  EXPECT_FALSE(swap_root(T("x[y/z][z/a]"), EqMode::E));
  Term renamed = swap_root(T("y[y/a][z/y]"), EqMode::E);
  ASSERT_TRUE(renamed);
  EXPECT_TRUE(alpha_eq(renamed, T("w[z/y][w/a]")));
}

TEST(Positions, SubtermAndReplace) {
  Term t = T("(\\x.x y)[y/z]");
  EXPECT_EQ(subterm_at(t, {0, 0, 1}), T("y"));
  EXPECT_EQ(replace_at(t, {1}, T("w")), T("(\\x.x y)[y/w]"));
  EXPECT_TRUE(valid_position(t, {0, 0}));
  EXPECT_FALSE(valid_position(t, {0, 1}));
}

namespace {

std::vector<Term> small_terms() {
  Universe u;
  u.binder_names = {"x", "y", "z", "a", "b"};
  return Enumerator(u).up_to(5);
}
}  // namespace

// Meta-substitution never captures: the free names of v survive free.
TEST(SubstProperty, NoCapture) {
  auto terms = small_terms();
  const Term vs[] = {T("x"), T("y z"), T("\\x.y")};
  for (const Term& t : terms)
    for (const Term& v : vs)
      for (const Name x : {"x", "y"}) {
        Term r = subst(t, x, v);
        NameSet expect = free_vars(t);
        if (expect.erase(x))
          for (const Name& n : free_vars(v)) expect.insert(n);
        EXPECT_EQ(free_vars(r), expect) << P(t) << " {" << x << ":=" << P(v) << "}";
      }
}

// Primes every binder.
static Term prime_binders(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return t;
    case Kind::App:
      return Term::app(prime_binders(t.fun()), prime_binders(t.arg()));
    case Kind::Lam:
      return Term::lam(t.name() + "'", rename_free(prime_binders(t.body()), t.name(), t.name() + "'"));
    case Kind::ESub:
    case Kind::LSub: {
      Term b = rename_free(prime_binders(t.body()), t.name(), t.name() + "'");
      Term a = prime_binders(t.arg());
      return t.is(Kind::ESub) ? Term::esub(b, t.name() + "'", a) : Term::lsub(b, t.name() + "'", a);
    }
  }
  return t;
}

// Renaming bound names leaves every key unchanged.
TEST(CanonicalProperty, AlphaInvariance) {
  for (const Term& t : small_terms()) {
    Term renamed = prime_binders(t);
    EXPECT_TRUE(alpha_eq(t, renamed)) << P(t) << " vs " << P(renamed);
    EXPECT_EQ(alpha_key(t), alpha_key(renamed));
    EXPECT_EQ(E(t), E(renamed)) << P(t);
  }
}

// Keys agree exactly when the terms are related by some chain of swaps.
TEST(CanonicalProperty, ClassMembersShareKey) {
  for (const Term& t : small_terms()) {
    auto cls = e_class(t, EqMode::E);
    for (const Term& m : cls) EXPECT_EQ(E(m), E(t)) << P(t) << " ~ " << P(m);
    for (const Term& s : adjacent_swaps(t, EqMode::E)) EXPECT_EQ(E(s), E(t));
  }
}
