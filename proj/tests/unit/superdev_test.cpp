#include <gtest/gtest.h>

#include "lexkit/enumerate.hpp"
#include "lexkit/superdev.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

namespace {
std::vector<Term> metaterms(std::size_t n) {
  Universe u;
  u.free_names = {"x", "y"};
  u.binder_names = {"x", "y", "a", "b"};
  u.max_metas = 1;
  u.max_decoration = 1;
  return Enumerator(u).up_to(n);
}
}  // namespace

TEST(Superdev, Examples) {
  EXPECT_EQ(superdev(T("(\\x.x) y")), T("y"));
  EXPECT_EQ(superdev(T("?X{x}[x/(\\z.z) u]")), T("?X{x}[x/u]"));
  EXPECT_EQ(superdev(T("x")), T("x"));
  EXPECT_EQ(superdev(T("(\\x.x y)[y/z]")), T("\\x.x z"));
  // A redex created by an inner contraction is contracted too.
  EXPECT_EQ(superdev(T("((\\x.x) (\\y.y)) z")), T("z"));
}

TEST(ZCheck, Examples) {
  auto r = z_check(T("x[x/(\\y.y) z]"));
  ASSERT_FALSE(r.empty());
  for (const auto& z : r) EXPECT_EQ(z.status, ZStatus::Verified) << P(z.step.after);
  EXPECT_TRUE(z_check(T("\\x.x ?X{x}")).empty());
  for (const auto& z : z_check(T("(r s)[x/v]"))) EXPECT_EQ(z.status, ZStatus::Verified);
}

TEST(Confluence, Examples) {
  EXPECT_EQ(confluence_check(T("x[x/y][y/z]"), lambda_ex()).status, ConfluenceStatus::Confluent);
  EXPECT_EQ(confluence_check(T("\\x.x"), lambda_ex()).status, ConfluenceStatus::Confluent);
  EXPECT_EQ(confluence_check(T("((\\x.?X{x,y}) u)[y/v]"), lambda_ex()).status,
            ConfluenceStatus::Confluent);
}

TEST(Confluence, LambdaXDemo) {
  NonConfluenceDemo d = lambda_x_nonconfluence_demo();
  EXPECT_EQ(d.under_x.status, JoinStatus::NotJoinable);
  EXPECT_TRUE(d.under_x.exhaustive);
  EXPECT_EQ(d.under_lex.status, JoinStatus::Joinable);
  EXPECT_EQ(d.ground_under_x.status, JoinStatus::Joinable);
  EXPECT_EQ(confluence_check(d.source, lambda_x(), {3, 8}).status,
            ConfluenceStatus::CounterexamplePeak);
}

TEST(Confluence, UnjoinedWithinBoundsIsFuelNotCounterexample) {
  Term t = T("(?X{a} ?Y{a})[a/b][b/c]");
  ConfluenceResult six = confluence_check(t, lambda_ex(), {3, 6});
  EXPECT_EQ(six.status, ConfluenceStatus::FuelExhausted);
  EXPECT_TRUE(six.left);
  EXPECT_EQ(confluence_check(t, lambda_ex(), {3, 7}).status, ConfluenceStatus::Confluent);
}

// t ->* superdev(t), and superdev respects the equations.
TEST(SuperdevProperty, ReachableAndStable) {
  for (const Term& t : metaterms(6)) {
    Term d = superdev(t);
    EXPECT_EQ(reach(t, E(d), lambda_ex()).status, ReachStatus::Found) << P(t);
    for (const Term& m : e_class(t, EqMode::E)) EXPECT_EQ(E(superdev(m)), E(d)) << P(t);
  }
}

TEST(SuperdevProperty, ApplicationAndSubstitution) {
  auto ts = metaterms(4);
  for (const Term& a : ts)
    for (const Term& b : ts) {
      Term ab = Term::app(superdev(a), superdev(b));
      EXPECT_EQ(reach(ab, E(superdev(Term::app(a, b))), lambda_ex()).status, ReachStatus::Found)
          << P(a) << " / " << P(b);
      Term s = subst(superdev(a), "x", superdev(b));
      EXPECT_EQ(reach(s, E(superdev(subst(a, "x", b))), lambda_ex()).status, ReachStatus::Found)
          << P(a) << " / " << P(b);
    }
}

TEST(ZProperty, NeverFails) {
  for (const Term& t : metaterms(6))
    for (const auto& z : z_check(t)) {
      EXPECT_NE(z.status, ZStatus::FailedLeg1) << P(t);
      EXPECT_NE(z.status, ZStatus::FailedLeg2) << P(t);
    }
}
