#include <gtest/gtest.h>

#include <algorithm>

#include "lexkit/errors.hpp"
#include "lexkit/labelled.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

namespace {

const char* kV = "w[w/(x x)[y/x]]";

std::string with_v(const std::string& pattern) {
  std::string s = pattern;
  for (std::size_t at; (at = s.find('V')) != std::string::npos;) s.replace(at, 1, std::string("(") + kV + ")");
  return s;
}

// Small labelled terms over S={a}: every subterm of a few pure terms wrapped in a label.
std::vector<Term> labelled_corpus() {
  std::vector<Term> out;
  for (const char* body : {"x", "x x", "\\y.x y", "(\\y.y) x", "x[x/y]", "(x y)[y/z]", "\\z.x (x z)"})
    for (const char* u : {"a", "(\\w.w) a", "a a"})
      out.push_back(T(std::string("(") + body + ")[[x/" + u + "]]"));
  out.push_back(T("((\\y.y x)[[x/a]]) z"));
  out.push_back(T("(x[[x/a]])[z/w]"));
  out.push_back(T("(x z)[[x/a]][[z/a]]"));
  return out;
}

}  // namespace

TEST(MakeLabelled, Examples) {
  SnOracle lex(lambda_ex());
  LabelledTerm l = make_labelled(T("x"), "x", T("y"), {}, lex);
  EXPECT_EQ(l.term, T("x[[x/y]]"));
  EXPECT_EQ(l.ctx.S, NameSet{"y"});
  EXPECT_THROW(make_labelled(T("s"), "x", T("(\\x.x x)(\\x.x x)"), {}, lex), NotSN);
  LabelledTerm r = make_labelled(T("\\y.x y"), "x", T("y"), {T("z")}, lex);
  EXPECT_TRUE(alpha_eq(unlabel(r.term), T("(\\y.x y)[x/y] z")));
  NameSet bv = bound_vars(r.term);
  for (const Name& s : r.ctx.S) EXPECT_EQ(bv.count(s), 0u) << s;
  EXPECT_TRUE(is_labelled(r.term, r.ctx, lex));
  EXPECT_FALSE(is_labelled(T("(\\a.x)[[x/a]]"), LabelContext{{"a"}}, lex));
}

TEST(Measures, Arity) {
  EXPECT_EQ(ar(T(kV), "x"), 2u);
  EXPECT_EQ(ar(T("z"), "x"), 0u);
  EXPECT_EQ(ar(T("x"), "x"), 0u);
  EXPECT_EQ(ar(T("(x y)[y/z]"), "x"), ar(T("x y"), "x"));
}

TEST(Measures, Depth) {
  EXPECT_EQ(dep(T(with_v("V[y/V][[x/x1]]"))), 5u);
  EXPECT_EQ(dep(T(kV)), 0u);
  EXPECT_EQ(dep(T("x")), 0u);
}

TEST(Measures, KAndPhi) {
  SnOracle lex(lambda_ex());
  EXPECT_EQ(k(T("x"), lex), 1u);
  EXPECT_EQ(k(T("x y"), lex), 3u);
  EXPECT_EQ(phi(T("x"), lex), 2u);
  EXPECT_EQ(k(T("x[[y/z]]"), lex), 2u);
  EXPECT_GE(phi(T("(\\w.w) a"), lex), 2u);
  EXPECT_THROW(phi(T("(\\x.x x)(\\x.x x)"), lex), NotSN);
}

TEST(Xc, Examples) {
  EXPECT_EQ(xc(T("x[[x/v]]")), T("v"));
  EXPECT_EQ(xc(T("(x[[x/v]])[y/z[[z/w]]]")), T("v[y/w]"));
  EXPECT_EQ(xc(T("(\\x.x y)[y/z]")), T("(\\x.x y)[y/z]"));
}

TEST(Unlabel, Examples) {
  EXPECT_EQ(unlabel(T("x[[x/v]]")), T("x[x/v]"));
  EXPECT_EQ(unlabel(T("\\x.x y")), T("\\x.x y"));
  for (const Term& t : labelled_corpus()) EXPECT_EQ(free_vars(t), free_vars(unlabel(t))) << P(t);
}

TEST(SplitStep, Examples) {
  Step uvar{Rule::UVar, {}, T("x[[x/v]]"), T("v")};
  EXPECT_EQ(split_step(uvar), StepSide::Internal);
  Step b{Rule::B, {}, T("(\\x.x) y"), T("x[x/y]")};
  EXPECT_EQ(split_step(b), StepSide::External);
  Step inside{Rule::B, {1}, T("z[[z/(\\x.x) a]]"), T("z[[z/x[x/a]]]")};
  EXPECT_EQ(split_step(inside), StepSide::Internal);
}

// Internal steps decrease (dep, k); uex steps keep xc; external steps project to >= 1 lex step.
TEST(LabelledProperty, ProjectionsAndDecrease) {
  SnOracle lex(lambda_ex());
  LabelContext ctx{{"a"}};
  RuleSet luex = lambda_uex(ctx.S);
  std::size_t internal = 0, external = 0;
  for (const Term& t : labelled_corpus()) {
    ASSERT_TRUE(is_labelled(t, ctx, lex)) << P(t);
    for (const Step& s : reducts(t, luex)) {
      Term a = xc(t), b = xc(s.after);
      if (split_step(s) == StepSide::Internal) {
        ++internal;
        auto before = std::make_pair(dep(t), k(t, lex));
        auto after = std::make_pair(dep(s.after), k(s.after, lex));
        EXPECT_LT(after, before) << P(t) << " -> " << P(s.after);
        if (is_labelled_rule(s.rule)) EXPECT_EQ(E(a), E(b)) << P(t);
        else EXPECT_EQ(reach(a, E(b), lambda_ex()).status, ReachStatus::Found) << P(t);
      } else {
        ++external;
        ReachOptions once;
        once.min_steps = 1;
        EXPECT_EQ(reach(a, E(b), lambda_ex(), once).status, ReachStatus::Found) << P(t);
      }
    }
  }
  EXPECT_GT(internal, 20u);
  EXPECT_GT(external, 5u);
}

TEST(LabelledProperty, UComp) {
  SnOracle lex(lambda_ex());
  Term t = T("(x y)[y/x][[x/a]]");
  auto steps = reducts(t, lambda_uex({"a"}));
  auto it = std::find_if(steps.begin(), steps.end(), [](const Step& s) { return s.rule == Rule::UComp; });
  ASSERT_NE(it, steps.end());
  EXPECT_GT(dep(t), dep(it->after));
  EXPECT_EQ(ar(t, "z"), ar(it->after, "z"));
}

TEST(LiftStep, UnlabelSimulation) {
  LabelContext ctx{{"a"}};
  for (const Term& t : labelled_corpus())
    for (const Step& s : reducts(unlabel(t), lambda_ex())) {
      Step lifted = lift_step(t, s, ctx);
      EXPECT_EQ(E(unlabel(lifted.after)), E(s.after)) << P(t);
    }
}
