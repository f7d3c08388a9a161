#include <gtest/gtest.h>

#include <algorithm>

#include "lexkit/composition.hpp"
#include "lexkit/engine.hpp"
#include "lexkit/enumerate.hpp"
#include "lexkit/errors.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

namespace {

bool has_reduct(const Term& t, Rule r, const Position& p, const Term& to, const RuleSet& rs) {
  auto steps = reducts(t, rs);
  return std::any_of(steps.begin(), steps.end(), [&](const Step& s) {
    return s.rule == r && s.position == p && same_class(s.after, to);
  });
}

std::vector<Rule> rules_of(const std::vector<Step>& tr) {
  std::vector<Rule> out;
  for (const Step& s : tr) out.push_back(s.rule);
  return out;
}

std::vector<Term> terms_up_to(std::size_t n) {
  Universe u;
  u.binder_names = {"x", "y", "z", "a", "b"};
  return Enumerator(u).up_to(n);
}

// Normal forms of lex: x t1 ... tn and \x.t with normal subterms, no substitution.
bool nf_grammar(const Term& t) {
  if (t.is(Kind::Lam)) return nf_grammar(t.body());
  auto [head, args] = unspine(t);
  if (!head.is(Kind::Var)) return false;
  return std::all_of(args.begin(), args.end(), nf_grammar);
}

}  // namespace

TEST(Reducts, Examples) {
  RuleSet lex = lambda_ex();
  EXPECT_TRUE(has_reduct(T("(\\x.x y) z"), Rule::B, {}, T("(x y)[x/z]"), lex));
  EXPECT_TRUE(has_reduct(T("x[x/u]"), Rule::Var, {}, T("u"), lex));
  EXPECT_TRUE(has_reduct(T("y[x/u]"), Rule::Gc, {}, T("y"), lex));
  EXPECT_TRUE(has_reduct(T("(y x)[x/u]"), Rule::App, {}, T("y[x/u] x[x/u]"), lex));
  EXPECT_TRUE(has_reduct(T("(\\y.x)[x/u]"), Rule::Lamb, {}, T("\\y.x[x/u]"), lex));
  EXPECT_TRUE(has_reduct(T("x[x/y][y/v]"), Rule::Comp, {}, T("x[y/v][x/y[y/v]]"), lex));
  EXPECT_FALSE(has_reduct(T("x[x/y][y/v]"), Rule::Comp, {}, T("x[y/v][x/y[y/v]]"), lambda_x()));
  EXPECT_TRUE(has_reduct(T("(\\x.x) y"), Rule::Beta, {}, T("y"), beta_rules()));
  EXPECT_TRUE(reducts(T("\\x.x y"), lex).empty());
}

TEST(Reducts, LambdaRuleAvoidsCapture) {
  auto steps = reducts(T("(\\y.x)[x/y]"), lambda_ex());
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_TRUE(same_class(steps[0].after, T("\\z.x[x/y]")));
}

TEST(Explore, Examples) {
  ReductionGraph omega = explore(T("(\\x.x x)(\\x.x x)"), beta_rules());
  EXPECT_TRUE(omega.cyclic);
  EXPECT_EQ(omega.nodes.size(), 1u);
  ReductionGraph id = explore(T("\\x.x"), lambda_ex());
  EXPECT_EQ(id.status, GraphStatus::Complete);
  EXPECT_EQ(id.nodes.size(), 1u);
  EXPECT_TRUE(id.edges[id.root].empty());
  ReductionGraph v = explore(T("x[x/u]"), lambda_ex());
  EXPECT_EQ(v.status, GraphStatus::Complete);
  EXPECT_EQ(v.nodes.size(), 2u);
  EXPECT_FALSE(v.cyclic);
}

TEST(SnVerdict, Examples) {
  SnVerdict x = sn_verdict(T("x"), lambda_ex());
  EXPECT_EQ(x.verdict, Verdict::ProvedSN);
  EXPECT_EQ(x.eta, 0u);
  EXPECT_EQ(x.max_size, 1u);
  SnVerdict o = sn_verdict(T("(\\x.x x)(\\x.x x)"), beta_rules());
  EXPECT_EQ(o.verdict, Verdict::ProvedNotSN);
  EXPECT_FALSE(o.witness.empty());
  EXPECT_EQ(E(o.witness.back()), E(o.witness.front()));
  EXPECT_EQ(sn_verdict(T("(\\x.x x)(\\x.x x)"), lambda_ex()).verdict, Verdict::ProvedNotSN);
  EXPECT_EQ(sn_verdict(T("(\\x.x x)(\\x.x x)"), lambda_ex(), 3).verdict, Verdict::Unknown);
  SnVerdict id = sn_verdict(T("(\\x.x) y"), lambda_ex());
  EXPECT_EQ(id.verdict, Verdict::ProvedSN);
  EXPECT_EQ(id.eta, 2u);
}

TEST(SnOracle, AgreesWithGraphVerdict) {
  SnOracle oracle(lambda_ex());
  for (const Term& t : terms_up_to(6)) {
    SnVerdict a = oracle.verdict(t);
    SnVerdict b = sn_verdict(t, lambda_ex());
    if (a.verdict == Verdict::Unknown || b.verdict == Verdict::Unknown) continue;
    ASSERT_EQ(a.verdict, b.verdict) << P(t);
    if (a.sn()) {
      EXPECT_EQ(a.eta, b.eta) << P(t);
      EXPECT_EQ(a.max_size, b.max_size) << P(t);
    }
  }
}

TEST(Normalize, Examples) {
  NormalizeResult id = normalize(T("(\\x.x) y"), lambda_ex());
  EXPECT_EQ(id.result, T("y"));
  EXPECT_EQ(rules_of(id.trace), (std::vector<Rule>{Rule::B, Rule::Var}));
  NormalizeResult run = normalize(T("(z y x)[y/x x][x/v]"), lambda_ex(), kDefaultStepFuel,
                                  Policy::PerpetualStrategy);
  EXPECT_TRUE(run.complete);
  EXPECT_EQ(run.result, T("z (v v) v"));
  bool through = std::any_of(run.trace.begin(), run.trace.end(),
                             [](const Step& s) { return same_class(s.after, T("(z y v)[y/v v]")); });
  EXPECT_TRUE(through);
  EXPECT_TRUE(check_trace(T("(z y x)[y/x x][x/v]"), run.trace, lambda_ex()).ok);
  NormalizeResult x = normalize(T("x"), beta_rules());
  EXPECT_EQ(x.result, T("x"));
  EXPECT_TRUE(x.trace.empty());
  NormalizeResult loop = normalize(T("(\\x.x x)(\\x.x x)"), beta_rules(), 10);
  EXPECT_FALSE(loop.complete);
  EXPECT_EQ(loop.trace.size(), 10u);
}

TEST(CheckTrace, RejectsForgedStep) {
  Step s{Rule::Var, {}, T("x[x/u]"), T("w")};
  EXPECT_FALSE(check_step(T("x[x/u]"), s, lambda_ex()).ok);
  Step ok{Rule::Var, {}, T("x[x/u]"), T("u")};
  EXPECT_TRUE(check_step(T("x[x/u]"), ok, lambda_ex()).ok);
  Step wrong_start{Rule::Var, {}, T("x[x/v]"), T("v")};
  EXPECT_FALSE(check_step(T("x[x/u]"), wrong_start, lambda_ex()).ok);
}

TEST(Composition, Examples) {
  EXPECT_EQ(rules_of(simulate_beta(T("(\\x.x) y"), T("y"))), (std::vector<Rule>{Rule::B, Rule::Var}));
  EXPECT_EQ(rules_of(simulate_beta(T("(\\x.z) y"), T("z"))), (std::vector<Rule>{Rule::B, Rule::Gc}));
  EXPECT_THROW(simulate_beta(T("x"), T("x")), NotAReduct);
  EXPECT_TRUE(full_composition_trace(T("?X{x}"), "x", T("u")).empty());
  auto gc = full_composition_trace(T("y"), "x", T("u"));
  EXPECT_EQ(rules_of(gc), (std::vector<Rule>{Rule::Gc}));
  auto tr = full_composition_trace_at(T("(z y x)[y/x x][x/v]"), {});
  ASSERT_FALSE(tr.empty());
  EXPECT_TRUE(same_class(tr.back().after, T("(z y v)[y/v v]")));
  EXPECT_TRUE(check_trace(T("(z y x)[y/x x][x/v]"), tr, lambda_ex()).ok);
}

// Full composition: t[x/u] reaches t{x:=u} by substitution steps only.
TEST(CompositionProperty, FullComposition) {
  auto terms = terms_up_to(5);
  const Term us[] = {T("y"), T("\\z.z"), T("y[y/z]")};
  for (const Term& t : terms)
    for (const Term& u : us) {
      auto tr = full_composition_trace(t, "x", u);
      Term start = Term::esub(t, "x", u);
      ASSERT_TRUE(check_trace(start, tr, lambda_ex()).ok) << P(start);
      Term end = tr.empty() ? start : tr.back().after;
      EXPECT_EQ(E(end), E(subst(t, "x", u))) << P(start);
      for (const Step& s : tr) EXPECT_TRUE(is_ex_rule(s.rule));
    }
}

TEST(EngineProperty, FvMonotone) {
  for (RuleSetName rn : {RuleSetName::Beta, RuleSetName::LambdaX, RuleSetName::LambdaEx,
                         RuleSetName::LambdaXDirector})
    for (const Term& t : terms_up_to(6))
      for (const Step& s : reducts(t, make_ruleset(rn))) {
        NameSet before = free_vars(t), after = free_vars(s.after);
        EXPECT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end()))
            << P(t) << " -> " << P(s.after);
      }
}

TEST(EngineProperty, NormalFormCharacterisation) {
  for (const Term& t : terms_up_to(7))
    EXPECT_EQ(reducts(t, lambda_ex()).empty(), nf_grammar(t)) << P(t);
}

TEST(EngineProperty, LambdaXIncludedInLambdaEx) {
  for (const Term& t : terms_up_to(6)) {
    auto ex = reducts_keyed(t, lambda_ex());
    for (const Reduct& r : reducts_keyed(t, lambda_x())) {
      bool found = std::any_of(ex.begin(), ex.end(), [&](const Reduct& q) {
        return q.step.rule == r.step.rule && q.key == canonical_key(r.step.after, EqMode::E);
      });
      EXPECT_TRUE(found) << P(t) << " -> " << P(r.step.after);
    }
  }
}

TEST(EngineProperty, DirectorCompositionSimulated) {
  std::size_t seen = 0;
  for (const Term& t : terms_up_to(7))
    for (const Step& s : reducts(t, lambda_x_director())) {
      if (s.rule != Rule::DsComp) continue;
      ++seen;
      auto tr = simulate_director_step(s);
      ASSERT_FALSE(tr.empty());
      EXPECT_TRUE(check_trace(s.before, tr, lambda_ex()).ok) << P(s.before);
      EXPECT_EQ(E(tr.back().after), E(s.after)) << P(s.before);
    }
  EXPECT_GT(seen, 0u);
}

TEST(EngineProperty, EtaDecreasesAlongSteps) {
  SnOracle oracle(lambda_ex());
  for (const Term& t : terms_up_to(6)) {
    SnVerdict v = oracle.verdict(t);
    if (!v.sn()) continue;
    for (const Step& s : reducts(t, lambda_ex())) {
      SnVerdict w = oracle.verdict(s.after);
      ASSERT_TRUE(w.sn()) << P(s.after);
      EXPECT_GT(v.eta, w.eta) << P(t) << " -> " << P(s.after);
    }
  }
}

// t -> t' implies t{x:=u} ->* t'{x:=u} and u{x:=t} ->* u{x:=t'}.
TEST(EngineProperty, StabilityBySubstitution) {
  const Term us[] = {T("y"), T("\\z.z z"), T("x y")};
  for (const Term& t : terms_up_to(5))
    for (const Step& s : reducts(t, lambda_ex()))
      for (const Term& u : us) {
        Term a = subst(t, "y", u), b = subst(s.after, "y", u);
        EXPECT_EQ(reach(a, E(b), lambda_ex()).status, ReachStatus::Found) << P(a) << " ->* " << P(b);
        Term c = subst(u, "x", t), d = subst(u, "x", s.after);
        EXPECT_EQ(reach(c, E(d), lambda_ex()).status, ReachStatus::Found) << P(c) << " ->* " << P(d);
      }
}
