#include "lexkit/perpetual.hpp"

#include <algorithm>

#include "lexkit/composition.hpp"
#include "lexkit/errors.hpp"

namespace lexkit {

std::string clause_name(Clause c) {
  switch (c) {
    case Clause::PVar: return "p-var";
    case Clause::PAbs: return "p-abs";
    case Clause::PB: return "p-B";
    case Clause::PSubs1: return "p-subs1";
    case Clause::PSubs2: return "p-subs2";
  }
  return "?";
}

std::string run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::NormalForm: return "normal-form";
    case RunStatus::Unknown: return "unknown";
    case RunStatus::FuelExhausted: return "fuel";
  }
  return "?";
}

std::string isn_rule_name(IsnRule r) {
  switch (r) {
    case IsnRule::Var: return "var";
    case IsnRule::App: return "app";
    case IsnRule::Subs: return "subs";
    case IsnRule::Abs: return "abs";
  }
  return "?";
}

bool is_lex_normal(const Term& t) {
  if (t.has_esub() || t.has_lsub()) return false;
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return true;
    case Kind::Lam:
      return is_lex_normal(t.body());
    case Kind::App:
      return !t.fun().is(Kind::Lam) && is_lex_normal(t.fun()) && is_lex_normal(t.arg());
    default:
      return false;
  }
}

namespace {

// Position of argument i (0-based) in a spine with n arguments, relative to the spine root.
Position arg_position(Position base, std::size_t i, std::size_t n) {
  base.insert(base.end(), n - 1 - i, 0);
  base.push_back(1);
  return base;
}

Position head_position(Position base, std::size_t n) {
  base.insert(base.end(), n, 0);
  return base;
}

// Fills chain, position, oracle calls and returns the rewritten subterm, or an
// empty term on Unknown.
Term step_at(const Term& t, const Position& here, StrategyStep& s, SnOracle& oracle) {
  auto [head, args] = unspine(t);
  const std::size_t n = args.size();
  switch (head.kind()) {
    case Kind::Var: {
      for (std::size_t i = 0; i < n; ++i) {
        if (is_lex_normal(args[i])) continue;
        s.chain.push_back(Clause::PVar);
        Term r = step_at(args[i], arg_position(here, i, n), s, oracle);
        if (!r) return r;
        args[i] = std::move(r);
        return apply_spine(head, args);
      }
      break;
    }
    case Kind::Lam: {
      if (n == 0) {
        s.chain.push_back(Clause::PAbs);
        Position p = here;
        p.push_back(0);
        Term r = step_at(head.body(), p, s, oracle);
        if (!r) return r;
        return Term::lam(head.name(), std::move(r));
      }
      s.chain.push_back(Clause::PB);
      s.position = head_position(here, n - 1);
      Term redex = Term::esub(head.body(), head.name(), args[0]);
      return apply_spine(redex, std::vector<Term>(args.begin() + 1, args.end()));
    }
    case Kind::ESub: {
      SnVerdict v = oracle.verdict(head.arg());
      s.oracle_calls.push_back(OracleCall{head.arg(), v});
      if (v.verdict == Verdict::ProvedSN) {
        s.chain.push_back(Clause::PSubs1);
        s.position = head_position(here, n);
        return apply_spine(subst(head.body(), head.name(), head.arg()), args);
      }
      if (v.verdict == Verdict::ProvedNotSN) {
        s.chain.push_back(Clause::PSubs2);
        Position p = head_position(here, n);
        p.push_back(1);
        Term r = step_at(head.arg(), p, s, oracle);
        if (!r) return r;
        return apply_spine(Term::esub(head.body(), head.name(), std::move(r)), args);
      }
      s.status = StrategyStatus::Unknown;
      return Term();
    }
    default:
      break;
  }
  throw IllFormedInput("perpetual strategy expects a term");
}

}  // namespace

StrategyStep perpetual_step(const Term& t, SnOracle& oracle) {
  if (!is_term(t)) throw IllFormedInput("perpetual strategy expects a term");
  StrategyStep s;
  s.before = t;
  if (is_lex_normal(t)) {
    s.status = StrategyStatus::NormalForm;
    return s;
  }
  s.status = StrategyStatus::Stepped;
  Term r = step_at(t, {}, s, oracle);
  if (!r) {
    s.status = StrategyStatus::Unknown;
    return s;
  }
  s.result = std::move(r);
  return s;
}

std::vector<Step> expand_strategy_step(const StrategyStep& s) {
  if (s.status != StrategyStatus::Stepped) return {};
  if (s.base() == Clause::PB) {
    const Term& redex = subterm_at(s.before, s.position);
    Term contracted = Term::esub(redex.fun().body(), redex.fun().name(), redex.arg());
    return {Step{Rule::B, s.position, s.before, replace_at(s.before, s.position, contracted)}};
  }
  return full_composition_trace_at(s.before, s.position);
}

PerpetualTrace perpetual_trace(const Term& t, SnOracle& oracle, std::size_t max_steps) {
  PerpetualTrace out;
  Term cur = t;
  for (;;) {
    if (out.steps.size() >= max_steps) {
      out.status = RunStatus::FuelExhausted;
      break;
    }
    StrategyStep s = perpetual_step(cur, oracle);
    if (s.status == StrategyStatus::NormalForm) {
      out.status = RunStatus::NormalForm;
      break;
    }
    if (s.status == StrategyStatus::Unknown) {
      out.status = RunStatus::Unknown;
      out.steps.push_back(std::move(s));
      break;
    }
    cur = s.result;
    out.steps.push_back(std::move(s));
  }
  out.final_term = cur;
  return out;
}

namespace {

std::optional<Step> leftmost_step(const Term& t, const RuleSet& rs) {
  std::optional<Step> found;
  for_each_position(t, [&](const Position& p, const Term& sub) {
    if (found || sub.arity() == 0) return;
    for (Rule r : rs.rules) {
      if (auto res = apply_rule(r, sub, rs.reserved)) {
        found = Step{r, p, t, replace_at(t, p, *res)};
        return;
      }
    }
  });
  if (found) return found;
  // A redex may only be visible in another member of the class.
  std::vector<Step> all = reducts(t, rs);
  if (all.empty()) return std::nullopt;
  return *std::min_element(all.begin(), all.end(), [](const Step& a, const Step& b) {
    return position_less(a.position, b.position);
  });
}

}  // namespace

NormalizeResult normalize(const Term& t, const RuleSet& rs, std::size_t step_fuel, Policy policy) {
  NormalizeResult out;
  out.result = t;
  if (policy == Policy::PerpetualStrategy) {
    if (rs.name != RuleSetName::LambdaEx)
      throw IllFormedInput("the perpetual strategy is defined for lex only");
    SnOracle oracle(rs);
    while (true) {
      StrategyStep s = perpetual_step(out.result, oracle);
      if (s.status == StrategyStatus::NormalForm) return out;
      if (s.status == StrategyStatus::Unknown)
        throw OracleUnknown("strategy needs an undecided normalisation verdict");
      for (Step& st : expand_strategy_step(s)) {
        if (out.trace.size() >= step_fuel) {
          out.complete = false;
          return out;
        }
        out.result = st.after;
        out.trace.push_back(std::move(st));
      }
    }
  }
  while (true) {
    auto s = leftmost_step(out.result, rs);
    if (!s) return out;
    if (out.trace.size() >= step_fuel) {
      out.complete = false;
      return out;
    }
    out.result = s->after;
    out.trace.push_back(std::move(*s));
  }
}

IsnChecker::IsnChecker(std::size_t depth_fuel, std::size_t node_fuel)
    : depth_fuel_(depth_fuel), node_fuel_(node_fuel) {}

IsnDerivation IsnChecker::check(const Term& t) {
  if (!is_term(t)) throw IllFormedInput("isn expects a term");
  nodes_ = 0;
  open_.clear();
  return derive(t, 0);
}

IsnDerivation IsnChecker::derive(const Term& t, std::size_t depth) {
  if (depth > depth_fuel_ || ++nodes_ > node_fuel_) return nullptr;
  CanonicalKey key = canonical_key(t, EqMode::E);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // A goal that needs itself has no finite derivation along this unfolding.
  if (!open_.insert(key).second) return nullptr;

  auto node = std::make_shared<IsnNode>();
  node->term = t;
  auto premise = [&](const Term& sub) {
    IsnDerivation d = derive(sub, depth + 1);
    if (d) node->premises.push_back(d);
    return d != nullptr;
  };

  bool ok = true;
  auto [head, args] = unspine(t);
  switch (head.kind()) {
    case Kind::Var:
      node->rule = IsnRule::Var;
      for (const Term& a : args)
        if (!(ok = premise(a))) break;
      break;
    case Kind::Lam:
      if (args.empty()) {
        node->rule = IsnRule::Abs;
        ok = premise(head.body());
      } else {
        node->rule = IsnRule::App;
        ok = premise(apply_spine(Term::esub(head.body(), head.name(), args[0]),
                                 std::vector<Term>(args.begin() + 1, args.end())));
      }
      break;
    case Kind::ESub:
      node->rule = IsnRule::Subs;
      ok = premise(head.arg()) &&
           premise(apply_spine(subst(head.body(), head.name(), head.arg()), args));
      break;
    default:
      throw IllFormedInput("isn expects a term");
  }
  open_.erase(key);
  if (!ok) return nullptr;
  memo_.emplace(std::move(key), node);
  return node;
}

IsnDerivation isn_check(const Term& t, std::size_t depth_fuel) {
  IsnChecker c(depth_fuel);
  return c.check(t);
}

PsnReport psn_sample(const Term& t, std::size_t node_fuel) {
  if (!is_lambda_term(t)) throw IllFormedInput("PSN sampling expects a pure lambda term");
  PsnReport r;
  r.term = t;
  r.beta = sn_verdict(t, beta_rules(), node_fuel);
  r.lex = sn_verdict(t, lambda_ex(), node_fuel);
  r.violation = r.beta.sn() && r.lex.not_sn();
  return r;
}

}  // namespace lexkit
