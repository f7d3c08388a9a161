#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexkit/canonical.hpp"
#include "lexkit/term.hpp"

namespace lexkit {

enum class Rule : std::uint8_t {
  Beta,
  B,
  Var,
  Gc,
  App,
  Lamb,
  Comp,
  DsComp,
  UVar,
  UGc,
  UApp,
  ULamb,
  UComp,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view s);

// Var, Gc, App, Lamb, Comp: the substitution rules without B.
bool is_ex_rule(Rule r);
// The rules acting on labelled substitutions.
bool is_labelled_rule(Rule r);

enum class RuleSetName { Beta, LambdaX, LambdaEx, LambdaXDirector, Uex, LambdaUex };

std::string_view ruleset_name(RuleSetName n);
std::optional<RuleSetName> ruleset_from_name(std::string_view s);

struct RuleSet {
  RuleSetName name = RuleSetName::LambdaEx;
  std::vector<Rule> rules;
  EqMode mode = EqMode::E;
  // Names never chosen when renaming binders (the label context of labelled terms).
  NameSet reserved;

  bool has(Rule r) const;
};

RuleSet make_ruleset(RuleSetName n, NameSet reserved = {});
inline RuleSet beta_rules() { return make_ruleset(RuleSetName::Beta); }
inline RuleSet lambda_x() { return make_ruleset(RuleSetName::LambdaX); }
inline RuleSet lambda_ex() { return make_ruleset(RuleSetName::LambdaEx); }
inline RuleSet lambda_x_director() { return make_ruleset(RuleSetName::LambdaXDirector); }
inline RuleSet uex(NameSet s = {}) { return make_ruleset(RuleSetName::Uex, std::move(s)); }
inline RuleSet lambda_uex(NameSet s = {}) {
  return make_ruleset(RuleSetName::LambdaUex, std::move(s));
}

// Contracts a redex of rule r at the root of t.
std::optional<Term> apply_rule(Rule r, const Term& t, const NameSet& reserved = {});
std::optional<Term> apply_rule_at(Rule r, const Term& t, const Position& p,
                                  const NameSet& reserved = {});

}  // namespace lexkit
