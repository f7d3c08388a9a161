#include "lexkit/rules.hpp"

#include <algorithm>
#include <array>

namespace lexkit {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 13> kRuleNames{{
    {Rule::Beta, "beta"},
    {Rule::B, "B"},
    {Rule::Var, "Var"},
    {Rule::Gc, "Gc"},
    {Rule::App, "App"},
    {Rule::Lamb, "Lamb"},
    {Rule::Comp, "Comp"},
    {Rule::DsComp, "DsComp"},
    {Rule::UVar, "uVar"},
    {Rule::UGc, "uGc"},
    {Rule::UApp, "uApp"},
    {Rule::ULamb, "uLamb"},
    {Rule::UComp, "uComp"},
}};

constexpr std::array<std::pair<RuleSetName, std::string_view>, 6> kSetNames{{
    {RuleSetName::Beta, "beta"},
    {RuleSetName::LambdaX, "lx"},
    {RuleSetName::LambdaEx, "lex"},
    {RuleSetName::LambdaXDirector, "lx-director"},
    {RuleSetName::Uex, "uex"},
    {RuleSetName::LambdaUex, "luex"},
}};

// Renames binder x of a body when it clashes with `x == other` or a free
// name of `incoming`.
void separate(Name& x, Term& body, const Name& other, const Term& incoming, const Term& whole,
              const NameSet& reserved) {
  if (x != other && !incoming.has_free(x)) return;
  NameSet avoid = all_names(whole);
  avoid.insert(reserved.begin(), reserved.end());
  Name x2 = fresh_name(x, avoid);
  body = rename_free(body, x, x2);
  x = x2;
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (auto& [k, v] : kRuleNames)
    if (k == r) return v;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view s) {
  for (auto& [k, v] : kRuleNames)
    if (v == s) return k;
  return std::nullopt;
}

bool is_ex_rule(Rule r) {
  return r == Rule::Var || r == Rule::Gc || r == Rule::App || r == Rule::Lamb || r == Rule::Comp;
}

bool is_labelled_rule(Rule r) {
  return r == Rule::UVar || r == Rule::UGc || r == Rule::UApp || r == Rule::ULamb ||
         r == Rule::UComp;
}

std::string_view ruleset_name(RuleSetName n) {
  for (auto& [k, v] : kSetNames)
    if (k == n) return v;
  return "?";
}

std::optional<RuleSetName> ruleset_from_name(std::string_view s) {
  for (auto& [k, v] : kSetNames)
    if (v == s) return k;
  return std::nullopt;
}

bool RuleSet::has(Rule r) const { return std::find(rules.begin(), rules.end(), r) != rules.end(); }

RuleSet make_ruleset(RuleSetName n, NameSet reserved) {
  RuleSet rs;
  rs.name = n;
  rs.reserved = std::move(reserved);
  const std::vector<Rule> x{Rule::B, Rule::Var, Rule::Gc, Rule::App, Rule::Lamb};
  const std::vector<Rule> u{Rule::UVar, Rule::UGc, Rule::UApp, Rule::ULamb, Rule::UComp};
  switch (n) {
    case RuleSetName::Beta:
      rs.rules = {Rule::Beta};
      rs.mode = EqMode::Alpha;
      break;
    case RuleSetName::LambdaX:
      rs.rules = x;
      rs.mode = EqMode::Alpha;
      break;
    case RuleSetName::LambdaEx:
      rs.rules = x;
      rs.rules.push_back(Rule::Comp);
      rs.mode = EqMode::E;
      break;
    case RuleSetName::LambdaXDirector:
      rs.rules = x;
      rs.rules.push_back(Rule::DsComp);
      rs.mode = EqMode::Alpha;
      break;
    case RuleSetName::Uex:
      rs.rules = u;
      rs.mode = EqMode::EU;
      break;
    case RuleSetName::LambdaUex:
      rs.rules = x;
      rs.rules.push_back(Rule::Comp);
      rs.rules.insert(rs.rules.end(), u.begin(), u.end());
      rs.mode = EqMode::EU;
      break;
  }
  return rs;
}

std::optional<Term> apply_rule(Rule r, const Term& t, const NameSet& reserved) {
  switch (r) {
    case Rule::Beta:
    case Rule::B: {
      if (!t.is(Kind::App) || !t.fun().is(Kind::Lam)) return std::nullopt;
      const Term& l = t.fun();
      if (r == Rule::B) return Term::esub(l.body(), l.name(), t.arg());
      return subst(l.body(), l.name(), t.arg());
    }
    case Rule::Var:
    case Rule::UVar: {
      Kind k = r == Rule::Var ? Kind::ESub : Kind::LSub;
      if (!t.is(k) || !t.body().is(Kind::Var) || t.body().name() != t.name()) return std::nullopt;
      return t.arg();
    }
    case Rule::Gc:
    case Rule::UGc: {
      Kind k = r == Rule::Gc ? Kind::ESub : Kind::LSub;
      if (!t.is(k) || t.body().has_free(t.name())) return std::nullopt;
      return t.body();
    }
    case Rule::App:
    case Rule::UApp: {
      Kind k = r == Rule::App ? Kind::ESub : Kind::LSub;
      if (!t.is(k) || !t.body().is(Kind::App)) return std::nullopt;
      const Term& a = t.body();
      if (k == Kind::ESub)
        return Term::app(Term::esub(a.fun(), t.name(), t.arg()),
                         Term::esub(a.arg(), t.name(), t.arg()));
      return Term::app(Term::lsub(a.fun(), t.name(), t.arg()),
                       Term::lsub(a.arg(), t.name(), t.arg()));
    }
    case Rule::Lamb:
    case Rule::ULamb: {
      Kind k = r == Rule::Lamb ? Kind::ESub : Kind::LSub;
      if (!t.is(k) || !t.body().is(Kind::Lam)) return std::nullopt;
      Name y = t.body().name();
      Term b = t.body().body();
      separate(y, b, t.name(), t.arg(), t, reserved);
      Term inner = k == Kind::ESub ? Term::esub(b, t.name(), t.arg())
                                   : Term::lsub(b, t.name(), t.arg());
      return Term::lam(y, inner);
    }
    case Rule::Comp:
    case Rule::DsComp: {
      // t = s[x/u][y/v]
      if (!t.is(Kind::ESub) || !t.body().is(Kind::ESub)) return std::nullopt;
      const Name& y = t.name();
      const Term& v = t.arg();
      const Term& u = t.body().arg();
      if (!u.has_free(y)) return std::nullopt;
      Name x = t.body().name();
      Term s = t.body().body();
      separate(x, s, y, v, t, reserved);
      if (r == Rule::Comp) return Term::esub(Term::esub(s, y, v), x, Term::esub(u, y, v));
      if (s.has_free(y)) return std::nullopt;
      return Term::esub(s, x, Term::esub(u, y, v));
    }
    case Rule::UComp: {
      // t = s[y/u][[x/v]]
      if (!t.is(Kind::LSub) || !t.body().is(Kind::ESub)) return std::nullopt;
      const Name& x = t.name();
      const Term& v = t.arg();
      const Term& u = t.body().arg();
      if (!u.has_free(x)) return std::nullopt;
      Name y = t.body().name();
      Term s = t.body().body();
      separate(y, s, x, v, t, reserved);
      return Term::esub(Term::lsub(s, x, v), y, Term::lsub(u, x, v));
    }
  }
  return std::nullopt;
}

std::optional<Term> apply_rule_at(Rule r, const Term& t, const Position& p,
                                  const NameSet& reserved) {
  if (!valid_position(t, p)) return std::nullopt;
  auto res = apply_rule(r, subterm_at(t, p), reserved);
  if (!res) return std::nullopt;
  return replace_at(t, p, *res);
}

}  // namespace lexkit
