#include "lexkit/labelled.hpp"

#include <limits>

#include "lexkit/errors.hpp"

namespace lexkit {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

Term rename_off(const Term& t, const NameSet& S, NameSet& avoid) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return t;
    case Kind::App:
      return Term::app(rename_off(t.fun(), S, avoid), rename_off(t.arg(), S, avoid));
    case Kind::Lam: {
      Name y = t.name();
      Term b = t.body();
      if (S.count(y)) {
        Name y2 = fresh_name(y, avoid);
        b = rename_free(b, y, y2);
        y = y2;
      }
      return Term::lam(y, rename_off(b, S, avoid));
    }
    case Kind::ESub:
    case Kind::LSub: {
      Name y = t.name();
      Term b = t.body();
      if (S.count(y)) {
        Name y2 = fresh_name(y, avoid);
        b = rename_free(b, y, y2);
        y = y2;
      }
      b = rename_off(b, S, avoid);
      Term a = rename_off(t.arg(), S, avoid);
      return t.is(Kind::ESub) ? Term::esub(std::move(b), y, std::move(a))
                              : Term::lsub(std::move(b), y, std::move(a));
    }
  }
  return t;
}

bool binders_avoid(const Term& t, const NameSet& S) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return true;
    case Kind::App:
      return binders_avoid(t.fun(), S) && binders_avoid(t.arg(), S);
    case Kind::Lam:
      return !S.count(t.name()) && binders_avoid(t.body(), S);
    default:
      return !S.count(t.name()) && binders_avoid(t.body(), S) && binders_avoid(t.arg(), S);
  }
}

}  // namespace

Term rename_binders_off(const Term& t, const NameSet& S) {
  NameSet avoid = all_names(t);
  avoid.insert(S.begin(), S.end());
  return rename_off(t, S, avoid);
}

LabelledTerm make_labelled(const Term& t, const Name& x, const Term& u,
                           const std::vector<Term>& args, SnOracle& lex) {
  if (!is_term(t) || !is_term(u)) throw IllFormedInput("labelling expects terms");
  for (const Term& a : args)
    if (!is_term(a)) throw IllFormedInput("labelling expects terms");
  SnVerdict v = lex.verdict(u);
  if (v.not_sn()) throw NotSN("label body is not strongly normalising");
  if (!v.sn()) throw OracleUnknown("label body: oracle inconclusive");
  LabelledTerm out;
  out.ctx.S = free_vars(u);
  const NameSet& S = out.ctx.S;
  NameSet avoid = all_names(t);
  avoid.insert(S.begin(), S.end());
  avoid.insert(x);
  for (const Term& a : args) collect_names(a, avoid);
  Name y = x;
  Term body = t;
  if (S.count(y)) {
    y = fresh_name(y, avoid);
    body = rename_free(body, x, y);
  }
  body = rename_off(body, S, avoid);
  std::vector<Term> renamed;
  for (const Term& a : args) renamed.push_back(rename_off(a, S, avoid));
  out.term = apply_spine(Term::lsub(body, y, u), renamed);
  return out;
}

bool is_labelled(const Term& t, const LabelContext& ctx, SnOracle& lex) {
  if (t.has_meta() || !binders_avoid(t, ctx.S)) return false;
  bool ok = true;
  for_each_position(t, [&](const Position&, const Term& s) {
    if (!ok || !s.is(Kind::LSub)) return;
    const Term& v = s.arg();
    if (!is_term(v)) {
      ok = false;
      return;
    }
    for (const Name& n : v.free())
      if (!ctx.S.count(n)) ok = false;
    if (ok && !lex.verdict(v).sn()) ok = false;
  });
  return ok;
}

// A binder equal to x hides the occurrences below it.
std::uint64_t ar(const Term& t, const Name& x) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return 0;
    case Kind::App:
      return sat_add(ar(t.fun(), x), ar(t.arg(), x));
    case Kind::Lam:
      return t.name() == x ? 0 : ar(t.body(), x);
    case Kind::ESub: {
      std::uint64_t body = t.name() == x ? 0 : ar(t.body(), x);
      if (!t.arg().has_free(x)) return body;
      return sat_add(sat_add(body, 1), ar(t.arg(), x));
    }
    case Kind::LSub:
      return t.name() == x ? 0 : ar(t.body(), x);
  }
  return 0;
}

std::uint64_t dep(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return 0;
    case Kind::App:
      return sat_add(dep(t.fun()), dep(t.arg()));
    case Kind::Lam:
      return dep(t.body());
    case Kind::ESub:
      return sat_add(dep(t.body()), dep(t.arg()));
    case Kind::LSub:
      return sat_add(dep(t.body()), ar(t.body(), t.name()));
  }
  return 0;
}

std::uint64_t phi(const Term& u, SnOracle& lex) {
  SnVerdict v = lex.verdict(u);
  if (v.not_sn()) throw NotSN("phi of a term that is not strongly normalising");
  if (!v.sn()) throw OracleUnknown("phi: oracle inconclusive");
  return sat_add(sat_add(1, v.eta), v.max_size);
}

std::uint64_t k(const Term& t, SnOracle& lex) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return 1;
    case Kind::App:
      return sat_add(sat_add(k(t.fun(), lex), k(t.arg(), lex)), 1);
    case Kind::Lam:
      return sat_add(k(t.body(), lex), 1);
    case Kind::ESub:
      return sat_mul(k(t.body(), lex), k(t.arg(), lex));
    case Kind::LSub:
      return sat_mul(k(t.body(), lex), phi(t.arg(), lex));
  }
  return 1;
}

Term xc(const Term& t) {
  if (!t.has_lsub()) return t;
  switch (t.kind()) {
    case Kind::App:
      return Term::app(xc(t.fun()), xc(t.arg()));
    case Kind::Lam:
      return Term::lam(t.name(), xc(t.body()));
    case Kind::ESub:
      return Term::esub(xc(t.body()), t.name(), xc(t.arg()));
    case Kind::LSub:
      return subst(xc(t.body()), t.name(), t.arg());
    default:
      return t;
  }
}

Term unlabel(const Term& t) {
  if (!t.has_lsub()) return t;
  switch (t.kind()) {
    case Kind::App:
      return Term::app(unlabel(t.fun()), unlabel(t.arg()));
    case Kind::Lam:
      return Term::lam(t.name(), unlabel(t.body()));
    case Kind::ESub:
    case Kind::LSub:
      return Term::esub(unlabel(t.body()), t.name(), unlabel(t.arg()));
    default:
      return t;
  }
}

std::string step_side_name(StepSide s) {
  return s == StepSide::Internal ? "internal" : "external";
}

StepSide split_step(const Step& s) {
  if (is_labelled_rule(s.rule)) return StepSide::Internal;
  const Term* cur = &s.before;
  for (int i : s.position) {
    if (cur->is(Kind::LSub) && i == 1) return StepSide::Internal;
    cur = &cur->child(i);
  }
  return StepSide::External;
}

Step lift_step(const Term& t, const Step& s, const LabelContext& ctx) {
  CanonicalKey target = canonical_key(s.after, EqMode::E);
  for (const Step& r : reducts(t, lambda_uex(ctx.S)))
    if (canonical_key(unlabel(r.after), EqMode::E) == target) return r;
  throw NotLiftable("no labelled step matches the unlabelled step");
}

}  // namespace lexkit
