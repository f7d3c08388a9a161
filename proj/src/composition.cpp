#include "lexkit/composition.hpp"

#include "lexkit/errors.hpp"

namespace lexkit {

namespace {

struct Builder {
  Term cur;
  std::vector<Step> steps;

  void step(Rule r, const Position& p, const Term& replacement) {
    Term after = replace_at(cur, p, replacement);
    steps.push_back(Step{r, p, cur, after});
    cur = std::move(after);
  }

  // Rewrites by the commutation equation; no step is recorded.
  void convert(const Position& p, const Term& replacement) { cur = replace_at(cur, p, replacement); }

  // Renames binder y of `body` when it is x or free in u.
  void separate(Name& y, Term& body, const Name& x, const Term& u) {
    if (y != x && !u.has_free(y)) return;
    NameSet avoid = all_names(cur);
    Name y2 = fresh_name(y, avoid);
    body = rename_free(body, y, y2);
    y = y2;
  }

  static Position child(Position p, int i) {
    p.push_back(i);
    return p;
  }

  void compose(const Position& p) {
    const Term s = subterm_at(cur, p);
    if (!s.is(Kind::ESub)) throw IllFormedInput("full composition expects an explicit substitution");
    const Term& t = s.body();
    const Name& x = s.name();
    const Term& u = s.arg();
    if (!t.has_free(x)) {
      step(Rule::Gc, p, t);
      return;
    }
    switch (t.kind()) {
      case Kind::Var:
        step(Rule::Var, p, u);
        return;
      case Kind::Meta:
        return;
      case Kind::App:
        step(Rule::App, p, Term::app(Term::esub(t.fun(), x, u), Term::esub(t.arg(), x, u)));
        compose(child(p, 0));
        compose(child(p, 1));
        return;
      case Kind::Lam: {
        Name y = t.name();
        Term b = t.body();
        separate(y, b, x, u);
        step(Rule::Lamb, p, Term::lam(y, Term::esub(b, x, u)));
        compose(child(p, 0));
        return;
      }
      case Kind::ESub: {
        Name y = t.name();
        Term c = t.body();
        const Term& v = t.arg();
        separate(y, c, x, u);
        if (v.has_free(x)) {
          step(Rule::Comp, p, Term::esub(Term::esub(c, x, u), y, Term::esub(v, x, u)));
          compose(child(p, 0));
          compose(child(p, 1));
        } else {
          convert(p, Term::esub(Term::esub(c, x, u), y, v));
          compose(child(p, 0));
        }
        return;
      }
      case Kind::LSub:
        break;
    }
    throw IllFormedInput("full composition on a labelled term");
  }
};

}  // namespace

std::vector<Step> full_composition_trace_at(const Term& whole, const Position& p) {
  Builder b{whole, {}};
  b.compose(p);
  return std::move(b.steps);
}

std::vector<Step> full_composition_trace(const Term& t, const Name& x, const Term& u) {
  return full_composition_trace_at(Term::esub(t, x, u), {});
}

std::vector<Step> beta_step(const Term& t) {
  std::vector<Step> out;
  for_each_position(t, [&](const Position& p, const Term& sub) {
    if (auto r = apply_rule(Rule::Beta, sub)) out.push_back(Step{Rule::Beta, p, t, replace_at(t, p, *r)});
  });
  return out;
}

std::vector<Step> simulate_beta(const Term& t, const Term& t2) {
  if (!is_lambda_term(t) || !is_lambda_term(t2))
    throw IllFormedInput("beta simulation expects pure lambda terms");
  for (const Step& s : beta_step(t)) {
    if (!alpha_eq(s.after, t2)) continue;
    const Term& redex = subterm_at(t, s.position);
    Term contracted = Term::esub(redex.fun().body(), redex.fun().name(), redex.arg());
    Term mid = replace_at(t, s.position, contracted);
    std::vector<Step> trace{Step{Rule::B, s.position, t, mid}};
    auto rest = full_composition_trace_at(mid, s.position);
    trace.insert(trace.end(), rest.begin(), rest.end());
    return trace;
  }
  throw NotAReduct("target is not a one-step beta reduct");
}

std::vector<Step> simulate_director_step(const Step& s) {
  if (s.rule != Rule::DsComp) throw IllFormedInput("not a DsComp step");
  auto comp = apply_rule_at(Rule::Comp, s.before, s.position);
  if (!comp) throw IllFormedInput("DsComp step without a Comp redex");
  std::vector<Step> trace{Step{Rule::Comp, s.position, s.before, *comp}};
  Position inner = s.position;
  inner.push_back(0);
  auto gc = apply_rule_at(Rule::Gc, *comp, inner);
  if (!gc) throw IllFormedInput("DsComp step without a garbage substitution");
  trace.push_back(Step{Rule::Gc, inner, *comp, *gc});
  return trace;
}

}  // namespace lexkit
