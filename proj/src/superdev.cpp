#include "lexkit/superdev.hpp"

#include <deque>
#include <map>

#include "lexkit/errors.hpp"

namespace lexkit {

Term superdev(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return t;
    case Kind::Lam:
      return Term::lam(t.name(), superdev(t.body()));
    case Kind::App: {
      Term f = superdev(t.fun());
      Term a = superdev(t.arg());
      if (f.is(Kind::Lam)) return subst(f.body(), f.name(), a);
      return Term::app(std::move(f), std::move(a));
    }
    case Kind::ESub:
      return subst(superdev(t.body()), t.name(), superdev(t.arg()));
    case Kind::LSub:
      break;
  }
  throw IllFormedInput("superdevelopment expects a metaterm");
}

std::string zstatus_name(ZStatus s) {
  switch (s) {
    case ZStatus::Verified: return "Verified";
    case ZStatus::FailedLeg1: return "Failed(leg1)";
    case ZStatus::FailedLeg2: return "Failed(leg2)";
    case ZStatus::FuelExhausted: return "FuelExhausted";
  }
  return "?";
}

std::string confluence_status_name(ConfluenceStatus s) {
  switch (s) {
    case ConfluenceStatus::Confluent: return "Confluent";
    case ConfluenceStatus::CounterexamplePeak: return "CounterexamplePeak";
    case ConfluenceStatus::FuelExhausted: return "FuelExhausted";
  }
  return "?";
}

std::string join_status_name(JoinStatus s) {
  switch (s) {
    case JoinStatus::Joinable: return "Joinable";
    case JoinStatus::NotJoinable: return "NotJoinable";
    case JoinStatus::FuelExhausted: return "FuelExhausted";
  }
  return "?";
}

std::vector<ZReport> z_check(const Term& t, const ReachOptions& opts) {
  if (!is_metaterm(t)) throw IllFormedInput("Z-check expects a metaterm");
  const RuleSet rs = lambda_ex();
  const Term dev = superdev(t);
  const CanonicalKey dev_key = canonical_key(dev, rs.mode);
  std::vector<ZReport> out;
  for (Step& s : reducts(t, rs)) {
    ZReport r;
    r.subject = t;
    r.target = dev;
    ReachResult l1 = reach(s.after, dev_key, rs, opts);
    ReachResult l2 = reach(dev, canonical_key(superdev(s.after), rs.mode), rs, opts);
    r.leg1 = std::move(l1.path);
    r.leg2 = std::move(l2.path);
    if (l1.status == ReachStatus::Found && l2.status == ReachStatus::Found)
      r.status = ZStatus::Verified;
    else if (l1.status == ReachStatus::Unreachable)
      r.status = ZStatus::FailedLeg1;
    else if (l2.status == ReachStatus::Unreachable)
      r.status = ZStatus::FailedLeg2;
    else
      r.status = ZStatus::FuelExhausted;
    r.step = std::move(s);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct Forward {
  std::map<CanonicalKey, Term> nodes;
  bool truncated = false;     // some node at the depth limit still had reducts
  bool budget_hit = false;
};

Forward forward(const Term& t, const RuleSet& rs, std::size_t depth, std::size_t budget) {
  Forward f;
  CanonicalKey root = canonical_key(t, rs.mode);
  f.nodes.emplace(root, t);
  std::deque<std::pair<CanonicalKey, std::size_t>> queue{{root, 0}};
  while (!queue.empty()) {
    auto [k, d] = queue.front();
    queue.pop_front();
    auto succ = reducts_keyed(f.nodes.at(k), rs);
    if (d >= depth) {
      if (!succ.empty()) f.truncated = true;
      continue;
    }
    for (auto& r : succ) {
      if (!f.nodes.emplace(r.key, r.step.after).second) continue;
      if (f.nodes.size() > budget) {
        f.budget_hit = true;
        return f;
      }
      queue.emplace_back(r.key, d + 1);
    }
  }
  return f;
}

// First common key of two sorted maps.
const Term* meet(const Forward& a, const Forward& b) {
  auto i = a.nodes.begin();
  auto j = b.nodes.begin();
  while (i != a.nodes.end() && j != b.nodes.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      return &i->second;
    }
  }
  return nullptr;
}

}  // namespace

JoinResult join(const Term& a, const Term& b, const RuleSet& rs, std::size_t join_depth,
                std::size_t node_budget) {
  JoinResult r;
  Forward fa = forward(a, rs, join_depth, node_budget);
  Forward fb = forward(b, rs, join_depth, node_budget);
  if (const Term* m = meet(fa, fb)) {
    r.status = JoinStatus::Joinable;
    r.meet = *m;
    return r;
  }
  r.exhaustive = !fa.truncated && !fb.truncated && !fa.budget_hit && !fb.budget_hit;
  r.status = (fa.budget_hit || fb.budget_hit) ? JoinStatus::FuelExhausted : JoinStatus::NotJoinable;
  return r;
}

ConfluenceResult confluence_check(const Term& t, const RuleSet& rs, const ConfluenceOptions& opts) {
  ConfluenceResult res;
  Forward reach_set = forward(t, rs, opts.depth, opts.node_budget);
  res.reachable = reach_set.nodes.size();
  std::vector<std::pair<const CanonicalKey*, const Term*>> nodes;
  for (auto& [k, term] : reach_set.nodes) nodes.emplace_back(&k, &term);
  std::map<CanonicalKey, Forward> cache;
  auto fwd = [&](std::size_t i) -> const Forward& {
    auto it = cache.find(*nodes[i].first);
    if (it == cache.end())
      it = cache.emplace(*nodes[i].first,
                         forward(*nodes[i].second, rs, opts.join_depth, opts.node_budget))
               .first;
    return it->second;
  };
  bool fuel = reach_set.budget_hit;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const Forward& a = fwd(i);
      if (a.nodes.count(*nodes[j].first)) continue;
      const Forward& b = fwd(j);
      if (b.nodes.count(*nodes[i].first) || meet(a, b)) continue;
      // Without both closures in full the pair may still join further on.
      if (a.budget_hit || b.budget_hit || a.truncated || b.truncated) {
        fuel = true;
        if (!res.left) {
          res.left = *nodes[i].second;
          res.right = *nodes[j].second;
        }
        continue;
      }
      res.status = ConfluenceStatus::CounterexamplePeak;
      res.left = *nodes[i].second;
      res.right = *nodes[j].second;
      return res;
    }
  }
  res.status = fuel ? ConfluenceStatus::FuelExhausted : ConfluenceStatus::Confluent;
  return res;
}

NonConfluenceDemo lambda_x_nonconfluence_demo(std::size_t join_depth) {
  NonConfluenceDemo d;
  const Term X = Term::meta("X", {"x", "y"});
  const Term y = Term::var("y");
  const Term z = Term::var("z");
  d.source = Term::esub(Term::app(Term::lam("x", X), y), "y", z);
  d.left = Term::esub(Term::esub(X, "x", y), "y", z);
  d.right = Term::esub(Term::esub(X, "y", z), "x", Term::esub(y, "y", z));
  d.under_x = join(d.left, d.right, lambda_x(), join_depth);
  d.under_lex = join(d.left, d.right, lambda_ex(), join_depth);
  const Term g = Term::app(Term::var("x"), y);
  d.ground_left = Term::esub(Term::esub(g, "x", y), "y", z);
  d.ground_right = Term::esub(Term::esub(g, "y", z), "x", Term::esub(y, "y", z));
  d.ground_under_x = join(d.ground_left, d.ground_right, lambda_x(), join_depth);
  return d;
}

}  // namespace lexkit
