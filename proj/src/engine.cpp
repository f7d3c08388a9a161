#include "lexkit/engine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

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

template <typename Phi>
std::uint64_t k_measure(const Term& t, Phi&& phi) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return 1;
    case Kind::App:
      return sat_add(sat_add(k_measure(t.fun(), phi), k_measure(t.arg(), phi)), 1);
    case Kind::Lam:
      return sat_add(k_measure(t.body(), phi), 1);
    case Kind::ESub:
      return sat_mul(k_measure(t.body(), phi), k_measure(t.arg(), phi));
    case Kind::LSub:
      return sat_mul(k_measure(t.body(), phi), phi(t.arg()));
  }
  return 1;
}

std::uint64_t phi_from(SnOracle& lex, const Term& body) {
  SnVerdict v = lex.verdict(body);
  if (v.verdict == Verdict::ProvedNotSN) throw NotSN("label body is not strongly normalising");
  if (v.verdict == Verdict::Unknown) throw OracleUnknown("label body: oracle inconclusive");
  return sat_add(sat_add(1, v.eta), v.max_size);
}

}  // namespace

std::vector<Reduct> reducts_keyed(const Term& t, const RuleSet& rs, std::size_t class_bound) {
  std::vector<Reduct> out;
  std::set<std::pair<Rule, CanonicalKey>> seen;
  for (const Term& m : e_class(t, rs.mode, class_bound)) {
    for_each_position(m, [&](const Position& p, const Term& sub) {
      if (sub.arity() == 0) return;
      for (Rule r : rs.rules) {
        auto res = apply_rule(r, sub, rs.reserved);
        if (!res) continue;
        Term after = replace_at(m, p, *res);
        CanonicalKey key = canonical_key(after, rs.mode, class_bound);
        if (!seen.emplace(r, key).second) continue;
        out.push_back(Reduct{Step{r, p, m, std::move(after)}, std::move(key)});
      }
    });
  }
  return out;
}

std::vector<Step> reducts(const Term& t, const RuleSet& rs, std::size_t class_bound) {
  std::vector<Step> out;
  for (auto& r : reducts_keyed(t, rs, class_bound)) out.push_back(std::move(r.step));
  return out;
}

std::uint64_t k_plain(const Term& t) {
  return k_measure(t, [](const Term&) -> std::uint64_t {
    throw IllFormedInput("k_plain on a labelled term");
  });
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ProvedSN: return "ProvedSN";
    case Verdict::ProvedNotSN: return "ProvedNotSN";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

ReductionGraph explore(const Term& t, const RuleSet& rs, std::size_t node_fuel,
                       const StepFilter& keep, std::size_t class_bound) {
  ReductionGraph g;
  try {
    g.root = canonical_key(t, rs.mode, class_bound);
  } catch (const FuelExhausted&) {
    g.status = GraphStatus::FuelExhausted;
    return g;
  }
  g.nodes.emplace(g.root, t);
  std::deque<CanonicalKey> queue{g.root};
  std::size_t expanded = 0;
  while (!queue.empty()) {
    if (expanded >= node_fuel) {
      g.status = GraphStatus::FuelExhausted;
      break;
    }
    CanonicalKey k = queue.front();
    queue.pop_front();
    ++expanded;
    auto& out = g.edges[k];
    std::vector<Reduct> rs_out;
    try {
      rs_out = reducts_keyed(g.nodes.at(k), rs, class_bound);
    } catch (const FuelExhausted&) {
      g.status = GraphStatus::FuelExhausted;
      break;
    }
    for (auto& r : rs_out) {
      if (keep && !keep(r.step)) continue;
      out.emplace(r.step.rule, r.key);
      if (g.nodes.emplace(r.key, r.step.after).second) queue.push_back(r.key);
    }
  }
  // Back-edge search over the explored part.
  enum Color : std::uint8_t { White, Grey, Black };
  std::map<CanonicalKey, Color> color;
  struct Frame {
    const CanonicalKey* key;
    std::vector<const CanonicalKey*> succ;
    std::size_t next = 0;
  };
  auto succ_of = [&](const CanonicalKey& k) {
    std::vector<const CanonicalKey*> s;
    auto it = g.edges.find(k);
    if (it != g.edges.end())
      for (auto& e : it->second) s.push_back(&e.second);
    return s;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{&g.root, succ_of(g.root)});
  color[g.root] = Grey;
  while (!stack.empty() && !g.cyclic) {
    Frame& f = stack.back();
    if (f.next < f.succ.size()) {
      const CanonicalKey* n = f.succ[f.next++];
      Color c = color.count(*n) ? color[*n] : White;
      if (c == Grey) {
        g.cyclic = true;
      } else if (c == White) {
        color[*n] = Grey;
        stack.push_back(Frame{n, succ_of(*n)});
      }
    } else {
      color[*f.key] = Black;
      stack.pop_back();
    }
  }
  return g;
}

namespace {

// Path from the root into a cycle of the explored graph.
std::vector<Term> cycle_witness(const ReductionGraph& g) {
  std::vector<CanonicalKey> path{g.root};
  std::map<CanonicalKey, std::size_t> on_path{{g.root, 0}};
  std::set<CanonicalKey> done;
  std::vector<std::vector<CanonicalKey>> succ_stack;
  std::vector<std::size_t> idx_stack;
  auto succ_of = [&](const CanonicalKey& k) {
    std::vector<CanonicalKey> s;
    auto it = g.edges.find(k);
    if (it != g.edges.end())
      for (auto& e : it->second) s.push_back(e.second);
    return s;
  };
  succ_stack.push_back(succ_of(g.root));
  idx_stack.push_back(0);
  while (!path.empty()) {
    auto& succ = succ_stack.back();
    auto& idx = idx_stack.back();
    if (idx < succ.size()) {
      CanonicalKey n = succ[idx++];
      if (on_path.count(n)) {
        std::vector<Term> w;
        for (auto& k : path) w.push_back(g.nodes.at(k));
        w.push_back(g.nodes.at(n));
        return w;
      }
      if (done.count(n)) continue;
      on_path.emplace(n, path.size());
      path.push_back(n);
      succ_stack.push_back(succ_of(n));
      idx_stack.push_back(0);
    } else {
      on_path.erase(path.back());
      done.insert(path.back());
      path.pop_back();
      succ_stack.pop_back();
      idx_stack.pop_back();
    }
  }
  return {};
}

}  // namespace

SnVerdict sn_verdict(const Term& t, const RuleSet& rs, std::size_t node_fuel) {
  // A depth-first probe finds reachable cycles long before breadth-first
  // exploration of a growing graph would.
  {
    SnOracle probe(rs, node_fuel);
    SnVerdict p = probe.verdict(t);
    if (p.not_sn()) return p;
  }
  ReductionGraph g = explore(t, rs, node_fuel);
  SnVerdict v;
  if (g.cyclic) {
    v.verdict = Verdict::ProvedNotSN;
    v.witness = cycle_witness(g);
    return v;
  }
  if (g.status != GraphStatus::Complete) return v;
  std::unique_ptr<SnOracle> lex;
  auto measure = [&](const Term& n) -> std::uint64_t {
    return k_measure(n, [&](const Term& body) {
      if (!lex) lex = std::make_unique<SnOracle>(lambda_ex(), node_fuel);
      return phi_from(*lex, body);
    });
  };
  // Longest path by post-order over the acyclic graph.
  std::map<CanonicalKey, std::uint64_t> eta;
  std::vector<std::pair<CanonicalKey, bool>> stack{{g.root, false}};
  while (!stack.empty()) {
    auto [k, expanded] = stack.back();
    stack.pop_back();
    if (eta.count(k)) continue;
    const auto& out = g.edges[k];
    if (!expanded) {
      stack.emplace_back(k, true);
      for (auto& e : out)
        if (!eta.count(e.second)) stack.emplace_back(e.second, false);
      continue;
    }
    std::uint64_t best = 0;
    for (auto& e : out) best = std::max(best, eta.at(e.second) + 1);
    eta[k] = best;
  }
  v.verdict = Verdict::ProvedSN;
  v.eta = eta.at(g.root);
  for (auto& [k, n] : g.nodes) v.max_size = std::max(v.max_size, measure(n));
  return v;
}

SnOracle::SnOracle(RuleSet rs, std::size_t node_fuel, std::size_t class_bound)
    : rs_(std::move(rs)), fuel_(node_fuel), class_bound_(class_bound) {}

std::uint64_t SnOracle::measure(const Term& t) {
  return k_measure(t, [&](const Term& body) {
    if (rs_.name == RuleSetName::LambdaEx) return phi_from(*this, body);
    if (!body_oracle_) body_oracle_ = std::make_unique<SnOracle>(lambda_ex(), fuel_, class_bound_);
    return phi_from(*body_oracle_, body);
  });
}

SnVerdict SnOracle::verdict(const Term& t) {
  SnVerdict out;
  CanonicalKey root;
  try {
    root = canonical_key(t, rs_.mode, class_bound_);
  } catch (const FuelExhausted&) {
    return out;
  }
  auto refuted = [&](const Refuted& r) {
    SnVerdict v;
    v.verdict = Verdict::ProvedNotSN;
    v.witness.assign(r.path->begin() + static_cast<std::ptrdiff_t>(r.from), r.path->end());
    return v;
  };
  if (auto it = sn_.find(root); it != sn_.end()) {
    out.verdict = Verdict::ProvedSN;
    out.eta = it->second.eta;
    out.max_size = it->second.max_size;
    return out;
  }
  if (auto it = not_sn_.find(root); it != not_sn_.end()) return refuted(it->second);

  struct Frame {
    CanonicalKey key;
    Term term;
    std::vector<Reduct> succ;
    std::size_t next = 0;
    std::uint64_t eta = 0;
    std::uint64_t max_size = 0;
  };
  std::vector<Frame> stack;
  std::unordered_set<CanonicalKey> on_stack;
  std::size_t budget = fuel_;

  auto push = [&](CanonicalKey k, Term term) -> bool {
    if (budget == 0) return false;
    --budget;
    Frame f;
    f.succ = reducts_keyed(term, rs_, class_bound_);
    // Smaller reducts first: cycles and normal forms tend to lie that way.
    std::stable_sort(f.succ.begin(), f.succ.end(), [](const Reduct& a, const Reduct& b) {
      return a.step.after.size() < b.step.after.size();
    });
    f.max_size = measure(term);
    f.key = std::move(k);
    f.term = std::move(term);
    on_stack.insert(f.key);
    stack.push_back(std::move(f));
    return true;
  };
  // Every frame on the stack reaches the refuted suffix.
  auto refute_stack = [&](std::vector<Term> tail) {
    auto path = std::make_shared<std::vector<Term>>();
    for (auto& f : stack) path->push_back(f.term);
    path->insert(path->end(), tail.begin(), tail.end());
    for (std::size_t i = 0; i < stack.size(); ++i)
      not_sn_.emplace(stack[i].key, Refuted{path, i});
    return refuted(Refuted{path, 0});
  };

  try {
    if (!push(root, t)) return out;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.succ.size()) {
        const Reduct& r = f.succ[f.next++];
        if (auto it = sn_.find(r.key); it != sn_.end()) {
          f.eta = std::max(f.eta, it->second.eta + 1);
          f.max_size = std::max(f.max_size, it->second.max_size);
          continue;
        }
        if (auto it = not_sn_.find(r.key); it != not_sn_.end()) {
          const Refuted& known = it->second;
          return refute_stack(
              std::vector<Term>(known.path->begin() + static_cast<std::ptrdiff_t>(known.from),
                                known.path->end()));
        }
        if (on_stack.count(r.key)) return refute_stack({r.step.after});
        if (!push(r.key, r.step.after)) return out;
        continue;
      }
      Proved p{f.eta, f.max_size};
      sn_.emplace(f.key, p);
      on_stack.erase(f.key);
      stack.pop_back();
      if (stack.empty()) {
        out.verdict = Verdict::ProvedSN;
        out.eta = p.eta;
        out.max_size = p.max_size;
        return out;
      }
      Frame& parent = stack.back();
      parent.eta = std::max(parent.eta, p.eta + 1);
      parent.max_size = std::max(parent.max_size, p.max_size);
    }
  } catch (const FuelExhausted&) {
    return out;
  }
  return out;
}

TraceCheck check_step(const Term& from, const Step& s, const RuleSet& rs) {
  TraceCheck c;
  if (!rs.has(s.rule)) {
    c.ok = false;
    c.diagnostic = std::string("rule ") + std::string(rule_name(s.rule)) + " not in rule set";
    return c;
  }
  if (canonical_key(from, rs.mode) != canonical_key(s.before, rs.mode)) {
    c.ok = false;
    c.diagnostic = "rewritten term is not equivalent to the previous term";
    return c;
  }
  auto res = apply_rule_at(s.rule, s.before, s.position, rs.reserved);
  if (!res) {
    c.ok = false;
    c.diagnostic = std::string("rule ") + std::string(rule_name(s.rule)) +
                   " does not apply at the recorded position";
    return c;
  }
  if (!alpha_eq(*res, s.after)) {
    c.ok = false;
    c.diagnostic = "recorded result differs from the contractum";
  }
  return c;
}

TraceCheck check_trace(const Term& start, const std::vector<Step>& steps, const RuleSet& rs) {
  Term cur = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    TraceCheck c = check_step(cur, steps[i], rs);
    if (!c.ok) {
      c.failed_at = i;
      return c;
    }
    cur = steps[i].after;
  }
  return {};
}

ReachResult reach(const Term& from, const CanonicalKey& target, const RuleSet& rs,
                  const ReachOptions& opts) {
  ReachResult res;
  CanonicalKey start = canonical_key(from, rs.mode);
  if (opts.min_steps == 0 && start == target) {
    res.status = ReachStatus::Found;
    return res;
  }
  struct Visit {
    CanonicalKey parent;
    Step step;
  };
  std::unordered_map<CanonicalKey, Visit> parent;
  std::unordered_set<CanonicalKey> seen{start};
  struct Item {
    CanonicalKey key;
    Term term;
    std::size_t depth;
  };
  std::deque<Item> queue{Item{start, from, 0}};
  bool truncated = false;
  auto unwind = [&](CanonicalKey k, Step last) {
    std::vector<Step> path{std::move(last)};
    while (k != start) {
      auto it = parent.find(k);
      path.push_back(it->second.step);
      k = it->second.parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    if (it.depth >= opts.max_depth) {
      truncated = true;
      continue;
    }
    for (auto& r : reducts_keyed(it.term, rs)) {
      if (r.key == target && it.depth + 1 >= opts.min_steps) {
        res.status = ReachStatus::Found;
        res.path = unwind(it.key, r.step);
        return res;
      }
      if (!seen.insert(r.key).second) continue;
      if (seen.size() > opts.node_budget) {
        res.status = ReachStatus::FuelExhausted;
        return res;
      }
      parent.emplace(r.key, Visit{it.key, r.step});
      queue.push_back(Item{r.key, r.step.after, it.depth + 1});
    }
  }
  res.status = truncated ? ReachStatus::FuelExhausted : ReachStatus::Unreachable;
  return res;
}

bool position_less(const Position& a, const Position& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace lexkit
