#include "lexkit/acceptance.hpp"

#include <bitset>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lexkit/composition.hpp"
#include "lexkit/enumerate.hpp"
#include "lexkit/errors.hpp"
#include "lexkit/json_io.hpp"
#include "lexkit/labelled.hpp"
#include "lexkit/perpetual.hpp"
#include "lexkit/superdev.hpp"
#include "lexkit/syntax.hpp"
#include "lexkit/types.hpp"

namespace lexkit {

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> kSuites{
      {1, "full-composition", "t[x/u] reaches t{x:=u} by substitution steps, size(t)+size(u) <= 8"},
      {2, "beta-simulation", "each beta step of a lambda-term up to size 8 is simulated in lex"},
      {3, "strategy", "one strategy clause fires and expands to a checked lex trace, size <= 8"},
      {4, "isn", "inductive characterisation agrees with the SN oracle, size <= 8"},
      {5, "psn", "1000 random lambda-terms of size <= 12: beta-SN implies not lex-refuted"},
      {6, "measures", "ar/dep/k behave as claimed on every labelled-rule step and conversion"},
      {7, "uex-termination", "labelled-rule reduction graphs are finite and acyclic"},
      {8, "projections", "internal/external steps project to lex reductions under xc"},
      {9, "ie", "500 random triples satisfy the IE property"},
      {10, "z-property", "Z-property legs found for every reduct of metaterms up to size 7"},
      {11, "confluence", "metaterms up to size 7 are confluent; the lx peak does not join"},
      {12, "types", "subtyping, simple types and intersection derivations"},
      {13, "revb", "revb reduces back by B steps and commutes with substitution"},
  };
  return kSuites;
}

int suite_id(const std::string& s) {
  for (const auto& info : suite_catalog())
    if (s == info.name || s == std::to_string(info.id)) return info.id;
  return 0;
}

namespace {

class Tally {
 public:
  Tally(SuiteResult& r, const SuiteOptions& o) : r_(r), o_(o) {}
  void pass() { ++r_.cases; }
  void fail(const std::string& what) {
    ++r_.cases;
    ++r_.failures;
    if (r_.samples.size() < o_.max_reported_failures) r_.samples.push_back(what);
  }
  void check(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }
  void note(const std::string& s) { r_.notes.push_back(s); }

 private:
  SuiteResult& r_;
  const SuiteOptions& o_;
};

std::size_t scaled(std::size_t fuel, const SuiteOptions& o) {
  double v = static_cast<double>(fuel) * o.fuel_scale;
  return v < 1 ? 1 : static_cast<std::size_t>(v);
}

CanonicalKey ekey(const Term& t) { return canonical_key(t, EqMode::E); }

std::string show(const Term& t) { return print_term(t); }

// Free names x, y, z; binders may reuse them, which exercises renaming.
Universe term_universe() {
  Universe u;
  u.free_names = {"x", "y", "z"};
  u.binder_names = {"x", "y", "z", "a", "b", "c", "d", "e", "f"};
  return u;
}

Universe lambda_universe() {
  Universe u = term_universe();
  u.esub = false;
  return u;
}

Universe meta_universe() {
  Universe u;
  u.free_names = {"x", "y"};
  u.binder_names = {"x", "y", "a", "b", "c", "d", "e"};
  u.max_metas = 2;
  u.max_decoration = 2;
  return u;
}

// ---------------------------------------------------------------- suite 1

void full_composition_suite(Tally& t, const SuiteOptions&) {
  Enumerator e(term_universe());
  const RuleSet lex = lambda_ex();
  for (std::size_t st = 1; st < 8; ++st) {
    for (std::size_t su = 1; st + su <= 8; ++su) {
      for (const Term& body : e.exactly(st)) {
        for (const Term& u : e.exactly(su)) {
          const Term start = Term::esub(body, "x", u);
          auto trace = full_composition_trace(body, "x", u);
          bool ok = !trace.empty();
          for (const Step& s : trace) ok = ok && is_ex_rule(s.rule);
          ok = ok && check_trace(start, trace, lex).ok &&
               ekey(trace.back().after) == ekey(subst(body, "x", u));
          t.check(ok, [&] { return show(start); });
        }
      }
    }
  }
}

// ---------------------------------------------------------------- suite 2

void beta_simulation_suite(Tally& t, const SuiteOptions&) {
  Enumerator e(lambda_universe());
  const RuleSet lex = lambda_ex();
  std::uint64_t terms = 0, longest = 0;
  e.for_each_up_to(8, [&](const Term& src) {
    ++terms;
    for (const Step& b : beta_step(src)) {
      bool ok = false;
      try {
        auto trace = simulate_beta(src, b.after);
        ok = !trace.empty() && trace.front().rule == Rule::B;
        for (std::size_t i = 1; i < trace.size(); ++i) ok = ok && is_ex_rule(trace[i].rule);
        ok = ok && check_trace(src, trace, lex).ok && ekey(trace.back().after) == ekey(b.after);
        longest = std::max<std::uint64_t>(longest, trace.size());
      } catch (const Error&) {
        ok = false;
      }
      t.check(ok, [&] { return show(src) + " -> " + show(b.after); });
    }
    return true;
  });
  t.note(std::to_string(terms) + " lambda-terms");
  t.note("longest simulation: " + std::to_string(longest) + " steps");
}

// ---------------------------------------------------------------- suite 3

// Counts the clause schemas whose left-hand side matches t at the root.
int matching_clauses(const Term& t, Verdict head_arg) {
  auto [head, args] = unspine(t);
  int n = 0;
  if (head.is(Kind::Var))
    for (const Term& a : args)
      if (!is_lex_normal(a)) {
        ++n;
        break;
      }
  if (head.is(Kind::Lam)) ++n;  // p-abs without arguments, p-B with some
  if (head.is(Kind::ESub) && head_arg != Verdict::Unknown) ++n;
  return n;
}

void strategy_suite(Tally& t, const SuiteOptions& o) {
  Enumerator e(term_universe());
  SnOracle oracle(lambda_ex(), scaled(kDefaultNodeFuel, o));
  const RuleSet lex = lambda_ex();
  std::map<std::string, std::uint64_t> by_rule;
  std::uint64_t normal = 0, unknown = 0;
  e.for_each_up_to(8, [&](const Term& src) {
    if (is_lex_normal(src)) {
      ++normal;
      return true;
    }
    StrategyStep s = perpetual_step(src, oracle);
    if (s.status != StrategyStatus::Stepped) {
      ++unknown;
      t.fail(show(src) + ": no clause fired");
      return true;
    }
    Verdict head_arg = Verdict::Unknown;
    if (auto h = unspine(src).first; h.is(Kind::ESub)) head_arg = oracle.verdict(h.arg()).verdict;
    bool ok = matching_clauses(src, head_arg) == 1;
    StrategyStep again = perpetual_step(src, oracle);
    ok = ok && again.chain == s.chain && again.result == s.result;
    auto trace = expand_strategy_step(s);
    ok = ok && !trace.empty() && check_trace(src, trace, lex).ok &&
         ekey(trace.back().after) == ekey(s.result);
    ++by_rule[clause_name(s.rule())];
    t.check(ok, [&] { return show(src) + " (" + clause_name(s.rule()) + ")"; });
    return true;
  });
  std::string counts;
  for (auto& [k, v] : by_rule) counts += k + "=" + std::to_string(v) + " ";
  t.note("clauses at the root: " + counts);
  t.note(std::to_string(normal) + " normal forms skipped, " + std::to_string(unknown) + " undecided");
}

// ---------------------------------------------------------------- suite 4

void isn_suite(Tally& t, const SuiteOptions& o) {
  Enumerator e(term_universe());
  SnOracle oracle(lambda_ex(), scaled(kDefaultNodeFuel, o));
  IsnChecker isn(scaled(kDefaultIsnDepth, o), scaled(kDefaultIsnNodes, o));
  std::uint64_t sn = 0, not_sn = 0, unknown = 0;
  e.for_each_up_to(8, [&](const Term& src) {
    SnVerdict v = oracle.verdict(src);
    if (v.verdict == Verdict::Unknown) {
      ++unknown;
      return true;
    }
    (v.sn() ? sn : not_sn)++;
    bool derived = isn.check(src) != nullptr;
    t.check(derived == v.sn(), [&] {
      return show(src) + ": oracle " + verdict_name(v.verdict) + ", isn " +
             (derived ? "derived" : "not derived");
    });
    return true;
  });
  t.note("ProvedSN " + std::to_string(sn) + ", ProvedNotSN " + std::to_string(not_sn) +
         ", Unknown (excluded) " + std::to_string(unknown));
}

// ---------------------------------------------------------------- suite 5

void psn_suite(Tally& t, const SuiteOptions& o) {
  Sampler sampler(lambda_universe());
  Rng rng(o.seed);
  SnOracle lex(lambda_ex(), scaled(kDefaultNodeFuel, o));
  std::uint64_t beta_sn = 0, beta_not = 0, lex_unknown_on_beta_sn = 0;
  for (int i = 0; i < 1000; ++i) {
    Term src = sampler.sample_up_to(12, rng);
    SnVerdict b = sn_verdict(src, beta_rules(), scaled(kDefaultNodeFuel, o));
    SnVerdict l = lex.verdict(src);
    if (b.sn()) ++beta_sn;
    if (b.not_sn()) ++beta_not;
    if (b.sn() && l.verdict == Verdict::Unknown) ++lex_unknown_on_beta_sn;
    t.check(!(b.sn() && l.not_sn()), [&] { return show(src) + ": beta-SN but lex-refuted"; });
  }
  t.note("beta: " + std::to_string(beta_sn) + " SN, " + std::to_string(beta_not) + " not SN");
  t.note("beta-SN with undecided lex verdict: " + std::to_string(lex_unknown_on_beta_sn));
}

// ---------------------------------------------------------- suites 6 to 8

const NameSet kLabelNames{"a"};

// Pure terms up to size 6 with one labelled substitution wrapped around
// every subterm; label bodies range over a small SN pool with fv in {a}.
std::vector<Term> labelled_universe() {
  Universe u;
  u.free_names = {"x", "y", "a"};
  u.binder_names = {"x", "y", "b", "c", "d", "e", "f"};
  Enumerator e(u);
  const std::vector<Term> pool{Term::var("a"),
                               Term::app(Term::lam("w", Term::var("w")), Term::var("a"))};
  std::vector<Term> out;
  e.for_each_up_to(6, [&](const Term& t) {
    for_each_position(t, [&](const Position& p, const Term& sub) {
      for (const char* z : {"x", "y"})
        for (const Term& v : pool) out.push_back(replace_at(t, p, Term::lsub(sub, z, v)));
    });
    return true;
  });
  return out;
}

NameSet measured_names(const Term& a, const Term& b) {
  NameSet n = all_names(a);
  collect_names(b, n);
  for (const Name& s : kLabelNames) n.erase(s);
  return n;
}

void measures_suite(Tally& t, const SuiteOptions& o) {
  {
    Term v = parse_term("w[w/(x x)[y/x]]");
    std::uint64_t a = ar(v, "x");
    Term big = Term::lsub(Term::esub(v, "y", v), "x", Term::var("x1"));
    std::uint64_t d = dep(big);
    t.check(a == 2, [&] { return "ar_x(" + show(v) + ") = " + std::to_string(a); });
    t.check(d == 5, [&] { return "dep(" + show(big) + ") = " + std::to_string(d); });
    t.note("worked values: ar_x = " + std::to_string(a) + ", dep = " + std::to_string(d));
  }
  SnOracle lex(lambda_ex(), scaled(kDefaultNodeFuel, o));
  const RuleSet rs = uex(kLabelNames);
  std::uint64_t terms = 0, conversions = 0, ucomp = 0, others = 0;
  for (const Term& lt : labelled_universe()) {
    ++terms;
    const std::uint64_t d0 = dep(lt), k0 = k(lt, lex);
    for (const Term& m : e_class(lt, EqMode::EU)) {
      if (m == lt) continue;
      ++conversions;
      bool ok = dep(m) == d0 && k(m, lex) == k0;
      for (const Name& z : measured_names(lt, m)) ok = ok && ar(m, z) == ar(lt, z);
      t.check(ok, [&] { return "conversion " + show(lt) + " = " + show(m); });
    }
    for (const Step& s : reducts(lt, rs)) {
      const Term& b = s.before;
      const Term& a = s.after;
      bool ok = true;
      if (s.rule == Rule::UComp) {
        ++ucomp;
        for (const Name& z : measured_names(b, a)) ok = ok && ar(b, z) == ar(a, z);
        ok = ok && dep(b) > dep(a);
      } else {
        ++others;
        for (const Name& z : measured_names(b, a)) ok = ok && ar(b, z) >= ar(a, z);
        ok = ok && dep(b) >= dep(a) && k(b, lex) > k(a, lex);
      }
      t.check(ok, [&] {
        return std::string(rule_name(s.rule)) + ": " + show(b) + " -> " + show(a);
      });
    }
  }
  t.note(std::to_string(terms) + " labelled terms, " + std::to_string(conversions) +
         " conversions, " + std::to_string(ucomp) + " uComp steps, " + std::to_string(others) +
         " other labelled steps");
}

void uex_termination_suite(Tally& t, const SuiteOptions& o) {
  const RuleSet rs = uex(kLabelNames);
  std::uint64_t largest = 0;
  for (const Term& lt : labelled_universe()) {
    ReductionGraph g = explore(lt, rs, scaled(kDefaultNodeFuel, o));
    largest = std::max<std::uint64_t>(largest, g.nodes.size());
    t.check(g.status == GraphStatus::Complete && !g.cyclic, [&] {
      return show(lt) + (g.cyclic ? ": cycle" : ": fuel exhausted");
    });
  }
  t.note("largest graph: " + std::to_string(largest) + " nodes");
}

void projections_suite(Tally& t, const SuiteOptions& o) {
  const RuleSet luex = lambda_uex(kLabelNames);
  const RuleSet lex = lambda_ex();
  ReachOptions weak;
  weak.min_steps = 0;
  weak.node_budget = scaled(kDefaultNodeFuel, o);
  ReachOptions strict = weak;
  strict.min_steps = 1;
  std::uint64_t internal = 0, external = 0, u_steps = 0;
  auto internal_only = [](const Step& s) { return split_step(s) == StepSide::Internal; };
  for (const Term& lt : labelled_universe()) {
    for (const Step& s : reducts(lt, luex)) {
      const Term xb = xc(s.before), xa = xc(s.after);
      bool ok;
      if (split_step(s) == StepSide::Internal) {
        ++internal;
        if (is_labelled_rule(s.rule)) {
          ++u_steps;
          ok = ekey(xb) == ekey(xa);
        } else {
          ok = reach(xb, ekey(xa), lex, weak).status == ReachStatus::Found;
        }
      } else {
        ++external;
        ok = reach(xb, ekey(xa), lex, strict).status == ReachStatus::Found;
      }
      t.check(ok, [&] {
        return step_side_name(split_step(s)) + " " + std::string(rule_name(s.rule)) + ": " +
               show(s.before) + " -> " + show(s.after);
      });
    }
    ReductionGraph g = explore(lt, luex, scaled(kDefaultNodeFuel, o), internal_only);
    t.check(g.status == GraphStatus::Complete && !g.cyclic,
            [&] { return show(lt) + ": internal reduction does not terminate"; });
  }
  t.note(std::to_string(internal) + " internal steps (" + std::to_string(u_steps) +
         " labelled-rule), " + std::to_string(external) + " external steps");
}

// ---------------------------------------------------------------- suite 9

void ie_suite(Tally& t, const SuiteOptions& o) {
  Sampler sampler(term_universe());
  Rng rng(o.seed + 9);
  SnOracle lex(lambda_ex(), scaled(kDefaultNodeFuel, o));
  std::uint64_t drawn = 0, with_x = 0, with_args = 0;
  int accepted = 0;
  while (accepted < 500 && drawn < 200000) {
    ++drawn;
    Term body = sampler.sample_up_to(6, rng);
    Term u = sampler.sample_up_to(5, rng);
    std::vector<Term> args;
    const std::uint64_t n = rng.below(3);
    for (std::uint64_t i = 0; i < n; ++i) args.push_back(sampler.sample_up_to(3, rng));
    if (!lex.verdict(u).sn()) continue;
    if (!lex.verdict(apply_spine(subst(body, "x", u), args)).sn()) continue;
    ++accepted;
    if (body.has_free("x")) ++with_x;
    if (!args.empty()) ++with_args;
    Term subject = apply_spine(Term::esub(body, "x", u), args);
    SnVerdict v = lex.verdict(subject);
    t.check(v.sn(), [&] { return show(subject) + ": " + verdict_name(v.verdict); });
  }
  if (accepted < 500) t.fail("only " + std::to_string(accepted) + " triples met the hypotheses");
  t.note(std::to_string(drawn) + " triples drawn, " + std::to_string(accepted) + " accepted (" +
         std::to_string(with_x) + " with x free in t, " + std::to_string(with_args) +
         " with arguments)");
}

// ---------------------------------------------------------- suites 10, 11

void z_suite(Tally& t, const SuiteOptions& o) {
  Enumerator e(meta_universe());
  ReachOptions opts;
  opts.max_depth = kDefaultReachBudget;
  opts.node_budget = scaled(kDefaultNodeFuel, o);
  std::uint64_t terms = 0, fuel = 0;
  e.for_each_up_to(7, [&](const Term& m) {
    ++terms;
    for (const ZReport& r : z_check(m, opts)) {
      if (r.status == ZStatus::FuelExhausted) ++fuel;
      t.check(r.status == ZStatus::Verified, [&] {
        return show(m) + " -> " + show(r.step.after) + ": " + zstatus_name(r.status);
      });
    }
    return true;
  });
  t.note(std::to_string(terms) + " metaterms, " + std::to_string(fuel) + " reports out of fuel");
}

void confluence_suite(Tally& t, const SuiteOptions& o) {
  Enumerator e(meta_universe());
  ConfluenceOptions opts;
  opts.depth = 3;
  opts.join_depth = 6;
  opts.node_budget = scaled(kDefaultNodeFuel, o);
  const RuleSet lex = lambda_ex();
  ConfluenceOptions deeper = opts;
  deeper.join_depth = opts.join_depth + 1;
  std::uint64_t terms = 0, peaks = 0, fuel = 0, joined_deeper = 0;
  e.for_each_up_to(7, [&](const Term& m) {
    ++terms;
    ConfluenceResult r = confluence_check(m, lex, opts);
    if (r.status == ConfluenceStatus::CounterexamplePeak) ++peaks;
    if (r.status == ConfluenceStatus::FuelExhausted) {
      ++fuel;
      // Diagnostic only: does one more join step settle it?
      if (confluence_check(m, lex, deeper).status == ConfluenceStatus::Confluent) ++joined_deeper;
    }
    t.check(r.status == ConfluenceStatus::Confluent, [&] {
      std::string s = show(m) + ": " + confluence_status_name(r.status);
      if (r.left) s += " at " + show(r.left) + " / " + show(r.right);
      return s;
    });
    return true;
  });
  t.note(std::to_string(terms) + " metaterms: " + std::to_string(peaks) +
         " definite counterexamples, " + std::to_string(fuel) + " pairs unjoined within " +
         std::to_string(opts.join_depth) + " steps");
  if (fuel > 0)
    t.note("of those, " + std::to_string(joined_deeper) + " are confluent with join depth " +
           std::to_string(deeper.join_depth));
  NonConfluenceDemo d = lambda_x_nonconfluence_demo();
  t.check(d.under_x.status == JoinStatus::NotJoinable && d.under_x.exhaustive,
          [&] { return "lx peak " + show(d.left) + " / " + show(d.right) + " joined"; });
  t.check(d.under_lex.status == JoinStatus::Joinable,
          [&] { return "lex does not join " + show(d.left) + " / " + show(d.right); });
  t.check(d.ground_under_x.status == JoinStatus::Joinable,
          [&] { return "lx does not join the ground peak"; });
  t.note("lx peak " + show(d.left) + " / " + show(d.right) + ": " +
         join_status_name(d.under_x.status) + " under lx, " +
         join_status_name(d.under_lex.status) + " under lex");
}

// ---------------------------------------------------------------- suite 12

std::vector<Type> types_up_to_depth3(const std::vector<Name>& atoms) {
  std::set<Type> all;
  for (const Name& a : atoms) all.insert(Type::atom(a));
  for (int d = 2; d <= 3; ++d) {
    std::vector<Type> prev(all.begin(), all.end());
    for (const Type& l : prev)
      for (const Type& r : prev) {
        all.insert(Type::arrow(l, r));
        all.insert(Type::inter(l, r));
      }
  }
  return std::vector<Type>(all.begin(), all.end());
}

void types_suite(Tally& t, const SuiteOptions& o) {
  // Subtyping against saturation of the rules within the universe.
  const std::vector<Type> U = types_up_to_depth3({"A", "B", "C"});
  const std::size_t n = U.size();
  constexpr std::size_t kMax = 1024;
  if (n > kMax) throw Error("type universe too large");
  std::map<Type, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(U[i], i);
  std::vector<std::bitset<kMax>> le(n);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> inters;
  for (std::size_t i = 0; i < n; ++i) {
    le[i].set(i);
    if (U[i].is(TypeKind::Inter)) {
      std::size_t l = index.at(U[i].left()), r = index.at(U[i].right());
      le[i].set(l);
      le[i].set(r);
      inters.emplace_back(i, l, r);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::bitset<kMax> row = le[i];
      for (std::size_t j = 0; j < n; ++j)
        if (row.test(j)) row |= le[j];
      for (auto& [c, l, r] : inters)
        if (row.test(l) && row.test(r)) row.set(c);
      if (row != le[i]) {
        le[i] = row;
        changed = true;
      }
    }
  }
  std::uint64_t related = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool s = subtype(U[i], U[j]);
      related += s;
      t.check(s == le[i].test(j), [&] {
        return "subtype(" + print_type(U[i]) + ", " + print_type(U[j]) + ") = " +
               (s ? "true" : "false") + ", search says " + (le[i].test(j) ? "true" : "false");
      });
    }
  t.note(std::to_string(n) + " types, " + std::to_string(related) + " related pairs");

  // Simple types: revb preserves typability; typable terms are SN.
  Enumerator e(term_universe());
  SnOracle lex(lambda_ex(), scaled(kDefaultNodeFuel, o));
  std::uint64_t typable = 0, terms = 0;
  e.for_each_up_to(7, [&](const Term& src) {
    ++terms;
    bool a = true, b = true;
    try {
      infer_simple({}, src);
    } catch (const TypeError&) {
      a = false;
    }
    try {
      infer_simple({}, revb(src));
    } catch (const TypeError&) {
      b = false;
    }
    t.check(a == b, [&] { return show(src) + ": typability changes under revb"; });
    if (a) {
      ++typable;
      SnVerdict v = lex.verdict(src);
      t.check(v.sn(), [&] { return show(src) + ": typable but " + verdict_name(v.verdict); });
    }
    return true;
  });
  t.note(std::to_string(typable) + " of " + std::to_string(terms) + " terms simply typable");

  // Intersection derivations from the corpus.
  std::vector<std::filesystem::path> files;
  if (!o.golden_dir.empty() && std::filesystem::is_directory(o.golden_dir))
    for (auto& entry : std::filesystem::directory_iterator(o.golden_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  t.check(files.size() == 10, [&] {
    return "expected 10 golden derivations in '" + o.golden_dir + "', found " +
           std::to_string(files.size());
  });
  for (const auto& f : files) {
    std::ifstream in(f);
    TypeDerivation d;
    bool ok = true;
    std::string why;
    try {
      d = derivation_from_json(Json::parse(in));
      auto c = check_derivation(d);
      if (!c.ok) {
        ok = false;
        why = c.diagnostics.empty() ? "rejected" : c.diagnostics.front();
      }
    } catch (const std::exception& ex) {
      ok = false;
      why = ex.what();
    }
    t.check(ok, [&] { return f.filename().string() + ": " + why; });
    if (!ok) continue;
    SnVerdict v = lex.verdict(d.term);
    t.check(v.sn(), [&] {
      return f.filename().string() + ": subject " + verdict_name(v.verdict);
    });
  }
}

// ---------------------------------------------------------------- suite 13

void revb_suite(Tally& t, const SuiteOptions& o) {
  Enumerator e(term_universe());
  RuleSet b_only = lambda_ex();
  b_only.rules = {Rule::B};
  ReachOptions opts;
  opts.node_budget = scaled(kDefaultNodeFuel, o);
  e.for_each_up_to(7, [&](const Term& src) {
    Term back = revb(src);
    opts.min_steps = src.has_esub() ? 1 : 0;
    ReachResult r = reach(back, ekey(src), b_only, opts);
    bool ok = r.status == ReachStatus::Found;
    if (!src.has_esub()) ok = ok && back == src;
    t.check(ok, [&] { return "revb(" + show(src) + ") = " + show(back) + " does not B-reduce back"; });
    return true;
  });
  std::uint64_t pairs = 0;
  for (std::size_t st = 1; st < 7; ++st)
    for (std::size_t su = 1; st + su <= 7; ++su)
      for (const Term& a : e.exactly(st))
        for (const Term& b : e.exactly(su)) {
          ++pairs;
          Term lhs = subst(revb(a), "x", revb(b));
          Term rhs = revb(subst(a, "x", b));
          t.check(alpha_eq(lhs, rhs), [&] {
            return "revb(" + show(a) + "){x:=revb(" + show(b) + ")} = " + show(lhs) + " but " +
                   show(rhs);
          });
        }
  t.note(std::to_string(pairs) + " substitution pairs");
}

}  // namespace

SuiteResult run_suite(int id, const SuiteOptions& opts) {
  SuiteResult r;
  r.id = id;
  for (const auto& info : suite_catalog())
    if (info.id == id) r.name = info.name;
  if (r.name.empty()) throw IllFormedInput("unknown suite " + std::to_string(id));
  auto start = std::chrono::steady_clock::now();
  Tally t(r, opts);
  try {
    switch (id) {
      case 1: full_composition_suite(t, opts); break;
      case 2: beta_simulation_suite(t, opts); break;
      case 3: strategy_suite(t, opts); break;
      case 4: isn_suite(t, opts); break;
      case 5: psn_suite(t, opts); break;
      case 6: measures_suite(t, opts); break;
      case 7: uex_termination_suite(t, opts); break;
      case 8: projections_suite(t, opts); break;
      case 9: ie_suite(t, opts); break;
      case 10: z_suite(t, opts); break;
      case 11: confluence_suite(t, opts); break;
      case 12: types_suite(t, opts); break;
      case 13: revb_suite(t, opts); break;
    }
  } catch (const std::exception& ex) {
    t.fail(std::string("aborted: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.failures == 0 && r.cases > 0;
  return r;
}

std::string format_result(const SuiteResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " ("
     << r.cases << " checks, " << r.failures << " failures, " << std::fixed;
  os.precision(1);
  os << r.seconds << "s)";
  for (const auto& n : r.notes) os << "\n    " << n;
  for (const auto& s : r.samples) os << "\n    failed: " << s;
  return os.str();
}

}  // namespace lexkit
