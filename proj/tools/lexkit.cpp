// Command-line front end: one subcommand per operation of the library.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexkit/acceptance.hpp"
#include "lexkit/engine.hpp"
#include "lexkit/errors.hpp"
#include "lexkit/json_io.hpp"
#include "lexkit/labelled.hpp"
#include "lexkit/perpetual.hpp"
#include "lexkit/superdev.hpp"
#include "lexkit/syntax.hpp"
#include "lexkit/types.hpp"

namespace {

using namespace lexkit;

constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  bool json = false;
  std::string ruleset = "lex";
  std::size_t node_fuel = 0;  // 0: scaled default
  std::size_t step_fuel = 0;
  std::size_t class_bound = 0;
  std::uint64_t seed = 20241015;
  double scale = 1.0;

  std::size_t scaled(std::size_t given, std::size_t dflt) const {
    if (given) return given;
    double v = std::ceil(static_cast<double>(dflt) * scale);
    return v < 1 ? 1 : static_cast<std::size_t>(v);
  }
  std::size_t nodes() const { return scaled(node_fuel, kDefaultNodeFuel); }
  std::size_t steps() const { return scaled(step_fuel, kDefaultStepFuel); }
  std::size_t bound() const { return scaled(class_bound, kDefaultClassBound); }
  RuleSet rules() const {
    auto n = ruleset_from_name(ruleset);
    if (!n) throw UsageError("unknown ruleset " + ruleset);
    return make_ruleset(*n);
  }
};

std::string show_position(const Position& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + std::to_string(p[i]);
  return s;
}

void print_steps(std::ostream& out, const std::vector<Step>& steps) {
  for (const Step& s : steps)
    out << "  " << rule_name(s.rule) << " at " << show_position(s.position) << " -> "
        << print_term(s.after) << "\n";
}

void print_isn(std::ostream& out, const IsnDerivation& d, int indent) {
  out << std::string(2 * indent, ' ') << isn_rule_name(d->rule) << "  " << print_term(d->term)
      << "\n";
  for (const auto& p : d->premises) print_isn(out, p, indent + 1);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Term> label_bodies(const Term& t) {
  std::vector<Term> out;
  for_each_position(t, [&](const Position&, const Term& sub) {
    if (sub.is(Kind::LSub)) out.push_back(sub.arg());
  });
  return out;
}

int cmd_reduce(const Config& c, const std::string& src, const std::string& policy) {
  Term t = parse_term(src);
  RuleSet rs = c.rules();
  Policy p;
  if (policy == "leftmost")
    p = Policy::Leftmost;
  else if (policy == "perpetual")
    p = Policy::PerpetualStrategy;
  else
    throw UsageError("unknown policy " + policy);
  if (p == Policy::PerpetualStrategy && rs.name != RuleSetName::LambdaEx)
    throw UsageError("the perpetual policy runs under lex only");
  NormalizeResult r = normalize(t, rs, c.steps(), p);
  if (c.json) {
    Json j = trace_to_json(t, r.trace, r.complete);
    j["result"] = print_term(r.result);
    emit(j);
  } else {
    std::cout << print_term(r.result) << (r.complete ? "" : "  (fuel exhausted)") << "\n";
    print_steps(std::cout, r.trace);
  }
  return r.complete ? 0 : 2;
}

int cmd_reducts(const Config& c, const std::string& src) {
  Term t = parse_term(src);
  auto rs = reducts(t, c.rules(), c.bound());
  if (c.json) {
    Json arr = Json::array();
    for (const Step& s : rs) arr.push_back(step_to_json(s));
    emit(Json{{"term", print_term(t)}, {"reducts", arr}});
  } else {
    print_steps(std::cout, rs);
  }
  return 0;
}

int cmd_sn(const Config& c, const std::string& src) {
  Term t = parse_term(src);
  SnVerdict v = sn_verdict(t, c.rules(), c.nodes());
  if (c.json) {
    emit(verdict_to_json(v));
  } else {
    std::cout << verdict_name(v.verdict);
    if (v.sn()) std::cout << " eta=" << v.eta << " max_size=" << v.max_size;
    std::cout << "\n";
    for (const Term& w : v.witness) std::cout << "  " << print_term(w) << "\n";
  }
  return v.sn() ? 0 : v.not_sn() ? 1 : 2;
}

int cmd_isn(const Config& c, const std::string& src) {
  Term t = parse_term(src);
  IsnChecker checker(kDefaultIsnDepth, c.scaled(c.node_fuel, kDefaultIsnNodes));
  IsnDerivation d = checker.check(t);
  if (c.json)
    emit(Json{{"term", print_term(t)}, {"derivation", isn_to_json(d)}});
  else if (d)
    print_isn(std::cout, d, 0);
  else
    std::cout << "Unknown\n";
  return d ? 0 : 2;
}

int cmd_strategy(const Config& c, const std::string& src) {
  Term t = parse_term(src);
  SnOracle oracle(lambda_ex(), c.nodes(), c.bound());
  PerpetualTrace tr = perpetual_trace(t, oracle, c.steps());
  if (c.json) {
    emit(perpetual_trace_to_json(t, tr));
  } else {
    for (const auto& s : tr.steps) {
      std::cout << "  ";
      for (std::size_t i = 0; i < s.chain.size(); ++i)
        std::cout << (i ? " / " : "") << clause_name(s.chain[i]);
      std::cout << " at " << show_position(s.position) << " -> " << print_term(s.result) << "\n";
    }
    std::cout << run_status_name(tr.status) << " " << print_term(tr.final_term) << "\n";
  }
  return tr.status == RunStatus::NormalForm ? 0 : 2;
}

int cmd_measure(const Config& c, const std::string& src, std::vector<std::string> vars) {
  Term t = parse_term(src);
  if (vars.empty()) {
    NameSet seen = free_vars(t);
    for_each_position(t, [&](const Position&, const Term& sub) {
      if (sub.is_sub()) seen.insert(sub.name());
    });
    vars.assign(seen.begin(), seen.end());
  }
  SnOracle lex(lambda_ex(), c.nodes(), c.bound());
  Json ars = Json::object();
  for (const auto& x : vars) ars[x] = ar(t, x);
  Json phis = Json::array();
  for (const Term& u : label_bodies(t))
    phis.push_back(Json{{"body", print_term(u)}, {"phi", phi(u, lex)}});
  Json j{{"term", print_term(t)}, {"ar", ars}, {"dep", dep(t)}, {"k", k(t, lex)}, {"phi", phis}};
  // Always JSON: the measures form one record.
  emit(j);
  return 0;
}

int cmd_xc(const Config& c, const std::string& src, bool unlabel_only) {
  Term t = parse_term(src);
  Term r = unlabel_only ? unlabel(t) : xc(t);
  if (c.json)
    emit(Json{{"term", print_term(t)}, {"result", print_term(r)}});
  else
    std::cout << print_term(r) << "\n";
  return 0;
}

Environment parse_env(const std::vector<std::string>& bindings) {
  Environment env;
  for (const auto& b : bindings) {
    auto colon = b.find(':');
    if (colon == std::string::npos) throw UsageError("binding must be name:type, got " + b);
    std::string x = b.substr(0, colon);
    if (!env.emplace(x, parse_type(b.substr(colon + 1))).second)
      throw UsageError("identifier " + x + " bound twice");
  }
  return env;
}

int cmd_typecheck(const Config& c, const std::string& src, bool simple, const std::string& type,
                  const std::vector<std::string>& bindings) {
  Term t = parse_term(src);
  Environment env = parse_env(bindings);
  if (simple) {
    try {
      Type a = infer_simple(env, t);
      if (c.json)
        emit(Json{{"term", print_term(t)}, {"type", print_type(a)}});
      else
        std::cout << print_type(a) << "\n";
      return 0;
    } catch (const TypeError& e) {
      if (c.json)
        emit(Json{{"term", print_term(t)}, {"error", e.what()}});
      else
        std::cout << "error: " << e.what() << "\n";
      return 1;
    }
  }
  if (type.empty()) throw UsageError("typecheck needs --simple or --type");
  SearchBudget budget;
  budget.max_nodes = c.scaled(c.node_fuel, budget.max_nodes);
  JudgmentResult r = check_judgment_upto_subtype(env, t, parse_type(type), budget);
  if (c.json) {
    Json j{{"term", print_term(t)}, {"type", type}, {"derivable", r.derivable}};
    if (r.derivable) j["derivation"] = derivation_to_json(r.derivation);
    emit(j);
  } else {
    std::cout << (r.derivable ? "derivable" : "not found") << "\n";
  }
  return r.derivable ? 0 : 1;
}

int cmd_check_derivation(const Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IllFormedInput(std::string("invalid JSON: ") + e.what());
  }
  DerivationCheck r = check_derivation(derivation_from_json(j));
  if (c.json) {
    emit(Json{{"ok", r.ok}, {"diagnostics", r.diagnostics}});
  } else {
    std::cout << (r.ok ? "ok" : "invalid") << "\n";
    for (const auto& d : r.diagnostics) std::cout << "  " << d << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_subtype(const Config& c, const std::string& a, const std::string& b) {
  bool r = subtype(parse_type(a), parse_type(b));
  if (c.json)
    emit(Json{{"sub", a}, {"super", b}, {"result", r}});
  else
    std::cout << (r ? "true" : "false") << "\n";
  return r ? 0 : 1;
}

int cmd_superdev(const Config& c, const std::string& src) {
  Term t = parse_term(src);
  Term r = superdev(t);
  if (c.json)
    emit(Json{{"term", print_term(t)}, {"superdev", print_term(r)}});
  else
    std::cout << print_term(r) << "\n";
  return 0;
}

int cmd_zcheck(const Config& c, const std::string& src, std::size_t depth) {
  Term t = parse_term(src);
  ReachOptions o;
  o.max_depth = depth;
  o.node_budget = c.nodes();
  auto reports = z_check(t, o);
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == ZStatus::FailedLeg1 || r.status == ZStatus::FailedLeg2) code = 1;
    else if (r.status == ZStatus::FuelExhausted && code == 0) code = 2;
  }
  if (c.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(zreport_to_json(r));
    emit(Json{{"subject", print_term(t)}, {"superdev", print_term(superdev(t))}, {"reports", arr}});
  } else {
    std::cout << "superdev " << print_term(superdev(t)) << "\n";
    for (const auto& r : reports)
      std::cout << "  " << rule_name(r.step.rule) << " at " << show_position(r.step.position)
                << " -> " << print_term(r.step.after) << ": " << zstatus_name(r.status) << " ("
                << r.leg1.size() << " + " << r.leg2.size() << " steps)\n";
  }
  return code;
}

int cmd_confluence(const Config& c, const std::string& src, std::size_t depth,
                   std::size_t join_depth) {
  Term t = parse_term(src);
  ConfluenceOptions o;
  o.depth = depth;
  o.join_depth = join_depth;
  o.node_budget = c.nodes();
  ConfluenceResult r = confluence_check(t, c.rules(), o);
  if (c.json) {
    emit(confluence_to_json(r));
  } else {
    std::cout << confluence_status_name(r.status) << " (" << r.reachable << " reachable)\n";
    if (r.left) std::cout << "  " << print_term(r.left) << "\n  " << print_term(r.right) << "\n";
  }
  return r.status == ConfluenceStatus::Confluent ? 0
         : r.status == ConfluenceStatus::CounterexamplePeak ? 1
                                                            : 2;
}

int cmd_suite(const Config& c, const std::vector<std::string>& names) {
  SuiteOptions o;
  o.fuel_scale = c.scale;
  o.seed = c.seed;
  o.golden_dir = LEXKIT_GOLDEN_DIR;
  std::vector<int> ids;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& info : suite_catalog()) ids.push_back(info.id);
      continue;
    }
    int id = suite_id(n);
    if (!id) throw UsageError("unknown suite " + n);
    ids.push_back(id);
  }
  bool ok = true;
  Json arr = Json::array();
  for (int id : ids) {
    SuiteResult r = run_suite(id, o);
    ok = ok && r.pass;
    if (c.json)
      arr.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"notes", r.notes},
                         {"samples", r.samples}});
    else
      std::cout << format_result(r) << std::endl;
  }
  if (c.json) emit(arr);
  return ok ? 0 : 1;
}

double fuel_scale_from_env() {
  const char* s = std::getenv("LEXKIT_FUEL_SCALE");
  if (!s) return 1.0;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0) || !std::isfinite(v))
    throw UsageError(std::string("LEXKIT_FUEL_SCALE must be a positive decimal, got ") + s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Rewriting toolkit for the lambda-ex calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--ruleset", cfg.ruleset, "beta, lx, lex, lx-director, uex, luex");
  app.add_option("--fuel", cfg.node_fuel, "node fuel")->check(CLI::PositiveNumber);
  app.add_option("--step-fuel", cfg.step_fuel, "step fuel")->check(CLI::PositiveNumber);
  app.add_option("--class-bound", cfg.class_bound, "bound on equivalence classes")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");

  std::function<int()> run;
  std::string term, other, policy = "perpetual", type;
  std::vector<std::string> vars, env, names;
  bool simple = false;
  std::size_t depth = 3, join_depth = 6, zdepth = kDefaultReachBudget;

  auto* reduce = app.add_subcommand("reduce", "normal form and trace");
  reduce->add_option("term", term)->required();
  reduce->add_option("--policy", policy, "leftmost or perpetual");
  reduce->callback([&] { run = [&] { return cmd_reduce(cfg, term, policy); }; });

  auto* rd = app.add_subcommand("reducts", "one-step reducts");
  rd->add_option("term", term)->required();
  rd->callback([&] { run = [&] { return cmd_reducts(cfg, term); }; });

  auto* sn = app.add_subcommand("sn", "strong normalisation verdict (exit 0 SN, 1 not SN, 2 unknown)");
  sn->add_option("term", term)->required();
  sn->callback([&] { run = [&] { return cmd_sn(cfg, term); }; });

  auto* isn = app.add_subcommand("isn", "derivation in the inductive SN set");
  isn->add_option("term", term)->required();
  isn->callback([&] { run = [&] { return cmd_isn(cfg, term); }; });

  auto* st = app.add_subcommand("strategy", "perpetual strategy trace");
  st->add_option("term", term)->required();
  st->callback([&] { run = [&] { return cmd_strategy(cfg, term); }; });

  auto* me = app.add_subcommand("measure", "ar, dep, k and phi of a labelled term");
  me->add_option("term", term)->required();
  me->add_option("--var", vars, "variable for ar (repeatable)");
  me->callback([&] { run = [&] { return cmd_measure(cfg, term, vars); }; });

  auto* xc_cmd = app.add_subcommand("xc", "compute labelled substitutions");
  xc_cmd->add_option("term", term)->required();
  xc_cmd->callback([&] { run = [&] { return cmd_xc(cfg, term, false); }; });

  auto* ul = app.add_subcommand("unlabel", "turn labels into ordinary substitutions");
  ul->add_option("term", term)->required();
  ul->callback([&] { run = [&] { return cmd_xc(cfg, term, true); }; });

  auto* tc = app.add_subcommand("typecheck", "simple type inference or intersection type search");
  tc->add_option("term", term)->required();
  tc->add_flag("--simple", simple, "principal simple type");
  tc->add_option("--type", type, "target type for the intersection system");
  tc->add_option("--env", env, "binding name:type (repeatable)");
  tc->callback([&] { run = [&] { return cmd_typecheck(cfg, term, simple, type, env); }; });

  auto* cd = app.add_subcommand("check-derivation", "check a typing derivation in JSON");
  cd->add_option("file", other)->required();
  cd->callback([&] { run = [&] { return cmd_check_derivation(cfg, other); }; });

  auto* sub = app.add_subcommand("subtype", "A << B (exit 0 true, 1 false)");
  sub->add_option("sub", term)->required();
  sub->add_option("super", other)->required();
  sub->callback([&] { run = [&] { return cmd_subtype(cfg, term, other); }; });

  auto* sd = app.add_subcommand("superdev", "superdevelopment of a metaterm");
  sd->add_option("term", term)->required();
  sd->callback([&] { run = [&] { return cmd_superdev(cfg, term); }; });

  auto* zc = app.add_subcommand("zcheck", "Z property at every one-step reduct");
  zc->add_option("term", term)->required();
  zc->add_option("--depth", zdepth, "search depth per leg")->check(CLI::PositiveNumber);
  zc->callback([&] { run = [&] { return cmd_zcheck(cfg, term, zdepth); }; });

  auto* cf = app.add_subcommand("confluence", "bounded local confluence check");
  cf->add_option("term", term)->required();
  cf->add_option("--depth", depth, "peak depth")->check(CLI::PositiveNumber);
  cf->add_option("--join-depth", join_depth, "join depth")->check(CLI::PositiveNumber);
  cf->callback([&] { run = [&] { return cmd_confluence(cfg, term, depth, join_depth); }; });

  auto* su = app.add_subcommand("suite", "run acceptance suites by name, id or all");
  su->add_option("names", names)->required();
  su->callback([&] { run = [&] { return cmd_suite(cfg, names); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.scale = fuel_scale_from_env();
    return run();
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IllFormedInput& e) {
    std::cerr << "ill-formed input: " << e.what() << "\n";
    return kExitParse;
  } catch (const OracleUnknown& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return 2;
  } catch (const NotSN& e) {
    std::cerr << "not SN: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
