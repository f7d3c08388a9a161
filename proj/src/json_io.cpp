#include "lexkit/json_io.hpp"

#include "lexkit/errors.hpp"
#include "lexkit/syntax.hpp"

namespace lexkit {

Json step_to_json(const Step& s) {
  return Json{{"rule", std::string(rule_name(s.rule))},
              {"position", s.position},
              {"to", print_term(s.after)}};
}

Json trace_to_json(const Term& root, const std::vector<Step>& steps, bool complete) {
  Json arr = Json::array();
  for (const Step& s : steps) arr.push_back(step_to_json(s));
  return Json{{"root", print_term(root)}, {"steps", arr}, {"status", complete ? "ok" : "fuel"}};
}

Json verdict_to_json(const SnVerdict& v) {
  Json j{{"verdict", verdict_name(v.verdict)}};
  if (v.sn()) {
    j["eta"] = v.eta;
    j["max_size"] = v.max_size;
  }
  if (v.not_sn()) {
    Json w = Json::array();
    for (const Term& t : v.witness) w.push_back(print_term(t));
    j["witness"] = w;
  }
  return j;
}

Json derivation_to_json(const TypeDerivation& d) {
  Json env = Json::array();
  for (auto& [x, ty] : d.env) env.push_back(Json::array({x, print_type(ty)}));
  Json prem = Json::array();
  for (const auto& p : d.premises) prem.push_back(derivation_to_json(p));
  return Json{{"rule", type_rule_name(d.rule)},
              {"env", env},
              {"term", d.term ? print_term(d.term) : ""},
              {"type", d.type ? print_type(d.type) : ""},
              {"premises", prem}};
}

TypeDerivation derivation_from_json(const Json& j) {
  if (!j.is_object()) throw IllFormedInput("derivation node must be an object");
  for (const char* f : {"rule", "env", "term", "type"})
    if (!j.contains(f)) throw IllFormedInput(std::string("derivation node lacks \"") + f + "\"");
  TypeDerivation d;
  auto rule = type_rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw IllFormedInput("unknown typing rule " + j.at("rule").dump());
  d.rule = *rule;
  if (!j.at("env").is_array()) throw IllFormedInput("env must be an array of pairs");
  for (const auto& b : j.at("env")) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_string())
      throw IllFormedInput("env entries must be [identifier, type] pairs");
    auto name = b[0].get<std::string>();
    if (!d.env.emplace(name, parse_type(b[1].get<std::string>())).second)
      throw IllFormedInput("identifier " + name + " bound twice in one environment");
  }
  d.term = parse_term(j.at("term").get<std::string>());
  d.type = parse_type(j.at("type").get<std::string>());
  if (j.contains("premises")) {
    if (!j.at("premises").is_array()) throw IllFormedInput("premises must be an array");
    for (const auto& p : j.at("premises")) d.premises.push_back(derivation_from_json(p));
  }
  return d;
}

Json strategy_step_to_json(const StrategyStep& s) {
  Json chain = Json::array();
  for (Clause c : s.chain) chain.push_back(clause_name(c));
  Json calls = Json::array();
  for (const auto& c : s.oracle_calls)
    calls.push_back(Json{{"term", print_term(c.term)}, {"verdict", verdict_name(c.verdict.verdict)}});
  Json j{{"rule", s.chain.empty() ? "" : clause_name(s.rule())}, {"chain", chain}};
  if (s.status == StrategyStatus::Stepped) {
    j["position"] = s.position;
    j["result"] = print_term(s.result);
  }
  j["oracle_calls"] = calls;
  return j;
}

Json perpetual_trace_to_json(const Term& root, const PerpetualTrace& tr) {
  Json steps = Json::array();
  for (const auto& s : tr.steps) steps.push_back(strategy_step_to_json(s));
  return Json{{"root", print_term(root)},
              {"steps", steps},
              {"final", print_term(tr.final_term)},
              {"status", run_status_name(tr.status)}};
}

Json isn_to_json(const IsnDerivation& d) {
  if (!d) return nullptr;
  Json prem = Json::array();
  for (const auto& p : d->premises) prem.push_back(isn_to_json(p));
  return Json{{"rule", isn_rule_name(d->rule)}, {"term", print_term(d->term)}, {"premises", prem}};
}

Json psn_to_json(const PsnReport& r) {
  return Json{{"term", print_term(r.term)},
              {"beta", verdict_name(r.beta.verdict)},
              {"lex", verdict_name(r.lex.verdict)},
              {"violation", r.violation}};
}

Json zreport_to_json(const ZReport& r) {
  return Json{{"subject", print_term(r.subject)},
              {"step", step_to_json(r.step)},
              {"target", print_term(r.target)},
              {"leg1", trace_to_json(r.step.after, r.leg1)},
              {"leg2", trace_to_json(r.target, r.leg2)},
              {"status", zstatus_name(r.status)}};
}

Json confluence_to_json(const ConfluenceResult& r) {
  Json j{{"status", confluence_status_name(r.status)}, {"reachable", r.reachable}};
  if (r.status == ConfluenceStatus::CounterexamplePeak)
    j["peak"] = Json::array({print_term(r.left), print_term(r.right)});
  else if (r.status == ConfluenceStatus::FuelExhausted && r.left)
    j["unjoined"] = Json::array({print_term(r.left), print_term(r.right)});
  return j;
}

}  // namespace lexkit
