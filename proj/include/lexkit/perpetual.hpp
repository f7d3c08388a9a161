#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lexkit/engine.hpp"

namespace lexkit {

enum class Clause { PVar, PAbs, PB, PSubs1, PSubs2 };
std::string clause_name(Clause c);

struct OracleCall {
  Term term;
  SnVerdict verdict;
};

enum class StrategyStatus { Stepped, NormalForm, Unknown };

struct StrategyStep {
  StrategyStatus status = StrategyStatus::NormalForm;
  // Clauses from the root down; the last one (p-B or p-subs1) rewrites.
  std::vector<Clause> chain;
  Position position;  // where the last clause rewrites
  Term before;
  Term result;
  std::vector<OracleCall> oracle_calls;

  Clause rule() const { return chain.front(); }
  Clause base() const { return chain.back(); }
};

// No explicit substitution and no B-redex.
bool is_lex_normal(const Term& t);

StrategyStep perpetual_step(const Term& t, SnOracle& oracle);

// λex steps realising one strategy step: a B step, or a full composition.
std::vector<Step> expand_strategy_step(const StrategyStep& s);

enum class RunStatus { NormalForm, Unknown, FuelExhausted };
std::string run_status_name(RunStatus s);

struct PerpetualTrace {
  std::vector<StrategyStep> steps;
  Term final_term;
  RunStatus status = RunStatus::NormalForm;
};

PerpetualTrace perpetual_trace(const Term& t, SnOracle& oracle,
                               std::size_t max_steps = kDefaultStepFuel);

enum class IsnRule { Var, App, Subs, Abs };
std::string isn_rule_name(IsnRule r);

struct IsnNode {
  IsnRule rule;
  Term term;
  std::vector<std::shared_ptr<const IsnNode>> premises;
};
using IsnDerivation = std::shared_ptr<const IsnNode>;

constexpr std::size_t kDefaultIsnDepth = 4096;
constexpr std::size_t kDefaultIsnNodes = 200000;

// Syntax-directed derivation of membership in the inductive SN set; nullptr
// when the recursion does not bottom out within the fuels.
class IsnChecker {
 public:
  explicit IsnChecker(std::size_t depth_fuel = kDefaultIsnDepth,
                      std::size_t node_fuel = kDefaultIsnNodes);
  IsnDerivation check(const Term& t);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  IsnDerivation derive(const Term& t, std::size_t depth);

  std::size_t depth_fuel_;
  std::size_t node_fuel_;
  std::size_t nodes_ = 0;
  std::unordered_map<CanonicalKey, IsnDerivation> memo_;
  std::unordered_set<CanonicalKey> open_;
};

IsnDerivation isn_check(const Term& t, std::size_t depth_fuel = kDefaultIsnDepth);

struct PsnReport {
  Term term;
  SnVerdict beta;
  SnVerdict lex;
  bool violation = false;
};

PsnReport psn_sample(const Term& t, std::size_t node_fuel = kDefaultNodeFuel);

}  // namespace lexkit
