#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexkit/canonical.hpp"
#include "lexkit/rules.hpp"
#include "lexkit/term.hpp"

namespace lexkit {

constexpr std::size_t kDefaultNodeFuel = 20000;
constexpr std::size_t kDefaultStepFuel = 100000;
constexpr std::size_t kDefaultReachBudget = 64;

// `before` is the member of the equivalence class that was rewritten.
struct Step {
  Rule rule = Rule::B;
  Position position;
  Term before;
  Term after;
};

struct Reduct {
  Step step;
  CanonicalKey key;
};

// One-step reducts modulo rs.mode, deduplicated by (rule, target key).
std::vector<Reduct> reducts_keyed(const Term& t, const RuleSet& rs,
                                  std::size_t class_bound = kDefaultClassBound);
std::vector<Step> reducts(const Term& t, const RuleSet& rs,
                          std::size_t class_bound = kDefaultClassBound);

enum class GraphStatus { Complete, FuelExhausted };

struct ReductionGraph {
  CanonicalKey root;
  std::map<CanonicalKey, Term> nodes;
  std::map<CanonicalKey, std::set<std::pair<Rule, CanonicalKey>>> edges;
  GraphStatus status = GraphStatus::Complete;
  bool cyclic = false;
};

using StepFilter = std::function<bool(const Step&)>;

ReductionGraph explore(const Term& t, const RuleSet& rs, std::size_t node_fuel = kDefaultNodeFuel,
                       const StepFilter& keep = nullptr,
                       std::size_t class_bound = kDefaultClassBound);

enum class Verdict { ProvedSN, ProvedNotSN, Unknown };
std::string verdict_name(Verdict v);

struct SnVerdict {
  Verdict verdict = Verdict::Unknown;
  std::uint64_t eta = 0;
  std::uint64_t max_size = 0;
  // Path from the subject into a cycle; the last term repeats an earlier one.
  std::vector<Term> witness;

  bool sn() const { return verdict == Verdict::ProvedSN; }
  bool not_sn() const { return verdict == Verdict::ProvedNotSN; }
};

// k on label-free terms: size-like with substitution bodies multiplied.
std::uint64_t k_plain(const Term& t);

// Verdict read off a full exploration of the reduction graph.
SnVerdict sn_verdict(const Term& t, const RuleSet& rs, std::size_t node_fuel = kDefaultNodeFuel);

// Memoising SN oracle: depth-first search over canonical keys with
// per-call node fuel. Results are cached across calls.
class SnOracle {
 public:
  explicit SnOracle(RuleSet rs, std::size_t node_fuel = kDefaultNodeFuel,
                    std::size_t class_bound = kDefaultClassBound);

  SnVerdict verdict(const Term& t);
  const RuleSet& rules() const { return rs_; }
  std::size_t node_fuel() const { return fuel_; }
  std::size_t cache_size() const { return sn_.size() + not_sn_.size(); }

 private:
  struct Proved {
    std::uint64_t eta;
    std::uint64_t max_size;
  };
  struct Refuted {
    std::shared_ptr<const std::vector<Term>> path;
    std::size_t from;
  };

  std::uint64_t measure(const Term& t);

  RuleSet rs_;
  std::size_t fuel_;
  std::size_t class_bound_;
  std::unordered_map<CanonicalKey, Proved> sn_;
  std::unordered_map<CanonicalKey, Refuted> not_sn_;
  std::unique_ptr<SnOracle> body_oracle_;
};

enum class Policy { Leftmost, PerpetualStrategy };

struct NormalizeResult {
  Term result;
  std::vector<Step> trace;
  bool complete = true;  // false: step fuel ran out first
};

// Leftmost picks the outermost-leftmost redex. PerpetualStrategy requires LambdaEx
// and is served by perpetual_normalize.
NormalizeResult normalize(const Term& t, const RuleSet& rs,
                          std::size_t step_fuel = kDefaultStepFuel,
                          Policy policy = Policy::Leftmost);

struct TraceCheck {
  bool ok = true;
  std::size_t failed_at = 0;
  std::string diagnostic;
};

// Each step must start from a member of the previous term's class and
// rewrite exactly as recorded.
TraceCheck check_step(const Term& from, const Step& s, const RuleSet& rs);
TraceCheck check_trace(const Term& start, const std::vector<Step>& steps, const RuleSet& rs);

enum class ReachStatus { Found, Unreachable, FuelExhausted };

struct ReachResult {
  ReachStatus status = ReachStatus::Unreachable;
  std::vector<Step> path;
};

struct ReachOptions {
  std::size_t min_steps = 0;  // 0 for reflexive-transitive, 1 for transitive
  std::size_t max_depth = kDefaultReachBudget;
  std::size_t node_budget = kDefaultNodeFuel;
};

// Breadth-first search for a shortest path to the target class.
ReachResult reach(const Term& from, const CanonicalKey& target, const RuleSet& rs,
                  const ReachOptions& opts = {});

bool position_less(const Position& a, const Position& b);

}  // namespace lexkit
