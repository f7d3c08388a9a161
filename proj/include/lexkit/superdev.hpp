#pragma once

#include <optional>
#include <vector>

#include "lexkit/engine.hpp"

namespace lexkit {

// Contracts every B-redex, including the ones created along the way, and
// computes every substitution.
Term superdev(const Term& t);

enum class ZStatus { Verified, FailedLeg1, FailedLeg2, FuelExhausted };
std::string zstatus_name(ZStatus s);

struct ZReport {
  Term subject;
  Step step;
  Term target;  // superdev of the subject
  std::vector<Step> leg1;  // step.after ->* superdev(subject)
  std::vector<Step> leg2;  // superdev(subject) ->* superdev(step.after)
  ZStatus status = ZStatus::Verified;
};

std::vector<ZReport> z_check(const Term& t, const ReachOptions& opts = {});

enum class ConfluenceStatus { Confluent, CounterexamplePeak, FuelExhausted };
std::string confluence_status_name(ConfluenceStatus s);

struct ConfluenceOptions {
  std::size_t depth = 3;
  std::size_t join_depth = 6;
  std::size_t node_budget = 20000;  // per reachable set
};

struct ConfluenceResult {
  ConfluenceStatus status = ConfluenceStatus::Confluent;
  std::size_t reachable = 0;
  // CounterexamplePeak: a pair whose reducts were all seen and never meet.
  // FuelExhausted: the first pair that did not meet within the bounds.
  Term left, right;
};

ConfluenceResult confluence_check(const Term& t, const RuleSet& rs,
                                  const ConfluenceOptions& opts = {});

enum class JoinStatus { Joinable, NotJoinable, FuelExhausted };
std::string join_status_name(JoinStatus s);

// Common reduct within join_depth steps from each side. NotJoinable is
// definitive only when `exhaustive` is set: both sides have finitely many
// reducts and all of them were seen.
struct JoinResult {
  JoinStatus status = JoinStatus::NotJoinable;
  bool exhaustive = false;
  Term meet;
};

JoinResult join(const Term& a, const Term& b, const RuleSet& rs, std::size_t join_depth,
                std::size_t node_budget = 20000);

struct NonConfluenceDemo {
  Term source;  // ((\x.?X{x,y}) y)[y/z]
  Term left;    // ?X{x,y}[x/y][y/z]
  Term right;   // ?X{x,y}[y/z][x/y[y/z]]
  JoinResult under_x;
  JoinResult under_lex;
  // The same peak with the metavariable replaced by the term x y.
  Term ground_left, ground_right;
  JoinResult ground_under_x;
};

NonConfluenceDemo lambda_x_nonconfluence_demo(std::size_t join_depth = 8);

}  // namespace lexkit
