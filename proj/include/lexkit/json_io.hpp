#pragma once

#include <json.hpp>

#include "lexkit/engine.hpp"
#include "lexkit/perpetual.hpp"
#include "lexkit/superdev.hpp"
#include "lexkit/types.hpp"

namespace lexkit {

using Json = nlohmann::ordered_json;

Json step_to_json(const Step& s);
// {"root", "steps": [{"rule", "position", "to"}], "status": "ok"|"fuel"}
Json trace_to_json(const Term& root, const std::vector<Step>& steps, bool complete = true);

Json verdict_to_json(const SnVerdict& v);

Json derivation_to_json(const TypeDerivation& d);
// Throws IllFormedInput (or ParseError for embedded terms and types).
TypeDerivation derivation_from_json(const Json& j);

Json strategy_step_to_json(const StrategyStep& s);
Json perpetual_trace_to_json(const Term& root, const PerpetualTrace& tr);
Json isn_to_json(const IsnDerivation& d);
Json psn_to_json(const PsnReport& r);

Json zreport_to_json(const ZReport& r);
Json confluence_to_json(const ConfluenceResult& r);

}  // namespace lexkit
