#pragma once

#include <vector>

#include "lexkit/engine.hpp"

namespace lexkit {

// Substitution-only trace from t[x/u] to t{x:=u}, modulo commutation.
// Constructed by structural recursion on t; LSub nodes are rejected.
std::vector<Step> full_composition_trace(const Term& t, const Name& x, const Term& u);

// Same, for the explicit substitution rooted at position p of `whole`.
std::vector<Step> full_composition_trace_at(const Term& whole, const Position& p);

std::vector<Step> beta_step(const Term& t);

// B step followed by full composition. Throws NotAReduct unless t →β t2.
std::vector<Step> simulate_beta(const Term& t, const Term& t2);

// λex trace for DsComp: t[x/u][y/v] → t[x/u[y/v]] via Comp then Gc.
std::vector<Step> simulate_director_step(const Step& s);

}  // namespace lexkit
