#pragma once

#include <cstdint>
#include <vector>

#include "lexkit/engine.hpp"

namespace lexkit {

// The fixed set S of names that label bodies may mention and binders avoid.
struct LabelContext {
  NameSet S;
};

struct LabelledTerm {
  Term term;
  LabelContext ctx;
};

// t[[x/u]] a1 ... an with S = fv(u); binders in S are renamed away.
// Throws NotSN or OracleUnknown unless u is proved SN.
LabelledTerm make_labelled(const Term& t, const Name& x, const Term& u,
                           const std::vector<Term>& args, SnOracle& lex);

// Binders occurring in S are renamed to fresh names.
Term rename_binders_off(const Term& t, const NameSet& S);

bool is_labelled(const Term& t, const LabelContext& ctx, SnOracle& lex);

// Number of bodies of unlabelled substitutions with x free, nested.
std::uint64_t ar(const Term& t, const Name& x);
std::uint64_t dep(const Term& t);
// 1 + eta + max_size; throws NotSN / OracleUnknown.
std::uint64_t phi(const Term& u, SnOracle& lex);
std::uint64_t k(const Term& t, SnOracle& lex);

// Computes every labelled substitution.
Term xc(const Term& t);
// Turns labelled substitutions into ordinary ones.
Term unlabel(const Term& t);

enum class StepSide { Internal, External };
std::string step_side_name(StepSide s);
StepSide split_step(const Step& s);

// A step from t whose unlabelling has the same class as s.after.
// Throws NotLiftable when none exists.
Step lift_step(const Term& t, const Step& s, const LabelContext& ctx);

}  // namespace lexkit
