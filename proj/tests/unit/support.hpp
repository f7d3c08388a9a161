#pragma once

#include <string>

#include "lexkit/canonical.hpp"
#include "lexkit/syntax.hpp"
#include "lexkit/term.hpp"
#include "lexkit/types.hpp"

namespace lexkit::testing {

inline Term T(const std::string& s) { return parse_term(s); }
inline Type Ty(const std::string& s) { return parse_type(s); }
inline std::string P(const Term& t) { return print_term(t); }

inline CanonicalKey E(const Term& t) { return canonical_key(t, EqMode::E); }
inline bool same_class(const Term& a, const Term& b) { return E(a) == E(b); }

}  // namespace lexkit::testing
