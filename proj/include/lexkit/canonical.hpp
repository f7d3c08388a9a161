#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lexkit/term.hpp"

namespace lexkit {

// Alpha: renaming of bound names. E: Alpha plus commutation of independent
// explicit substitutions. EU: E plus the commutations involving labels.
enum class EqMode { Alpha, E, EU };

constexpr std::size_t kDefaultClassBound = 1024;

struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

// Nameless encoding: bound occurrences become binder distances.
std::string alpha_key(const Term& t);

CanonicalKey canonical_key(const Term& t, EqMode mode,
                           std::size_t bound = kDefaultClassBound);

// Members sorted by their Alpha encoding. Throws FuelExhausted past `bound`.
std::vector<Term> e_class(const Term& t, EqMode mode, std::size_t bound = kDefaultClassBound);

// Every term obtained from t by one licensed commutation at some position.
std::vector<Term> adjacent_swaps(const Term& t, EqMode mode);

// Commutes the two substitutions at the root of t, or returns an empty Term
// when they are not independent.
Term swap_root(const Term& t, EqMode mode);

}  // namespace lexkit

template <>
struct std::hash<lexkit::CanonicalKey> {
  std::size_t operator()(const lexkit::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
