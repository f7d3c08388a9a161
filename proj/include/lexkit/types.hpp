#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lexkit/term.hpp"

namespace lexkit {

enum class TypeKind : std::uint8_t { Atom, Arrow, Inter };

namespace detail {
struct TypeNode;
}

class Type {
 public:
  Type() = default;
  static Type atom(Name n);
  static Type arrow(Type dom, Type cod);
  static Type inter(Type l, Type r);

  explicit operator bool() const { return node_ != nullptr; }
  TypeKind kind() const;
  bool is(TypeKind k) const { return kind() == k; }
  const Name& name() const;
  // Arrow: domain and codomain. Inter: left and right operand.
  const Type& left() const;
  const Type& right() const;
  std::size_t depth() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  explicit Type(std::shared_ptr<const detail::TypeNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::TypeNode> node_;
};

using Environment = std::map<Name, Type>;

// Splits top-level intersections; arrows are kept whole.
std::vector<Type> flatten(const Type& t);
// a ≪ b: every component of b occurs among the components of a.
bool subtype(const Type& a, const Type& b);
bool is_simple(const Type& t);

enum class TypeRule { Ax, App, Abs, Subs, InterI, InterE };
std::string type_rule_name(TypeRule r);
std::optional<TypeRule> type_rule_from_name(const std::string& s);

struct TypeDerivation {
  TypeRule rule = TypeRule::Ax;
  Environment env;
  Term term;
  Type type;
  std::vector<TypeDerivation> premises;
};

struct DerivationCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

DerivationCheck check_derivation(const TypeDerivation& d);

struct SearchBudget {
  std::size_t max_inter = 2;   // components in a guessed intersection
  std::size_t max_nodes = 20000;
  std::size_t max_depth = 24;
};

struct JudgmentResult {
  bool derivable = false;
  TypeDerivation derivation;
};

// Bounded backward search; a negative answer is not a refutation.
JudgmentResult check_judgment_upto_subtype(const Environment& env, const Term& t,
                                           const Type& a, const SearchBudget& budget = {});

// Principal simple type; free variables outside env get fresh type variables.
// Throws TypeError on an occurs-check failure or a clash.
Type infer_simple(const Environment& env, const Term& t);

Term revb(const Term& t);

}  // namespace lexkit
