#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lexkit {

using Name = std::string;
using NameSet = std::set<Name>;
// Path from the root: App 0=fun 1=arg, Lam 0=body, ESub/LSub 0=body 1=arg.
using Position = std::vector<int>;

enum class Kind : std::uint8_t { Var, App, Lam, ESub, LSub, Meta };

namespace detail {
struct Node;
}

// Immutable term tree covering pure terms, metaterms and labelled terms.
class Term {
 public:
  Term() = default;

  static Term var(Name x);
  static Term app(Term fun, Term arg);
  static Term lam(Name x, Term body);
  static Term esub(Term body, Name x, Term arg);
  static Term lsub(Term body, Name x, Term arg);
  static Term meta(Name name, const NameSet& decoration);

  explicit operator bool() const { return node_ != nullptr; }

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_sub() const { return is(Kind::ESub) || is(Kind::LSub); }

  // Variable name, binder of Lam/ESub/LSub, or metavariable name.
  const Name& name() const;
  const Term& fun() const;
  const Term& arg() const;
  const Term& body() const;
  const std::vector<Name>& decoration() const;

  int arity() const;
  const Term& child(int i) const;

  // Sorted, duplicate free.
  const std::vector<Name>& free() const;
  bool has_free(const Name& x) const;

  std::size_t size() const;
  bool has_esub() const;
  bool has_lsub() const;
  bool has_meta() const;
  // Some ESub directly over an ESub.
  bool has_nested_esub() const;
  // Some ESub/LSub directly over an ESub/LSub.
  bool has_nested_sub() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  explicit Term(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

NameSet free_vars(const Term& t);
NameSet bound_vars(const Term& t);
// Every name occurring anywhere: free, bound, binders and decorations.
void collect_names(const Term& t, NameSet& out);
NameSet all_names(const Term& t);

bool is_term(const Term& t);
bool is_metaterm(const Term& t);
bool is_lambda_term(const Term& t);

// base with trailing digits replaced by the first counter value not in avoid;
// the result is added to avoid.
Name fresh_name(const Name& base, NameSet& avoid);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);
bool valid_position(const Term& t, const Position& p);

// Pre-order traversal (outermost first, then left to right).
void for_each_position(const Term& t,
                       const std::function<void(const Position&, const Term&)>& f);

Term apply_spine(Term head, const std::vector<Term>& args);
// Splits t = h a1 ... an with h not an application.
std::pair<Term, std::vector<Term>> unspine(const Term& t);

// Renames free occurrences of `from` to `to`, including inside decorations.
// `to` must not occur in t.
Term rename_free(const Term& t, const Name& from, const Name& to);

// Capture-avoiding meta-substitution t{x:=v}. Throws IllFormedInput on LSub.
Term subst(const Term& t, const Name& x, const Term& v);

bool alpha_eq(const Term& a, const Term& b);

}  // namespace lexkit
