#include "lexkit/canonical.hpp"

#include <algorithm>
#include <map>

#include "lexkit/errors.hpp"

namespace lexkit {

namespace {

void encode_name(const Name& n, const std::vector<const Name*>& scope, std::string& out) {
  for (std::size_t i = scope.size(); i-- > 0;) {
    if (*scope[i] == n) {
      out += '#';
      out += std::to_string(scope.size() - 1 - i);
      out += ';';
      return;
    }
  }
  out += '$';
  out += n;
  out += ';';
}

void encode(const Term& t, std::vector<const Name*>& scope, std::string& out) {
  switch (t.kind()) {
    case Kind::Var:
      encode_name(t.name(), scope, out);
      return;
    case Kind::Meta: {
      out += '?';
      out += t.name();
      out += '{';
      std::vector<std::string> items;
      for (const auto& d : t.decoration()) {
        std::string s;
        encode_name(d, scope, s);
        items.push_back(std::move(s));
      }
      std::sort(items.begin(), items.end());
      for (const auto& s : items) out += s;
      out += '}';
      return;
    }
    case Kind::App:
      out += '@';
      encode(t.fun(), scope, out);
      encode(t.arg(), scope, out);
      return;
    case Kind::Lam:
      out += '\\';
      scope.push_back(&t.name());
      encode(t.body(), scope, out);
      scope.pop_back();
      return;
    case Kind::ESub:
    case Kind::LSub:
      out += t.kind() == Kind::ESub ? '[' : '<';
      encode(t.arg(), scope, out);
      scope.push_back(&t.name());
      encode(t.body(), scope, out);
      scope.pop_back();
      return;
  }
}

bool licensed_pair(const Term& outer, EqMode mode) {
  if (!outer.is_sub() || !outer.body().is_sub()) return false;
  if (mode == EqMode::E)
    return outer.kind() == Kind::ESub && outer.body().kind() == Kind::ESub;
  return mode == EqMode::EU;
}

Term rebuild_sub(Kind k, Term body, const Name& x, Term arg) {
  return k == Kind::ESub ? Term::esub(std::move(body), x, std::move(arg))
                         : Term::lsub(std::move(body), x, std::move(arg));
}

bool needs_swap_check(const Term& t, EqMode mode) {
  if (mode == EqMode::Alpha) return false;
  return mode == EqMode::E ? t.has_nested_esub() : t.has_nested_sub();
}

void collect_swaps(const Term& t, EqMode mode, std::vector<Term>& out) {
  if (!needs_swap_check(t, mode)) return;
  if (Term s = swap_root(t, mode)) out.push_back(std::move(s));
  for (int i = 0; i < t.arity(); ++i) {
    std::vector<Term> inner;
    collect_swaps(t.child(i), mode, inner);
    for (auto& c : inner) {
      Position p{i};
      out.push_back(replace_at(t, p, c));
    }
  }
}

}  // namespace

std::string alpha_key(const Term& t) {
  std::string out;
  out.reserve(t.size() * 4);
  std::vector<const Name*> scope;
  encode(t, scope, out);
  return out;
}

Term swap_root(const Term& t, EqMode mode) {
  if (!licensed_pair(t, mode)) return {};
  // t = inner(s, x, u) outer-bound to y/v
  const Term& inner = t.body();
  const Name& y = t.name();
  const Term& v = t.arg();
  const Term& u = inner.arg();
  if (u.has_free(y)) return {};
  Name x = inner.name();
  Term s = inner.body();
  if (x == y || v.has_free(x)) {
    NameSet avoid = all_names(t);
    Name x2 = fresh_name(x, avoid);
    s = rename_free(s, x, x2);
    x = x2;
  }
  return rebuild_sub(inner.kind(), rebuild_sub(t.kind(), s, y, v), x, u);
}

std::vector<Term> adjacent_swaps(const Term& t, EqMode mode) {
  std::vector<Term> out;
  collect_swaps(t, mode, out);
  return out;
}

std::vector<Term> e_class(const Term& t, EqMode mode, std::size_t bound) {
  if (!needs_swap_check(t, mode)) return {t};
  std::map<std::string, Term> seen;
  std::vector<Term> todo{t};
  seen.emplace(alpha_key(t), t);
  while (!todo.empty()) {
    Term cur = std::move(todo.back());
    todo.pop_back();
    for (auto& n : adjacent_swaps(cur, mode)) {
      auto [it, fresh] = seen.emplace(alpha_key(n), n);
      if (!fresh) continue;
      if (seen.size() > bound) throw FuelExhausted("equivalence class exceeds bound");
      todo.push_back(std::move(n));
    }
  }
  std::vector<Term> out;
  out.reserve(seen.size());
  for (auto& [k, m] : seen) out.push_back(m);
  return out;
}

CanonicalKey canonical_key(const Term& t, EqMode mode, std::size_t bound) {
  if (!needs_swap_check(t, mode)) return {alpha_key(t)};
  auto cls = e_class(t, mode, bound);
  return {alpha_key(cls.front())};
}

}  // namespace lexkit
