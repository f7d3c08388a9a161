#include "lexkit/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "lexkit/canonical.hpp"
#include "lexkit/errors.hpp"

namespace lexkit {

namespace detail {

enum Flag : std::uint8_t {
  kHasESub = 1,
  kHasLSub = 2,
  kHasMeta = 4,
  kNestedESub = 8,
  kNestedSub = 16,
};

struct Node {
  Kind kind;
  Name name;
  Term c[2];
  std::vector<Name> decoration;
  std::vector<Name> fv;
  std::size_t size = 1;
  std::uint8_t flags = 0;
};

}  // namespace detail

namespace {

std::vector<Name> merge_sorted(const std::vector<Name>& a, const std::vector<Name>& b) {
  std::vector<Name> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Name> without(const std::vector<Name>& a, const Name& x) {
  std::vector<Name> out;
  out.reserve(a.size());
  for (const auto& n : a)
    if (n != x) out.push_back(n);
  return out;
}

const Term& null_term() {
  static const Term t;
  return t;
}

}  // namespace

Term Term::var(Name x) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Var;
  n->fv = {x};
  n->name = std::move(x);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::App;
  n->fv = merge_sorted(fun.free(), arg.free());
  n->size = 1 + fun.size() + arg.size();
  n->flags = fun.node_->flags | arg.node_->flags;
  n->c[0] = std::move(fun);
  n->c[1] = std::move(arg);
  return Term(std::move(n));
}

Term Term::lam(Name x, Term body) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Lam;
  n->fv = without(body.free(), x);
  n->size = 1 + body.size();
  n->flags = body.node_->flags;
  n->name = std::move(x);
  n->c[0] = std::move(body);
  return Term(std::move(n));
}

Term Term::esub(Term body, Name x, Term arg) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::ESub;
  n->fv = merge_sorted(without(body.free(), x), arg.free());
  n->size = 1 + body.size() + arg.size();
  n->flags = body.node_->flags | arg.node_->flags | detail::kHasESub;
  if (body.kind() == Kind::ESub) n->flags |= detail::kNestedESub;
  if (body.is_sub()) n->flags |= detail::kNestedSub;
  n->name = std::move(x);
  n->c[0] = std::move(body);
  n->c[1] = std::move(arg);
  return Term(std::move(n));
}

Term Term::lsub(Term body, Name x, Term arg) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::LSub;
  n->fv = merge_sorted(without(body.free(), x), arg.free());
  n->size = 1 + body.size() + arg.size();
  n->flags = body.node_->flags | arg.node_->flags | detail::kHasLSub;
  if (body.is_sub()) n->flags |= detail::kNestedSub;
  n->name = std::move(x);
  n->c[0] = std::move(body);
  n->c[1] = std::move(arg);
  return Term(std::move(n));
}

Term Term::meta(Name name, const NameSet& decoration) {
  auto n = std::make_shared<detail::Node>();
  n->kind = Kind::Meta;
  n->decoration.assign(decoration.begin(), decoration.end());
  n->fv = n->decoration;
  n->flags = detail::kHasMeta;
  n->name = std::move(name);
  return Term(std::move(n));
}

Kind Term::kind() const { return node_->kind; }
const Name& Term::name() const { return node_->name; }

const Term& Term::fun() const {
  assert(kind() == Kind::App);
  return node_->c[0];
}

const Term& Term::arg() const {
  assert(kind() == Kind::App || is_sub());
  return node_->c[1];
}

const Term& Term::body() const {
  assert(kind() == Kind::Lam || is_sub());
  return node_->c[0];
}

const std::vector<Name>& Term::decoration() const { return node_->decoration; }

int Term::arity() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Meta:
      return 0;
    case Kind::Lam:
      return 1;
    default:
      return 2;
  }
}

const Term& Term::child(int i) const {
  if (i < 0 || i >= arity()) return null_term();
  return node_->c[i];
}

const std::vector<Name>& Term::free() const { return node_->fv; }

bool Term::has_free(const Name& x) const {
  return std::binary_search(node_->fv.begin(), node_->fv.end(), x);
}

std::size_t Term::size() const { return node_->size; }
bool Term::has_esub() const { return node_->flags & detail::kHasESub; }
bool Term::has_lsub() const { return node_->flags & detail::kHasLSub; }
bool Term::has_meta() const { return node_->flags & detail::kHasMeta; }
bool Term::has_nested_esub() const { return node_->flags & detail::kNestedESub; }
bool Term::has_nested_sub() const { return node_->flags & detail::kNestedSub; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size || x.name != y.name) return false;
  if (x.kind == Kind::Meta) return x.decoration == y.decoration;
  for (int i = 0; i < a.arity(); ++i)
    if (!(x.c[i] == y.c[i])) return false;
  return true;
}

NameSet free_vars(const Term& t) { return NameSet(t.free().begin(), t.free().end()); }

namespace {

void collect_bound(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::Meta:
      return;
    case Kind::App:
      collect_bound(t.fun(), out);
      collect_bound(t.arg(), out);
      return;
    case Kind::Lam:
      out.insert(t.name());
      collect_bound(t.body(), out);
      return;
    case Kind::ESub:
    case Kind::LSub:
      out.insert(t.name());
      collect_bound(t.body(), out);
      collect_bound(t.arg(), out);
      return;
  }
}

}  // namespace

NameSet bound_vars(const Term& t) {
  NameSet out;
  collect_bound(t, out);
  return out;
}

void collect_names(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case Kind::Var:
      out.insert(t.name());
      return;
    case Kind::Meta:
      out.insert(t.decoration().begin(), t.decoration().end());
      return;
    default:
      if (t.kind() != Kind::App) out.insert(t.name());
      for (int i = 0; i < t.arity(); ++i) collect_names(t.child(i), out);
  }
}

NameSet all_names(const Term& t) {
  NameSet out;
  collect_names(t, out);
  return out;
}

bool is_term(const Term& t) { return !t.has_lsub() && !t.has_meta(); }
bool is_metaterm(const Term& t) { return !t.has_lsub(); }
bool is_lambda_term(const Term& t) { return is_term(t) && !t.has_esub(); }

Name fresh_name(const Name& base, NameSet& avoid) {
  std::size_t cut = base.size();
  while (cut > 1 && std::isdigit(static_cast<unsigned char>(base[cut - 1]))) --cut;
  const Name stem = base.substr(0, cut);
  for (std::size_t i = 1;; ++i) {
    Name candidate = stem + std::to_string(i);
    if (!avoid.count(candidate)) {
      avoid.insert(candidate);
      return candidate;
    }
  }
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int i : p) {
    if (i < 0 || i >= cur->arity()) throw IllFormedInput("position outside term");
    cur = &cur->child(i);
  }
  return *cur;
}

bool valid_position(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int i : p) {
    if (i < 0 || i >= cur->arity()) return false;
    cur = &cur->child(i);
  }
  return true;
}

namespace {

Term with_child(const Term& t, int i, Term c) {
  switch (t.kind()) {
    case Kind::App:
      return i == 0 ? Term::app(std::move(c), t.arg()) : Term::app(t.fun(), std::move(c));
    case Kind::Lam:
      return Term::lam(t.name(), std::move(c));
    case Kind::ESub:
      return i == 0 ? Term::esub(std::move(c), t.name(), t.arg())
                    : Term::esub(t.body(), t.name(), std::move(c));
    case Kind::LSub:
      return i == 0 ? Term::lsub(std::move(c), t.name(), t.arg())
                    : Term::lsub(t.body(), t.name(), std::move(c));
    default:
      throw IllFormedInput("position outside term");
  }
}

Term replace_from(const Term& t, const Position& p, std::size_t depth, const Term& r) {
  if (depth == p.size()) return r;
  int i = p[depth];
  if (i < 0 || i >= t.arity()) throw IllFormedInput("position outside term");
  return with_child(t, i, replace_from(t.child(i), p, depth + 1, r));
}

void walk(const Term& t, Position& p,
          const std::function<void(const Position&, const Term&)>& f) {
  f(p, t);
  for (int i = 0; i < t.arity(); ++i) {
    p.push_back(i);
    walk(t.child(i), p, f);
    p.pop_back();
  }
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
  return replace_from(t, p, 0, replacement);
}

void for_each_position(const Term& t,
                       const std::function<void(const Position&, const Term&)>& f) {
  Position p;
  walk(t, p, f);
}

Term apply_spine(Term head, const std::vector<Term>& args) {
  for (const auto& a : args) head = Term::app(std::move(head), a);
  return head;
}

std::pair<Term, std::vector<Term>> unspine(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (cur->kind() == Kind::App) {
    args.push_back(cur->arg());
    cur = &cur->fun();
  }
  std::reverse(args.begin(), args.end());
  return {*cur, std::move(args)};
}

Term rename_free(const Term& t, const Name& from, const Name& to) {
  if (!t.has_free(from)) return t;
  switch (t.kind()) {
    case Kind::Var:
      return Term::var(to);
    case Kind::Meta: {
      NameSet d(t.decoration().begin(), t.decoration().end());
      d.erase(from);
      d.insert(to);
      return Term::meta(t.name(), d);
    }
    case Kind::App:
      return Term::app(rename_free(t.fun(), from, to), rename_free(t.arg(), from, to));
    case Kind::Lam:
      return Term::lam(t.name(), rename_free(t.body(), from, to));
    case Kind::ESub:
    case Kind::LSub: {
      Term b = t.name() == from ? t.body() : rename_free(t.body(), from, to);
      Term a = rename_free(t.arg(), from, to);
      return t.kind() == Kind::ESub ? Term::esub(std::move(b), t.name(), std::move(a))
                                    : Term::lsub(std::move(b), t.name(), std::move(a));
    }
  }
  return t;
}

namespace {

struct Substituter {
  const Name& x;
  const Term& v;
  const Term& root;
  NameSet avoid;
  bool avoid_ready = false;

  Name fresh(const Name& base) {
    if (!avoid_ready) {
      collect_names(root, avoid);
      collect_names(v, avoid);
      avoid.insert(x);
      avoid_ready = true;
    }
    return fresh_name(base, avoid);
  }

  Term go(const Term& s) {
    if (!s.has_free(x)) return s;
    switch (s.kind()) {
      case Kind::Var:
        return v;
      case Kind::Meta:
        return Term::esub(s, x, v);
      case Kind::App:
        return Term::app(go(s.fun()), go(s.arg()));
      case Kind::Lam: {
        Name y = s.name();
        Term b = s.body();
        if (v.has_free(y)) {
          Name y2 = fresh(y);
          b = rename_free(b, y, y2);
          y = y2;
        }
        return Term::lam(y, go(b));
      }
      case Kind::ESub: {
        Term a = go(s.arg());
        Name y = s.name();
        Term b = s.body();
        if (y != x && b.has_free(x)) {
          if (v.has_free(y)) {
            Name y2 = fresh(y);
            b = rename_free(b, y, y2);
            y = y2;
          }
          b = go(b);
        }
        return Term::esub(std::move(b), y, std::move(a));
      }
      case Kind::LSub:
        break;
    }
    throw IllFormedInput("meta-substitution into a labelled term");
  }
};

}  // namespace

Term subst(const Term& t, const Name& x, const Term& v) {
  if (t.has_lsub() || v.has_lsub())
    throw IllFormedInput("meta-substitution into a labelled term");
  Substituter s{x, v, t, {}, false};
  return s.go(t);
}

bool alpha_eq(const Term& a, const Term& b) { return alpha_key(a) == alpha_key(b); }

}  // namespace lexkit
