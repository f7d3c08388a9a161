#include "lexkit/types.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "lexkit/errors.hpp"
#include "lexkit/syntax.hpp"

namespace lexkit {

namespace detail {

struct TypeNode {
  TypeKind kind;
  Name name;
  Type l, r;
  std::size_t depth = 1;
};

}  // namespace detail

Type Type::atom(Name n) {
  auto node = std::make_shared<detail::TypeNode>();
  node->kind = TypeKind::Atom;
  node->name = std::move(n);
  return Type(std::move(node));
}

Type Type::arrow(Type dom, Type cod) {
  auto node = std::make_shared<detail::TypeNode>();
  node->kind = TypeKind::Arrow;
  node->depth = 1 + std::max(dom.depth(), cod.depth());
  node->l = std::move(dom);
  node->r = std::move(cod);
  return Type(std::move(node));
}

Type Type::inter(Type l, Type r) {
  auto node = std::make_shared<detail::TypeNode>();
  node->kind = TypeKind::Inter;
  node->depth = 1 + std::max(l.depth(), r.depth());
  node->l = std::move(l);
  node->r = std::move(r);
  return Type(std::move(node));
}

TypeKind Type::kind() const { return node_->kind; }
const Name& Type::name() const { return node_->name; }
const Type& Type::left() const { return node_->l; }
const Type& Type::right() const { return node_->r; }
std::size_t Type::depth() const { return node_->depth; }

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_ || !b.node_) return a.node_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.kind() == TypeKind::Atom) return a.name() <=> b.name();
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

namespace {

void flatten_into(const Type& t, std::vector<Type>& out) {
  if (t.is(TypeKind::Inter)) {
    flatten_into(t.left(), out);
    flatten_into(t.right(), out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

std::vector<Type> flatten(const Type& t) {
  std::vector<Type> out;
  flatten_into(t, out);
  return out;
}

bool subtype(const Type& a, const Type& b) {
  auto have = flatten(a);
  for (const Type& c : flatten(b))
    if (std::find(have.begin(), have.end(), c) == have.end()) return false;
  return true;
}

bool is_simple(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Atom: return true;
    case TypeKind::Arrow: return is_simple(t.left()) && is_simple(t.right());
    case TypeKind::Inter: return false;
  }
  return false;
}

std::string type_rule_name(TypeRule r) {
  switch (r) {
    case TypeRule::Ax: return "ax";
    case TypeRule::App: return "app";
    case TypeRule::Abs: return "abs";
    case TypeRule::Subs: return "subs";
    case TypeRule::InterI: return "inter-I";
    case TypeRule::InterE: return "inter-E";
  }
  return "?";
}

std::optional<TypeRule> type_rule_from_name(const std::string& s) {
  for (TypeRule r : {TypeRule::Ax, TypeRule::App, TypeRule::Abs, TypeRule::Subs, TypeRule::InterI,
                     TypeRule::InterE})
    if (type_rule_name(r) == s) return r;
  if (s == "∩I") return TypeRule::InterI;
  if (s == "∩E") return TypeRule::InterE;
  return std::nullopt;
}

namespace {

struct Checker {
  DerivationCheck& out;

  void fail(const std::string& where, const TypeDerivation& d, const std::string& why) {
    out.ok = false;
    out.diagnostics.push_back(where + " (" + type_rule_name(d.rule) + "): " + why);
  }

  bool arity(const std::string& where, const TypeDerivation& d, std::size_t n) {
    if (d.premises.size() == n) return true;
    fail(where, d, "expected " + std::to_string(n) + " premise(s), found " +
                       std::to_string(d.premises.size()));
    return false;
  }

  void same_env(const std::string& where, const TypeDerivation& d, const TypeDerivation& p,
                const char* which) {
    if (p.env != d.env) fail(where, d, std::string(which) + " premise environment differs");
  }

  void extended_env(const std::string& where, const TypeDerivation& d, const TypeDerivation& p,
                    const Name& x, const Type& b) {
    if (d.env.count(x)) {
      fail(where, d, "binder " + x + " already bound in the environment");
      return;
    }
    Environment want = d.env;
    want.emplace(x, b);
    if (p.env != want)
      fail(where, d, "premise environment is not the conclusion extended with " + x + ":" +
                         print_type(b));
  }

  void check(const TypeDerivation& d, const std::string& where) {
    for (std::size_t i = 0; i < d.premises.size(); ++i)
      check(d.premises[i], where + "/" + std::to_string(i));
    if (!d.term || !d.type) {
      fail(where, d, "missing term or type");
      return;
    }
    switch (d.rule) {
      case TypeRule::Ax: {
        if (!arity(where, d, 0)) return;
        if (!d.term.is(Kind::Var)) return fail(where, d, "subject is not a variable");
        auto it = d.env.find(d.term.name());
        if (it == d.env.end()) return fail(where, d, d.term.name() + " not in the environment");
        if (!(it->second == d.type))
          fail(where, d, "environment gives " + print_type(it->second) + ", conclusion says " +
                             print_type(d.type));
        return;
      }
      case TypeRule::App: {
        if (!arity(where, d, 2)) return;
        if (!d.term.is(Kind::App)) return fail(where, d, "subject is not an application");
        const auto& f = d.premises[0];
        const auto& a = d.premises[1];
        same_env(where, d, f, "first");
        same_env(where, d, a, "second");
        if (!(f.term == d.term.fun())) fail(where, d, "first premise subject is not the function");
        if (!(a.term == d.term.arg())) fail(where, d, "second premise subject is not the argument");
        if (!f.type || !f.type.is(TypeKind::Arrow))
          return fail(where, d, "function premise does not have an arrow type");
        if (!(f.type.left() == a.type)) fail(where, d, "argument type does not match the domain");
        if (!(f.type.right() == d.type)) fail(where, d, "conclusion type is not the codomain");
        return;
      }
      case TypeRule::Abs: {
        if (!arity(where, d, 1)) return;
        if (!d.term.is(Kind::Lam)) return fail(where, d, "subject is not an abstraction");
        if (!d.type.is(TypeKind::Arrow)) return fail(where, d, "conclusion type is not an arrow");
        const auto& b = d.premises[0];
        extended_env(where, d, b, d.term.name(), d.type.left());
        if (!(b.term == d.term.body())) fail(where, d, "premise subject is not the body");
        if (!(b.type == d.type.right())) fail(where, d, "premise type is not the codomain");
        return;
      }
      case TypeRule::Subs: {
        if (!arity(where, d, 2)) return;
        if (!d.term.is(Kind::ESub)) return fail(where, d, "subject is not an explicit substitution");
        const auto& u = d.premises[0];
        const auto& b = d.premises[1];
        same_env(where, d, u, "first");
        if (!(u.term == d.term.arg())) fail(where, d, "first premise subject is not the argument");
        if (u.type) extended_env(where, d, b, d.term.name(), u.type);
        if (!(b.term == d.term.body())) fail(where, d, "second premise subject is not the body");
        if (!(b.type == d.type)) fail(where, d, "second premise type differs from the conclusion");
        return;
      }
      case TypeRule::InterI: {
        if (!arity(where, d, 2)) return;
        if (!d.type.is(TypeKind::Inter)) return fail(where, d, "conclusion type is not an intersection");
        for (int i = 0; i < 2; ++i) {
          const auto& p = d.premises[i];
          same_env(where, d, p, i == 0 ? "first" : "second");
          if (!(p.term == d.term)) fail(where, d, "premise subject differs from the conclusion");
        }
        if (!(d.premises[0].type == d.type.left())) fail(where, d, "first premise type is not the left operand");
        if (!(d.premises[1].type == d.type.right())) fail(where, d, "second premise type is not the right operand");
        return;
      }
      case TypeRule::InterE: {
        if (!arity(where, d, 1)) return;
        const auto& p = d.premises[0];
        same_env(where, d, p, "the");
        if (!(p.term == d.term)) fail(where, d, "premise subject differs from the conclusion");
        if (!p.type || !p.type.is(TypeKind::Inter))
          return fail(where, d, "premise type is not an intersection");
        if (!(p.type.left() == d.type) && !(p.type.right() == d.type))
          fail(where, d, "conclusion " + print_type(d.type) + " is not an operand of " +
                             print_type(p.type));
        return;
      }
    }
  }
};

}  // namespace

DerivationCheck check_derivation(const TypeDerivation& d) {
  DerivationCheck out;
  Checker c{out};
  c.check(d, "root");
  return out;
}

namespace {

void type_subterms(const Type& t, std::set<Type>& out) {
  if (!out.insert(t).second) return;
  if (!t.is(TypeKind::Atom)) {
    type_subterms(t.left(), out);
    type_subterms(t.right(), out);
  }
}

class Searcher {
 public:
  Searcher(const SearchBudget& b, std::vector<Type> cands) : budget_(b) {
    std::set<Type> comps;
    for (const Type& c : cands)
      for (const Type& f : flatten(c)) comps.insert(f);
    std::vector<Type> base(comps.begin(), comps.end());
    candidates_ = base;
    if (budget_.max_inter >= 2)
      for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
          candidates_.push_back(Type::inter(base[i], base[j]));
    if (budget_.max_inter >= 3)
      for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
          for (std::size_t k = j + 1; k < base.size(); ++k)
            candidates_.push_back(Type::inter(Type::inter(base[i], base[j]), base[k]));
  }

  std::optional<TypeDerivation> derive(const Environment& env, const Term& t, const Type& a,
                                       std::size_t depth) {
    if (++nodes_ > budget_.max_nodes || depth > budget_.max_depth) {
      cut_ = true;
      return std::nullopt;
    }
    std::string key = memo_key(env, t, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool cut_before = cut_;
    cut_ = false;
    auto res = derive_fresh(env, t, a, depth);
    if (res || !cut_) memo_.emplace(key, res);
    cut_ = cut_ || cut_before;
    return res;
  }

 private:
  static std::string memo_key(const Environment& env, const Term& t, const Type& a) {
    std::string k;
    for (auto& [x, ty] : env) k += x + ":" + print_type(ty) + ",";
    k += "|" + print_term(t) + "|" + print_type(a);
    return k;
  }

  static TypeDerivation node(TypeRule r, const Environment& env, const Term& t, const Type& a,
                             std::vector<TypeDerivation> premises) {
    return TypeDerivation{r, env, t, a, std::move(premises)};
  }

  // From a derivation of type b, eliminate intersections down to the component a.
  static std::optional<TypeDerivation> project(TypeDerivation d, const Type& a) {
    if (d.type == a) return d;
    if (!d.type.is(TypeKind::Inter)) return std::nullopt;
    for (const Type& side : {d.type.left(), d.type.right()}) {
      if (!subtype(side, a)) continue;
      TypeDerivation e = node(TypeRule::InterE, d.env, d.term, side, {d});
      return project(std::move(e), a);
    }
    return std::nullopt;
  }

  // Binder x, renamed when the environment already binds it.
  static std::pair<Name, Term> open_binder(const Environment& env, const Name& x, const Term& body,
                                           const Term& whole) {
    if (!env.count(x)) return {x, body};
    NameSet avoid = all_names(whole);
    for (auto& [n, ty] : env) avoid.insert(n);
    Name x2 = fresh_name(x, avoid);
    return {x2, rename_free(body, x, x2)};
  }

  std::optional<TypeDerivation> derive_fresh(const Environment& env, const Term& t, const Type& a,
                                             std::size_t depth) {
    if (a.is(TypeKind::Inter)) {
      auto l = derive(env, t, a.left(), depth + 1);
      if (!l) return std::nullopt;
      auto r = derive(env, t, a.right(), depth + 1);
      if (!r) return std::nullopt;
      return node(TypeRule::InterI, env, t, a, {*l, *r});
    }
    switch (t.kind()) {
      case Kind::Var: {
        auto it = env.find(t.name());
        if (it == env.end() || !subtype(it->second, a)) return std::nullopt;
        return project(node(TypeRule::Ax, env, t, it->second, {}), a);
      }
      case Kind::Lam: {
        if (!a.is(TypeKind::Arrow)) return std::nullopt;
        auto [x, body] = open_binder(env, t.name(), t.body(), t);
        Environment ext = env;
        ext.emplace(x, a.left());
        auto b = derive(ext, body, a.right(), depth + 1);
        if (!b) return std::nullopt;
        return node(TypeRule::Abs, env, Term::lam(x, body), a, {*b});
      }
      case Kind::App: {
        for (const Type& cod : codomains(a)) {
          for (const Type& dom : candidates_) {
            auto f = derive(env, t.fun(), Type::arrow(dom, cod), depth + 1);
            if (!f) continue;
            auto x = derive(env, t.arg(), dom, depth + 1);
            if (!x) continue;
            Term subject = Term::app(f->term, x->term);
            return project(node(TypeRule::App, env, subject, cod, {*f, *x}), a);
          }
        }
        return std::nullopt;
      }
      case Kind::ESub: {
        for (const Type& b : candidates_) {
          auto u = derive(env, t.arg(), b, depth + 1);
          if (!u) continue;
          auto [x, body] = open_binder(env, t.name(), t.body(), t);
          Environment ext = env;
          ext.emplace(x, b);
          auto d = derive(ext, body, a, depth + 1);
          if (!d) continue;
          return node(TypeRule::Subs, env, Term::esub(d->term, x, u->term), a, {*u, *d});
        }
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  }

  std::vector<Type> codomains(const Type& a) const {
    std::vector<Type> out{a};
    for (const Type& c : candidates_)
      if (!(c == a) && c.is(TypeKind::Inter) && subtype(c, a)) out.push_back(c);
    return out;
  }

  SearchBudget budget_;
  std::vector<Type> candidates_;
  std::size_t nodes_ = 0;
  bool cut_ = false;
  std::unordered_map<std::string, std::optional<TypeDerivation>> memo_;
};

}  // namespace

JudgmentResult check_judgment_upto_subtype(const Environment& env, const Term& t, const Type& a,
                                           const SearchBudget& budget) {
  std::set<Type> seen;
  for (auto& [x, ty] : env) type_subterms(ty, seen);
  type_subterms(a, seen);
  Searcher s(budget, std::vector<Type>(seen.begin(), seen.end()));
  JudgmentResult out;
  if (auto d = s.derive(env, t, a, 0)) {
    if (check_derivation(*d).ok) {
      out.derivable = true;
      out.derivation = std::move(*d);
    }
  }
  return out;
}

namespace {

class Unifier {
 public:
  int fresh() {
    nodes_.push_back(N{0, {}, -1, -1});
    bind_.push_back(-1);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int con(const Name& n) {
    nodes_.push_back(N{1, n, -1, -1});
    bind_.push_back(-1);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int arrow(int a, int b) {
    nodes_.push_back(N{2, {}, a, b});
    bind_.push_back(-1);
    return static_cast<int>(nodes_.size()) - 1;
  }

  int from_type(const Type& t) {
    switch (t.kind()) {
      case TypeKind::Atom: return con(t.name());
      case TypeKind::Arrow: return arrow(from_type(t.left()), from_type(t.right()));
      case TypeKind::Inter: break;
    }
    throw IllFormedInput("simple types cannot contain intersections");
  }

  int resolve(int i) const {
    while (nodes_[i].kind == 0 && bind_[i] >= 0) i = bind_[i];
    return i;
  }

  void unify(int a, int b) {
    a = resolve(a);
    b = resolve(b);
    if (a == b) return;
    if (nodes_[a].kind == 0) return bind(a, b);
    if (nodes_[b].kind == 0) return bind(b, a);
    if (nodes_[a].kind == 1 || nodes_[b].kind == 1) {
      if (nodes_[a].kind == 1 && nodes_[b].kind == 1 && nodes_[a].con == nodes_[b].con) return;
      throw TypeError("cannot unify " + show(a) + " with " + show(b));
    }
    unify(nodes_[a].l, nodes_[b].l);
    unify(nodes_[a].r, nodes_[b].r);
  }

  Type to_type(int i, std::map<int, Name>& names, NameSet& used) const {
    i = resolve(i);
    const N& n = nodes_[i];
    if (n.kind == 1) return Type::atom(n.con);
    if (n.kind == 2) {
      Type l = to_type(n.l, names, used);
      return Type::arrow(std::move(l), to_type(n.r, names, used));
    }
    auto it = names.find(i);
    if (it == names.end()) {
      Name pick;
      for (std::size_t k = 0;; ++k) {
        pick = std::string(1, static_cast<char>('a' + k % 26));
        if (k >= 26) pick += std::to_string(k / 26);
        if (!used.count(pick)) break;
      }
      used.insert(pick);
      it = names.emplace(i, pick).first;
    }
    return Type::atom(it->second);
  }

 private:
  struct N {
    int kind;  // 0 variable, 1 constant, 2 arrow
    Name con;
    int l, r;
  };

  bool occurs(int v, int t) const {
    t = resolve(t);
    if (t == v) return true;
    if (nodes_[t].kind == 2) return occurs(v, nodes_[t].l) || occurs(v, nodes_[t].r);
    return false;
  }

  void bind(int v, int t) {
    if (occurs(v, t)) throw TypeError("occurs check: " + show(v) + " in " + show(t));
    bind_[v] = t;
  }

  std::string show(int i) const {
    i = resolve(i);
    const N& n = nodes_[i];
    if (n.kind == 0) return "'t" + std::to_string(i);
    if (n.kind == 1) return n.con;
    return "(" + show(n.l) + "->" + show(n.r) + ")";
  }

  std::vector<N> nodes_;
  std::vector<int> bind_;
};

struct Inferrer {
  Unifier u;
  std::map<Name, int> free_env;

  int infer(const std::map<Name, int>& env, const Term& t) {
    switch (t.kind()) {
      case Kind::Var: {
        if (auto it = env.find(t.name()); it != env.end()) return it->second;
        auto it = free_env.find(t.name());
        if (it == free_env.end()) it = free_env.emplace(t.name(), u.fresh()).first;
        return it->second;
      }
      case Kind::App: {
        int f = infer(env, t.fun());
        int a = infer(env, t.arg());
        int r = u.fresh();
        u.unify(f, u.arrow(a, r));
        return r;
      }
      case Kind::Lam: {
        auto ext = env;
        int a = u.fresh();
        ext[t.name()] = a;
        int b = infer(ext, t.body());
        return u.arrow(a, b);
      }
      case Kind::ESub: {
        int a = infer(env, t.arg());
        auto ext = env;
        ext[t.name()] = a;
        return infer(ext, t.body());
      }
      default:
        throw IllFormedInput("simple type inference expects a term");
    }
  }
};

void atom_names(const Type& t, NameSet& out) {
  if (t.is(TypeKind::Atom)) {
    out.insert(t.name());
    return;
  }
  atom_names(t.left(), out);
  atom_names(t.right(), out);
}

}  // namespace

Type infer_simple(const Environment& env, const Term& t) {
  Inferrer inf;
  std::map<Name, int> ienv;
  NameSet used;
  for (auto& [x, ty] : env) {
    ienv[x] = inf.u.from_type(ty);
    atom_names(ty, used);
  }
  int r = inf.infer(ienv, t);
  std::map<int, Name> names;
  return inf.u.to_type(r, names, used);
}

Term revb(const Term& t) {
  switch (t.kind()) {
    case Kind::Var:
      return t;
    case Kind::App:
      return Term::app(revb(t.fun()), revb(t.arg()));
    case Kind::Lam:
      return Term::lam(t.name(), revb(t.body()));
    case Kind::ESub:
      return Term::app(Term::lam(t.name(), revb(t.body())), revb(t.arg()));
    default:
      throw IllFormedInput("revb expects a term");
  }
}

}  // namespace lexkit
