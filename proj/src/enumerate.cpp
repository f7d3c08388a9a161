#include "lexkit/enumerate.hpp"

#include <algorithm>
#include <limits>

#include "lexkit/errors.hpp"

namespace lexkit {

namespace {

// Placeholder for the binder at nesting level i.
Name level(std::size_t i) { return "%" + std::to_string(i); }

bool is_level(const Name& n) { return !n.empty() && n[0] == '%'; }

std::size_t level_of(const Name& n) { return std::stoul(n.substr(1)); }

void subsets(const std::vector<Name>& names, std::size_t max, std::size_t from,
             std::vector<Name>& cur, std::vector<std::vector<Name>>& out) {
  out.push_back(cur);
  if (cur.size() == max) return;
  for (std::size_t i = from; i < names.size(); ++i) {
    cur.push_back(names[i]);
    subsets(names, max, i + 1, cur, out);
    cur.pop_back();
  }
}

struct Namer {
  const std::vector<Name>& pool;
  std::vector<Name> env;  // level -> chosen name

  Name map(const Name& n) const { return is_level(n) ? env[level_of(n)] : n; }

  Name choose(const Term& body) {
    const std::size_t self = env.size();
    NameSet used;
    for (const Name& n : body.free())
      if (!is_level(n) || level_of(n) != self) used.insert(map(n));
    for (const Name& n : pool)
      if (!used.count(n)) return n;
    NameSet avoid = used;
    avoid.insert(pool.begin(), pool.end());
    return fresh_name(pool.empty() ? Name("v") : pool.back(), avoid);
  }

  Term go(const Term& t) {
    switch (t.kind()) {
      case Kind::Var:
        return Term::var(map(t.name()));
      case Kind::Meta: {
        NameSet d;
        for (const Name& n : t.decoration()) d.insert(map(n));
        return Term::meta(t.name(), d);
      }
      case Kind::App:
        return Term::app(go(t.fun()), go(t.arg()));
      case Kind::Lam: {
        Name x = choose(t.body());
        env.push_back(x);
        Term b = go(t.body());
        env.pop_back();
        return Term::lam(x, std::move(b));
      }
      case Kind::ESub:
      case Kind::LSub: {
        Term a = go(t.arg());
        Name x = choose(t.body());
        env.push_back(x);
        Term b = go(t.body());
        env.pop_back();
        return t.is(Kind::ESub) ? Term::esub(std::move(b), x, std::move(a))
                                : Term::lsub(std::move(b), x, std::move(a));
      }
    }
    return t;
  }
};

Term rename_metas(const Term& t, std::size_t& next) {
  if (!t.has_meta()) return t;
  switch (t.kind()) {
    case Kind::Meta: {
      static const char* kNames[] = {"X", "Y", "Z", "W", "V", "U"};
      Name n = next < 6 ? kNames[next] : "X" + std::to_string(next);
      ++next;
      return Term::meta(n, NameSet(t.decoration().begin(), t.decoration().end()));
    }
    case Kind::App: {
      Term f = rename_metas(t.fun(), next);
      return Term::app(std::move(f), rename_metas(t.arg(), next));
    }
    case Kind::Lam:
      return Term::lam(t.name(), rename_metas(t.body(), next));
    case Kind::ESub: {
      Term b = rename_metas(t.body(), next);
      return Term::esub(std::move(b), t.name(), rename_metas(t.arg(), next));
    }
    case Kind::LSub: {
      Term b = rename_metas(t.body(), next);
      return Term::lsub(std::move(b), t.name(), rename_metas(t.arg(), next));
    }
    default:
      return t;
  }
}

}  // namespace

Term name_binders(const Term& t, const std::vector<Name>& pool) {
  Namer n{pool, {}};
  return n.go(t);
}

Enumerator::Enumerator(Universe u) : u_(std::move(u)) {}

const std::vector<Term>& Enumerator::raw(std::size_t size, std::size_t depth, std::size_t metas) {
  Key key{size, depth, metas};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<Term> out;
  if (size == 1) {
    if (metas == 0) {
      for (std::size_t i = 0; i < depth; ++i) out.push_back(Term::var(level(i)));
      for (const Name& x : u_.free_names) out.push_back(Term::var(x));
    } else if (metas == 1) {
      std::vector<Name> names;
      for (std::size_t i = 0; i < depth; ++i) names.push_back(level(i));
      names.insert(names.end(), u_.free_names.begin(), u_.free_names.end());
      std::vector<std::vector<Name>> decs;
      std::vector<Name> cur;
      subsets(names, u_.max_decoration, 0, cur, decs);
      for (auto& d : decs) out.push_back(Term::meta("X", NameSet(d.begin(), d.end())));
    }
  } else {
    if (u_.lam)
      for (const Term& b : raw(size - 1, depth + 1, metas)) out.push_back(Term::lam(level(depth), b));
    for (std::size_t s1 = 1; s1 + 1 < size; ++s1) {
      for (std::size_t m1 = 0; m1 <= metas; ++m1) {
        const auto& fs = raw(s1, depth, m1);
        if (fs.empty()) continue;
        const auto& as = raw(size - 1 - s1, depth, metas - m1);
        for (const Term& f : fs)
          for (const Term& a : as) out.push_back(Term::app(f, a));
      }
    }
    if (u_.esub) {
      for (std::size_t s1 = 1; s1 + 1 < size; ++s1) {
        for (std::size_t m1 = 0; m1 <= metas; ++m1) {
          const auto& bs = raw(s1, depth + 1, m1);
          if (bs.empty()) continue;
          const auto& as = raw(size - 1 - s1, depth, metas - m1);
          for (const Term& b : bs)
            for (const Term& a : as) out.push_back(Term::esub(b, level(depth), a));
        }
      }
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

Term Enumerator::finish(const Term& t) const {
  Term named = name_binders(t, u_.binder_names);
  std::size_t next = 0;
  return rename_metas(named, next);
}

const std::vector<Term>& Enumerator::exactly(std::size_t size) {
  if (auto it = named_.find(size); it != named_.end()) return it->second;
  std::vector<Term> out;
  for (std::size_t m = 0; m <= u_.max_metas; ++m)
    for (const Term& t : raw(size, 0, m)) out.push_back(finish(t));
  return named_.emplace(size, std::move(out)).first->second;
}

std::vector<Term> Enumerator::up_to(std::size_t max_size) {
  std::vector<Term> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    const auto& e = exactly(s);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

void Enumerator::for_each_up_to(std::size_t max_size, const std::function<bool(const Term&)>& f) {
  for (std::size_t s = 1; s <= max_size; ++s)
    for (const Term& t : exactly(s))
      if (!f(t)) return;
}

std::uint64_t Enumerator::count(std::size_t size) { return exactly(size).size(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw IllFormedInput("empty range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = g_();
  } while (r >= limit);
  return r % n;
}

Sampler::Sampler(Universe u) : u_(std::move(u)) { u_.max_metas = 0; }

std::uint64_t Sampler::count_at(std::size_t size, std::size_t depth) {
  auto key = std::make_pair(size, depth);
  if (auto it = counts_.find(key); it != counts_.end()) return it->second;
  std::uint64_t c = 0;
  if (size == 1) {
    c = depth + u_.free_names.size();
  } else {
    if (u_.lam) c += count_at(size - 1, depth + 1);
    for (std::size_t s1 = 1; s1 + 1 < size; ++s1) {
      c += count_at(s1, depth) * count_at(size - 1 - s1, depth);
      if (u_.esub) c += count_at(s1, depth + 1) * count_at(size - 1 - s1, depth);
    }
  }
  counts_.emplace(key, c);
  return c;
}

std::uint64_t Sampler::count(std::size_t size) { return count_at(size, 0); }

Term Sampler::draw(std::size_t size, std::size_t depth, Rng& rng) {
  std::uint64_t r = rng.below(count_at(size, depth));
  if (size == 1) {
    if (r < depth) return Term::var(level(r));
    return Term::var(u_.free_names[r - depth]);
  }
  if (u_.lam) {
    std::uint64_t c = count_at(size - 1, depth + 1);
    if (r < c) return Term::lam(level(depth), draw(size - 1, depth + 1, rng));
    r -= c;
  }
  for (std::size_t s1 = 1; s1 + 1 < size; ++s1) {
    std::uint64_t c = count_at(s1, depth) * count_at(size - 1 - s1, depth);
    if (r < c) {
      Term f = draw(s1, depth, rng);
      return Term::app(std::move(f), draw(size - 1 - s1, depth, rng));
    }
    r -= c;
    if (u_.esub) {
      c = count_at(s1, depth + 1) * count_at(size - 1 - s1, depth);
      if (r < c) {
        Term b = draw(s1, depth + 1, rng);
        return Term::esub(std::move(b), level(depth), draw(size - 1 - s1, depth, rng));
      }
      r -= c;
    }
  }
  throw Error("sampler count mismatch");
}

Term Sampler::sample(std::size_t size, Rng& rng) {
  if (count_at(size, 0) == 0) throw IllFormedInput("no term of that size");
  return name_binders(draw(size, 0, rng), u_.binder_names);
}

Term Sampler::sample_up_to(std::size_t max_size, Rng& rng) {
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; s <= max_size; ++s)
    if (count_at(s, 0) > 0) sizes.push_back(s);
  if (sizes.empty()) throw IllFormedInput("no term in range");
  return sample(sizes[rng.below(sizes.size())], rng);
}

}  // namespace lexkit
