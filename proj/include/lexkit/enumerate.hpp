#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "lexkit/term.hpp"

namespace lexkit {

struct Universe {
  std::vector<Name> free_names{"x", "y", "z"};
  // Binders take the first name here not free in their body; shadowing is
  // allowed when the outer binder is unused below.
  std::vector<Name> binder_names{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"};
  bool lam = true;
  bool esub = true;
  std::size_t max_metas = 0;        // metavariable occurrences per term
  std::size_t max_decoration = 2;   // names per decoration
};

// One representative per alpha-class, for every size in [1, max_size], in a
// fixed order (by size, then construction order).
class Enumerator {
 public:
  explicit Enumerator(Universe u);

  const std::vector<Term>& exactly(std::size_t size);
  std::vector<Term> up_to(std::size_t max_size);
  // Calls f on each term; stops early when f returns false.
  void for_each_up_to(std::size_t max_size, const std::function<bool(const Term&)>& f);
  std::uint64_t count(std::size_t size);

  const Universe& universe() const { return u_; }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  const std::vector<Term>& raw(std::size_t size, std::size_t depth, std::size_t metas);
  Term finish(const Term& raw) const;

  Universe u_;
  std::map<Key, std::vector<Term>> memo_;
  std::map<std::size_t, std::vector<Term>> named_;
  std::vector<std::vector<Name>> decorations_by_depth_;
};

// Deterministic across platforms: draws use the raw 64-bit output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

// Uniform sampling of alpha-classes of a given size (no metavariables).
class Sampler {
 public:
  explicit Sampler(Universe u);
  Term sample(std::size_t size, Rng& rng);
  // Size drawn uniformly in [1, max_size] among sizes with at least one term.
  Term sample_up_to(std::size_t max_size, Rng& rng);
  std::uint64_t count(std::size_t size);

 private:
  std::uint64_t count_at(std::size_t size, std::size_t depth);
  Term draw(std::size_t size, std::size_t depth, Rng& rng);

  Universe u_;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts_;
};

// Binder names chosen as in Enumerator, for terms built with placeholder names.
Term name_binders(const Term& t, const std::vector<Name>& pool);

}  // namespace lexkit
