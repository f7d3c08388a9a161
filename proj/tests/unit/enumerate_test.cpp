#include <gtest/gtest.h>

#include <set>

#include "lexkit/enumerate.hpp"
#include "support.hpp"

using namespace lexkit;
using namespace lexkit::testing;

// Counts per size frozen from an independent nameless counter.
TEST(Enumerator, TermCounts) {
  Enumerator e{Universe{}};
  const std::uint64_t want[] = {3, 4, 26, 97, 573, 2995, 18169};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(e.count(n), want[n - 1]) << n;
}

TEST(Enumerator, LambdaCounts) {
  Universe u;
  u.esub = false;
  Enumerator e(u);
  const std::uint64_t want[] = {3, 4, 14, 46, 172, 693, 2890, 12653};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(e.count(n), want[n - 1]) << n;
}

TEST(Enumerator, DistinctAlphaClasses) {
  Enumerator e{Universe{}};
  std::set<std::string> keys;
  for (const Term& t : e.up_to(6)) {
    EXPECT_EQ(t.size() <= 6, true);
    EXPECT_TRUE(keys.insert(alpha_key(t)).second) << P(t);
    NameSet fv = free_vars(t);
    for (const Name& x : fv) EXPECT_TRUE(x == "x" || x == "y" || x == "z") << P(t);
  }
}

TEST(Enumerator, MetaVariables) {
  Universe u;
  u.free_names = {"x", "y"};
  u.max_metas = 1;
  u.max_decoration = 1;
  Enumerator e(u);
  auto ones = e.exactly(1);
  std::set<std::string> shown;
  for (const Term& t : ones) shown.insert(P(t));
  EXPECT_EQ(shown, (std::set<std::string>{"x", "y", "?X{}", "?X{x}", "?X{y}"}));
}

TEST(Sampler, DeterministicAndMatchesCounts) {
  Universe u;
  Sampler s(u);
  Enumerator e(u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(s.count(n), e.count(n));
  Rng a(7), b(7);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(s.sample_up_to(8, a), s.sample_up_to(8, b));
}

TEST(Sampler, RoughlyUniform) {
  Universe u;
  u.esub = false;
  Sampler s(u);
  Rng rng(11);
  std::map<std::string, int> hits;
  const int draws = 14 * 400;
  for (int i = 0; i < draws; ++i) ++hits[alpha_key(s.sample(3, rng))];
  EXPECT_EQ(hits.size(), 14u);
  for (auto& [k, n] : hits) {
    EXPECT_GT(n, 250) << k;
    EXPECT_LT(n, 550) << k;
  }
}

TEST(Rng, BelowIsInRange) {
  Rng r(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}
