// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "mforge/element_set.hpp"

namespace mforge {
namespace {

std::set<int> AsSet(const ElementSet& s) {
  std::vector<int> v = s.ToVector();
  return {v.begin(), v.end()};
}

TEST(ElementSetTest, MatchesStdSet) {
  std::mt19937_64 rng(7);
  for (int universe : {1, 10, 64, 65, 130}) {
    std::uniform_int_distribution<int> pick(0, universe - 1);
    for (int trial = 0; trial < 50; ++trial) {
      ElementSet a(universe), b(universe);
      std::set<int> ra, rb;
      for (int i = 0; i < universe / 2 + 1; ++i) {
        int x = pick(rng), y = pick(rng);
        a.Insert(x);
        ra.insert(x);
        b.Insert(y);
        rb.insert(y);
      }
      std::set<int> u, n, d;
      std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(u, u.end()));
      std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(n, n.end()));
      std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(d, d.end()));
      EXPECT_EQ(AsSet(a | b), u);
      EXPECT_EQ(AsSet(a & b), n);
      EXPECT_EQ(AsSet(a - b), d);
      EXPECT_EQ(a.Count(), static_cast<int>(ra.size()));
      EXPECT_EQ((a & b).IsSubsetOf(a), true);
      EXPECT_EQ(a.Intersects(b), !n.empty());
      EXPECT_EQ(a.Complement().Count(), universe - a.Count());
      EXPECT_EQ(a.First(), *ra.begin());
      EXPECT_EQ(a.Last(), *ra.rbegin());
    }
  }
}

TEST(ElementSetTest, CanonicalOrderIsSizeThenLex) {
  ElementSet a(5, {0, 4}), b(5, {1, 2}), c(5, {0, 1, 2});
  EXPECT_TRUE(a < b);
  EXPECT_TRUE(b < c);
  EXPECT_EQ(a.ToString(), "{0,4}");
}

TEST(ElementSetTest, CombinationsInLexOrder) {
  std::vector<std::vector<int>> seen;
  ForEachCombination(5, 3, [&](std::span<const int> c) {
    seen.emplace_back(c.begin(), c.end());
    return true;
  });
  ASSERT_EQ(seen.size(), 10u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(seen.front(), (std::vector<int>{0, 1, 2}));
}

}  // namespace
}  // namespace mforge
