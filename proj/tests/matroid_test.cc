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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mforge/mforge.hpp"
#include "oracles.hpp"

namespace mforge {
namespace {

MatroidPtr Fano() { return Pg(3, 2).matroid; }

std::shared_ptr<const LinearMatroid> FromInts(int p, int dim,
                                              const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<FieldElement>> fc;
  for (const auto& c : cols) {
    std::vector<FieldElement> v;
    for (int x : c) v.push_back({static_cast<std::uint32_t>(x)});
    fc.push_back(v);
  }
  return std::make_shared<const LinearMatroid>(Field::Create(p), dim, fc);
}

template <typename F>
void ForAllSubsets(int n, F&& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) f(ElementSet::FromMask(n, mask));
}

TEST(MatroidTest, LinearRankMatchesSpanSize) {
  std::mt19937_64 rng(11);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 6; ++trial) {
      const int dim = 2 + trial % 3;
      const int n = 5 + trial % 4;
      std::uniform_int_distribution<int> pick(0, p - 1);
      std::vector<std::vector<int>> cols(n, std::vector<int>(dim));
      for (auto& c : cols)
        for (auto& x : c) x = pick(rng);
      auto m = FromInts(p, dim, cols);
      ForAllSubsets(n, [&](const ElementSet& x) {
        std::vector<std::vector<int>> sub;
        x.ForEach([&](int e) { sub.push_back(cols[e]); });
        ASSERT_EQ(m->Rank(x), oracle::SpanRank(sub, p)) << x.ToString();
      });
    }
  }
}

TEST(MatroidTest, RankExamples) {
  MatroidPtr f = Fano();
  ElementSet two(7, {0, 1});
  EXPECT_EQ(Closure(*f, two).Count(), 3);
  EXPECT_EQ(FlatsOfRank(*f, 2).size(), 7u);
  auto u24 = Uniform(2, 4).matroid;
  EXPECT_EQ(u24->FullRank(), 2);
  EXPECT_TRUE(IsFlat(*f, Closure(*f, two)));
  EXPECT_FALSE(IsFlat(*f, two));
}

TEST(MatroidTest, FlatsCircuitsEpsilonMatchNaive) {
  std::mt19937_64 rng(5);
  std::vector<MatroidPtr> ms = {Fano(), Ag(3, 3).matroid, Uniform(3, 6).matroid,
                                FreeSpike(3).matroid, FreeSwirl(4).matroid, ThetaGraph(3).matroid};
  for (int i = 0; i < 6; ++i) ms.push_back(oracle::RandomLinear(rng, i % 2 ? 3 : 2, 3, 7));
  for (const MatroidPtr& m : ms) {
    SCOPED_TRACE(m->Describe());
    for (int k = 0; k <= m->FullRank(); ++k) {
      std::vector<ElementSet> got = FlatsOfRank(*m, k);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::NaiveFlatsOfRank(*m, k)) << "rank " << k;
    }
    std::vector<ElementSet> circ = Circuits(m);
    std::sort(circ.begin(), circ.end());
    EXPECT_EQ(circ, oracle::NaiveCircuits(*m));
    EXPECT_EQ(Epsilon(*m), oracle::NaiveEpsilon(*m));
    EXPECT_EQ(RankAxiomViolation(*m), std::nullopt);
  }
}

TEST(MatroidTest, EpsilonExamples) {
  EXPECT_EQ(Epsilon(*Pg(4, 2).matroid), 15);
  EXPECT_EQ(Epsilon(*Ag(4, 2).matroid), 8);
  // U(2,4) with element 0 doubled.
  auto dup = FromInts(5, 2, {{1, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
  EXPECT_EQ(Epsilon(*dup), 4);
  EXPECT_EQ(Epsilon(*Pg(12, 2).matroid), 4095);
}

TEST(MatroidTest, SimplifyExamples) {
  auto m = FromInts(3, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}});
  Simplification s = Simplify(m);
  EXPECT_EQ(s.matroid->size(), 3);
  EXPECT_TRUE(IsSimple(*s.matroid));
  EXPECT_EQ(s.point_of[0], -1);
  EXPECT_EQ(s.point_of[1], s.point_of[2]);
  Simplification id = Simplify(Fano());
  EXPECT_EQ(id.matroid->size(), 7);
  MatroidPtr con = Contract(Fano(), ElementSet(7, {0}));
  EXPECT_EQ(con->FullRank(), 2);
  EXPECT_EQ(Epsilon(*con), 3);
  EXPECT_TRUE(AreIsomorphic(Simplify(con).matroid, Uniform(2, 3).matroid).has_value());
}

TEST(MatroidTest, ViewsMatchRankFormulas) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    MatroidPtr m = oracle::RandomLinear(rng, 3, 3, 7);
    const int n = m->size(), r = m->FullRank();
    MatroidPtr d = Dual(m);
    MatroidPtr t = Truncate(m, 2);
    ElementSet c(n, {0}), del(n, {1, 2});
    MatroidPtr mn = Minor(m, c, del);
    MatroidPtr sum = DirectSum(m, Uniform(1, 2).matroid);
    ForAllSubsets(n, [&](const ElementSet& x) {
      EXPECT_EQ(d->Rank(x), x.Count() + m->Rank(x.Complement()) - r);
      EXPECT_EQ(t->Rank(x), std::min(m->Rank(x), 2));
      EXPECT_EQ(Dual(d)->Rank(x), m->Rank(x));
      ElementSet y(n + 2);
      x.ForEach([&](int e) { y.Insert(e); });
      EXPECT_EQ(sum->Rank(y.With(n)), m->Rank(x) + 1);
    });
    ForAllSubsets(n - 3, [&](const ElementSet& x) {
      ElementSet up(n);
      x.ForEach([&](int e) { up.Insert(e + 3); });
      EXPECT_EQ(mn->Rank(x), m->Rank(up | c) - m->Rank(c));
    });
  }
}

TEST(MatroidTest, MaterializedViewsAgree) {
  MatroidPtr sw = FreeSwirl(5).matroid;
  auto table = Materialize(sw);
  auto bases = MaterializeBases(sw);
  ForAllSubsets(sw->size(), [&](const ElementSet& x) {
    ASSERT_EQ(table->Rank(x), sw->Rank(x));
    ASSERT_EQ(bases->Rank(x), sw->Rank(x));
  });
}

TEST(MatroidTest, MinorDualExamples) {
  auto u24 = Uniform(2, 4).matroid;
  EXPECT_TRUE(AreIsomorphic(Dual(u24), u24).has_value());
  EXPECT_EQ(Truncate(Fano(), 2)->FullRank(), 2);
  EXPECT_TRUE(AreIsomorphic(Truncate(Fano(), 2), Uniform(2, 7).matroid).has_value());
}

TEST(MatroidTest, PrincipalExtensionExamples) {
  auto u23 = Uniform(2, 3).matroid;
  auto ext = PrincipalExtension(u23, u23->GroundSet());
  EXPECT_TRUE(AreIsomorphic(ext, Uniform(2, 4).matroid).has_value());
  MatroidPtr f = Fano();
  auto par = PrincipalExtension(f, ElementSet(7, {2}));
  EXPECT_EQ(par->Rank(ElementSet(8, {2, 7})), 1);
  EXPECT_THROW(PrincipalExtension(f, ElementSet(7, {0, 1})), Error);
}

TEST(MatroidTest, DensityExamples) {
  EXPECT_FALSE(IsQDense(*Fano(), 2));
  EXPECT_TRUE(IsQDense(*Uniform(2, 4).matroid, 2));
  EXPECT_TRUE(IsQDense(*Uniform(3, 8).matroid, 2));
}

TEST(MatroidTest, CircuitAndCocircuitExamples) {
  auto circ = Circuits(Uniform(2, 4).matroid);
  EXPECT_EQ(circ.size(), 4u);
  for (const ElementSet& c : circ) EXPECT_EQ(c.Count(), 3);
  auto co = Cocircuits(*Fano());
  EXPECT_EQ(co.size(), 7u);
  for (const ElementSet& c : co) EXPECT_EQ(c.Count(), 4);
}

TEST(MatroidTest, BasesBackendRejectsNonMatroid) {
  EXPECT_THROW(BasesMatroid(4, 2, {0b0011, 0b1100}), Error);
  BasesMatroid ok(4, 2, {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  EXPECT_EQ(ok.Rank(ElementSet(4, {0, 1, 2})), 2);
}

TEST(MatroidTest, RankRejectsForeignSubset) {
  EXPECT_THROW(Fano()->Rank(ElementSet(6)), Error);
}

}  // namespace
}  // namespace mforge
