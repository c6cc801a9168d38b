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

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "mforge/mforge.hpp"
#include "oracles.hpp"

namespace mforge {
namespace {

// Aggregates every sub-multiset of the alphas by direct enumeration and
// checks that the betas are distinct and never attained.
bool WitnessHolds(const SpikeWitness& w) {
  Field f = Field::Create(w.q);
  const bool add = w.group == GroupKind::kAdditive;
  const FieldElement id = add ? f.Zero() : f.One();
  if (w.beta1 == w.beta2) return false;
  if (!add && (w.beta1 == f.Zero() || w.beta2 == f.Zero())) return false;
  for (FieldElement a : w.alphas) {
    if (a == id || (!add && a == f.Zero())) return false;
  }
  const std::size_t n = w.alphas.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    FieldElement acc = id;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) acc = add ? f.Add(acc, w.alphas[i]) : f.Mul(acc, w.alphas[i]);
    if (acc == w.beta1 || acc == w.beta2) return false;
  }
  return true;
}

TEST(RepresentabilityTest, PredicateExamples) {
  EXPECT_TRUE(SpikeRepPredicate(3, 5));
  EXPECT_FALSE(SpikeRepPredicate(4, 5));
  EXPECT_FALSE(SwirlRepPredicate(6, 8));
  EXPECT_TRUE(SpikeRepPredicate(9, 4));
  EXPECT_THROW(SpikeRepPredicate(2, 5), Error);
  EXPECT_THROW(SwirlRepPredicate(4, 6), Error);
}

TEST(RepresentabilityTest, WitnessExamples) {
  auto w = SpikeWitnessSearch(3, 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->alphas.size(), 2u);
  EXPECT_EQ(w->alphas[0].index, 1u);
  EXPECT_EQ(w->alphas[1].index, 1u);
  EXPECT_EQ(w->beta1.index, 3u);
  EXPECT_EQ(w->beta2.index, 4u);
  EXPECT_TRUE(WitnessHolds(*w));
  EXPECT_FALSE(SpikeWitnessSearch(4, 5).has_value());
  auto w4 = SpikeWitnessSearch(5, 4);
  ASSERT_TRUE(w4.has_value());
  for (FieldElement a : w4->alphas) EXPECT_EQ(a.index, 1u);
  EXPECT_EQ(std::set<std::uint32_t>({w4->beta1.index, w4->beta2.index}),
            (std::set<std::uint32_t>{2, 3}));
}

TEST(RepresentabilityTest, WitnessSearchMatchesPredicates) {
  for (std::uint64_t q = 3; q <= kWitnessMaxQ; ++q) {
    if (!IsPrimePower(q)) continue;
    for (int k = 3; k <= kWitnessMaxK; ++k) {
      auto s = SpikeWitnessSearch(k, q);
      EXPECT_EQ(s.has_value(), SpikeRepPredicate(k, q)) << "spike " << k << " " << q;
      if (s) EXPECT_TRUE(WitnessHolds(*s));
      if (s) EXPECT_TRUE(VerifySpikeWitness(*s));
      auto w = SwirlWitnessSearch(k, q);
      EXPECT_EQ(w.has_value(), SwirlRepPredicate(k, q)) << "swirl " << k << " " << q;
      if (w) EXPECT_TRUE(WitnessHolds(*w));
    }
  }
}

TEST(RepresentabilityTest, BruteForceExamples) {
  MatroidPtr spike3 = FreeSpike(3).matroid;
  auto rep4 = BruteForceLinearRep(spike3, 4);
  ASSERT_TRUE(rep4.has_value());
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    ElementSet x = ElementSet::FromMask(6, mask);
    ASSERT_EQ((*rep4)->Rank(x), spike3->Rank(x));
  }
  EXPECT_FALSE(BruteForceLinearRep(spike3, 3).has_value());
  EXPECT_FALSE(BruteForceLinearRep(Uniform(2, 4).matroid, 2).has_value());
  EXPECT_TRUE(BruteForceLinearRep(Uniform(2, 4).matroid, 3).has_value());
  EXPECT_TRUE(BruteForceLinearRep(Pg(3, 2).matroid, 2).has_value());
  EXPECT_FALSE(BruteForceLinearRep(Pg(3, 2).matroid, 3).has_value());
}

TEST(RepresentabilityTest, BruteForceMatchesClosedForms) {
  for (std::uint64_t q : {3, 4, 5}) {
    EXPECT_EQ(BruteForceLinearRep(FreeSpike(4).matroid, q).has_value(), SpikeRepPredicate(4, q)) << q;
    EXPECT_EQ(BruteForceLinearRep(FreeSwirl(4).matroid, q).has_value(), SwirlRepPredicate(4, q)) << q;
  }
}

TEST(RepresentabilityTest, MembershipExamples) {
  MembershipFlags s = MembershipOf({MinorKind::kSpike, 4}, 5);
  EXPECT_FALSE(s.in_L);
  EXPECT_TRUE(s.in_Lcirc);
  EXPECT_TRUE(s.in_Llambda);
  MembershipFlags w = MembershipOf({MinorKind::kSwirl, 6}, 8);
  EXPECT_FALSE(w.in_L);
  EXPECT_FALSE(w.in_Lcirc);
  EXPECT_TRUE(w.in_Llambda);
  EXPECT_TRUE(MembershipOf({MinorKind::kLine, 21}, 4).in_Lcirc);
  EXPECT_FALSE(MembershipOf({MinorKind::kLine, 22}, 4).in_Lcirc);
  EXPECT_TRUE(MembershipOf({MinorKind::kLine, 17}, 4).in_Llambda);
  EXPECT_FALSE(MembershipOf({MinorKind::kLine, 18}, 4).in_Llambda);
  EXPECT_TRUE(MembershipOf({MinorKind::kSwirl, 3}, 4).in_L);
  EXPECT_THROW(MembershipOf({MinorKind::kSwirl, 4}, 2), Error);
  EXPECT_THROW(MembershipOf({MinorKind::kSpike, 4}, 6), Error);
}

TEST(RepresentabilityTest, LineMembershipMatchesWitnessGeometry) {
  // The densest rank-2 members of each class are the witnesses' lines.
  for (std::uint64_t q : {2, 3}) {
    const int lcirc = Epsilon(*DensityWitness(q, GrowthClass::kLcirc, 2).matroid);
    const int llam = Epsilon(*DensityWitness(q, GrowthClass::kLlambda, 2).matroid);
    EXPECT_TRUE(MembershipOf({MinorKind::kLine, lcirc}, q).in_Lcirc);
    EXPECT_FALSE(MembershipOf({MinorKind::kLine, lcirc + 1}, q).in_Lcirc);
    EXPECT_TRUE(MembershipOf({MinorKind::kLine, llam}, q).in_Llambda);
    EXPECT_FALSE(MembershipOf({MinorKind::kLine, llam + 1}, q).in_Llambda);
  }
}

BaseReport Base(std::optional<std::int64_t> ell, std::set<int> spikes, std::set<int> swirls) {
  return EventualBase({ell, std::move(spikes), std::move(swirls)});
}

TEST(RepresentabilityTest, EventualBaseExamples) {
  BaseReport a = Base(9, {}, {});
  EXPECT_EQ(a.base, 9u);
  EXPECT_TRUE(a.certified);
  BaseReport b = Base(10, {5}, {});
  EXPECT_EQ(b.base, 5u);
  EXPECT_TRUE(b.certified);
  for (int k = 3; k <= 6; ++k) {
    BaseReport c = Base(3, {k}, {k});
    EXPECT_EQ(c.base, 3u) << k;
    EXPECT_TRUE(c.certified) << k;
  }
  BaseReport d = Base(5, {}, {4});
  EXPECT_EQ(d.base, 4u);
  EXPECT_TRUE(d.certified);
  BaseReport e = Base(25, {}, {4});
  EXPECT_EQ(e.base, 4u);
  EXPECT_FALSE(e.certified);
  EXPECT_FALSE(e.gaps.empty());
  EXPECT_THROW(Base(std::nullopt, {}, {}), Error);
  EXPECT_THROW(Base(1, {}, {}), Error);
}

TEST(RepresentabilityTest, EventualBaseForLinesIsLargestPrimePowerBelow) {
  for (std::int64_t ell = 2; ell <= 60; ++ell) {
    std::uint64_t want = static_cast<std::uint64_t>(ell);
    while (!IsPrimePower(want)) --want;
    BaseReport r = Base(ell, {}, {});
    EXPECT_EQ(r.base, want) << ell;
    EXPECT_TRUE(r.certified) << ell;
  }
}

TEST(RepresentabilityTest, ExcludedMinorNames) {
  EXPECT_EQ((ExcludedMinor{MinorKind::kSpike, 4}).Name(), "Spike(4)");
  EXPECT_EQ((ExcludedMinor{MinorKind::kLine, 6}).Name(), "U(2,6)");
}

}  // namespace
}  // namespace mforge
