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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mforge/mforge.hpp"
#include "oracles.hpp"

namespace mforge {
namespace {

MatroidPtr U(int r, int n) { return Uniform(r, n).matroid; }

ElementSet Prefix(int universe, int count) {
  ElementSet s(universe);
  for (int e = 0; e < count; ++e) s.Insert(e);
  return s;
}

TEST(MinorSearchTest, HasMinorExamples) {
  MatroidPtr fano = Pg(3, 2).matroid;
  auto w = HasMinor(fano, U(2, 3));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->contract.Empty());
  EXPECT_TRUE(VerifyMinorWitness(fano, U(2, 3), *w));
  EXPECT_FALSE(HasMinor(fano, U(2, 4)).has_value());
  auto s = HasMinor(FreeSpike(3).matroid, U(2, 4));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->contract.Count(), 1);
  EXPECT_TRUE(VerifyMinorWitness(FreeSpike(3).matroid, U(2, 4), *s));
}

TEST(MinorSearchTest, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(17);
  std::vector<MatroidPtr> targets = {U(2, 4), U(2, 3), U(1, 2), U(3, 5), Pg(2, 3).matroid,
                                     ThetaGraph(2).matroid};
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 5 + trial % 3;
    MatroidPtr host = oracle::RandomLinear(rng, trial % 2 ? 3 : 5, 3 + trial % 2, n);
    const MatroidPtr& target = targets[trial % targets.size()];
    const bool naive = oracle::NaiveHasMinor(host, target);
    auto w = HasMinor(host, target);
    ASSERT_EQ(w.has_value(), naive) << "trial " << trial;
    if (w) EXPECT_TRUE(VerifyMinorWitness(host, target, *w));
  }
}

TEST(MinorSearchTest, LongestLineExamples) {
  EXPECT_EQ(LongestLineMinor(*Pg(3, 3).matroid), 4);
  EXPECT_EQ(LongestLineMinor(*U(4, 10)), 8);
  EXPECT_EQ(LongestLineMinor(*Pg(4, 2).matroid), 3);
  EXPECT_EQ(LongestLineMinor(*U(1, 3)), 0);
  EXPECT_EQ(LineExclusionParameter(*Pg(3, 5).matroid), 5);
}

TEST(MinorSearchTest, LongestLineAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 6; ++trial) {
    MatroidPtr host = oracle::RandomLinear(rng, 5, 3, 7);
    const int got = LongestLineMinor(*host);
    if (host->FullRank() < 2) continue;
    EXPECT_TRUE(oracle::NaiveHasMinor(host, U(2, got)));
    EXPECT_FALSE(oracle::NaiveHasMinor(host, U(2, got + 1)));
  }
}

TEST(MinorSearchTest, LonglineStepExamples) {
  for (int e = 0; e < 4; ++e) {
    LonglineOutcome o = LonglineStep(U(2, 4), 2, e);
    EXPECT_EQ(o.branch, LonglineBranch::kLineRestriction);
    EXPECT_EQ(o.line, ElementSet::Full(4));
  }
  EXPECT_EQ(LonglineStep(U(3, 8), 2, 0).branch, LonglineBranch::kDenseContraction);
  EXPECT_EQ(LonglineStep(U(2, 6), 2, 3).line_points, 6);
  EXPECT_THROW(LonglineStep(Pg(3, 2).matroid, 2, 0), Error);
}

TEST(MinorSearchTest, LonglineOutcomesHold) {
  // Either the contraction is q-dense or the reported line has q + 2 points.
  std::vector<MatroidPtr> hosts = {U(3, 8), U(2, 5), Pg(3, 3).matroid,
                                   Truncate(Pg(4, 2).matroid, 3)};
  for (const MatroidPtr& m : hosts) {
    for (int e = 0; e < m->size(); ++e) {
      LonglineOutcome o = LonglineStep(m, 2, e);
      if (o.branch == LonglineBranch::kDenseContraction) {
        EXPECT_TRUE(IsQDense(*Contract(m, ElementSet(m->size(), {e})), 2));
      } else {
        EXPECT_TRUE(o.line.Contains(e));
        EXPECT_EQ(m->Rank(o.line), 2);
        EXPECT_GE(Epsilon(*Restrict(m, o.line)), 4);
      }
    }
  }
}

TEST(MinorSearchTest, DenseRestrictionFixedPoints) {
  for (auto [r, n] : {std::pair{2, 4}, std::pair{3, 8}}) {
    DenseRestrictionReport rep = DenseRestriction(U(r, n), 2, 2);
    EXPECT_TRUE(rep.trace.empty());
    EXPECT_EQ(rep.restriction, ElementSet::Full(n));
  }
}

TEST(MinorSearchTest, DenseRestrictionWorkedExample) {
  MatroidPtr m = Truncate(DirectSum(U(3, 13), U(2, 3)), 4);
  EXPECT_EQ(Epsilon(*m), 16);
  DenseRestrictionReport rep = DenseRestriction(m, 2, 3);
  ASSERT_EQ(rep.trace.size(), 1u);
  EXPECT_EQ(rep.trace[0].cocircuit, ElementSet(16, {13, 14, 15}));
  EXPECT_FALSE(rep.trace[0].kept_cocircuit);
  EXPECT_TRUE(AreIsomorphic(rep.final_matroid, U(3, 13)).has_value());
  EXPECT_FALSE(rep.rank_bound_applies);
  // Weighted threshold 15 / phi lies strictly between 9 and 10.
  EXPECT_TRUE(WeightedDense(10, 1, 15));
  EXPECT_FALSE(WeightedDense(9, 1, 15));
  EXPECT_TRUE(WeightedDense(13, 1, 15));
}

TEST(MinorSearchTest, DenseRestrictionRejectsSparseInput) {
  EXPECT_THROW(DenseRestriction(Pg(3, 2).matroid, 2, 2), Error);
}

TEST(MinorSearchTest, RankBoundPredicate) {
  // (sqrt5 - 1)^(r-1) >= l^(t-1) compared against floating point away from ties.
  for (int r = 1; r <= 12; ++r) {
    for (std::int64_t l = 2; l <= 6; ++l) {
      for (int t = 1; t <= 4; ++t) {
        const double lhs = std::pow(std::sqrt(5.0) - 1.0, r - 1);
        const double rhs = std::pow(static_cast<double>(l), t - 1);
        if (std::fabs(lhs - rhs) < 1e-6) continue;
        EXPECT_EQ(ReductionPreconditionHolds(r, l, t), lhs >= rhs) << r << " " << l << " " << t;
      }
    }
  }
}

TEST(GoldenTest, MatchesLongDouble) {
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> pick(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    ZPhi x(pick(rng), pick(rng)), y(pick(rng), pick(rng));
    const long double vx = x.a() + x.b() * phi;
    const long double vy = y.a() + y.b() * phi;
    const ZPhi p = x * y;
    EXPECT_NEAR(static_cast<double>(p.a() + p.b() * phi), static_cast<double>(vx * vy),
                1e-6 * (1 + std::fabs(static_cast<double>(vx * vy))));
    if (std::fabs(static_cast<double>(vx - vy)) > 1e-9) EXPECT_EQ(x > y, vx > vy);
  }
  EXPECT_EQ(ZPhi::Phi() * ZPhi::InvPhi(), ZPhi(1));
  EXPECT_EQ(ZPhi::PhiPow(5), ZPhi(3, 5));
  EXPECT_EQ(ZPhi(0).Sign(), 0);
}

TEST(UnavoidableMinorTest, PlaneAndLineOfPg32) {
  MatroidPtr pg = Pg(4, 2).matroid;
  for (int flat_points : {7, 3}) {
    auto ext = PrincipalExtension(pg, Prefix(15, flat_points));
    UnavoidableResult res = UnavoidableMinorOfExtension(ext, 2, 2);
    EXPECT_EQ(res.target_name, "P(1,2,2)");
    EXPECT_TRUE(VerifyMinorWitness(ext, res.target, res.witness));
    EXPECT_TRUE(AreIsomorphic(res.target, U(2, 4)).has_value());
  }
}

TEST(UnavoidableMinorTest, LineOfPg52) {
  MatroidPtr pg = Pg(6, 2).matroid;
  auto ext = PrincipalExtension(pg, Prefix(63, 3));
  UnavoidableResult res = UnavoidableMinorOfExtension(ext, 3, 2);
  EXPECT_EQ(res.tag, UnavoidableTag::kLine);
  EXPECT_EQ(res.target_name, "P(2,2,2)");
  EXPECT_EQ(Epsilon(*res.target), 8);
  EXPECT_EQ(res.target->FullRank(), 3);
  EXPECT_TRUE(VerifyMinorWitness(ext, res.target, res.witness));
}

TEST(UnavoidableMinorTest, RejectsBadInputs) {
  MatroidPtr pg = Pg(4, 2).matroid;
  try {
    UnavoidableMinorOfExtension(PrincipalExtension(pg, Prefix(15, 1)), 2, 2);
    FAIL() << "expected RepresentableInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRepresentableInput);
  }
  try {
    UnavoidableMinorOfExtension(U(3, 8), 2, 2);
    FAIL() << "expected NotAnExtension";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnExtension);
  }
}

}  // namespace
}  // namespace mforge
