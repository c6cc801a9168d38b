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

#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mforge/mforge.hpp"

namespace mforge {
namespace {

Caps SmallCaps() { return ParseCaps("max_ground=40,max_rank=4"); }

std::vector<std::string> Descriptors(const std::vector<CorpusEntry>& c) {
  std::vector<std::string> out;
  for (const CorpusEntry& e : c) out.push_back(e.descriptor);
  return out;
}

TEST(CorpusTest, ContainsNamedMembers) {
  std::vector<CorpusEntry> corpus = CorpusGenerate(0, Caps{});
  std::set<std::string> names;
  for (const CorpusEntry& e : corpus) names.insert(e.descriptor);
  EXPECT_TRUE(names.count("named/PG(2,2)"));
  EXPECT_TRUE(names.count("named/Swirl(4)"));
  EXPECT_EQ(names.size(), corpus.size());
  for (const CorpusEntry& e : corpus) EXPECT_FALSE(e.provenance.empty()) << e.descriptor;
}

TEST(CorpusTest, DeterministicPerSeed) {
  EXPECT_EQ(Descriptors(CorpusGenerate(0, Caps{})), Descriptors(CorpusGenerate(0, Caps{})));
  auto a = CorpusGenerate(1, SmallCaps());
  auto b = CorpusGenerate(1, SmallCaps());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].provenance, b[i].provenance);
}

TEST(CorpusTest, SmallMembersAreNonIsomorphic) {
  std::vector<CorpusEntry> corpus = CorpusGenerate(0, SmallCaps());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const MatroidPtr& a = corpus[i].matroid;
    if (a->size() > kDedupMaxSize) continue;
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const MatroidPtr& b = corpus[j].matroid;
      if (b->size() != a->size()) continue;
      EXPECT_FALSE(AreIsomorphic(a, b).has_value()) << corpus[i].descriptor << " " << corpus[j].descriptor;
    }
  }
}

TEST(CorpusTest, RespectsCaps) {
  Caps caps = SmallCaps();
  for (const CorpusEntry& e : CorpusGenerate(3, caps)) {
    EXPECT_LE(e.matroid->size(), caps.max_ground);
    EXPECT_LE(e.matroid->FullRank(), caps.max_rank);
  }
}

TEST(CapsTest, ParsingAndEnvironment) {
  Caps c = ParseCaps("max_ground=50");
  EXPECT_EQ(c.max_ground, 50);
  EXPECT_EQ(c.max_rank, Caps{}.max_rank);
  EXPECT_THROW(ParseCaps("max_ground=0"), Error);
  EXPECT_THROW(ParseCaps("max_rank=9"), Error);
  EXPECT_THROW(ParseCaps("speed=3"), Error);
  EXPECT_THROW(ParseCaps("max_rank"), Error);
  ::setenv("MFORGE_CAPS", "max_rank=3", 1);
  Caps r = ResolveCaps("max_ground=30,max_rank=4");
  ::unsetenv("MFORGE_CAPS");
  EXPECT_EQ(r.max_ground, 30);
  EXPECT_EQ(r.max_rank, 3);
}

TEST(SuiteTest, UnknownSuite) {
  SuiteConfig c;
  c.suite = "lemma7";
  try {
    RunSuite(c);
    FAIL() << "expected UnknownSuite";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSuite);
  }
}

std::string Body(const std::string& report) {
  // Drops the summary line, whose elapsed time varies.
  const std::size_t cut = report.rfind('\n', report.size() - 2);
  return report.substr(0, cut);
}

TEST(SuiteTest, ReportsAreDeterministicAcrossJobCounts) {
  for (const char* name : {"spike-oracle", "eventual-base", "growth-witness"}) {
    SuiteConfig c;
    c.suite = name;
    std::ostringstream one, three;
    c.jobs = 1;
    Report a = RunSuite(c, &one);
    c.jobs = 3;
    Report b = RunSuite(c, &three);
    EXPECT_TRUE(a.pass) << name;
    EXPECT_EQ(a.cases.size(), b.cases.size());
    EXPECT_EQ(Body(one.str()), Body(three.str())) << name;
  }
}

TEST(SuiteTest, ReportLayout) {
  SuiteConfig c;
  c.suite = "swirl-structure";
  c.seed = 9;
  std::ostringstream out;
  Report r = RunSuite(c, &out);
  std::istringstream in(out.str());
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), r.cases.size() + 2);
  EXPECT_EQ(lines.front()["type"], "header");
  EXPECT_EQ(lines.front()["prng"], kPrngName);
  EXPECT_EQ(lines.front()["seed"], 9);
  EXPECT_EQ(lines.back()["type"], "summary");
  EXPECT_EQ(lines.back()["pass"], true);
  for (std::size_t i = 2; i + 1 < lines.size(); ++i) {
    EXPECT_LT(lines[i - 1]["case"].get<std::string>(), lines[i]["case"].get<std::string>());
  }
}

TEST(SuiteTest, FailuresCarryReproductionData) {
  std::vector<CaseTask> tasks;
  tasks.push_back({"b/ok", "noop", "none", nullptr, [](CaseResult& r) { r.pass = true; }});
  tasks.push_back({"a/bad", "eps", "pg(n=3,q=2)", Pg(3, 2).matroid, [](CaseResult& r) {
                     r.pass = false;
                     r.expected = 8;
                     r.got = 7;
                   }});
  tasks.push_back({"c/throws", "iso", "none", nullptr,
                   [](CaseResult&) { Fail(ErrorCode::kLemmaViolation, "boom"); }});
  std::vector<CaseResult> res = RunTasks(std::move(tasks), 2);
  ASSERT_EQ(res.size(), 3u);
  EXPECT_EQ(res[0].descriptor, "a/bad");
  EXPECT_EQ(res[0].input["op"], "eps");
  EXPECT_EQ(res[0].input["provenance"], "pg(n=3,q=2)");
  ASSERT_TRUE(res[0].input.contains("matroid"));
  MatroidPtr back = MatroidFromJson(res[0].input["matroid"]);
  EXPECT_EQ(Epsilon(*back), 7);
  EXPECT_TRUE(res[1].pass);
  EXPECT_TRUE(res[1].input.is_null());
  EXPECT_FALSE(res[2].pass);
  EXPECT_NE(res[2].got["error"].get<std::string>().find("LemmaViolation"), std::string::npos);
}

TEST(SuiteTest, ParamsParsing) {
  auto p = ParseParams("q=2/3,m=2");
  EXPECT_EQ(p["q"], "2/3");
  EXPECT_EQ(p["m"], "2");
  EXPECT_THROW(ParseParams("q"), Error);
}

}  // namespace
}  // namespace mforge
