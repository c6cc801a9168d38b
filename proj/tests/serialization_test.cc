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

#include <cstdio>
#include <string>

#include "gtest/gtest.h"
#include "mforge/mforge.hpp"

namespace mforge {
namespace {

std::string SchemaMessage(const std::string& text) {
  try {
    ParseMatroid(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaError);
    return e.what();
  }
  ADD_FAILURE() << "parse unexpectedly succeeded";
  return "";
}

bool Contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

void ExpectRankAgree(const Matroid& a, const Matroid& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    ElementSet x = ElementSet::FromMask(a.size(), mask);
    ASSERT_EQ(a.Rank(x), b.Rank(x)) << x.ToString();
  }
}

TEST(SerializationTest, LinearRoundTrip) {
  MatroidPtr fano = Pg(3, 2).matroid;
  const std::string path = ::testing::TempDir() + "/fano.json";
  WriteMatroid(fano, path);
  MatroidPtr back = ReadMatroid(path);
  ExpectRankAgree(*fano, *back);
  EXPECT_EQ(MatroidToJson(back), MatroidToJson(fano));
  std::remove(path.c_str());
  MatroidPtr pg = Pg(2, 9).matroid;
  ExpectRankAgree(*pg, *ParseMatroid(MatroidToJson(pg).dump()));
}

TEST(SerializationTest, ViewsRoundTripAsBases) {
  MatroidPtr sw = FreeSwirl(4).matroid;
  Json j = MatroidToJson(sw);
  EXPECT_EQ(j["kind"], "bases");
  MatroidPtr back = MatroidFromJson(j);
  ExpectRankAgree(*sw, *back);
  EXPECT_EQ(MatroidToJson(back), j);
}

TEST(SerializationTest, ExchangeAxiomViolation) {
  const std::string msg = SchemaMessage(R"({"kind":"bases","rank":2,"n":4,"bases":[[0,1],[2,3]]})");
  EXPECT_TRUE(Contains(msg, "ExchangeAxiom")) << msg;
  EXPECT_TRUE(Contains(msg, "/bases")) << msg;
}

TEST(SerializationTest, NonPrimeField) {
  const std::string msg = SchemaMessage(R"({"kind":"linear","field":{"p":6,"k":1},"columns":[[1]]})");
  EXPECT_TRUE(Contains(msg, "NotPrimePower")) << msg;
  EXPECT_TRUE(Contains(msg, "/field/p")) << msg;
}

TEST(SerializationTest, UnknownFieldsRejected) {
  std::string msg = SchemaMessage(R"({"kind":"bases","rank":1,"n":1,"bases":[[0]],"extra":1})");
  EXPECT_TRUE(Contains(msg, "unknown field at /extra")) << msg;
  msg = SchemaMessage(R"({"kind":"linear","field":{"p":2,"k":1,"q":2},"columns":[[1]]})");
  EXPECT_TRUE(Contains(msg, "/field/q")) << msg;
  msg = SchemaMessage(R"({"kind":"graphic"})");
  EXPECT_TRUE(Contains(msg, "/kind")) << msg;
}

TEST(SerializationTest, ValueDiagnostics) {
  std::string msg = SchemaMessage(R"({"kind":"linear","field":{"p":3,"k":1},"columns":[[1,0],[3,1]]})");
  EXPECT_TRUE(Contains(msg, "/columns/1/0")) << msg;
  msg = SchemaMessage(R"({"kind":"linear","field":{"p":2,"k":2,"modulus":[1,0,1]},"columns":[[1]]})");
  EXPECT_TRUE(Contains(msg, "/field/modulus")) << msg;
  msg = SchemaMessage(R"({"kind":"bases","rank":2,"n":3,"bases":[[0,5]]})");
  EXPECT_TRUE(Contains(msg, "/bases/0/1")) << msg;
}

TEST(SerializationTest, MalformedJsonReportsLine) {
  const std::string msg = SchemaMessage("{\n\"kind\": \"bases\",\n\"rank\": ,\n}");
  EXPECT_TRUE(Contains(msg, "line 3")) << msg;
}

TEST(SerializationTest, FieldModulusRoundTrip) {
  Field f = Field::Create(16);
  Field back = FieldFromJson(FieldToJson(f));
  EXPECT_TRUE(back == f);
}

}  // namespace
}  // namespace mforge
