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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "mforge/mforge.hpp"

#ifndef MFORGE_CLI_PATH
#error "MFORGE_CLI_PATH must name the CLI binary"
#endif

namespace mforge {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(MFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Temp(const std::string& name) { return ::testing::TempDir() + "/" + name; }

void WriteText(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

TEST(CliTest, ConstructAndCount) {
  const std::string fano = Temp("cli_fano.json");
  ASSERT_EQ(Cli("construct --kind pg --params n=3,q=2 --out " + fano).code, 0);
  CliRun r = Cli("eps --file " + fano);
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["eps"], 7);
  EXPECT_EQ(j["rank"], 3);
  CliRun d = Cli("density --file " + fano + " --q 2");
  EXPECT_EQ(Json::parse(d.out)["q_dense"], false);
}

TEST(CliTest, MinorAndIso) {
  const std::string spike = Temp("cli_spike.json"), u36 = Temp("cli_u36.json"), u24 = Temp("cli_u24.json");
  ASSERT_EQ(Cli("construct --kind spike --params k=3 --out " + spike).code, 0);
  ASSERT_EQ(Cli("construct --kind uniform --params r=3,n=6 --out " + u36).code, 0);
  ASSERT_EQ(Cli("construct --kind uniform --params r=2,n=4 --out " + u24).code, 0);
  CliRun iso = Cli("iso --a " + spike + " --b " + u36);
  ASSERT_EQ(iso.code, 0);
  EXPECT_EQ(Json::parse(iso.out)["isomorphic"], true);
  CliRun hm = Cli("has-minor --host " + spike + " --target " + u24);
  ASSERT_EQ(hm.code, 0);
  Json j = Json::parse(hm.out);
  EXPECT_EQ(j["has_minor"], true);
  EXPECT_EQ(j["witness"]["verified"], true);
}

TEST(CliTest, RepAndBase) {
  CliRun r = Cli("rep --kind spike --k 3 --q 5 --witness");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["representable"], true);
  EXPECT_EQ(j["witness"]["betas"], Json::array({3, 4}));
  CliRun b = Cli("eventual-base --ell 10 --spikes 5");
  ASSERT_EQ(b.code, 0);
  Json bj = Json::parse(b.out);
  EXPECT_EQ(bj["base"], 5);
  EXPECT_EQ(bj["certified"], true);
}

TEST(CliTest, VerifyWritesReport) {
  const std::string out = Temp("cli_report.jsonl");
  ASSERT_EQ(Cli("verify eventual-base --seed 1 --jobs 2 --out " + out).code, 0);
  std::ifstream in(out);
  std::string first, line, last;
  std::getline(in, first);
  while (std::getline(in, line)) last = line;
  EXPECT_EQ(Json::parse(first)["type"], "header");
  EXPECT_EQ(Json::parse(last)["pass"], true);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("verify lemma7").code, 2);
  EXPECT_EQ(Cli("rep --kind spike --k 3 --q 6").code, 2);
  EXPECT_EQ(Cli("verify kung --caps max_rank=99").code, 2);
  const std::string bad = Temp("cli_bad.json");
  WriteText(bad, R"({"kind":"bases","rank":2,"n":4,"bases":[[0,1],[2,3]]})");
  EXPECT_EQ(Cli("eps --file " + bad).code, 2);
  // A valid request beyond the size caps is a failure, not a usage error.
  EXPECT_EQ(Cli("construct --kind pg --params n=13,q=2").code, 1);
  EXPECT_EQ(Cli("--help").code, 0);
}

}  // namespace
}  // namespace mforge
