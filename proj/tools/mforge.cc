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

// Command-line front end: constructions, queries and verification suites.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mforge/mforge.hpp"

namespace {

using mforge::ErrorCode;
using mforge::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int ExitCodeFor(const mforge::Error& e) {
  switch (e.code()) {
    case ErrorCode::kSchemaError:
    case ErrorCode::kBadParams:
    case ErrorCode::kUnknownSuite:
    case ErrorCode::kNotPrimePower:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

int ParamInt(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) mforge::Fail(ErrorCode::kBadParams, "missing param '" + key + "'");
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    mforge::Fail(ErrorCode::kBadParams, "param '" + key + "' is not an integer");
  }
}

std::set<int> ParseIntList(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.insert(std::stoi(item));
    } catch (const std::exception&) {
      mforge::Fail(ErrorCode::kBadParams, "'" + item + "' is not an integer");
    }
  }
  return out;
}

mforge::NamedMatroid Construct(const std::string& kind, const std::string& params) {
  const auto p = mforge::ParseParams(params);
  if (kind == "pg") return mforge::Pg(ParamInt(p, "n"), ParamInt(p, "q"));
  if (kind == "ag") return mforge::Ag(ParamInt(p, "n"), ParamInt(p, "q"));
  if (kind == "uniform") return mforge::Uniform(ParamInt(p, "r"), ParamInt(p, "n"));
  if (kind == "spike") return mforge::FreeSpike(ParamInt(p, "k"));
  if (kind == "swirl") return mforge::FreeSwirl(ParamInt(p, "k"));
  // witness
  auto cls = p.find("class");
  if (cls == p.end()) mforge::Fail(ErrorCode::kBadParams, "missing param 'class'");
  mforge::GrowthClass c = mforge::GrowthClass::kL;
  if (cls->second == "Lcirc") {
    c = mforge::GrowthClass::kLcirc;
  } else if (cls->second == "Llambda") {
    c = mforge::GrowthClass::kLlambda;
  } else if (cls->second != "L") {
    mforge::Fail(ErrorCode::kBadParams, "class must be L, Lcirc or Llambda");
  }
  return mforge::DensityWitness(ParamInt(p, "q"), c, ParamInt(p, "n"));
}

void Emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) mforge::Fail(ErrorCode::kBadParams, "cannot write " + out);
  f << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid growth-rate verification toolkit"};
  app.require_subcommand(1);

  std::string kind, params, out, file, host, target, a_file, b_file, spikes, swirls, suite, caps;
  std::uint64_t q = 0, seed = 0;
  int k = 0, jobs = 1;
  std::int64_t ell = 0;
  bool want_witness = false;

  auto* construct = app.add_subcommand("construct", "Build a named matroid and write it as JSON");
  construct->add_option("--kind", kind, "pg|ag|uniform|spike|swirl|witness")
      ->required()
      ->check(CLI::IsMember({"pg", "ag", "uniform", "spike", "swirl", "witness"}));
  construct->add_option("--params", params, "key=val list, e.g. n=3,q=2")->required();
  construct->add_option("--out", out, "output file (default stdout)");

  auto* eps = app.add_subcommand("eps", "Count points");
  eps->add_option("--file", file)->required();

  auto* density = app.add_subcommand("density", "Test q-density");
  density->add_option("--file", file)->required();
  density->add_option("--q", q)->required();

  auto* has_minor = app.add_subcommand("has-minor", "Search for a minor");
  has_minor->add_option("--host", host)->required();
  has_minor->add_option("--target", target)->required();

  auto* iso = app.add_subcommand("iso", "Test isomorphism");
  iso->add_option("--a", a_file)->required();
  iso->add_option("--b", b_file)->required();

  auto* rep = app.add_subcommand("rep", "Representability of free spikes and swirls");
  rep->add_option("--kind", kind)->required()->check(CLI::IsMember({"spike", "swirl"}));
  rep->add_option("--k", k)->required();
  rep->add_option("--q", q)->required();
  rep->add_flag("--witness", want_witness, "also run the group-condition search");

  auto* base = app.add_subcommand("eventual-base", "Eventual growth-rate base of an excluded-minor class");
  base->add_option("--ell", ell, "exclude U(2, ell+2)");
  base->add_option("--spikes", spikes, "comma-separated spike ranks");
  base->add_option("--swirls", swirls, "comma-separated swirl ranks");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  verify->add_option("--caps", caps, "max_ground=..,max_rank=..,max_bases=..");
  verify->add_option("--params", params, "suite parameters, key=val list");
  verify->add_option("--out", out, "JSON-lines report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&]() {
      return static_cast<std::int64_t>(
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    };
    if (*construct) {
      mforge::NamedMatroid nm = Construct(kind, params);
      Emit(mforge::MatroidToJson(nm.matroid), out);
    } else if (*eps) {
      mforge::MatroidPtr m = mforge::ReadMatroid(file);
      Emit(Json{{"eps", mforge::Epsilon(*m)}, {"rank", m->FullRank()}, {"size", m->size()}}, "");
    } else if (*density) {
      mforge::MatroidPtr m = mforge::ReadMatroid(file);
      Emit(Json{{"eps", mforge::Epsilon(*m)},
                {"threshold", mforge::GeometricCount(q, m->FullRank())},
                {"q_dense", mforge::IsQDense(*m, q)}},
           "");
    } else if (*has_minor) {
      mforge::MatroidPtr h = mforge::ReadMatroid(host), t = mforge::ReadMatroid(target);
      auto w = mforge::HasMinor(h, t);
      Json j{{"has_minor", w.has_value()}};
      if (w) {
        j["witness"] = Json{{"contract", w->contract.ToVector()},
                            {"delete", w->remove.ToVector()},
                            {"iso", w->iso.bijection},
                            {"verified", mforge::VerifyMinorWitness(h, t, *w)}};
      }
      j["elapsed_ms"] = elapsed();
      Emit(j, "");
    } else if (*iso) {
      mforge::MatroidPtr ma = mforge::ReadMatroid(a_file), mb = mforge::ReadMatroid(b_file);
      auto cert = mforge::AreIsomorphic(ma, mb);
      Json j{{"isomorphic", cert.has_value()}};
      if (cert) j["bijection"] = cert->bijection;
      Emit(j, "");
    } else if (*rep) {
      const bool swirl = kind == "swirl";
      const bool pred = swirl ? mforge::SwirlRepPredicate(k, q) : mforge::SpikeRepPredicate(k, q);
      Json j{{"kind", kind}, {"k", k}, {"q", q}, {"representable", pred}};
      if (want_witness) {
        auto w = swirl ? mforge::SwirlWitnessSearch(k, q) : mforge::SpikeWitnessSearch(k, q);
        if (w) {
          Json alphas = Json::array();
          for (auto x : w->alphas) alphas.push_back(x.index);
          j["witness"] = Json{{"alphas", alphas}, {"betas", {w->beta1.index, w->beta2.index}}};
        } else {
          j["witness"] = nullptr;
        }
      }
      Emit(j, "");
    } else if (*base) {
      mforge::ClassSpec spec;
      if (base->count("--ell")) spec.line_ell = ell;
      spec.spike_ranks = ParseIntList(spikes);
      spec.swirl_ranks = ParseIntList(swirls);
      Emit(mforge::suites::BaseReportJson(mforge::EventualBase(spec)), "");
    } else if (*verify) {
      mforge::SuiteConfig config;
      config.suite = suite;
      config.params = mforge::ParseParams(params);
      config.seed = seed;
      config.caps = mforge::ResolveCaps(caps);
      config.jobs = jobs;
      std::ofstream file_out;
      if (!out.empty()) {
        file_out.open(out);
        if (!file_out) mforge::Fail(ErrorCode::kBadParams, "cannot write " + out);
      }
      mforge::Report report = mforge::RunSuite(config, out.empty() ? &std::cout : &file_out);
      return report.pass ? kExitPass : kExitFail;
    }
  } catch (const mforge::Error& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return ExitCodeFor(e);
  }
  return kExitPass;
}
