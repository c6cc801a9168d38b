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

#ifndef MFORGE_CORPUS_HPP_
#define MFORGE_CORPUS_HPP_

#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mforge/constructions.hpp"
#include "mforge/error.hpp"
#include "mforge/isomorphism.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

struct Caps {
  int max_ground = 160;
  int max_rank = 5;
  int max_bases = 5000;

  void Validate() const {
    if (max_ground < 1 || max_ground > kMaxRankGround) {
      Fail(ErrorCode::kBadParams, "max_ground must lie in [1, 4096]");
    }
    if (max_rank < 1 || max_rank > 8) Fail(ErrorCode::kBadParams, "max_rank must lie in [1, 8]");
    if (max_bases < 1) Fail(ErrorCode::kBadParams, "max_bases must be positive");
  }

  std::map<std::string, int> Entries() const {
    return {{"max_bases", max_bases}, {"max_ground", max_ground}, {"max_rank", max_rank}};
  }
};

// Applies "key=val,key=val" on top of `caps`.
inline Caps ParseCaps(const std::string& text, Caps caps = {}) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) Fail(ErrorCode::kBadParams, "cap '" + item + "' is not key=val");
    const std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      Fail(ErrorCode::kBadParams, "cap '" + item + "' has a non-integer value");
    }
    if (key == "max_ground") {
      caps.max_ground = value;
    } else if (key == "max_rank") {
      caps.max_rank = value;
    } else if (key == "max_bases") {
      caps.max_bases = value;
    } else {
      Fail(ErrorCode::kBadParams, "unknown cap '" + key + "'");
    }
  }
  caps.Validate();
  return caps;
}

// Defaults, then --caps, then MFORGE_CAPS.
inline Caps ResolveCaps(const std::string& cli) {
  Caps caps = ParseCaps(cli);
  if (const char* env = std::getenv("MFORGE_CAPS")) caps = ParseCaps(env, caps);
  return caps;
}

struct CorpusEntry {
  std::string descriptor;  // unique, stable across runs
  std::string provenance;
  MatroidPtr matroid;
};

inline constexpr int kDedupMaxSize = 9;

namespace internal {

// Zero-padded decimal, so that descriptors sort numerically.
inline std::string Pad(std::uint64_t x, std::size_t width = 3) {
  std::string s = std::to_string(x);
  return std::string(s.size() < width ? width - s.size() : 0, '0') + s;
}

}  // namespace internal

// Named constructions within caps, then seeded random restrictions of
// PG(r-1, q) and single-element contractions of them. Matroids on at most
// kDedupMaxSize elements are kept only if not isomorphic to an earlier one.
inline std::vector<CorpusEntry> CorpusGenerate(std::uint64_t seed, const Caps& caps) {
  caps.Validate();
  std::vector<CorpusEntry> raw;
  auto fits = [&](const MatroidPtr& m) {
    return m->size() <= caps.max_ground && m->FullRank() <= caps.max_rank;
  };
  auto add = [&](std::string descriptor, const NamedMatroid& nm) {
    if (fits(nm.matroid)) raw.push_back({std::move(descriptor), nm.provenance, nm.matroid});
  };
  const std::uint64_t geometry_q[] = {2, 3, 4, 5};
  for (std::uint64_t q : geometry_q) {
    for (int n = 2; n <= std::min(5, caps.max_rank); ++n) {
      if (GeometricCount(q, n) > static_cast<std::uint64_t>(caps.max_ground)) continue;
      add("named/" + Pg(n, q).name, Pg(n, q));
      add("named/" + Ag(n, q).name, Ag(n, q));
    }
  }
  for (int r = 1; r <= 4; ++r) {
    for (int n = r; n <= 8; ++n) {
      NamedMatroid u = Uniform(r, n);
      add("named/" + u.name, u);
    }
  }
  for (int k = 3; k <= 6; ++k) {
    add("named/" + FreeSpike(k).name, FreeSpike(k));
    add("named/" + FreeSwirl(k).name, FreeSwirl(k));
  }
  for (std::uint64_t q : {2, 3}) {
    for (int n = 2; n <= 4; ++n) {
      for (GrowthClass cls : {GrowthClass::kLcirc, GrowthClass::kLlambda}) {
        if (GeometricCount(q, n + 1) > static_cast<std::uint64_t>(caps.max_ground)) continue;
        NamedMatroid w = DensityWitness(q, cls, n);
        add("witness/" + GrowthClassName(cls) + "/q" + std::to_string(q) + "/n" + std::to_string(n), w);
      }
    }
  }

  std::mt19937_64 rng(seed);
  constexpr int kSamplesPerGeometry = 3;
  for (int r = 3; r <= std::min(5, caps.max_rank); ++r) {
    for (std::uint64_t q : geometry_q) {
      const std::uint64_t points = GeometricCount(q, r);
      if (points > static_cast<std::uint64_t>(caps.max_ground)) continue;
      auto pg = std::static_pointer_cast<const LinearMatroid>(Pg(r, q).matroid);
      for (int s = 0; s < kSamplesPerGeometry; ++s) {
        std::vector<std::vector<FieldElement>> cols;
        std::vector<int> picked;
        std::bernoulli_distribution keep(0.6);
        for (int e = 0; e < pg->size(); ++e) {
          if (keep(rng)) {
            picked.push_back(e);
            cols.push_back(pg->Column(e));
          }
        }
        if (cols.size() < 2) continue;
        auto restriction = std::make_shared<const LinearMatroid>(pg->field(), r, cols);
        const std::string tag = "random/PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ")/" +
                                internal::Pad(s);
        std::string prov = "restriction of PG(" + std::to_string(r - 1) + "," + std::to_string(q) +
                           ") to points {";
        for (std::size_t i = 0; i < picked.size(); ++i) prov += (i ? "," : "") + std::to_string(picked[i]);
        prov += "}";
        raw.push_back({tag + "/restrict", prov, restriction});
        const int e = std::uniform_int_distribution<int>(0, restriction->size() - 1)(rng);
        raw.push_back({tag + "/contract" + internal::Pad(e), prov + " contracted by " + std::to_string(e),
                       Contract(restriction, ElementSet(restriction->size(), {e}))});
      }
    }
  }

  std::vector<CorpusEntry> out;
  for (CorpusEntry& c : raw) {
    bool duplicate = false;
    if (c.matroid->size() <= kDedupMaxSize) {
      for (const CorpusEntry& kept : out) {
        if (kept.matroid->size() == c.matroid->size() && AreIsomorphic(kept.matroid, c.matroid)) {
          duplicate = true;
          break;
        }
      }
    }
    if (!duplicate) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mforge

#endif  // MFORGE_CORPUS_HPP_
