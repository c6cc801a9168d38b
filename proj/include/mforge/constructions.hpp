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

#ifndef MFORGE_CONSTRUCTIONS_HPP_
#define MFORGE_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/field.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

struct NamedMatroid {
  MatroidPtr matroid;
  std::string name;        // e.g. "PG(2,2)", "Swirl(4)", "P(2,2,3)"
  std::string provenance;  // construction recipe
};

enum class GrowthClass { kL, kLcirc, kLlambda };

inline std::string GrowthClassName(GrowthClass c) {
  switch (c) {
    case GrowthClass::kL: return "L";
    case GrowthClass::kLcirc: return "Lcirc";
    case GrowthClass::kLlambda: return "Llambda";
  }
  return "?";
}

namespace internal {

inline Field FieldForGeometry(std::uint64_t q, int n, std::uint64_t point_count) {
  if (n < 1) Fail(ErrorCode::kBadParams, "geometry rank must be >= 1");
  if (!IsPrimePower(q)) Fail(ErrorCode::kNotPrimePower, std::to_string(q));
  if (point_count > static_cast<std::uint64_t>(kMaxRankGround)) {
    Fail(ErrorCode::kSizeCapExceeded, std::to_string(point_count) + " points");
  }
  return Field::Create(q);
}

inline std::string Pair(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace internal

// PG(n-1, q): one column per 1-dimensional subspace of GF(q)^n, normalized
// so the first nonzero coordinate is 1, sorted lexicographically by
// coordinate index. The points of any span of trailing unit vectors form
// a prefix of this order.
inline NamedMatroid Pg(int n, std::uint64_t q) {
  const std::uint64_t count = GeometricCount(q, n);
  Field f = internal::FieldForGeometry(q, n, count);
  std::vector<std::vector<FieldElement>> cols;
  cols.reserve(count);
  for (int lead = n - 1; lead >= 0; --lead) {
    // Vectors (0,...,0,1,*,...,*) with the 1 at position `lead`.
    const int free = n - 1 - lead;
    const std::uint64_t total = SaturatingPow(q, free);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<FieldElement> v(n, f.Zero());
      v[lead] = f.One();
      std::uint64_t c = code;
      for (int i = n - 1; i > lead; --i) {
        v[i] = {static_cast<std::uint32_t>(c % q)};
        c /= q;
      }
      cols.push_back(std::move(v));
    }
  }
  std::sort(cols.begin(), cols.end());
  return {std::make_shared<const LinearMatroid>(f, n, std::move(cols)),
          "PG" + internal::Pair(n - 1, q), "pg(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")"};
}

// AG(n-1, q): the points (1, v) of PG(n-1, q), v in lexicographic order.
inline NamedMatroid Ag(int n, std::uint64_t q) {
  const std::uint64_t count = n >= 1 ? SaturatingPow(q, n - 1) : 0;
  Field f = internal::FieldForGeometry(q, n, count);
  std::vector<std::vector<FieldElement>> cols;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<FieldElement> v(n, f.Zero());
    v[0] = f.One();
    std::uint64_t c = code;
    for (int i = n - 1; i >= 1; --i) {
      v[i] = {static_cast<std::uint32_t>(c % q)};
      c /= q;
    }
    cols.push_back(std::move(v));
  }
  return {std::make_shared<const LinearMatroid>(f, n, std::move(cols)),
          "AG" + internal::Pair(n - 1, q), "ag(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")"};
}

inline constexpr int kMaxUniformSize = 20;

inline NamedMatroid Uniform(int r, int n) {
  if (r < 0 || r > n || n > kMaxUniformSize) {
    Fail(ErrorCode::kBadParams, "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")");
  }
  return {std::make_shared<const UniformMatroid>(r, n), "U" + internal::Pair(r, n),
          "uniform(r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")"};
}

// M(K_{2,k}) by signed incidence columns. Hubs u, w; edge 2i is u-v_i and
// edge 2i+1 is v_i-w.
inline NamedMatroid ThetaGraph(int k, std::uint64_t q = 2) {
  if (k < 2) Fail(ErrorCode::kBadParams, "theta graph needs k >= 2");
  Field f = Field::Create(q);
  const int vertices = k + 2;  // u = 0, w = 1, v_i = 2 + i
  const FieldElement minus_one = f.Neg(f.One());
  std::vector<std::vector<FieldElement>> cols;
  for (int i = 0; i < k; ++i) {
    std::vector<FieldElement> a(vertices, f.Zero()), b(vertices, f.Zero());
    a[0] = f.One();
    a[2 + i] = minus_one;
    b[2 + i] = f.One();
    b[1] = minus_one;
    cols.push_back(std::move(a));
    cols.push_back(std::move(b));
  }
  return {std::make_shared<const LinearMatroid>(f, vertices, std::move(cols)),
          "M(K2," + std::to_string(k) + ")", "theta_graph(k=" + std::to_string(k) + ")"};
}

// Free spike: the rank-k truncation of M(K_{2,k}). Legs P_i = {2i, 2i+1}.
inline NamedMatroid FreeSpike(int k) {
  if (k < 3) Fail(ErrorCode::kBadParams, "free spike needs k >= 3");
  NamedMatroid theta = ThetaGraph(k);
  return {Truncate(theta.matroid, k), "Spike(" + std::to_string(k) + ")",
          "truncate(theta_graph(k=" + std::to_string(k) + "), " + std::to_string(k) + ")"};
}

// N_k: 2-sum chain of k copies of U(2,4). Each copy is labelled
// (left basepoint, a_i, b_i, right basepoint). Result ids: x_1 = 0,
// a_i = 2i - 1, b_i = 2i, x_k = 2k + 1.
inline NamedMatroid TwoSumChain(int k) {
  if (k < 1) Fail(ErrorCode::kBadParams, "chain needs k >= 1");
  auto link = std::make_shared<const UniformMatroid>(2, 4);
  MatroidPtr chain = link;
  int right = 3;
  for (int i = 2; i <= k; ++i) {
    chain = TwoSum(chain, link, right, 0);
    right = chain->size() - 1;
  }
  return {chain, "TwoSumChain(" + std::to_string(k) + ")",
          "two_sum_chain(k=" + std::to_string(k) + ", U(2,4))"};
}

// Free swirl: principal truncation of N_k on cl{x_1, x_k}, then x_1 and x_k
// deleted. Legs P_i = {2i, 2i+1} (0-based i).
inline NamedMatroid FreeSwirl(int k) {
  if (k < 3) Fail(ErrorCode::kBadParams, "free swirl needs k >= 3");
  MatroidPtr chain = TwoSumChain(k).matroid;
  const int n = chain->size();
  ElementSet ends(n, {0, n - 1});
  MatroidPtr truncated = PrincipalTruncation(chain, Closure(*chain, ends));
  MatroidPtr swirl = Delete(truncated, ends);
  if (swirl->size() <= 16) swirl = Materialize(swirl);
  return {swirl, "Swirl(" + std::to_string(k) + ")",
          "delete(principal_truncation(two_sum_chain(k=" + std::to_string(k) +
              "), cl{x1,xk}), {x1,xk})"};
}

// P(n-1, q, k): PG(n-1, q) extended by a free point on a rank-k flat. The
// flat is the span of the last k coordinate vectors; the new element has id
// |PG(n-1,q)|.
inline NamedMatroid PrincipalPg(int n, std::uint64_t q, int k) {
  if (k < 1 || k > n) Fail(ErrorCode::kBadParams, "flat rank outside [1, n]");
  NamedMatroid pg = Pg(n, q);
  ElementSet flat(pg.matroid->size());
  const auto prefix = static_cast<int>(GeometricCount(q, k));
  for (int e = 0; e < prefix; ++e) flat.Insert(e);
  return {PrincipalExtension(pg.matroid, flat),
          "P(" + std::to_string(n - 1) + "," + std::to_string(q) + "," + std::to_string(k) + ")",
          "principal_extension(" + pg.name + ", rank-" + std::to_string(k) + " flat)"};
}

// Densest rank-n members known for L(q), Lcirc(q), Llambda(q).
inline NamedMatroid DensityWitness(std::uint64_t q, GrowthClass cls, int n) {
  if (n < 2) Fail(ErrorCode::kBadParams, "density witness needs n >= 2");
  const std::string tag = GrowthClassName(cls) + "(" + std::to_string(q) + "), n=" + std::to_string(n);
  switch (cls) {
    case GrowthClass::kL: {
      NamedMatroid pg = Pg(n, q);
      return {pg.matroid, pg.name, "witness " + tag + ": " + pg.provenance};
    }
    case GrowthClass::kLcirc: {
      NamedMatroid pg = Pg(n + 1, q);
      return {Truncate(pg.matroid, n), "T(" + pg.name + "," + std::to_string(n) + ")",
              "witness " + tag + ": truncate(" + pg.provenance + ", " + std::to_string(n) + ")"};
    }
    case GrowthClass::kLlambda: {
      NamedMatroid pg = Pg(n + 1, q);
      ElementSet line(pg.matroid->size());
      for (int e = 0; e < static_cast<int>(q) + 1; ++e) line.Insert(e);
      MatroidPtr pt = PrincipalTruncation(pg.matroid, line);
      return {Simplify(pt).matroid, "si(PT(" + pg.name + ",line))",
              "witness " + tag + ": si(principal_truncation(" + pg.provenance + ", line))"};
    }
  }
  Fail(ErrorCode::kBadParams, "unknown class");
}

}  // namespace mforge

#endif  // MFORGE_CONSTRUCTIONS_HPP_
