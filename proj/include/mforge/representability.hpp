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

#ifndef MFORGE_REPRESENTABILITY_HPP_
#define MFORGE_REPRESENTABILITY_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mforge/constructions.hpp"
#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/field.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

// ---------------------------------------------------------------------------
// Closed-form representability of free spikes and swirls.

inline void CheckRepParams(int k, std::uint64_t q) {
  if (k < 3) Fail(ErrorCode::kBadParams, "k must be >= 3");
  if (q < 3 || !IsPrimePower(q)) Fail(ErrorCode::kBadParams, "q must be a prime power >= 3");
}

// Spike(k) is GF(q)-representable iff q is not prime or k <= q - 2.
inline bool SpikeRepPredicate(int k, std::uint64_t q) {
  CheckRepParams(k, q);
  return !IsPrime(q) || static_cast<std::uint64_t>(k) + 2 <= q;
}

// Swirl(k) is GF(q)-representable iff q - 1 is not prime or k <= q - 3.
inline bool SwirlRepPredicate(int k, std::uint64_t q) {
  CheckRepParams(k, q);
  return !IsPrime(q - 1) || static_cast<std::uint64_t>(k) + 3 <= q;
}

// ---------------------------------------------------------------------------
// Group condition: k-1 non-identity alphas and distinct betas such that no
// sub-multiset of the alphas (the empty one included) aggregates to a beta.

enum class GroupKind { kAdditive, kMultiplicative };

struct SpikeWitness {
  GroupKind group;
  std::uint64_t q;
  std::vector<FieldElement> alphas;
  FieldElement beta1, beta2;
};

inline constexpr std::uint64_t kWitnessMaxQ = 13;
inline constexpr int kWitnessMaxK = 10;

namespace internal {

struct GroupOps {
  Field field;
  GroupKind kind;

  FieldElement Identity() const { return kind == GroupKind::kAdditive ? field.Zero() : field.One(); }
  FieldElement Op(FieldElement a, FieldElement b) const {
    return kind == GroupKind::kAdditive ? field.Add(a, b) : field.Mul(a, b);
  }
  // Group members in index order.
  std::vector<FieldElement> Members() const {
    return field.Enumerate(kind == GroupKind::kAdditive ? Which::kAll : Which::kNonzero);
  }
};

inline std::optional<SpikeWitness> GroupWitnessSearch(int k, std::uint64_t q, GroupKind kind) {
  if (k < 3) Fail(ErrorCode::kBadParams, "k must be >= 3");
  if (q > kWitnessMaxQ || k > kWitnessMaxK) {
    Fail(ErrorCode::kSizeCapExceeded, "witness search capped at q <= 13, k <= 10");
  }
  GroupOps g{Field::Create(q), kind};
  const std::vector<FieldElement> members = g.Members();
  std::vector<FieldElement> gens;
  for (FieldElement x : members) {
    if (x != g.Identity()) gens.push_back(x);
  }
  std::uint64_t all = 0;
  for (FieldElement x : members) all |= std::uint64_t{1} << x.index;

  const int depth = k - 1;
  std::vector<FieldElement> alphas(depth);
  std::optional<SpikeWitness> found;
  // Combinations with repetition over gens, in lexicographic order; the
  // attained set is carried along the recursion.
  std::function<void(int, std::size_t, std::uint64_t)> dfs = [&](int pos, std::size_t from,
                                                                 std::uint64_t attained) {
    if (found) return;
    if (pos == depth) {
      const std::uint64_t free = all & ~attained;
      if (std::popcount(free) >= 2) {
        const int b1 = std::countr_zero(free);
        const int b2 = std::countr_zero(free & (free - 1));
        found = SpikeWitness{kind, q, alphas, {static_cast<std::uint32_t>(b1)},
                             {static_cast<std::uint32_t>(b2)}};
      }
      return;
    }
    for (std::size_t i = from; i < gens.size() && !found; ++i) {
      std::uint64_t next = attained;
      for (std::uint64_t s = attained; s != 0; s &= s - 1) {
        FieldElement x{static_cast<std::uint32_t>(std::countr_zero(s))};
        next |= std::uint64_t{1} << g.Op(x, gens[i]).index;
      }
      alphas[pos] = gens[i];
      dfs(pos + 1, i, next);
    }
  };
  dfs(0, 0, std::uint64_t{1} << g.Identity().index);
  return found;
}

}  // namespace internal

inline std::optional<SpikeWitness> SpikeWitnessSearch(int k, std::uint64_t q) {
  return internal::GroupWitnessSearch(k, q, GroupKind::kAdditive);
}

inline std::optional<SpikeWitness> SwirlWitnessSearch(int k, std::uint64_t q) {
  return internal::GroupWitnessSearch(k, q, GroupKind::kMultiplicative);
}

// Independent re-check: enumerates all 2^(k-1) sub-multisets.
inline bool VerifySpikeWitness(const SpikeWitness& w) {
  internal::GroupOps g{Field::Create(w.q), w.group};
  auto member = [&](FieldElement x) {
    return x.index < w.q && (w.group == GroupKind::kAdditive || x.index != 0);
  };
  if (!member(w.beta1) || !member(w.beta2) || w.beta1 == w.beta2) return false;
  for (FieldElement a : w.alphas) {
    if (!member(a) || a == g.Identity()) return false;
  }
  const std::size_t n = w.alphas.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    FieldElement agg = g.Identity();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) agg = g.Op(agg, w.alphas[i]);
    }
    if (agg == w.beta1 || agg == w.beta2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tiny-instance linear representability by backtracking.

namespace internal {

inline int VectorRank(const Field& f, std::vector<std::vector<FieldElement>> rows) {
  int rank = 0;
  const int dim = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col].index != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const FieldElement inv = f.Inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.Mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col].index == 0) continue;
      const FieldElement c = rows[i][col];
      for (int j = 0; j < dim; ++j) rows[i][j] = f.Sub(rows[i][j], f.Mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace internal

// Backtracking over normalized matrices [I | A] for a greedy basis B: the
// column of e outside B is supported exactly on its fundamental circuit, and
// entries on a spanning forest of the support graph are scaled to 1. Columns
// are placed in element order and pruned whenever a subset rank disagrees;
// the result is re-verified on every subset.
inline std::optional<std::shared_ptr<const LinearMatroid>> BruteForceLinearRep(const MatroidPtr& m,
                                                                              std::uint64_t q) {
  const int n = m->size();
  const int r = m->FullRank();
  if (r > 5 || n > 10 || q > 7) {
    Fail(ErrorCode::kSizeCapExceeded, "brute-force representation needs r <= 5, n <= 10, q <= 7");
  }
  Field field = Field::Create(q);
  const ElementSet basis = GreedyBasis(*m, m->GroundSet());
  std::vector<int> row_of(n, -1);
  int rows = 0;
  basis.ForEach([&](int e) { row_of[e] = rows++; });

  // Union-find over rows [0, r) and columns [r, r + n).
  std::vector<int> parent(r + n);
  for (int i = 0; i < r + n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  // Per element: candidate columns.
  std::vector<std::vector<std::vector<FieldElement>>> options(n);
  const std::vector<FieldElement> nonzero = field.Enumerate(Which::kNonzero);
  for (int e = 0; e < n; ++e) {
    std::vector<FieldElement> col(r, field.Zero());
    if (row_of[e] >= 0) {
      col[row_of[e]] = field.One();
      options[e].push_back(col);
      continue;
    }
    if (m->Rank(ElementSet(n, {e})) == 0) {
      options[e].push_back(col);
      continue;
    }
    std::vector<int> free_rows;
    basis.ForEach([&](int b) {
      if (m->Rank(basis.Without(b).With(e)) != r) return;
      const int j = row_of[b];
      col[j] = field.One();
      const int a = find(j), c = find(r + e);
      if (a != c) {
        parent[a] = c;
      } else {
        free_rows.push_back(j);
      }
    });
    std::vector<std::size_t> digit(free_rows.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_rows.size(); ++i) col[free_rows[i]] = nonzero[digit[i]];
      options[e].push_back(col);
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == nonzero.size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }

  std::vector<std::vector<FieldElement>> assigned(n);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (const auto& v : options[i]) {
      assigned[i] = v;
      bool ok = true;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i) && ok; ++mask) {
        ElementSet s = ElementSet::FromMask(n, mask).With(i);
        std::vector<std::vector<FieldElement>> vecs;
        s.ForEach([&](int e) { vecs.push_back(assigned[e]); });
        ok = internal::VectorRank(field, vecs) == m->Rank(s);
      }
      if (ok && place(i + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  auto rep = std::make_shared<const LinearMatroid>(field, r, assigned);
  if (!RankAgreeExhaustive(*rep, *m)) {
    Fail(ErrorCode::kLemmaViolation, "representation failed re-verification");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Membership of excluded minors in L(q), Lcirc(q), Llambda(q).

enum class MinorKind { kSpike, kSwirl, kLine };

struct ExcludedMinor {
  MinorKind kind;
  std::int64_t param;  // k for spikes/swirls, m for the line U(2, m)

  std::string Name() const {
    switch (kind) {
      case MinorKind::kSpike: return "Spike(" + std::to_string(param) + ")";
      case MinorKind::kSwirl: return "Swirl(" + std::to_string(param) + ")";
      case MinorKind::kLine: return "U(2," + std::to_string(param) + ")";
    }
    return "?";
  }
};

struct MembershipFlags {
  bool in_L;
  bool in_Lcirc;
  bool in_Llambda;
};

// nullopt means the membership is not settled by the available rules.
struct PartialMembership {
  std::optional<bool> in_L, in_Lcirc, in_Llambda;
};

namespace internal {

// Rules for every prime power q >= 2. Free spikes and swirls are not binary
// (both have U(2,4)-minors); spikes lie in Lcirc(q) and Llambda(q) for every
// q; the swirl rules for Lcirc/Llambda need q >= 3 and k >= 4.
inline PartialMembership Membership(const ExcludedMinor& x, std::uint64_t q) {
  PartialMembership out;
  switch (x.kind) {
    case MinorKind::kLine: {
      const auto m = static_cast<std::uint64_t>(x.param);
      out.in_L = m <= q + 1;
      out.in_Lcirc = m <= q * q + q + 1;
      out.in_Llambda = m <= q * q + 1;
      break;
    }
    case MinorKind::kSpike: {
      out.in_L = q >= 3 && SpikeRepPredicate(static_cast<int>(x.param), q);
      out.in_Lcirc = true;
      out.in_Llambda = true;
      break;
    }
    case MinorKind::kSwirl: {
      if (x.param == 3) {
        // Swirl(3) and Spike(3) are both U(3,6).
        out.in_L = q >= 4;
        out.in_Lcirc = true;
        out.in_Llambda = true;
      } else if (q >= 3) {
        out.in_L = SwirlRepPredicate(static_cast<int>(x.param), q);
        out.in_Llambda = true;
        out.in_Lcirc = out.in_L;
      } else {
        out.in_L = false;
      }
      break;
    }
  }
  return out;
}

}  // namespace internal

inline MembershipFlags MembershipOf(const ExcludedMinor& x, std::uint64_t q) {
  if (!IsPrimePower(q)) Fail(ErrorCode::kBadParams, "q must be a prime power");
  if (x.kind != MinorKind::kLine && x.param < 3) Fail(ErrorCode::kBadParams, "k must be >= 3");
  if (x.kind == MinorKind::kLine && x.param < 2) Fail(ErrorCode::kBadParams, "line length must be >= 2");
  PartialMembership p = internal::Membership(x, q);
  if (!p.in_L || !p.in_Lcirc || !p.in_Llambda) {
    Fail(ErrorCode::kBadParams, x.Name() + " membership over GF(" + std::to_string(q) + ") is not settled");
  }
  return {*p.in_L, *p.in_Lcirc, *p.in_Llambda};
}

// ---------------------------------------------------------------------------
// Eventual base of a class defined by excluded lines, spikes and swirls.

inline constexpr std::int64_t kMaxEll = 1000000;

struct ClassSpec {
  std::optional<std::int64_t> line_ell;  // excludes U(2, l+2)
  std::set<int> spike_ranks;
  std::set<int> swirl_ranks;

  std::vector<ExcludedMinor> Excluded() const {
    std::vector<ExcludedMinor> out;
    if (line_ell) out.push_back({MinorKind::kLine, *line_ell + 2});
    for (int k : spike_ranks) out.push_back({MinorKind::kSpike, k});
    for (int k : swirl_ranks) out.push_back({MinorKind::kSwirl, k});
    return out;
  }
};

struct Blocking {
  std::string structure;               // "Lcirc(4)", "Llambda(4)", "L(7)"
  std::optional<std::string> minor;    // excluded minor lying inside, if any
};

struct BaseReport {
  std::optional<std::uint64_t> base;
  bool certified = false;
  std::uint64_t scan_bound = 0;  // every L(q') with q' > scan_bound holds an excluded minor
  std::vector<Blocking> blocking;
  std::vector<std::string> gaps;  // structures with no excluded minor known inside
};

inline BaseReport EventualBase(const ClassSpec& spec) {
  const std::vector<ExcludedMinor> excluded = spec.Excluded();
  if (excluded.empty()) Fail(ErrorCode::kBadParams, "class spec excludes nothing");
  if (spec.line_ell && (*spec.line_ell < 2 || *spec.line_ell > kMaxEll)) {
    Fail(ErrorCode::kBadParams, "line parameter outside [2, 10^6]");
  }
  std::uint64_t bound = 2;
  for (const ExcludedMinor& x : excluded) {
    if (x.kind != MinorKind::kLine && (x.param < 3 || x.param > kMaxEll)) {
      Fail(ErrorCode::kBadParams, "spike/swirl rank outside [3, 10^6]");
    }
    // Beyond these values L(q) always contains the minor.
    const std::int64_t b = x.kind == MinorKind::kLine    ? x.param - 1
                           : x.kind == MinorKind::kSpike ? x.param + 2
                                                         : x.param + 3;
    bound = std::max<std::uint64_t>(bound, static_cast<std::uint64_t>(b));
  }
  auto first_inside = [&](std::uint64_t q, auto member) -> std::optional<std::string> {
    for (const ExcludedMinor& x : excluded) {
      std::optional<bool> in = member(internal::Membership(x, q));
      if (in.value_or(false)) return x.Name();
    }
    return std::nullopt;
  };
  auto in_l = [](const PartialMembership& p) { return p.in_L; };
  auto in_lcirc = [](const PartialMembership& p) { return p.in_Lcirc; };
  auto in_llambda = [](const PartialMembership& p) { return p.in_Llambda; };

  BaseReport report;
  report.scan_bound = bound;
  for (std::uint64_t q = bound; q >= 2; --q) {
    if (IsPrimePower(q) && !first_inside(q, in_l)) {
      report.base = q;
      break;
    }
  }
  if (!report.base) Fail(ErrorCode::kNoBase, "every GF(q)-representable class holds an excluded minor");
  const std::uint64_t qs = *report.base;
  auto add = [&](const std::string& name, std::optional<std::string> minor) {
    if (!minor) report.gaps.push_back(name);
    report.blocking.push_back({name, std::move(minor)});
  };
  add("Lcirc(" + std::to_string(qs) + ")", first_inside(qs, in_lcirc));
  add("Llambda(" + std::to_string(qs) + ")", first_inside(qs, in_llambda));
  for (std::uint64_t q = qs + 1; q <= bound; ++q) {
    if (IsPrimePower(q)) add("L(" + std::to_string(q) + ")", first_inside(q, in_l));
  }
  report.certified = report.gaps.empty();
  return report;
}

}  // namespace mforge

#endif  // MFORGE_REPRESENTABILITY_HPP_
