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

#ifndef MFORGE_MINOR_SEARCH_HPP_
#define MFORGE_MINOR_SEARCH_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mforge/constructions.hpp"
#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/golden.hpp"
#include "mforge/isomorphism.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

inline constexpr int kMinorHostCap = 24;

// N is isomorphic to M / contract \ remove via iso, where iso maps the
// minor's elements (remaining ids of M in increasing order) onto N.
struct MinorWitness {
  ElementSet contract;
  ElementSet remove;
  IsoCertificate iso;
};

inline bool VerifyMinorWitness(const MatroidPtr& m, const MatroidPtr& n, const MinorWitness& w) {
  if (w.contract.universe() != m->size() || w.remove.universe() != m->size()) return false;
  if (w.contract.Intersects(w.remove)) return false;
  if (!IsIndependent(*m, w.contract)) return false;
  MinorPtr minor = Minor(m, w.contract, w.remove);
  if (minor->size() != n->size()) return false;
  return VerifyIsomorphism(*minor, *n, w.iso);
}

// Visits rank-k flats together with their canonical independent generating
// set. The visitor returns false to stop.
inline void ForEachFlatOfRank(const Matroid& m, int k, int cap,
                              const std::function<bool(const ElementSet&, const ElementSet&)>& visit) {
  CheckCap(m, cap, "flat enumeration");
  if (k < 0 || k > m.FullRank()) return;
  bool stop = false;
  std::function<void(const ElementSet&, int, const ElementSet&, int)> dfs =
      [&](const ElementSet& indep, int max_elem, const ElementSet& closure, int depth) {
        if (stop) return;
        if (depth == k) {
          if (!visit(indep, closure)) stop = true;
          return;
        }
        for (const ElementSet& cls : internal::CoveringClasses(m, indep, closure)) {
          const int g = cls.First();
          if (g < max_elem) continue;
          dfs(indep.With(g), g, closure | cls, depth + 1);
          if (stop) return;
        }
      };
  dfs(m.EmptySet(), -1, internal::Loops(m), 0);
}

struct LongestLine {
  int length = 0;       // largest m with a U(2,m)-minor; 0 when rank < 2
  ElementSet contract;  // independent set of size r - 2 realizing it
  std::vector<int> points;  // one representative per point of the line
};

// Maximizes, over rank-(r-2) flats F, the number of rank-(r-1) flats
// covering F: the point count of si(M / F).
inline LongestLine FindLongestLine(const Matroid& m, std::optional<int> stop_at = std::nullopt) {
  const int r = m.FullRank();
  if (r > 8 && m.size() > kEnumerationCap) {
    Fail(ErrorCode::kSizeCapExceeded, "longest line search needs rank <= 8 or <= 64 elements");
  }
  LongestLine best;
  best.contract = m.EmptySet();
  if (r < 2) return best;
  ForEachFlatOfRank(m, r - 2, kMaxRankGround, [&](const ElementSet& indep, const ElementSet& flat) {
    std::vector<ElementSet> classes = internal::CoveringClasses(m, indep, flat);
    if (static_cast<int>(classes.size()) > best.length) {
      best.length = static_cast<int>(classes.size());
      best.contract = indep;
      best.points.clear();
      for (const ElementSet& c : classes) best.points.push_back(c.First());
    }
    return !(stop_at && best.length >= *stop_at);
  });
  return best;
}

inline int LongestLineMinor(const Matroid& m) { return FindLongestLine(m).length; }

// Smallest l >= 2 with M in U(l), i.e. no U(2, l+2)-minor.
inline int LineExclusionParameter(const Matroid& m) {
  return std::max(2, LongestLineMinor(m) - 1);
}

namespace internal {

// Restriction of M to a line with at least `want` points, when M is small
// enough to scan its lines.
inline std::optional<MinorWitness> LineRestriction(const MatroidPtr& m, int want) {
  if (m->size() > kEnumerationCap || m->FullRank() < 2) return std::nullopt;
  const std::vector<int> cls = ParallelClasses(*m);
  std::optional<MinorWitness> found;
  ForEachFlatOfRank(*m, 2, kEnumerationCap, [&](const ElementSet&, const ElementSet& line) {
    ElementSet keep(m->size());
    std::vector<bool> seen(m->size(), false);
    line.ForEach([&](int e) {
      if (cls[e] >= 0 && !seen[cls[e]] && keep.Count() < want) {
        seen[cls[e]] = true;
        keep.Insert(e);
      }
    });
    if (keep.Count() < want) return true;
    IsoCertificate iso;
    for (int i = 0; i < want; ++i) iso.bijection.push_back(i);
    found = MinorWitness{m->EmptySet(), m->GroundSet() - keep, iso};
    return false;
  });
  return found;
}

inline std::optional<MinorWitness> UniformLineMinor(const MatroidPtr& m, const MatroidPtr& n) {
  const int want = n->size();
  if (auto direct = LineRestriction(m, want)) return direct;
  LongestLine line = FindLongestLine(*m, want);
  if (line.length < want) return std::nullopt;
  ElementSet keep(m->size());
  for (int i = 0; i < want; ++i) keep.Insert(line.points[i]);
  ElementSet remove = m->GroundSet() - keep - line.contract;
  IsoCertificate iso;
  for (int i = 0; i < want; ++i) iso.bijection.push_back(i);
  return MinorWitness{line.contract, remove, iso};
}

}  // namespace internal

// Searches contract-sets among independent sets of size r(M) - r(N) in
// lexicographic order; for simple N only one representative per point of
// M / C is tried. Returns the first witness found, or nullopt.
inline std::optional<MinorWitness> HasMinor(const MatroidPtr& m, const MatroidPtr& n) {
  const int nn = n->size();
  if (nn > m->size()) return std::nullopt;
  const int c = m->FullRank() - n->FullRank();
  if (c < 0) return std::nullopt;
  const bool n_simple = IsSimple(*n);
  if (n->FullRank() == 2 && n_simple && nn >= 2) return internal::UniformLineMinor(m, n);
  CheckCap(*m, kMinorHostCap, "minor search host");

  IsoProfile target(n);
  std::optional<MinorWitness> found;
  const int size = m->size();
  ForEachCombination(size, c, [&](std::span<const int> idx) {
    ElementSet contract = ElementSet::FromVector(size, idx);
    if (!IsIndependent(*m, contract)) return true;
    MinorPtr contracted = Contract(m, contract);
    // Pool of candidate elements, as ids of M.
    std::vector<int> pool;
    if (n_simple) {
      std::vector<int> cls = ParallelClasses(*contracted);
      int next = 0;
      for (int i = 0; i < contracted->size(); ++i) {
        if (cls[i] == next) {
          pool.push_back(contracted->parent_ids()[i]);
          ++next;
        }
      }
    } else {
      pool = contracted->parent_ids();
    }
    const int rest = static_cast<int>(pool.size());
    ForEachCombination(rest, nn, [&](std::span<const int> pick) {
      ElementSet keep(size);
      for (int i : pick) keep.Insert(pool[i]);
      if (m->Rank(keep | contract) - contract.Count() != n->FullRank()) return true;
      ElementSet remove = m->GroundSet() - keep - contract;
      MinorPtr candidate = Minor(m, contract, remove);
      if (auto iso = FindIsomorphism(IsoProfile(candidate), target)) {
        found = MinorWitness{contract, remove, *iso};
        return false;
      }
      return true;
    });
    return !found.has_value();
  });
  return found;
}

// ---------------------------------------------------------------------------
// Long-line dichotomy for q-dense matroids.

enum class LonglineBranch { kDenseContraction, kLineRestriction };

struct LonglineOutcome {
  LonglineBranch branch;
  ElementSet line;      // the flat cl(L) of the long line, for kLineRestriction
  int line_points = 0;  // number of points on that line
};

// Either M/e is q-dense, or some line through e has at least q+2 points.
inline LonglineOutcome LonglineStep(const MatroidPtr& m, std::uint64_t q, int e) {
  if (!IsQDense(*m, q)) Fail(ErrorCode::kPreconditionViolated, "input is not q-dense");
  ElementSet single(m->size(), {e});
  if (m->Rank(single) == 0) Fail(ErrorCode::kBadParams, "element is a loop");
  if (IsQDense(*Contract(m, single), q)) {
    return {LonglineBranch::kDenseContraction, m->EmptySet(), 0};
  }
  const ElementSet point = Closure(*m, single);
  const std::vector<int> cls = ParallelClasses(*m);
  for (const ElementSet& rest : internal::CoveringClasses(*m, single, point)) {
    std::vector<bool> seen(m->size(), false);
    int points = 1;
    rest.ForEach([&](int x) {
      if (!seen[cls[x]]) {
        seen[cls[x]] = true;
        ++points;
      }
    });
    if (static_cast<std::uint64_t>(points) >= q + 2) {
      return {LonglineBranch::kLineRestriction, point | rest, points};
    }
  }
  Fail(ErrorCode::kLemmaViolation, "neither a q-dense contraction nor a (q+2)-point line through " +
                                       std::to_string(e) + " in " + m->Describe());
}

// ---------------------------------------------------------------------------
// Dense restriction with large cocircuits.

// eps * phi^d > threshold, exactly.
inline bool WeightedDense(std::int64_t eps, int d, std::int64_t threshold) {
  return ZPhi(eps) * ZPhi::PhiPow(d) > ZPhi(threshold);
}

// (sqrt5 - 1)^(r-1) >= l^(t-1), exactly; sqrt5 - 1 = 2(phi - 1).
inline bool ReductionPreconditionHolds(int rank, std::int64_t ell, int t) {
  ZPhi lhs(1);
  for (int i = 0; i + 1 < rank; ++i) lhs = lhs * ZPhi(2) * ZPhi::InvPhi();
  std::int64_t rhs = 1;
  for (int i = 0; i + 1 < t; ++i) rhs *= ell;
  return lhs >= ZPhi(rhs);
}

struct DenseStep {
  ElementSet cocircuit;  // ids of the input matroid
  bool kept_cocircuit;   // true: restricted to the cocircuit; false: to its complement
};

struct DenseRestrictionReport {
  ElementSet restriction;  // ids of the input matroid
  std::vector<DenseStep> trace;
  MinorPtr final_matroid;
  bool rank_bound_applies = false;  // (sqrt5-1)^(r-1) >= l^(t-1), so r(final) >= t
};

inline DenseRestrictionReport DenseRestriction(const MatroidPtr& m, std::uint64_t q, int t,
                                               std::optional<std::int64_t> ell = std::nullopt) {
  if (!IsQDense(*m, q)) Fail(ErrorCode::kPreconditionViolated, "input is not q-dense");
  const int r = m->FullRank();
  const std::int64_t l = ell ? *ell : LineExclusionParameter(*m);
  const auto threshold = static_cast<std::int64_t>(GeometricCount(q, r));
  DenseRestrictionReport report{m->GroundSet(), {}, Restrict(m, m->GroundSet()),
                                ReductionPreconditionHolds(r, l, t)};
  while (true) {
    MinorPtr current = report.final_matroid;
    const int r0 = current->FullRank();
    std::optional<ElementSet> low;
    for (const ElementSet& c : Cocircuits(*current)) {
      if (current->Rank(c) <= r0 - 2) {
        low = c;
        break;
      }
    }
    if (!low) break;
    const ElementSet in_m = current->ToParent(*low);
    const ElementSet side_c = in_m;
    const ElementSet side_rest = report.restriction - in_m;
    auto weighted = [&](const ElementSet& s) {
      MinorPtr part = Restrict(m, s);
      return WeightedDense(Epsilon(*part), r - part->FullRank(), threshold);
    };
    bool keep_c;
    if (weighted(side_c)) {
      keep_c = true;
    } else if (weighted(side_rest)) {
      keep_c = false;
    } else {
      Fail(ErrorCode::kLemmaViolation, "both sides of cocircuit " + in_m.ToString() +
                                           " fail the weighted density bound");
    }
    report.trace.push_back({in_m, keep_c});
    report.restriction = keep_c ? side_c : side_rest;
    report.final_matroid = Restrict(m, report.restriction);
  }
  const MinorPtr& fin = report.final_matroid;
  if (!IsQDense(*fin, q)) Fail(ErrorCode::kLemmaViolation, "final restriction is not q-dense");
  if (report.rank_bound_applies && fin->FullRank() < t) {
    Fail(ErrorCode::kLemmaViolation, "final restriction has rank below t");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Unavoidable minors of non-representable extensions of PG(2m-1, q).

enum class UnavoidableTag { kLine, kTop };  // P(m-1,q,2) or P(m-1,q,m)

struct UnavoidableResult {
  UnavoidableTag tag;
  std::string target_name;  // e.g. "P(2,2,3)"
  int flat_rank = 0;        // r(F) for the minimal flat F spanning e
  ElementSet flat;
  MinorWitness witness;
  MatroidPtr target;
};

// M must be PG(2m-1, q) (elements 0..n-2) extended by the element n-1.
inline UnavoidableResult UnavoidableMinorOfExtension(const MatroidPtr& m, int mm, std::uint64_t q) {
  if (mm < 2) Fail(ErrorCode::kBadParams, "m must be >= 2");
  const int n = m->size();
  const int e = n - 1;
  const std::uint64_t pg_points = GeometricCount(q, 2 * mm);
  if (n < 1 || static_cast<std::uint64_t>(n - 1) != pg_points) {
    Fail(ErrorCode::kNotAnExtension, "expected " + std::to_string(pg_points + 1) + " elements");
  }
  ElementSet last(n, {e});
  MinorPtr base = Delete(m, last);
  if (base->FullRank() != 2 * mm || m->FullRank() != 2 * mm || !IsSimple(*base) ||
      static_cast<std::uint64_t>(Epsilon(*base)) != pg_points) {
    Fail(ErrorCode::kNotAnExtension, "M \\ e is not a rank-" + std::to_string(2 * mm) +
                                         " projective geometry over GF(" + std::to_string(q) + ")");
  }
  // Flats of a projective geometry are modular, so the flats spanning e are
  // closed under intersection; F is the meet of the hyperplanes spanning e.
  ElementSet flat = base->GroundSet();
  for (const ElementSet& h : Hyperplanes(*base)) {
    ElementSet in_m = h.Resized(n);
    if (m->Rank(in_m.With(e)) == m->Rank(in_m)) flat &= h;
  }
  const int rf = base->Rank(flat);
  if (rf <= 1) Fail(ErrorCode::kRepresentableInput, "e lies on a point or is a loop");

  const ElementSet basis_f = GreedyBasis(*base, flat);
  const ElementSet basis = ExtendToBasis(*base, basis_f, base->GroundSet());
  const std::vector<int> bf = basis_f.ToVector();
  const std::vector<int> outside = (basis - basis_f).ToVector();
  ElementSet contract(n);
  UnavoidableTag tag;
  if (rf >= mm) {
    tag = UnavoidableTag::kTop;
    ElementSet kept(n);
    for (int i = 0; i < mm; ++i) kept.Insert(bf[i]);
    contract = basis.Resized(n) - kept;
  } else {
    tag = UnavoidableTag::kLine;
    const int j1 = rf - 2;
    for (int i = 0; i < j1; ++i) contract.Insert(bf[i]);
    for (int i = 0; i < mm - j1; ++i) contract.Insert(outside[i]);
  }
  MinorPtr contracted = Contract(m, contract);
  Simplification si = Simplify(contracted);
  ElementSet keep(n);
  for (int id : si.matroid->parent_ids()) keep.Insert(contracted->parent_ids()[id]);
  ElementSet remove = m->GroundSet() - keep - contract;

  NamedMatroid target = PrincipalPg(mm, q, tag == UnavoidableTag::kTop ? mm : 2);
  MinorPtr candidate = Minor(m, contract, remove);
  std::optional<IsoCertificate> iso = AreIsomorphic(candidate, target.matroid);
  if (!iso) {
    Fail(ErrorCode::kLemmaViolation, "contraction recipe did not produce " + target.name);
  }
  return {tag, target.name, rf, flat.Resized(n), MinorWitness{contract, remove, *iso}, target.matroid};
}

}  // namespace mforge

#endif  // MFORGE_MINOR_SEARCH_HPP_
