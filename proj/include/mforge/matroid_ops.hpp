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

#ifndef MFORGE_MATROID_OPS_HPP_
#define MFORGE_MATROID_OPS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/matroid.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

// Default ground-size cap for enumerative operations.
inline constexpr int kEnumerationCap = 64;
inline constexpr int kCircuitCap = 20;

inline void CheckCap(const Matroid& m, int cap, const char* what) {
  if (m.size() > cap) {
    Fail(ErrorCode::kSizeCapExceeded, std::string(what) + " on " + std::to_string(m.size()) +
                                          " elements (cap " + std::to_string(cap) + ")");
  }
}

inline ElementSet Closure(const Matroid& m, const ElementSet& x) {
  const int r = m.Rank(x);
  ElementSet cl = x;
  for (int e = 0; e < m.size(); ++e) {
    if (!x.Contains(e) && m.Rank(x.With(e)) == r) cl.Insert(e);
  }
  return cl;
}

inline bool IsFlat(const Matroid& m, const ElementSet& x) { return Closure(m, x) == x; }

inline bool IsIndependent(const Matroid& m, const ElementSet& x) { return m.Rank(x) == x.Count(); }

// Lexicographically least basis of X.
inline ElementSet GreedyBasis(const Matroid& m, const ElementSet& x) {
  ElementSet basis(m.size());
  int r = 0;
  x.ForEach([&](int e) {
    if (m.Rank(basis.With(e)) == r + 1) {
      basis.Insert(e);
      ++r;
    }
  });
  return basis;
}

// Extends an independent set to a basis of X, adding elements greedily.
inline ElementSet ExtendToBasis(const Matroid& m, const ElementSet& independent,
                                const ElementSet& x) {
  ElementSet basis = independent;
  int r = m.Rank(basis);
  x.ForEach([&](int e) {
    if (!basis.Contains(e) && m.Rank(basis.With(e)) == r + 1) {
      basis.Insert(e);
      ++r;
    }
  });
  return basis;
}

namespace internal {

// Partitions the elements outside `closure` into the flats covering it:
// x and y share a class iff r(I + x + y) = |I| + 1. Classes are ordered by
// their smallest element.
inline std::vector<ElementSet> CoveringClasses(const Matroid& m, const ElementSet& indep,
                                               const ElementSet& closure) {
  const int r = indep.Count();
  std::vector<ElementSet> classes;
  std::vector<int> reps;
  for (int x = 0; x < m.size(); ++x) {
    if (closure.Contains(x)) continue;
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (m.Rank(indep.With(reps[c]).With(x)) == r + 1) {
        classes[c].Insert(x);
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(x);
      classes.emplace_back(m.size(), std::initializer_list<int>{x});
    }
  }
  return classes;
}

inline ElementSet Loops(const Matroid& m) {
  ElementSet loops(m.size());
  for (int e = 0; e < m.size(); ++e) {
    if (m.Rank(ElementSet(m.size(), {e})) == 0) loops.Insert(e);
  }
  return loops;
}

// Depth-first flat enumeration from canonical generating sets: a flat is
// reached only from its lexicographically least basis.
inline void FlatsDfs(const Matroid& m, const ElementSet& indep, int max_elem,
                     const ElementSet& closure, int depth, int target,
                     const std::function<void(const ElementSet&)>& emit) {
  if (depth == target) {
    emit(closure);
    return;
  }
  for (const ElementSet& cls : CoveringClasses(m, indep, closure)) {
    const int g = cls.First();
    if (g < max_elem) continue;
    FlatsDfs(m, indep.With(g), g, closure | cls, depth + 1, target, emit);
  }
}

}  // namespace internal

// All flats of rank exactly k, in deterministic depth-first order.
inline std::vector<ElementSet> FlatsOfRank(const Matroid& m, int k, int cap = kEnumerationCap) {
  CheckCap(m, cap, "flat enumeration");
  std::vector<ElementSet> out;
  if (k < 0 || k > m.FullRank()) return out;
  internal::FlatsDfs(m, m.EmptySet(), -1, internal::Loops(m), 0, k,
                     [&](const ElementSet& f) { out.push_back(f); });
  return out;
}

inline std::vector<ElementSet> Hyperplanes(const Matroid& m, int cap = kEnumerationCap) {
  if (m.FullRank() == 0) return {};
  return FlatsOfRank(m, m.FullRank() - 1, cap);
}

// Parallel class id per element; -1 marks loops. Class ids follow the order
// of each class's smallest element.
inline std::vector<int> ParallelClasses(const Matroid& m) {
  if (auto fast = m.FastParallelClasses()) {
    // Renumber by first occurrence so ids are backend independent.
    std::vector<int> remap(m.size(), -1), out(m.size(), -1);
    int next = 0;
    for (int e = 0; e < m.size(); ++e) {
      const int c = (*fast)[e];
      if (c < 0) continue;
      if (remap[c] < 0) remap[c] = next++;
      out[e] = remap[c];
    }
    return out;
  }
  std::vector<int> cls(m.size(), -1);
  std::vector<int> reps;
  for (int e = 0; e < m.size(); ++e) {
    ElementSet single(m.size(), {e});
    if (m.Rank(single) == 0) continue;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (m.Rank(single.With(reps[c])) == 1) {
        cls[e] = static_cast<int>(c);
        break;
      }
    }
    if (cls[e] < 0) {
      cls[e] = static_cast<int>(reps.size());
      reps.push_back(e);
    }
  }
  return cls;
}

// Number of rank-1 flats.
inline int Epsilon(const Matroid& m) {
  int points = 0;
  for (int c : ParallelClasses(m)) points = std::max(points, c + 1);
  return points;
}

inline bool IsSimple(const Matroid& m) {
  std::vector<int> cls = ParallelClasses(m);
  for (int e = 0; e < m.size(); ++e) {
    if (cls[e] != e) return false;
  }
  return true;
}

inline bool IsQDense(const Matroid& m, std::uint64_t q) {
  if (q < 2) Fail(ErrorCode::kBadParams, "q-density needs q >= 2");
  return static_cast<std::uint64_t>(Epsilon(m)) > GeometricCount(q, m.FullRank());
}

using MinorPtr = std::shared_ptr<const MinorView>;

inline MinorPtr Minor(MatroidPtr m, const ElementSet& contract, const ElementSet& remove) {
  return std::make_shared<const MinorView>(std::move(m), contract, remove);
}
inline MinorPtr Restrict(MatroidPtr m, const ElementSet& keep) {
  ElementSet drop = keep.Complement();
  return Minor(std::move(m), ElementSet(keep.universe()), drop);
}
inline MinorPtr Delete(MatroidPtr m, const ElementSet& remove) {
  ElementSet none(remove.universe());
  return Minor(std::move(m), none, remove);
}
inline MinorPtr Contract(MatroidPtr m, const ElementSet& contract) {
  ElementSet none(contract.universe());
  return Minor(std::move(m), contract, none);
}

struct Simplification {
  MinorPtr matroid;
  // point_of[e] is the element of the simplification representing e's
  // point, or -1 for loops.
  std::vector<int> point_of;
};

// si(M): the smallest element of each parallel class, loops dropped.
inline Simplification Simplify(MatroidPtr m) {
  std::vector<int> cls = ParallelClasses(*m);
  ElementSet keep(m->size());
  std::vector<int> rep_of_class;
  for (int e = 0; e < m->size(); ++e) {
    if (cls[e] >= 0 && cls[e] == static_cast<int>(rep_of_class.size())) {
      rep_of_class.push_back(e);
      keep.Insert(e);
    }
  }
  Simplification out{Restrict(std::move(m), keep), std::vector<int>(cls.size(), -1)};
  for (std::size_t e = 0; e < cls.size(); ++e) out.point_of[e] = cls[e];
  return out;
}

inline MatroidPtr Dual(MatroidPtr m) { return std::make_shared<const DualView>(std::move(m)); }

inline MatroidPtr Truncate(MatroidPtr m, int t) {
  return std::make_shared<const TruncationView>(std::move(m), t);
}

inline std::shared_ptr<const PrincipalExtensionView> PrincipalExtension(MatroidPtr m,
                                                                        const ElementSet& flat) {
  return std::make_shared<const PrincipalExtensionView>(std::move(m), flat);
}

// Principal extension on F followed by contraction of the new element.
// Element ids are unchanged.
inline MinorPtr PrincipalTruncation(MatroidPtr m, const ElementSet& flat) {
  if (m->Rank(flat) < 2) Fail(ErrorCode::kBadRank, "principal truncation needs a flat of rank >= 2");
  auto ext = PrincipalExtension(std::move(m), flat);
  ElementSet e(ext->size(), {ext->new_element()});
  return Contract(ext, e);
}

inline MatroidPtr DirectSum(MatroidPtr a, MatroidPtr b) {
  return std::make_shared<const DirectSumView>(std::move(a), std::move(b));
}

inline std::shared_ptr<const ParallelConnectionView> ParallelConnection(MatroidPtr m1,
                                                                        MatroidPtr m2, int p1,
                                                                        int p2) {
  return std::make_shared<const ParallelConnectionView>(std::move(m1), std::move(m2), p1, p2);
}

// Parallel connection with the basepoint deleted. Ids: M1's elements other
// than p1 in order, then M2's elements other than p2 in order.
inline MinorPtr TwoSum(MatroidPtr m1, MatroidPtr m2, int p1, int p2) {
  auto pc = ParallelConnection(std::move(m1), std::move(m2), p1, p2);
  ElementSet base(pc->size(), {pc->basepoint()});
  return Delete(pc, base);
}

// Independence table over all subsets, reusing an existing table.
inline std::shared_ptr<const TableMatroid> Materialize(const MatroidPtr& m) {
  if (auto table = std::dynamic_pointer_cast<const TableMatroid>(m)) return table;
  return std::make_shared<const TableMatroid>(*m);
}

// Explicit bases (ground size <= 24 through the independence table).
inline std::shared_ptr<const BasesMatroid> MaterializeBases(const MatroidPtr& m) {
  auto table = Materialize(m);
  const int n = m->size();
  const int r = m->FullRank();
  std::vector<std::uint64_t> bases;
  ForEachCombination(n, r, [&](std::span<const int> idx) {
    std::uint64_t mask = 0;
    for (int e : idx) mask |= std::uint64_t{1} << e;
    if (table->Independent(mask)) bases.push_back(mask);
    return true;
  });
  return std::make_shared<const BasesMatroid>(n, r, std::move(bases));
}

// Minimal dependent sets in canonical order.
inline std::vector<ElementSet> Circuits(const MatroidPtr& m, int cap = kCircuitCap) {
  CheckCap(*m, cap, "circuit enumeration");
  auto table = Materialize(m);
  const int n = m->size();
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!table->Independent(mask)) continue;
    const int start = mask == 0 ? 0 : 64 - std::countl_zero(mask);
    for (int e = start; e < n; ++e) {
      const std::uint64_t c = mask | (std::uint64_t{1} << e);
      if (table->Independent(c)) continue;
      bool minimal = true;
      for (std::uint64_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
        minimal = table->Independent(c & ~(rest & -rest));
      }
      if (minimal) out.push_back(ElementSet::FromMask(n, c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Complements of hyperplanes, in canonical order.
inline std::vector<ElementSet> Cocircuits(const Matroid& m, int cap = kEnumerationCap) {
  std::vector<ElementSet> out;
  for (const ElementSet& h : Hyperplanes(m, cap)) out.push_back(h.Complement());
  std::sort(out.begin(), out.end());
  return out;
}

// Exhaustive rank-axiom check in local form: r(empty) = 0, unit increase,
// and r(X+e) + r(X+f) >= r(X+e+f) + r(X). Returns a description of the
// first violation, if any.
inline std::optional<std::string> RankAxiomViolation(const Matroid& m, int cap = 12) {
  CheckCap(m, cap, "rank-axiom check");
  const int n = m.size();
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<int> rank(limit);
  for (std::uint64_t x = 0; x < limit; ++x) rank[x] = m.Rank(ElementSet::FromMask(n, x));
  if (rank[0] != 0) return "rank of empty set is " + std::to_string(rank[0]);
  for (std::uint64_t x = 0; x < limit; ++x) {
    const int size = std::popcount(x);
    if (rank[x] < 0 || rank[x] > size) return "rank out of range at mask " + std::to_string(x);
    for (int e = 0; e < n; ++e) {
      const std::uint64_t be = std::uint64_t{1} << e;
      if (x & be) continue;
      const int d = rank[x | be] - rank[x];
      if (d != 0 && d != 1) return "non-unit increase at mask " + std::to_string(x);
      for (int f = e + 1; f < n; ++f) {
        const std::uint64_t bf = std::uint64_t{1} << f;
        if (x & bf) continue;
        if (rank[x | be] + rank[x | bf] < rank[x | be | bf] + rank[x]) {
          return "submodularity fails at mask " + std::to_string(x);
        }
      }
    }
  }
  return std::nullopt;
}

// True when both matroids have equal rank on every subset (n <= 20).
inline bool RankAgreeExhaustive(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  CheckCap(a, kCircuitCap, "exhaustive rank comparison");
  const int n = a.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    ElementSet s = ElementSet::FromMask(n, x);
    if (a.Rank(s) != b.Rank(s)) return false;
  }
  return true;
}

}  // namespace mforge

#endif  // MFORGE_MATROID_OPS_HPP_
