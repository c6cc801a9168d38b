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

#ifndef MFORGE_ISOMORPHISM_HPP_
#define MFORGE_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"

namespace mforge {

inline constexpr int kIsoCap = 20;

// bijection[i] is the image in N of element i of M.
struct IsoCertificate {
  std::vector<int> bijection;
};

// Circuit data of one side of an isomorphism test, reusable across many
// candidates.
class IsoProfile {
 public:
  explicit IsoProfile(const MatroidPtr& m, int cap = kIsoCap)
      : size_(m->size()), rank_(m->FullRank()) {
    CheckCap(*m, cap, "isomorphism test");
    epsilon_ = Epsilon(*m);
    for (const ElementSet& c : Circuits(m, cap)) {
      circuits_.push_back(c.Mask());
      circuit_set_.insert(c.Mask());
    }
    signature_.assign(size_, std::vector<int>(size_ + 2, 0));
    for (std::uint64_t c : circuits_) {
      const int len = std::popcount(c);
      for (std::uint64_t r = c; r != 0; r &= r - 1) {
        ++signature_[std::countr_zero(r)][len];
      }
    }
  }

  int size() const { return size_; }
  int rank() const { return rank_; }
  int epsilon() const { return epsilon_; }
  const std::vector<std::uint64_t>& circuits() const { return circuits_; }
  bool IsCircuit(std::uint64_t mask) const { return circuit_set_.count(mask) > 0; }
  const std::vector<int>& Signature(int e) const { return signature_[e]; }

  bool CoarselyMatches(const IsoProfile& o) const {
    if (size_ != o.size_ || rank_ != o.rank_ || epsilon_ != o.epsilon_) return false;
    if (circuits_.size() != o.circuits_.size()) return false;
    std::vector<std::vector<int>> a = signature_, b = o.signature_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  int size_, rank_, epsilon_ = 0;
  std::vector<std::uint64_t> circuits_;
  std::unordered_set<std::uint64_t> circuit_set_;
  std::vector<std::vector<int>> signature_;
};

// Backtracking over bijections that send every circuit of M to a circuit of
// N. With equal circuit counts this forces a bijection of circuit sets.
inline std::optional<IsoCertificate> FindIsomorphism(const IsoProfile& m, const IsoProfile& n) {
  if (!m.CoarselyMatches(n)) return std::nullopt;
  const int size = m.size();
  if (size == 0) return IsoCertificate{};

  // Candidate images share the per-element circuit signature.
  std::vector<std::vector<int>> candidates(size);
  for (int e = 0; e < size; ++e) {
    for (int f = 0; f < size; ++f) {
      if (m.Signature(e) == n.Signature(f)) candidates[e].push_back(f);
    }
  }

  // Order: repeatedly take the element completing the most circuits, then
  // the one with fewest candidates.
  std::vector<int> order;
  std::uint64_t placed = 0;
  for (int step = 0; step < size; ++step) {
    int best = -1;
    long best_score = -1;
    for (int e = 0; e < size; ++e) {
      if (placed >> e & 1) continue;
      long completes = 0, touches = 0;
      const std::uint64_t bit = std::uint64_t{1} << e;
      for (std::uint64_t c : m.circuits()) {
        if (!(c & bit)) continue;
        if (((c & ~bit) & ~placed) == 0) ++completes;
        if (c & placed) ++touches;
      }
      const long score = completes * 4096 * 64 + touches * 64 + (63 - static_cast<long>(std::min<std::size_t>(63, candidates[e].size())));
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    order.push_back(best);
    placed |= std::uint64_t{1} << best;
  }

  // Circuits that become fully mapped at each position of the order.
  std::vector<std::vector<std::uint64_t>> completed(size);
  {
    std::vector<int> position(size);
    for (int i = 0; i < size; ++i) position[order[i]] = i;
    for (std::uint64_t c : m.circuits()) {
      int last = 0;
      for (std::uint64_t r = c; r != 0; r &= r - 1) {
        last = std::max(last, position[std::countr_zero(r)]);
      }
      completed[last].push_back(c);
    }
  }

  std::vector<int> image(size, -1);
  std::uint64_t used = 0;
  auto consistent = [&](int depth) {
    for (std::uint64_t c : completed[depth]) {
      std::uint64_t img = 0;
      for (std::uint64_t r = c; r != 0; r &= r - 1) {
        img |= std::uint64_t{1} << image[std::countr_zero(r)];
      }
      if (!n.IsCircuit(img)) return false;
    }
    return true;
  };
  // Iterative backtracking; choice[d] indexes candidates[order[d]].
  std::vector<int> choice(size, -1);
  int depth = 0;
  while (depth >= 0) {
    const int e = order[depth];
    if (choice[depth] >= 0) {
      used &= ~(std::uint64_t{1} << image[e]);
      image[e] = -1;
    }
    bool advanced = false;
    while (++choice[depth] < static_cast<int>(candidates[e].size())) {
      const int f = candidates[e][choice[depth]];
      if (used >> f & 1) continue;
      image[e] = f;
      used |= std::uint64_t{1} << f;
      if (consistent(depth)) {
        advanced = true;
        break;
      }
      used &= ~(std::uint64_t{1} << f);
      image[e] = -1;
    }
    if (advanced) {
      if (depth + 1 == size) return IsoCertificate{image};
      ++depth;
      choice[depth] = -1;
    } else {
      choice[depth] = -1;
      --depth;
    }
  }
  return std::nullopt;
}

// Certificate mapping M onto N, or nullopt when they are not isomorphic.
inline std::optional<IsoCertificate> AreIsomorphic(const MatroidPtr& m, const MatroidPtr& n) {
  if (m->size() > kIsoCap || n->size() > kIsoCap) {
    Fail(ErrorCode::kSizeCapExceeded, "isomorphism test beyond " + std::to_string(kIsoCap) + " elements");
  }
  if (m->size() != n->size() || m->FullRank() != n->FullRank()) return std::nullopt;
  return FindIsomorphism(IsoProfile(m), IsoProfile(n));
}

// Re-checks a certificate from scratch by rank queries: every subset when
// |E| <= 12, otherwise 10^4 seeded random subsets.
inline bool VerifyIsomorphism(const Matroid& m, const Matroid& n, const IsoCertificate& cert,
                              std::uint64_t seed = 0x5eed) {
  const int size = m.size();
  if (n.size() != size || static_cast<int>(cert.bijection.size()) != size) return false;
  std::vector<bool> hit(size, false);
  for (int f : cert.bijection) {
    if (f < 0 || f >= size || hit[f]) return false;
    hit[f] = true;
  }
  auto check = [&](const ElementSet& x) {
    ElementSet y(size);
    x.ForEach([&](int e) { y.Insert(cert.bijection[e]); });
    return m.Rank(x) == n.Rank(y);
  };
  if (size <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      if (!check(ElementSet::FromMask(size, mask))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 10000; ++i) {
    ElementSet x(size);
    for (int e = 0; e < size; ++e) {
      if (rng() & 1) x.Insert(e);
    }
    if (!check(x)) return false;
  }
  return true;
}

}  // namespace mforge

#endif  // MFORGE_ISOMORPHISM_HPP_
