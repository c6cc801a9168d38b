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

#ifndef MFORGE_MATROID_HPP_
#define MFORGE_MATROID_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mforge/element_set.hpp"
#include "mforge/error.hpp"
#include "mforge/field.hpp"

namespace mforge {

// Rank queries alone are allowed up to this many elements.
inline constexpr int kMaxRankGround = 4096;

enum class Backend { kLinear, kBases, kView };

// A matroid on the ground set {0, ..., size-1}, given by its rank function.
// Matroids are immutable; share them through MatroidPtr.
class Matroid {
 public:
  explicit Matroid(int size) : size_(size) {
    if (size < 0 || size > kMaxRankGround) {
      Fail(ErrorCode::kSizeCapExceeded, "ground set of " + std::to_string(size) + " elements");
    }
  }
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  int size() const { return size_; }

  int Rank(const ElementSet& x) const {
    if (x.universe() != size_) {
      Fail(ErrorCode::kBadParams, "subset universe " + std::to_string(x.universe()) +
                                      " does not match ground size " + std::to_string(size_));
    }
    return RankImpl(x);
  }

  int FullRank() const {
    int r = full_rank_.load(std::memory_order_relaxed);
    if (r < 0) {
      r = RankImpl(ElementSet::Full(size_));
      full_rank_.store(r, std::memory_order_relaxed);
    }
    return r;
  }

  ElementSet EmptySet() const { return ElementSet(size_); }
  ElementSet GroundSet() const { return ElementSet::Full(size_); }

  virtual Backend backend() const = 0;
  virtual std::string Describe() const = 0;

  // Parallel class id per element (-1 for loops) when a backend can produce
  // them without rank queries.
  virtual std::optional<std::vector<int>> FastParallelClasses() const { return std::nullopt; }

 protected:
  virtual int RankImpl(const ElementSet& x) const = 0;

 private:
  int size_;
  mutable std::atomic<int> full_rank_{-1};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Memoized ranks keyed by bit pattern. Behaves as a pure cache: concurrent
// callers may compute the same entry twice and store identical values.
class RankCache {
 public:
  static constexpr std::size_t kMaxEntries = 1 << 18;

  template <typename F>
  int GetOrCompute(const ElementSet& x, F&& compute) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(x);
      if (it != map_.end()) return it->second;
    }
    int r = compute();
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= kMaxEntries) map_.clear();
    map_.emplace(x, r);
    return r;
  }

 private:
  mutable std::mutex mu_;
  mutable std::unordered_map<ElementSet, int, ElementSetHash> map_;
};

// Column matroid of a matrix over GF(q); rank by Gaussian elimination.
class LinearMatroid final : public Matroid {
 public:
  LinearMatroid(Field field, int dimension, std::vector<std::vector<FieldElement>> columns)
      : Matroid(static_cast<int>(columns.size())), field_(std::move(field)), dim_(dimension) {
    data_.reserve(columns.size() * dim_);
    for (const auto& col : columns) {
      if (static_cast<int>(col.size()) != dim_) {
        Fail(ErrorCode::kBadParams, "column has wrong dimension");
      }
      for (FieldElement x : col) {
        if (x.index >= field_.q()) Fail(ErrorCode::kBadParams, "entry outside field");
        data_.push_back(static_cast<std::uint16_t>(x.index));
      }
    }
  }

  const Field& field() const { return field_; }
  int dimension() const { return dim_; }

  std::vector<FieldElement> Column(int e) const {
    std::vector<FieldElement> col(dim_);
    for (int i = 0; i < dim_; ++i) col[i] = {data_[std::size_t(e) * dim_ + i]};
    return col;
  }

  Backend backend() const override { return Backend::kLinear; }
  std::string Describe() const override {
    return "linear(" + field_.Name() + ", " + std::to_string(size()) + " columns)";
  }

  std::optional<std::vector<int>> FastParallelClasses() const override {
    std::vector<int> cls(size(), -1);
    std::map<std::vector<std::uint16_t>, int> seen;
    std::vector<std::uint16_t> v(dim_);
    for (int e = 0; e < size(); ++e) {
      const std::uint16_t* col = &data_[std::size_t(e) * dim_];
      int lead = -1;
      for (int i = 0; i < dim_; ++i) {
        if (col[i] != 0) {
          lead = i;
          break;
        }
      }
      if (lead < 0) continue;
      FieldElement s = field_.Inv({col[lead]});
      for (int i = 0; i < dim_; ++i) {
        v[i] = static_cast<std::uint16_t>(field_.Mul(s, {col[i]}).index);
      }
      auto [it, inserted] = seen.emplace(v, static_cast<int>(seen.size()));
      cls[e] = it->second;
    }
    return cls;
  }

 protected:
  int RankImpl(const ElementSet& x) const override {
    std::vector<std::vector<std::uint16_t>> rows;
    std::vector<int> pivots;
    std::vector<std::uint16_t> v(dim_);
    int rank = 0;
    bool done = false;
    x.ForEach([&](int e) {
      if (done) return;
      const std::uint16_t* col = &data_[std::size_t(e) * dim_];
      std::copy(col, col + dim_, v.begin());
      for (int b = 0; b < rank; ++b) {
        std::uint16_t c = v[pivots[b]];
        if (c == 0) continue;
        FieldElement neg_c = field_.Neg({c});
        for (int i = 0; i < dim_; ++i) {
          if (rows[b][i] != 0) {
            v[i] = static_cast<std::uint16_t>(
                field_.Add({v[i]}, field_.Mul(neg_c, {rows[b][i]})).index);
          }
        }
      }
      int lead = -1;
      for (int i = 0; i < dim_; ++i) {
        if (v[i] != 0) {
          lead = i;
          break;
        }
      }
      if (lead < 0) return;
      FieldElement s = field_.Inv({v[lead]});
      for (int i = 0; i < dim_; ++i) {
        if (v[i] != 0) v[i] = static_cast<std::uint16_t>(field_.Mul(s, {v[i]}).index);
      }
      rows.push_back(v);
      pivots.push_back(lead);
      ++rank;
      if (rank == dim_) done = true;
    });
    return rank;
  }

 private:
  Field field_;
  int dim_;
  std::vector<std::uint16_t> data_;
};

// Explicit list of bases; rank(X) = max |X & B|. Ground sets up to 64.
class BasesMatroid final : public Matroid {
 public:
  static constexpr std::size_t kMaxExchangeCheck = 5000;

  // Throws BadParams("ExchangeAxiom ...") when the basis-exchange axiom fails
  // (checked when there are at most kMaxExchangeCheck bases).
  BasesMatroid(int size, int rank, std::vector<std::uint64_t> bases)
      : Matroid(size), rank_(rank), bases_(std::move(bases)) {
    if (size > 64) Fail(ErrorCode::kSizeCapExceeded, "bases backend holds at most 64 elements");
    if (bases_.empty()) Fail(ErrorCode::kBadParams, "a matroid needs at least one basis");
    const std::uint64_t ground = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    for (std::uint64_t b : bases_) {
      if (b & ~ground) Fail(ErrorCode::kBadParams, "basis element out of range");
      if (std::popcount(b) != rank_) Fail(ErrorCode::kBadParams, "basis of wrong size");
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (bases_.size() <= kMaxExchangeCheck) CheckExchange();
  }

  const std::vector<std::uint64_t>& bases() const { return bases_; }

  Backend backend() const override { return Backend::kBases; }
  std::string Describe() const override {
    return "bases(rank " + std::to_string(rank_) + ", " + std::to_string(bases_.size()) + " bases)";
  }

 protected:
  int RankImpl(const ElementSet& x) const override {
    const std::uint64_t m = x.Mask();
    int best = 0;
    for (std::uint64_t b : bases_) {
      best = std::max(best, std::popcount(b & m));
      if (best == rank_) break;
    }
    return best;
  }

 private:
  void CheckExchange() const {
    std::unordered_set<std::uint64_t> lookup(bases_.begin(), bases_.end());
    for (std::uint64_t b1 : bases_) {
      for (std::uint64_t b2 : bases_) {
        for (std::uint64_t xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
          const std::uint64_t x = xs & -xs;
          bool ok = false;
          for (std::uint64_t ys = b2 & ~b1; ys != 0 && !ok; ys &= ys - 1) {
            ok = lookup.count((b1 & ~x) | (ys & -ys)) > 0;
          }
          if (!ok) {
            Fail(ErrorCode::kBadParams, "ExchangeAxiom violated between bases " +
                                            std::to_string(b1) + " and " + std::to_string(b2));
          }
        }
      }
    }
  }

  int rank_;
  std::vector<std::uint64_t> bases_;
};

// U(r, n): every r-subset is a basis.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int rank, int size) : Matroid(size), rank_(rank) {
    if (rank < 0 || rank > size) Fail(ErrorCode::kBadParams, "uniform matroid needs 0 <= r <= n");
  }
  Backend backend() const override { return Backend::kBases; }
  std::string Describe() const override {
    return "U(" + std::to_string(rank_) + "," + std::to_string(size()) + ")";
  }

 protected:
  int RankImpl(const ElementSet& x) const override { return std::min(x.Count(), rank_); }

 private:
  int rank_;
};

// Materialized independence table over all 2^n subsets (n <= 24); ranks are
// computed greedily from the table.
class TableMatroid final : public Matroid {
 public:
  static constexpr int kMaxSize = 24;

  explicit TableMatroid(const Matroid& source)
      : Matroid(source.size()), source_name_(source.Describe()) {
    const int n = source.size();
    if (n > kMaxSize) Fail(ErrorCode::kSizeCapExceeded, "table backend holds at most 24 elements");
    bits_.assign((std::size_t{1} << n) / 64 + 1, 0);
    Set(0);
    // Depth-first over independent sets, extending by larger elements only.
    std::vector<std::pair<std::uint64_t, int>> stack{{0, 0}};
    while (!stack.empty()) {
      auto [mask, next] = stack.back();
      stack.pop_back();
      const int size = std::popcount(mask);
      for (int e = next; e < n; ++e) {
        const std::uint64_t grown = mask | (std::uint64_t{1} << e);
        if (source.Rank(ElementSet::FromMask(n, grown)) == size + 1) {
          Set(grown);
          stack.push_back({grown, e + 1});
        }
      }
    }
  }

  bool Independent(std::uint64_t mask) const { return (bits_[mask >> 6] >> (mask & 63)) & 1; }

  Backend backend() const override { return Backend::kBases; }
  std::string Describe() const override { return "table(" + source_name_ + ")"; }

 protected:
  int RankImpl(const ElementSet& x) const override {
    std::uint64_t indep = 0;
    int r = 0;
    for (std::uint64_t m = x.Mask(); m != 0; m &= m - 1) {
      const std::uint64_t grown = indep | (m & -m);
      if (Independent(grown)) {
        indep = grown;
        ++r;
      }
    }
    return r;
  }

 private:
  void Set(std::uint64_t mask) { bits_[mask >> 6] |= std::uint64_t{1} << (mask & 63); }

  std::string source_name_;
  std::vector<std::uint64_t> bits_;
};

// Base for lazy views: ranks are memoized per queried subset.
class CachedView : public Matroid {
 public:
  using Matroid::Matroid;
  Backend backend() const override { return Backend::kView; }

 protected:
  int RankImpl(const ElementSet& x) const final {
    return cache_.GetOrCompute(x, [&] { return ComputeRank(x); });
  }
  virtual int ComputeRank(const ElementSet& x) const = 0;

 private:
  RankCache cache_;
};

// M / contract \ delete. Remaining elements are relabelled 0..m-1 in
// increasing order of their parent ids.
class MinorView final : public CachedView {
 public:
  MinorView(MatroidPtr parent, ElementSet contract, ElementSet remove)
      : CachedView(RemainingCount(*parent, contract, remove)),
        parent_(std::move(parent)),
        contract_(std::move(contract)),
        delete_(std::move(remove)) {
    GroundSetOfParent().ForEach([&](int e) { parent_ids_.push_back(e); });
    contract_rank_ = parent_->Rank(contract_);
  }

  const MatroidPtr& parent() const { return parent_; }
  const ElementSet& contracted() const { return contract_; }
  const ElementSet& deleted() const { return delete_; }
  // parent_ids()[i] is the parent id of element i.
  const std::vector<int>& parent_ids() const { return parent_ids_; }

  ElementSet ToParent(const ElementSet& x) const {
    ElementSet out(parent_->size());
    x.ForEach([&](int e) { out.Insert(parent_ids_[e]); });
    return out;
  }

  std::string Describe() const override {
    return "minor(" + parent_->Describe() + ", contract " + contract_.ToString() + ", delete " +
           delete_.ToString() + ")";
  }

 protected:
  int ComputeRank(const ElementSet& x) const override {
    return parent_->Rank(ToParent(x) | contract_) - contract_rank_;
  }

 private:
  static int RemainingCount(const Matroid& parent, const ElementSet& c, const ElementSet& d) {
    if (c.universe() != parent.size() || d.universe() != parent.size()) {
      Fail(ErrorCode::kBadParams, "minor sets must live in the parent ground set");
    }
    if (c.Intersects(d)) Fail(ErrorCode::kOverlappingSets, c.ToString() + " vs " + d.ToString());
    return parent.size() - c.Count() - d.Count();
  }
  ElementSet GroundSetOfParent() const {
    return ElementSet::Full(parent_->size()) - contract_ - delete_;
  }

  MatroidPtr parent_;
  ElementSet contract_, delete_;
  std::vector<int> parent_ids_;
  int contract_rank_ = 0;
};

// rank(X) = min(r_parent(X), t).
class TruncationView final : public CachedView {
 public:
  TruncationView(MatroidPtr parent, int t)
      : CachedView(parent->size()), parent_(std::move(parent)), t_(t) {
    if (t_ < 1 || t_ > parent_->FullRank()) {
      Fail(ErrorCode::kBadRank, "truncation rank " + std::to_string(t_) + " outside [1, " +
                                    std::to_string(parent_->FullRank()) + "]");
    }
  }
  std::string Describe() const override {
    return "truncate(" + parent_->Describe() + ", " + std::to_string(t_) + ")";
  }

 protected:
  int ComputeRank(const ElementSet& x) const override {
    return std::min(parent_->Rank(x), t_);
  }

 private:
  MatroidPtr parent_;
  int t_;
};

// Adds element id n placed freely on the flat F of the parent:
// r(X + e) = min(r(X) + 1, r(X | F)).
class PrincipalExtensionView final : public CachedView {
 public:
  PrincipalExtensionView(MatroidPtr parent, ElementSet flat)
      : CachedView(parent->size() + 1), parent_(std::move(parent)), flat_(std::move(flat)) {
    if (flat_.universe() != parent_->size()) {
      Fail(ErrorCode::kBadParams, "flat must live in the parent ground set");
    }
    const int r = parent_->Rank(flat_);
    for (int e = 0; e < parent_->size(); ++e) {
      if (!flat_.Contains(e) && parent_->Rank(flat_.With(e)) == r) {
        Fail(ErrorCode::kNotAFlat, flat_.ToString());
      }
    }
  }

  const ElementSet& flat() const { return flat_; }
  int new_element() const { return parent_->size(); }

  std::string Describe() const override {
    return "principal_extension(" + parent_->Describe() + ", " + flat_.ToString() + ")";
  }

 protected:
  int ComputeRank(const ElementSet& x) const override {
    const int n = parent_->size();
    ElementSet base = x.Resized(n);
    const int r = parent_->Rank(base);
    if (!x.Contains(n)) return r;
    return std::min(r + 1, parent_->Rank(base | flat_));
  }

 private:
  MatroidPtr parent_;
  ElementSet flat_;
};

// r*(X) = |X| - r(E) + r(E - X).
class DualView final : public CachedView {
 public:
  explicit DualView(MatroidPtr parent) : CachedView(parent->size()), parent_(std::move(parent)) {}
  const MatroidPtr& parent() const { return parent_; }
  std::string Describe() const override { return "dual(" + parent_->Describe() + ")"; }

 protected:
  int ComputeRank(const ElementSet& x) const override {
    return x.Count() - parent_->FullRank() + parent_->Rank(x.Complement());
  }

 private:
  MatroidPtr parent_;
};

// Direct sum: elements of the first summand keep their ids, the second
// summand's follow.
class DirectSumView final : public CachedView {
 public:
  DirectSumView(MatroidPtr first, MatroidPtr second)
      : CachedView(first->size() + second->size()),
        first_(std::move(first)),
        second_(std::move(second)) {}
  std::string Describe() const override {
    return "direct_sum(" + first_->Describe() + ", " + second_->Describe() + ")";
  }

 protected:
  int ComputeRank(const ElementSet& x) const override {
    const int n1 = first_->size();
    ElementSet a(n1), b(second_->size());
    x.ForEach([&](int e) {
      if (e < n1) {
        a.Insert(e);
      } else {
        b.Insert(e - n1);
      }
    });
    return first_->Rank(a) + second_->Rank(b);
  }

 private:
  MatroidPtr first_, second_;
};

// Parallel connection across basepoints p1 of M1 and p2 of M2. Elements of M1
// keep their ids (p1 is the shared basepoint); M2's remaining elements
// follow in increasing order.
class ParallelConnectionView final : public CachedView {
 public:
  ParallelConnectionView(MatroidPtr m1, MatroidPtr m2, int p1, int p2)
      : CachedView(m1->size() + m2->size() - 1),
        m1_(std::move(m1)),
        m2_(std::move(m2)),
        p1_(p1),
        p2_(p2) {
    CheckBasepoint(*m1_, p1_);
    CheckBasepoint(*m2_, p2_);
    for (int e = 0; e < m2_->size(); ++e) {
      if (e != p2_) second_ids_.push_back(e);
    }
  }

  int basepoint() const { return p1_; }
  // Id in this matroid of element e of the second summand.
  int SecondId(int e) const {
    if (e == p2_) return p1_;
    return m1_->size() + (e < p2_ ? e : e - 1);
  }

  std::string Describe() const override {
    return "parallel_connection(" + m1_->Describe() + ", " + m2_->Describe() + ")";
  }

 protected:
  int ComputeRank(const ElementSet& x) const override {
    const int n1 = m1_->size();
    ElementSet x1(n1), x2(m2_->size());
    x.ForEach([&](int e) {
      if (e < n1) {
        x1.Insert(e);
      } else {
        x2.Insert(second_ids_[e - n1]);
      }
    });
    if (x1.Contains(p1_)) x2.Insert(p2_);
    const int joined = m1_->Rank(x1.With(p1_)) + m2_->Rank(x2.With(p2_)) - 1;
    const int separate = m1_->Rank(x1) + m2_->Rank(x2);
    return std::min(joined, separate);
  }

 private:
  static void CheckBasepoint(const Matroid& m, int p) {
    if (p < 0 || p >= m.size()) Fail(ErrorCode::kBadBasepoint, "basepoint out of range");
    ElementSet single(m.size(), {p});
    if (m.Rank(single) == 0) Fail(ErrorCode::kBadBasepoint, "basepoint is a loop");
    if (m.Rank(m.GroundSet().Without(p)) < m.FullRank()) {
      Fail(ErrorCode::kBadBasepoint, "basepoint is a coloop");
    }
  }

  MatroidPtr m1_, m2_;
  int p1_, p2_;
  std::vector<int> second_ids_;
};

}  // namespace mforge

#endif  // MFORGE_MATROID_HPP_
