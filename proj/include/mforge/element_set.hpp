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

#ifndef MFORGE_ELEMENT_SET_HPP_
#define MFORGE_ELEMENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mforge {

// A subset of the ground set {0, ..., universe-1}, stored as a bit-set.
// Universes of up to 64 elements live in a single inline word.
class ElementSet {
 public:
  ElementSet() : ElementSet(0) {}

  explicit ElementSet(int universe) : universe_(universe) {
    assert(universe >= 0);
    if (universe_ > 64) heap_.assign(WordCount(universe_), 0);
  }

  ElementSet(int universe, std::initializer_list<int> elements)
      : ElementSet(universe) {
    for (int e : elements) Insert(e);
  }

  static ElementSet FromVector(int universe, std::span<const int> elements) {
    ElementSet s(universe);
    for (int e : elements) s.Insert(e);
    return s;
  }

  static ElementSet FromMask(int universe, std::uint64_t mask) {
    assert(universe <= 64);
    ElementSet s(universe);
    s.small_ = mask & LowMask(universe);
    return s;
  }

  static ElementSet Full(int universe) {
    ElementSet s(universe);
    std::span<std::uint64_t> w = s.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ~std::uint64_t{0};
    s.TrimTail();
    return s;
  }

  int universe() const { return universe_; }

  bool Contains(int e) const {
    assert(e >= 0 && e < universe_);
    return (words()[e >> 6] >> (e & 63)) & 1;
  }
  void Insert(int e) {
    assert(e >= 0 && e < universe_);
    words()[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  void Erase(int e) {
    assert(e >= 0 && e < universe_);
    words()[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }
  ElementSet With(int e) const {
    ElementSet s = *this;
    s.Insert(e);
    return s;
  }
  ElementSet Without(int e) const {
    ElementSet s = *this;
    s.Erase(e);
    return s;
  }

  int Count() const {
    int c = 0;
    for (std::uint64_t w : words()) c += std::popcount(w);
    return c;
  }
  bool Empty() const {
    for (std::uint64_t w : words()) {
      if (w != 0) return false;
    }
    return true;
  }

  // Smallest element, or -1 when empty.
  int First() const { return NextFrom(0); }

  // Smallest element >= from, or -1.
  int NextFrom(int from) const {
    if (from >= universe_) return -1;
    std::span<const std::uint64_t> w = words();
    std::size_t i = static_cast<std::size_t>(from) >> 6;
    std::uint64_t word = w[i] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word != 0) {
        return static_cast<int>(i * 64 + std::countr_zero(word));
      }
      if (++i >= w.size()) return -1;
      word = w[i];
    }
  }

  int Last() const {
    std::span<const std::uint64_t> w = words();
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i] != 0) {
        return static_cast<int>(i * 64 + 63 - std::countl_zero(w[i]));
      }
    }
    return -1;
  }

  template <typename F>
  void ForEach(F&& f) const {
    std::span<const std::uint64_t> w = words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t word = w[i];
      while (word != 0) {
        f(static_cast<int>(i * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    out.reserve(Count());
    ForEach([&](int e) { out.push_back(e); });
    return out;
  }

  // Only meaningful for universes of at most 64 elements.
  std::uint64_t Mask() const {
    assert(universe_ <= 64);
    return small_;
  }

  bool IsSubsetOf(const ElementSet& other) const {
    assert(universe_ == other.universe_);
    std::span<const std::uint64_t> a = words(), b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & ~b[i]) return false;
    }
    return true;
  }
  bool Intersects(const ElementSet& other) const {
    assert(universe_ == other.universe_);
    std::span<const std::uint64_t> a = words(), b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & b[i]) return true;
    }
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) { return Combine(o, [](auto a, auto b) { return a | b; }); }
  ElementSet& operator&=(const ElementSet& o) { return Combine(o, [](auto a, auto b) { return a & b; }); }
  ElementSet& operator-=(const ElementSet& o) { return Combine(o, [](auto a, auto b) { return a & ~b; }); }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet Complement() const { return Full(universe_) - *this; }

  // Same members, re-read in a universe of a different size.
  ElementSet Resized(int universe) const {
    ElementSet s(universe);
    ForEach([&](int e) {
      if (e < universe) s.Insert(e);
    });
    return s;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    if (a.universe_ != b.universe_) return false;
    std::span<const std::uint64_t> x = a.words(), y = b.words();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return false;
    }
    return true;
  }

  // Canonical order: by size, then lexicographically by sorted member list.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    int ca = a.Count(), cb = b.Count();
    if (ca != cb) return ca < cb;
    return a.ToVector() < b.ToVector();
  }

  std::size_t Hash() const {
    std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string ToString() const {
    std::string out = "{";
    bool first = true;
    ForEach([&](int e) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    });
    return out + "}";
  }

  std::span<const std::uint64_t> words() const {
    if (universe_ <= 64) return {&small_, 1};
    return heap_;
  }

 private:
  static std::size_t WordCount(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
  }
  static std::uint64_t LowMask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  }

  std::span<std::uint64_t> words() {
    if (universe_ <= 64) return {&small_, 1};
    return heap_;
  }

  void TrimTail() {
    std::span<std::uint64_t> w = words();
    int rem = universe_ & 63;
    if (universe_ == 0) {
      w[0] = 0;
    } else if (rem != 0) {
      w[w.size() - 1] &= LowMask(rem);
    }
  }

  template <typename Op>
  ElementSet& Combine(const ElementSet& o, Op op) {
    assert(universe_ == o.universe_);
    std::span<std::uint64_t> a = words();
    std::span<const std::uint64_t> b = o.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = op(a[i], b[i]);
    return *this;
  }

  int universe_;
  std::uint64_t small_ = 0;
  std::vector<std::uint64_t> heap_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

// Visits every k-subset of {0..n-1} in lexicographic order of the sorted
// member list. The visitor returns false to stop early.
template <typename F>
bool ForEachCombination(int n, int k, F&& visit) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(std::span<const int>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace mforge

template <>
struct std::hash<mforge::ElementSet> {
  std::size_t operator()(const mforge::ElementSet& s) const { return s.Hash(); }
};

#endif  // MFORGE_ELEMENT_SET_HPP_
