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

#ifndef MFORGE_GOLDEN_HPP_
#define MFORGE_GOLDEN_HPP_

#include <cstdint>
#include <string>

namespace mforge {

// Exact arithmetic in Z[phi] with phi^2 = phi + 1: the value a + b*phi.
class ZPhi {
 public:
  constexpr ZPhi() = default;
  constexpr ZPhi(std::int64_t a, std::int64_t b = 0) : a_(a), b_(b) {}

  static constexpr ZPhi Phi() { return {0, 1}; }
  // 1/phi = phi - 1.
  static constexpr ZPhi InvPhi() { return {-1, 1}; }

  // phi^n for n >= 0, as F(n-1) + F(n) phi.
  static ZPhi PhiPow(int n) {
    ZPhi r(1, 0);
    for (int i = 0; i < n; ++i) r = r * Phi();
    return r;
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  friend ZPhi operator+(ZPhi x, ZPhi y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend ZPhi operator-(ZPhi x, ZPhi y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend ZPhi operator*(ZPhi x, ZPhi y) {
    // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi.
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  friend bool operator==(ZPhi x, ZPhi y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  // Sign of a + b phi = ((2a + b) + b sqrt5) / 2, decided over the integers.
  int Sign() const {
    const __int128 u = 2 * static_cast<__int128>(a_) + b_;
    const __int128 v = b_;
    auto sgn = [](__int128 x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    if (sgn(u) >= 0 && sgn(v) >= 0) return (u == 0 && v == 0) ? 0 : 1;
    if (sgn(u) <= 0 && sgn(v) <= 0) return -1;
    const __int128 lhs = u * u, rhs = 5 * v * v;
    if (u > 0) return sgn(lhs - rhs);  // v < 0
    return sgn(rhs - lhs);             // u < 0, v > 0
  }

  friend bool operator>(ZPhi x, ZPhi y) { return (x - y).Sign() > 0; }
  friend bool operator>=(ZPhi x, ZPhi y) { return (x - y).Sign() >= 0; }
  friend bool operator<(ZPhi x, ZPhi y) { return (x - y).Sign() < 0; }
  friend bool operator<=(ZPhi x, ZPhi y) { return (x - y).Sign() <= 0; }

  double Approx() const { return static_cast<double>(a_) + static_cast<double>(b_) * 1.6180339887498949; }

  std::string ToString() const {
    return std::to_string(a_) + (b_ < 0 ? " - " : " + ") + std::to_string(b_ < 0 ? -b_ : b_) + "*phi";
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

}  // namespace mforge

#endif  // MFORGE_GOLDEN_HPP_
