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

#ifndef MFORGE_NUMBER_THEORY_HPP_
#define MFORGE_NUMBER_THEORY_HPP_

#include <cstdint>
#include <limits>
#include <optional>

namespace mforge {

inline bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct PrimePower {
  std::uint64_t p;
  int k;
};

// Returns (p, k) with n = p^k, or nullopt when n is not a prime power.
inline std::optional<PrimePower> AsPrimePower(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, k};
}

inline bool IsPrimePower(std::uint64_t n) { return AsPrimePower(n).has_value(); }

// Prime powers that are not prime.
inline bool IsCompositePrimePower(std::uint64_t n) {
  return IsPrimePower(n) && !IsPrime(n);
}

// Saturates at the maximum uint64 value.
inline std::uint64_t SaturatingPow(std::uint64_t base, int exp) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

// (q^n - 1) / (q - 1): the number of points of PG(n-1, q). Saturating.
inline std::uint64_t GeometricCount(std::uint64_t q, int n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i < n; ++i) {
    if (total > kMax - term) return kMax;
    total += term;
    if (i + 1 < n) {
      if (term > kMax / q) return kMax;
      term *= q;
    }
  }
  return total;
}

}  // namespace mforge

#endif  // MFORGE_NUMBER_THEORY_HPP_
