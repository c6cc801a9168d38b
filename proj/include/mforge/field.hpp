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

#ifndef MFORGE_FIELD_HPP_
#define MFORGE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mforge/error.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

// An element of GF(q), identified by its canonical index in [0, q). The
// index of the polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1} is
// sum c_i p^i, so 0 is the zero element and 1 is the unit.
struct FieldElement {
  std::uint32_t index = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

enum class ArithOp { kAdd, kMul, kNeg, kInv, kPow };
enum class Which { kAll, kNonzero };

// Polynomials over GF(p), coefficients listed constant term first.
namespace poly {

inline void Trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t InvModP(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero divisor d.
inline std::vector<std::uint32_t> Mod(std::vector<std::uint32_t> a,
                                      std::vector<std::uint32_t> d,
                                      std::uint32_t p) {
  Trim(a);
  Trim(d);
  const std::uint32_t lead_inv = InvModP(d.back(), p);
  while (a.size() >= d.size()) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::uint64_t sub = factor * d[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    Trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose low coefficients are the base-p
// digits of code.
inline std::vector<std::uint32_t> MonicFromCode(std::uint64_t code, int degree,
                                                std::uint32_t p) {
  std::vector<std::uint32_t> f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool IsIrreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const int degree = static_cast<int>(f.size()) - 1;
  if (degree < 1) return false;
  for (int d = 1; 2 * d <= degree; ++d) {
    const std::uint64_t count = SaturatingPow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (Mod(f, MonicFromCode(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

// Arithmetic in GF(p^k) modulo a fixed monic irreducible polynomial.
// Immutable after construction; copies share their lookup tables.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kMaxTabulated = 256;

  // GF(q) with the lexicographically smallest (constant term compared first)
  // monic irreducible modulus of degree k.
  static Field Create(std::uint64_t q) {
    if (q < 2) Fail(ErrorCode::kBadParams, "field order must be >= 2");
    std::optional<PrimePower> pp = AsPrimePower(q);
    if (!pp) Fail(ErrorCode::kNotPrimePower, std::to_string(q));
    if (q > kMaxOrder) Fail(ErrorCode::kSizeCapExceeded, "field order " + std::to_string(q));
    const auto p = static_cast<std::uint32_t>(pp->p);
    const int k = pp->k;
    if (k == 1) return Field(p, {0, 1});
    std::optional<std::vector<std::uint32_t>> best;
    const std::uint64_t count = SaturatingPow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> f = poly::MonicFromCode(code, k, p);
      if (f[0] == 0) continue;
      if (best && !(f < *best)) continue;
      if (poly::IsIrreducible(f, p)) best = std::move(f);
    }
    return Field(p, std::move(*best));
  }

  // Field with an explicit modulus; for k = 1 the modulus must be x.
  static Field WithModulus(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    if (!IsPrime(p)) Fail(ErrorCode::kNotPrimePower, "characteristic " + std::to_string(p));
    if (modulus.size() < 2 || modulus.back() != 1) {
      Fail(ErrorCode::kBadParams, "modulus must be monic of degree >= 1");
    }
    for (std::uint32_t c : modulus) {
      if (c >= p) Fail(ErrorCode::kBadParams, "modulus coefficient out of range");
    }
    const int k = static_cast<int>(modulus.size()) - 1;
    if (k == 1) {
      if (modulus[0] != 0) Fail(ErrorCode::kBadParams, "prime field modulus must be x");
    } else if (!poly::IsIrreducible(modulus, static_cast<std::uint32_t>(p))) {
      Fail(ErrorCode::kBadParams, "modulus is reducible");
    }
    if (SaturatingPow(p, k) > kMaxOrder) Fail(ErrorCode::kSizeCapExceeded, "field too large");
    return Field(static_cast<std::uint32_t>(p), std::move(modulus));
  }

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement Zero() const { return {0}; }
  FieldElement One() const { return {1}; }
  FieldElement FromIndex(std::uint32_t index) const {
    if (index >= q_) Fail(ErrorCode::kBadParams, "element index out of range");
    return {index};
  }
  // The polynomial x (a generator of the extension when k > 1).
  FieldElement X() const { return k_ == 1 ? FieldElement{0} : FieldElement{p_}; }

  std::vector<std::uint32_t> Coeffs(FieldElement a) const {
    std::vector<std::uint32_t> c(k_);
    std::uint32_t v = a.index;
    for (int i = 0; i < k_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  FieldElement FromCoeffs(const std::vector<std::uint32_t>& c) const {
    std::uint32_t v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      v = v * p_ + c[i] % p_;
    }
    return {v};
  }

  FieldElement Add(FieldElement a, FieldElement b) const {
    if (tables_) return {tables_->add[a.index * q_ + b.index]};
    std::uint32_t v = 0, scale = 1, x = a.index, y = b.index;
    for (int i = 0; i < k_; ++i) {
      v += ((x % p_ + y % p_) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return {v};
  }

  FieldElement Neg(FieldElement a) const {
    if (tables_) return {tables_->neg[a.index]};
    std::uint32_t v = 0, scale = 1, x = a.index;
    for (int i = 0; i < k_; ++i) {
      v += ((p_ - x % p_) % p_) * scale;
      x /= p_;
      scale *= p_;
    }
    return {v};
  }

  FieldElement Sub(FieldElement a, FieldElement b) const { return Add(a, Neg(b)); }

  FieldElement Mul(FieldElement a, FieldElement b) const {
    if (tables_) return {tables_->mul[a.index * q_ + b.index]};
    return SlowMul(a, b);
  }

  FieldElement Inv(FieldElement a) const {
    if (a.index == 0) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
    if (tables_) return {tables_->inv[a.index]};
    return Pow(a, q_ - 2);
  }

  FieldElement Div(FieldElement a, FieldElement b) const { return Mul(a, Inv(b)); }

  FieldElement Pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = One();
    while (e > 0) {
      if (e & 1) r = Mul(r, a);
      a = Mul(a, a);
      e >>= 1;
    }
    return r;
  }

  FieldElement Arith(ArithOp op, FieldElement a, std::optional<FieldElement> b = std::nullopt,
                     std::uint64_t exponent = 0) const {
    auto need_b = [&]() {
      if (!b) Fail(ErrorCode::kBadParams, "binary operation needs two operands");
      return *b;
    };
    switch (op) {
      case ArithOp::kAdd: return Add(a, need_b());
      case ArithOp::kMul: return Mul(a, need_b());
      case ArithOp::kNeg: return Neg(a);
      case ArithOp::kInv: return Inv(a);
      case ArithOp::kPow: return Pow(a, exponent);
    }
    return a;
  }

  // Multiplicative order of a nonzero element.
  std::uint32_t Order(FieldElement a) const {
    if (a.index == 0) Fail(ErrorCode::kDivisionByZero, "order of zero");
    std::uint32_t n = 1;
    for (FieldElement x = a; x.index != 1; x = Mul(x, a)) ++n;
    return n;
  }

  std::vector<FieldElement> Enumerate(Which which) const {
    std::vector<FieldElement> out;
    for (std::uint32_t i = which == Which::kAll ? 0 : 1; i < q_; ++i) out.push_back({i});
    return out;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

  std::string Name() const { return "GF(" + std::to_string(q_) + ")"; }

 private:
  struct Tables {
    std::vector<std::uint16_t> add, mul, neg, inv;
  };

  Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), k_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
    q_ = static_cast<std::uint32_t>(SaturatingPow(p_, k_));
    if (q_ <= kMaxTabulated) BuildTables();
  }

  FieldElement SlowMul(FieldElement a, FieldElement b) const {
    if (k_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p_)};
    std::vector<std::uint32_t> x = Coeffs(a), y = Coeffs(b);
    std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < k_; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
      }
    }
    std::vector<std::uint32_t> r = poly::Mod(std::move(prod), modulus_, p_);
    r.resize(k_, 0);
    return FromCoeffs(r);
  }

  void BuildTables() {
    auto t = std::make_shared<Tables>();
    t->add.resize(std::size_t{q_} * q_);
    t->mul.resize(std::size_t{q_} * q_);
    t->neg.resize(q_);
    t->inv.resize(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      t->neg[a] = static_cast<std::uint16_t>(Neg({a}).index);
      for (std::uint32_t b = 0; b < q_; ++b) {
        t->add[a * q_ + b] = static_cast<std::uint16_t>(Add({a}, {b}).index);
        std::uint16_t m = static_cast<std::uint16_t>(SlowMul({a}, {b}).index);
        t->mul[a * q_ + b] = m;
        if (m == 1) t->inv[a] = static_cast<std::uint16_t>(b);
      }
    }
    tables_ = std::move(t);
  }

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace mforge

#endif  // MFORGE_FIELD_HPP_
