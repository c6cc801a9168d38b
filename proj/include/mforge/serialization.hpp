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

#ifndef MFORGE_SERIALIZATION_HPP_
#define MFORGE_SERIALIZATION_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mforge/error.hpp"
#include "mforge/field.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/number_theory.hpp"

namespace mforge {

using Json = nlohmann::json;

namespace internal {

[[noreturn]] inline void SchemaFail(const std::string& path, const std::string& what) {
  Fail(ErrorCode::kSchemaError, what + " at " + (path.empty() ? "/" : path));
}

inline void OnlyKeys(const Json& j, const std::string& path, std::set<std::string> allowed) {
  if (!j.is_object()) SchemaFail(path, "expected object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) SchemaFail(path + "/" + it.key(), "unknown field");
  }
}

inline const Json& Required(const Json& j, const std::string& path, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) SchemaFail(path + "/" + key, "missing field");
  return *it;
}

inline std::int64_t AsInt(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) SchemaFail(path, "expected integer");
  return j.get<std::int64_t>();
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Fields: {"p": int, "k": int, "modulus": [int, ...]}, constant term first.

inline Json FieldToJson(const Field& f) {
  return Json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

inline Field FieldFromJson(const Json& j, const std::string& path = "") {
  internal::OnlyKeys(j, path, {"p", "k", "modulus"});
  const std::int64_t p = internal::AsInt(internal::Required(j, path, "p"), path + "/p");
  const std::int64_t k = internal::AsInt(internal::Required(j, path, "k"), path + "/k");
  if (p < 2 || !IsPrime(static_cast<std::uint64_t>(p))) internal::SchemaFail(path + "/p", "NotPrimePower");
  if (k < 1) internal::SchemaFail(path + "/k", "NotPrimePower");
  const std::uint64_t q = SaturatingPow(static_cast<std::uint64_t>(p), static_cast<int>(k));
  if (q > Field::kMaxOrder) internal::SchemaFail(path, "SizeCapExceeded");
  if (!j.contains("modulus")) return Field::Create(q);
  const Json& mj = j["modulus"];
  if (!mj.is_array()) internal::SchemaFail(path + "/modulus", "expected array");
  std::vector<std::uint32_t> modulus;
  for (std::size_t i = 0; i < mj.size(); ++i) {
    const std::int64_t c = internal::AsInt(mj[i], path + "/modulus/" + std::to_string(i));
    if (c < 0 || c >= p) internal::SchemaFail(path + "/modulus/" + std::to_string(i), "coefficient out of range");
    modulus.push_back(static_cast<std::uint32_t>(c));
  }
  if (static_cast<std::int64_t>(modulus.size()) != k + 1) {
    internal::SchemaFail(path + "/modulus", "degree does not match k");
  }
  try {
    return Field::WithModulus(static_cast<std::uint64_t>(p), std::move(modulus));
  } catch (const Error& e) {
    internal::SchemaFail(path + "/modulus", e.what());
  }
}

// ---------------------------------------------------------------------------
// Matroids. Linear columns hold field element indices; every other backend
// is written as its sorted list of bases.

inline Json MatroidToJson(const MatroidPtr& m) {
  if (auto lin = std::dynamic_pointer_cast<const LinearMatroid>(m)) {
    Json cols = Json::array();
    for (int e = 0; e < lin->size(); ++e) {
      Json col = Json::array();
      for (FieldElement x : lin->Column(e)) col.push_back(x.index);
      cols.push_back(std::move(col));
    }
    return Json{{"kind", "linear"}, {"field", FieldToJson(lin->field())}, {"columns", std::move(cols)}};
  }
  auto bm = MaterializeBases(m);
  std::vector<std::vector<int>> bases;
  for (std::uint64_t b : bm->bases()) bases.push_back(ElementSet::FromMask(bm->size(), b).ToVector());
  std::sort(bases.begin(), bases.end());
  return Json{{"kind", "bases"}, {"rank", bm->FullRank()}, {"n", bm->size()}, {"bases", bases}};
}

inline MatroidPtr MatroidFromJson(const Json& j) {
  if (!j.is_object()) internal::SchemaFail("", "expected object");
  const Json& kind = internal::Required(j, "", "kind");
  if (kind == "linear") {
    internal::OnlyKeys(j, "", {"kind", "field", "columns"});
    Field field = FieldFromJson(internal::Required(j, "", "field"), "/field");
    const Json& cj = internal::Required(j, "", "columns");
    if (!cj.is_array()) internal::SchemaFail("/columns", "expected array");
    if (static_cast<int>(cj.size()) > kMaxRankGround) internal::SchemaFail("/columns", "SizeCapExceeded");
    std::vector<std::vector<FieldElement>> cols;
    int dim = -1;
    for (std::size_t e = 0; e < cj.size(); ++e) {
      const std::string path = "/columns/" + std::to_string(e);
      if (!cj[e].is_array()) internal::SchemaFail(path, "expected array");
      if (dim < 0) dim = static_cast<int>(cj[e].size());
      if (static_cast<int>(cj[e].size()) != dim) internal::SchemaFail(path, "column length differs");
      std::vector<FieldElement> col;
      for (std::size_t i = 0; i < cj[e].size(); ++i) {
        const std::int64_t x = internal::AsInt(cj[e][i], path + "/" + std::to_string(i));
        if (x < 0 || x >= static_cast<std::int64_t>(field.q())) {
          internal::SchemaFail(path + "/" + std::to_string(i), "entry outside field");
        }
        col.push_back({static_cast<std::uint32_t>(x)});
      }
      cols.push_back(std::move(col));
    }
    return std::make_shared<const LinearMatroid>(field, std::max(dim, 0), std::move(cols));
  }
  if (kind == "bases") {
    internal::OnlyKeys(j, "", {"kind", "rank", "n", "bases"});
    const std::int64_t r = internal::AsInt(internal::Required(j, "", "rank"), "/rank");
    const std::int64_t n = internal::AsInt(internal::Required(j, "", "n"), "/n");
    if (n < 0 || n > 64) internal::SchemaFail("/n", "SizeCapExceeded");
    if (r < 0 || r > n) internal::SchemaFail("/rank", "rank out of range");
    const Json& bj = internal::Required(j, "", "bases");
    if (!bj.is_array() || bj.empty()) internal::SchemaFail("/bases", "expected non-empty array");
    std::vector<std::uint64_t> masks;
    for (std::size_t b = 0; b < bj.size(); ++b) {
      const std::string path = "/bases/" + std::to_string(b);
      if (!bj[b].is_array()) internal::SchemaFail(path, "expected array");
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < bj[b].size(); ++i) {
        const std::int64_t e = internal::AsInt(bj[b][i], path + "/" + std::to_string(i));
        if (e < 0 || e >= n) internal::SchemaFail(path + "/" + std::to_string(i), "element out of range");
        mask |= std::uint64_t{1} << e;
      }
      if (std::popcount(mask) != r) internal::SchemaFail(path, "basis size differs from rank");
      masks.push_back(mask);
    }
    try {
      return std::make_shared<const BasesMatroid>(static_cast<int>(n), static_cast<int>(r), std::move(masks));
    } catch (const Error& e) {
      internal::SchemaFail("/bases", std::string(e.what()).find("ExchangeAxiom") != std::string::npos
                                         ? "ExchangeAxiom"
                                         : e.what());
    }
  }
  internal::SchemaFail("/kind", "unknown kind");
}

inline MatroidPtr ParseMatroid(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    Fail(ErrorCode::kSchemaError, "malformed JSON at line " + std::to_string(line));
  }
  return MatroidFromJson(j);
}

inline MatroidPtr ReadMatroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kSchemaError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseMatroid(ss.str());
}

inline void WriteMatroid(const MatroidPtr& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) Fail(ErrorCode::kSchemaError, "cannot write " + path);
  out << MatroidToJson(m).dump() << "\n";
}

}  // namespace mforge

#endif  // MFORGE_SERIALIZATION_HPP_
