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

#ifndef MFORGE_SUITES_HPP_
#define MFORGE_SUITES_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mforge/constructions.hpp"
#include "mforge/corpus.hpp"
#include "mforge/error.hpp"
#include "mforge/field.hpp"
#include "mforge/golden.hpp"
#include "mforge/isomorphism.hpp"
#include "mforge/matroid.hpp"
#include "mforge/matroid_ops.hpp"
#include "mforge/minor_search.hpp"
#include "mforge/number_theory.hpp"
#include "mforge/representability.hpp"
#include "mforge/serialization.hpp"

namespace mforge {

inline constexpr const char* kPrngName = "mt19937_64";

inline const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "field-axioms",   "rank-axioms",   "kung",           "lemma4",          "lemma5",
      "lemma6",         "spike-oracle",  "swirl-oracle",   "rep-cross",       "growth-witness",
      "swirl-structure", "spike-structure", "eventual-base"};
  return names;
}

struct SuiteConfig {
  std::string suite;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  Caps caps;
  int jobs = 1;
};

// "key=val,key=val" into a map.
inline std::map<std::string, std::string> ParseParams(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) Fail(ErrorCode::kBadParams, "param '" + item + "' is not key=val");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

struct CaseResult {
  std::string descriptor;
  std::string op;
  bool pass = false;
  Json expected;
  Json got;
  Json witness;  // null when absent
  Json input;    // reproduction data, attached to failures
};

struct CaseTask {
  std::string descriptor;
  std::string op;
  std::string provenance;
  MatroidPtr subject;  // serialized into failing cases; may be null
  std::function<void(CaseResult&)> run;
};

struct Report {
  std::string suite;
  Json params;
  bool pass = true;
  std::vector<CaseResult> cases;
  int failed = 0;
  double elapsed_ms = 0;
};

namespace suites {

// Stable 64-bit string hash (FNV-1a) for per-case seeds.
inline std::uint64_t Fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::vector<std::uint64_t> QList(const SuiteConfig& c, std::vector<std::uint64_t> fallback) {
  auto it = c.params.find("q");
  if (it == c.params.end()) return fallback;
  std::vector<std::uint64_t> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, '/')) out.push_back(std::stoull(item));
  return out;
}

inline int IntParam(const SuiteConfig& c, const std::string& key, int fallback) {
  auto it = c.params.find(key);
  return it == c.params.end() ? fallback : std::stoi(it->second);
}

inline Json SetJson(const ElementSet& s) { return s.ToVector(); }

inline bool IsCircuit(const Matroid& m, const ElementSet& s) {
  const int c = s.Count();
  if (m.Rank(s) != c - 1) return false;
  bool minimal = true;
  s.ForEach([&](int x) { minimal = minimal && m.Rank(s.Without(x)) == c - 1; });
  return minimal;
}

// Circuit elimination and incomparability over an explicit circuit list.
inline std::optional<std::string> CircuitAxiomViolation(const std::vector<ElementSet>& circuits) {
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i].Empty()) return "empty circuit";
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if (circuits[i].IsSubsetOf(circuits[j])) return "nested circuits " + circuits[i].ToString();
      if (j < i) continue;
      const ElementSet common = circuits[i] & circuits[j];
      std::optional<std::string> bad;
      common.ForEach([&](int e) {
        if (bad) return;
        const ElementSet u = (circuits[i] | circuits[j]).Without(e);
        bool found = false;
        for (const ElementSet& c : circuits) {
          if (c.IsSubsetOf(u)) {
            found = true;
            break;
          }
        }
        if (!found) bad = "elimination fails for " + circuits[i].ToString() + ", " + circuits[j].ToString();
      });
      if (bad) return bad;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// field-axioms

namespace poly_oracle {

using Poly = std::vector<std::uint32_t>;  // constant term first

inline Poly Mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

inline std::vector<Poly> Monic(int degree, std::uint32_t p) {
  std::vector<Poly> out;
  Poly f(degree + 1, 0);
  f[degree] = 1;
  while (true) {
    out.push_back(f);
    int i = 0;
    while (i < degree && ++f[i] == p) f[i++] = 0;
    if (i == degree) break;
  }
  return out;
}

// Smallest monic degree-k polynomial (constant term compared first) that is
// not a product of two monic polynomials of positive degree.
inline Poly SmallestIrreducible(int k, std::uint32_t p) {
  std::set<Poly> reducible;
  for (int d = 1; 2 * d <= k; ++d) {
    for (const Poly& a : Monic(d, p)) {
      for (const Poly& b : Monic(k - d, p)) reducible.insert(Mul(a, b, p));
    }
  }
  std::vector<Poly> all = Monic(k, p);
  std::sort(all.begin(), all.end());
  for (const Poly& f : all) {
    if (!reducible.count(f)) return f;
  }
  return {};
}

}  // namespace poly_oracle

inline void FieldCase(std::uint64_t q, std::uint64_t seed, CaseResult& out) {
  const PrimePower pp = *AsPrimePower(q);
  Field f = Field::Create(q);
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok && failures.size() < 8) failures.push_back(what);
  };
  expect(f.q() == q && f.p() == pp.p && f.k() == pp.k, "order");
  if (q <= Field::kMaxTabulated) {
    const poly_oracle::Poly want = pp.k == 1 ? poly_oracle::Poly{0, 1}
                                             : poly_oracle::SmallestIrreducible(pp.k, static_cast<std::uint32_t>(pp.p));
    expect(f.modulus() == want, "modulus is not the smallest irreducible");
  }
  std::mt19937_64 rng(seed ^ q);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
  auto elem = [&]() { return FieldElement{pick(rng)}; };
  const bool exhaustive = q <= 16;
  auto triples = [&](auto&& check) {
    if (exhaustive) {
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
          for (std::uint32_t c = 0; c < q; ++c) check(FieldElement{a}, FieldElement{b}, FieldElement{c});
    } else {
      for (int i = 0; i < 3000; ++i) check(elem(), elem(), elem());
    }
  };
  triples([&](FieldElement a, FieldElement b, FieldElement c) {
    expect(f.Add(f.Add(a, b), c) == f.Add(a, f.Add(b, c)), "additive associativity");
    expect(f.Mul(f.Mul(a, b), c) == f.Mul(a, f.Mul(b, c)), "multiplicative associativity");
    expect(f.Mul(a, f.Add(b, c)) == f.Add(f.Mul(a, b), f.Mul(a, c)), "distributivity");
    expect(f.Add(a, b) == f.Add(b, a) && f.Mul(a, b) == f.Mul(b, a), "commutativity");
  });
  const bool all_elements = q <= 4096;
  const std::uint64_t count = all_elements ? q : 3000;
  for (std::uint64_t i = 0; i < count; ++i) {
    const FieldElement a = all_elements ? FieldElement{static_cast<std::uint32_t>(i)} : elem();
    expect(f.Add(a, f.Zero()) == a && f.Mul(a, f.One()) == a, "identities");
    expect(f.Add(a, f.Neg(a)) == f.Zero(), "additive inverse");
    if (a != f.Zero()) expect(f.Mul(a, f.Inv(a)) == f.One(), "multiplicative inverse");
    const FieldElement b = elem();
    expect(f.Pow(f.Add(a, b), pp.p) == f.Add(f.Pow(a, pp.p), f.Pow(b, pp.p)), "Frobenius");
  }
  FieldElement acc = f.Zero();
  for (std::uint64_t i = 0; i < pp.p; ++i) acc = f.Add(acc, f.One());
  expect(acc == f.Zero(), "characteristic");
  if (pp.k == 1 && q <= 13) {
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        expect(f.Add({a}, {b}).index == (a + b) % q && f.Mul({a}, {b}).index == (a * b) % q,
               "prime field arithmetic");
      }
  }
  // The multiplicative group is cyclic: some g has g^((q-1)/l) != 1 for all
  // primes l dividing q - 1.
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = q - 1;
  for (std::uint64_t l = 2; l * l <= rest; ++l) {
    if (rest % l == 0) primes.push_back(l);
    while (rest % l == 0) rest /= l;
  }
  if (rest > 1) primes.push_back(rest);
  bool generator = false;
  for (std::uint32_t g = 1; g < q && !generator; ++g) {
    bool ok = f.Pow({g}, q - 1) == f.One();
    for (std::uint64_t l : primes) ok = ok && f.Pow({g}, (q - 1) / l) != f.One();
    generator = ok;
  }
  expect(generator, "no generator of the multiplicative group");
  out.pass = failures.empty();
  out.expected = "field axioms";
  out.got = failures.empty() ? Json("ok") : Json(failures);
  out.witness = FieldToJson(f);
}

inline std::vector<CaseTask> FieldAxioms(const SuiteConfig& c) {
  std::vector<CaseTask> tasks;
  const std::uint64_t qs[] = {2,   3,   4,   5,   7,   8,   9,    11,   13,   16,  25,
                              27,  32,  49,  64,  81,  121, 125,  128,  169,  243, 256,
                              257, 343, 512, 625, 1024, 2048, 4096, 65536};
  for (std::uint64_t q : qs) {
    tasks.push_back({"GF(" + internal::Pad(q, 5) + ")",
                     "field_axioms", "", nullptr,
                     [q, seed = c.seed](CaseResult& r) { FieldCase(q, seed, r); }});
  }
  struct Bad {
    std::string name;
    ErrorCode code;
    std::function<void()> call;
  };
  const std::vector<Bad> bad = {
      {"errors/q=6", ErrorCode::kNotPrimePower, [] { Field::Create(6); }},
      {"errors/q=1", ErrorCode::kBadParams, [] { Field::Create(1); }},
      {"errors/q=131072", ErrorCode::kSizeCapExceeded, [] { Field::Create(131072); }},
      {"errors/inv0", ErrorCode::kDivisionByZero, [] { Field::Create(9).Inv(FieldElement{0}); }},
  };
  for (const Bad& b : bad) {
    tasks.push_back({b.name, "field_errors", "", nullptr, [b](CaseResult& r) {
                       r.expected = std::string(ErrorCodeName(b.code));
                       try {
                         b.call();
                         r.got = "no error";
                       } catch (const Error& e) {
                         r.got = std::string(ErrorCodeName(e.code()));
                         r.pass = e.code() == b.code;
                       }
                     }});
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// rank-axioms

inline std::optional<std::string> SampledRankViolation(const Matroid& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = m.size();
  if (m.Rank(m.EmptySet()) != 0) return "r(empty) != 0";
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet x(n);
    for (int e = 0; e < n; ++e) {
      if (coin(rng)) x.Insert(e);
    }
    const int e = pick(rng), f = pick(rng);
    const int rx = m.Rank(x), re = m.Rank(x.With(e)), rf = m.Rank(x.With(f));
    const int ref = m.Rank(x.With(e).With(f));
    if (rx < 0 || rx > x.Count()) return "bounds at " + x.ToString();
    if (re < rx || re > rx + 1) return "unit increase at " + x.ToString();
    if (re + rf < ref + rx) return "submodularity at " + x.ToString();
  }
  return std::nullopt;
}

inline std::vector<CaseTask> RankAxioms(const SuiteConfig& c, const std::vector<CorpusEntry>& corpus) {
  std::vector<CaseTask> tasks;
  for (const CorpusEntry& entry : corpus) {
    tasks.push_back({"corpus/" + entry.descriptor, "rank_axioms", entry.provenance, entry.matroid,
                     [m = entry.matroid, seed = c.seed ^ Fnv(entry.descriptor)](CaseResult& r) {
                       std::optional<std::string> bad =
                           m->size() <= 12 ? RankAxiomViolation(*m) : SampledRankViolation(*m, seed);
                       r.expected = "rank axioms";
                       r.got = bad ? Json(*bad) : Json(m->size() <= 12 ? "exhaustive ok" : "sampled ok");
                       r.pass = !bad;
                     }});
  }
  // Derived operations on small named matroids.
  const std::vector<NamedMatroid> bases = {Uniform(2, 4), Pg(3, 2), Ag(3, 3), FreeSpike(4), FreeSwirl(4)};
  for (const NamedMatroid& nm : bases) {
    MatroidPtr m = nm.matroid;
    std::vector<std::pair<std::string, std::function<MatroidPtr()>>> ops = {
        {"dual", [m] { return Dual(m); }},
        {"truncation", [m] { return Truncate(m, m->FullRank() - 1); }},
        {"principal-extension", [m] { return MatroidPtr(PrincipalExtension(m, FlatsOfRank(*m, 2)[0])); }},
        {"minor", [m] { return MatroidPtr(Minor(m, ElementSet(m->size(), {0}), ElementSet(m->size(), {1}))); }},
        {"direct-sum", [m] { return DirectSum(m, Uniform(1, 2).matroid); }},
        {"parallel-connection", [m] { return MatroidPtr(ParallelConnection(m, Uniform(2, 4).matroid, 0, 0)); }},
        {"two-sum", [m] { return MatroidPtr(TwoSum(m, Uniform(2, 4).matroid, 0, 0)); }},
    };
    for (auto& [name, make] : ops) {
      tasks.push_back({"ops/" + nm.name + "/" + name, "rank_axioms", nm.provenance + " then " + name, m,
                       [make = make, two_sum = name == "two-sum"](CaseResult& r) {
                         MatroidPtr d = make();
                         std::optional<std::string> bad = RankAxiomViolation(*d, kCircuitCap);
                         if (!bad && two_sum) bad = CircuitAxiomViolation(Circuits(d));
                         r.expected = two_sum ? "rank and circuit axioms" : "rank axioms";
                         r.got = bad ? Json(*bad) : Json("ok");
                         r.pass = !bad;
                       }});
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// kung

inline std::vector<CaseTask> Kung(const SuiteConfig&, const std::vector<CorpusEntry>& corpus) {
  std::vector<CaseTask> tasks;
  for (const CorpusEntry& entry : corpus) {
    tasks.push_back({"corpus/" + entry.descriptor, "kung_bound", entry.provenance, entry.matroid,
                     [m = entry.matroid](CaseResult& r) {
                       const int longest = LongestLineMinor(*m);
                       const std::int64_t ell = std::max(2, longest - 1);
                       const std::uint64_t bound = GeometricCount(ell, m->FullRank());
                       const int eps = Epsilon(*m);
                       r.expected = Json{{"eps_at_most", bound}, {"ell", ell}};
                       r.got = Json{{"eps", eps}, {"longest_line", longest}};
                       r.pass = static_cast<std::uint64_t>(eps) <= bound;
                     }});
  }
  for (std::uint64_t ell : {2, 3, 4, 5}) {
    for (int r = 2; r <= 4; ++r) {
      NamedMatroid pg = Pg(r, ell);
      tasks.push_back({"equality/" + pg.name, "kung_equality", pg.provenance, pg.matroid,
                       [m = pg.matroid, ell, r](CaseResult& res) {
                         const std::uint64_t bound = GeometricCount(ell, r);
                         const int longest = LongestLineMinor(*m);
                         const int eps = Epsilon(*m);
                         res.expected = Json{{"eps", bound}, {"longest_line", ell + 1}};
                         res.got = Json{{"eps", eps}, {"longest_line", longest}};
                         res.pass = static_cast<std::uint64_t>(eps) == bound &&
                                    static_cast<std::uint64_t>(longest) == ell + 1;
                       }});
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// lemma4

inline void LonglineCase(const MatroidPtr& m, std::uint64_t q, CaseResult& r) {
  int dense = 0, line = 0;
  std::optional<std::string> bad;
  for (int e = 0; e < m->size() && !bad; ++e) {
    if (m->Rank(ElementSet(m->size(), {e})) == 0) continue;
    LonglineOutcome out = LonglineStep(m, q, e);
    if (out.branch == LonglineBranch::kDenseContraction) {
      ++dense;
      if (!IsQDense(*Contract(m, ElementSet(m->size(), {e})), q)) bad = "M/" + std::to_string(e) + " not dense";
    } else {
      ++line;
      const bool ok = out.line.Contains(e) && m->Rank(out.line) == 2 &&
                      static_cast<std::uint64_t>(Epsilon(*Restrict(m, out.line))) >= q + 2;
      if (!ok) bad = "line through " + std::to_string(e) + " is not a (q+2)-point line";
    }
  }
  r.expected = "every element satisfies one branch";
  r.got = bad ? Json(*bad) : Json{{"dense_contraction", dense}, {"line_restriction", line}};
  r.pass = !bad;
}

inline std::vector<CaseTask> LongLineSuite(const SuiteConfig& c, const std::vector<CorpusEntry>& corpus) {
  std::vector<CaseTask> tasks;
  for (std::uint64_t q : QList(c, {2, 3})) {
    for (const CorpusEntry& entry : corpus) {
      if (!IsQDense(*entry.matroid, q)) continue;
      tasks.push_back({"corpus/" + entry.descriptor + "/q" + std::to_string(q), "longline_step",
                       entry.provenance, entry.matroid,
                       [m = entry.matroid, q](CaseResult& r) { LonglineCase(m, q, r); }});
    }
  }
  const std::vector<std::pair<NamedMatroid, LonglineBranch>> examples = {
      {Uniform(2, 4), LonglineBranch::kLineRestriction},
      {Uniform(3, 8), LonglineBranch::kDenseContraction},
      {Uniform(2, 6), LonglineBranch::kLineRestriction},
  };
  for (const auto& [nm, want] : examples) {
    tasks.push_back({"example/" + nm.name, "longline_step", nm.provenance, nm.matroid,
                     [m = nm.matroid, want = want](CaseResult& r) {
                       LonglineOutcome out = LonglineStep(m, 2, 0);
                       auto name = [](LonglineBranch b) {
                         return b == LonglineBranch::kLineRestriction ? "LineRestriction" : "DenseContraction";
                       };
                       r.expected = name(want);
                       r.got = name(out.branch);
                       if (out.branch == LonglineBranch::kLineRestriction) r.witness = SetJson(out.line);
                       r.pass = out.branch == want;
                     }});
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// lemma5

inline void DenseCase(const MatroidPtr& m, std::uint64_t q, int t, CaseResult& r) {
  DenseRestrictionReport rep = DenseRestriction(m, q, t);
  const int rank = m->FullRank();
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  const auto threshold = static_cast<long double>(GeometricCount(q, rank));
  std::optional<std::string> bad;
  ElementSet current = m->GroundSet();
  for (const DenseStep& step : rep.trace) {
    MinorPtr cur = Restrict(m, current);
    const int r0 = cur->FullRank();
    const ElementSet outside = current - step.cocircuit;
    const bool cocircuit = step.cocircuit.IsSubsetOf(current) && m->Rank(outside) == r0 - 1 &&
                           IsFlat(*m, outside) && m->Rank(step.cocircuit) <= r0 - 2;
    if (!cocircuit) bad = "step set " + step.cocircuit.ToString() + " is not a low-rank cocircuit";
    current = step.kept_cocircuit ? step.cocircuit : outside;
    MinorPtr part = Restrict(m, current);
    const long double lhs = Epsilon(*part) * std::pow(phi, static_cast<long double>(rank - part->FullRank()));
    if (lhs <= threshold - 1e-9L) bad = "kept side fails the weighted bound";
  }
  MinorPtr fin = rep.final_matroid;
  if (!(current == rep.restriction)) bad = "trace does not end at the reported restriction";
  if (!IsQDense(*fin, q)) bad = "final restriction not dense";
  for (const ElementSet& cc : Cocircuits(*fin)) {
    if (fin->Rank(cc) < fin->FullRank() - 1) bad = "final restriction keeps a low-rank cocircuit";
  }
  r.expected = "descent ends at a dense restriction with high-rank cocircuits";
  r.got = bad ? Json(*bad)
              : Json{{"steps", rep.trace.size()}, {"final_rank", fin->FullRank()}, {"final_eps", Epsilon(*fin)},
                     {"rank_bound_applies", rep.rank_bound_applies}};
  r.witness = SetJson(rep.restriction);
  r.pass = !bad;
}

inline std::vector<CaseTask> DenseRestrictionSuite(const SuiteConfig& c, const std::vector<CorpusEntry>& corpus) {
  std::vector<CaseTask> tasks;
  const int t = IntParam(c, "t", 2);
  for (std::uint64_t q : QList(c, {2, 3})) {
    for (const CorpusEntry& entry : corpus) {
      if (entry.matroid->size() > kEnumerationCap || !IsQDense(*entry.matroid, q)) continue;
      tasks.push_back({"corpus/" + entry.descriptor + "/q" + std::to_string(q), "dense_restriction",
                       entry.provenance, entry.matroid,
                       [m = entry.matroid, q, t](CaseResult& r) { DenseCase(m, q, t, r); }});
    }
  }
  // Truncated direct sums with a low-rank cocircuit.
  for (int mm = 9; mm <= 13; ++mm) {
    for (int k = 3; k <= 4; ++k) {
      MatroidPtr g = Truncate(DirectSum(Uniform(3, mm).matroid, Uniform(2, k).matroid), 4);
      if (!IsQDense(*g, 2)) continue;
      tasks.push_back({"gadget/T(U(3," + internal::Pad(mm) + ")+U(2," + std::to_string(k) + "),4)", "dense_restriction",
                       "truncation to rank 4 of U(3," + std::to_string(mm) + ") + U(2," + std::to_string(k) + ")", g,
                       [g](CaseResult& r) { DenseCase(g, 2, 3, r); }});
    }
  }
  // Here the dense side is the cocircuit itself.
  for (int mm = 8; mm <= 12; mm += 2) {
    for (int k = 5; k <= 8; ++k) {
      MatroidPtr g = Truncate(DirectSum(Uniform(2, mm).matroid, Uniform(3, k).matroid), 4);
      if (!IsQDense(*g, 2)) continue;
      tasks.push_back({"gadget/T(U(2," + internal::Pad(mm) + ")+U(3," + std::to_string(k) + "),4)",
                       "dense_restriction",
                       "truncation to rank 4 of U(2," + std::to_string(mm) + ") + U(3," + std::to_string(k) + ")", g,
                       [g](CaseResult& r) { DenseCase(g, 2, 2, r); }});
    }
  }
  {
    MatroidPtr g = Truncate(DirectSum(Pg(3, 3).matroid, Uniform(2, 3).matroid), 4);
    tasks.push_back({"gadget/T(PG(2,3)+U(2,3),4)", "dense_restriction", "truncation to rank 4 of PG(2,3) + U(2,3)",
                     g, [g](CaseResult& r) { DenseCase(g, 2, 3, r); }});
  }
  MatroidPtr worked = Truncate(DirectSum(Uniform(3, 13).matroid, Uniform(2, 3).matroid), 4);
  tasks.push_back({"example/T(U(3,13)+U(2,3),4)", "dense_restriction", "truncation to rank 4 of U(3,13) + U(2,3)",
                   worked, [worked](CaseResult& r) {
                     DenseRestrictionReport rep = DenseRestriction(worked, 2, 3);
                     ElementSet u313(worked->size());
                     for (int e = 0; e < 13; ++e) u313.Insert(e);
                     const ElementSet removed(worked->size(), {13, 14, 15});
                     const bool one_step = rep.trace.size() == 1 && rep.trace[0].cocircuit == removed &&
                                           !rep.trace[0].kept_cocircuit;
                     const bool exact = WeightedDense(13, 1, 15) && !WeightedDense(3, 2, 15) &&
                                        WeightedDense(16, 0, 15);
                     const bool final_ok = rep.restriction == u313 &&
                                           AreIsomorphic(rep.final_matroid, Uniform(3, 13).matroid).has_value();
                     r.expected = Json{{"steps", 1}, {"removed", SetJson(removed)}, {"final", "U(3,13)"}};
                     r.got = Json{{"steps", rep.trace.size()}, {"final", SetJson(rep.restriction)},
                                  {"zphi_checks", exact}};
                     r.pass = one_step && exact && final_ok;
                   }});
  for (const NamedMatroid& nm : {Uniform(2, 4), Uniform(3, 8)}) {
    tasks.push_back({"example/" + nm.name, "dense_restriction", nm.provenance, nm.matroid,
                     [m = nm.matroid](CaseResult& r) {
                       DenseRestrictionReport rep = DenseRestriction(m, 2, 2);
                       r.expected = "fixed point";
                       r.got = Json{{"steps", rep.trace.size()}};
                       r.pass = rep.trace.empty() && rep.restriction == m->GroundSet();
                     }});
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// lemma6

inline std::vector<CaseTask> UnavoidableMinorSuite(const SuiteConfig& c) {
  std::vector<CaseTask> tasks;
  auto add_flat = [&](int mm, std::uint64_t q, const MatroidPtr& pg, const ElementSet& flat,
                      const std::string& desc) {
    MatroidPtr ext = PrincipalExtension(pg, flat);
    const int rf = pg->Rank(flat);
    tasks.push_back({desc, "unavoidable_minor_of_extension",
                     "principal extension of PG(" + std::to_string(2 * mm - 1) + "," + std::to_string(q) +
                         ") on " + flat.ToString(),
                     ext, [ext, mm, q, rf](CaseResult& r) {
                       const std::string want =
                           PrincipalPg(mm, q, rf >= mm ? mm : 2).name;
                       UnavoidableResult res = UnavoidableMinorOfExtension(ext, mm, q);
                       const bool verified = VerifyMinorWitness(ext, res.target, res.witness);
                       r.expected = Json{{"tag", want}, {"flat_rank", rf}};
                       r.got = Json{{"tag", res.target_name}, {"flat_rank", res.flat_rank}, {"verified", verified}};
                       r.witness = Json{{"contract", SetJson(res.witness.contract)},
                                        {"delete", SetJson(res.witness.remove)},
                                        {"iso", res.witness.iso.bijection}};
                       r.pass = verified && res.target_name == want && res.flat_rank == rf;
                     }});
  };
  const std::vector<std::uint64_t> qs = QList(c, {2});
  const int only_m = IntParam(c, "m", 0);
  for (std::uint64_t q : qs) {
    if (only_m == 0 || only_m == 2) {
      MatroidPtr pg = Pg(4, q).matroid;
      if (static_cast<int>(GeometricCount(q, 4)) <= c.caps.max_ground) {
        for (int k = 2; k <= 4; ++k) {
          std::vector<ElementSet> flats = FlatsOfRank(*pg, k, kMaxRankGround);
          for (std::size_t i = 0; i < flats.size(); ++i) {
            add_flat(2, q, pg, flats[i],
                     "m2/q" + std::to_string(q) + "/rank" + std::to_string(k) + "/" + internal::Pad(static_cast<int>(i)));
          }
        }
        MatroidPtr point_ext = PrincipalExtension(pg, ElementSet(pg->size(), {0}));
        tasks.push_back({"m2/q" + std::to_string(q) + "/rank1", "unavoidable_minor_of_extension",
                         "principal extension on a point", point_ext, [point_ext, q](CaseResult& r) {
                           r.expected = "RepresentableInput";
                           try {
                             UnavoidableMinorOfExtension(point_ext, 2, q);
                             r.got = "no error";
                           } catch (const Error& e) {
                             r.got = std::string(ErrorCodeName(e.code()));
                             r.pass = e.code() == ErrorCode::kRepresentableInput;
                           }
                         }});
      }
    }
    if ((only_m == 0 || only_m == 3) && q == 2) {
      MatroidPtr pg = Pg(6, 2).matroid;
      for (int k = 2; k <= 6; ++k) {
        add_flat(3, 2, pg, FlatsOfRank(*pg, k, kMaxRankGround)[0], "m3/q2/rank" + std::to_string(k));
      }
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// spike-oracle, swirl-oracle

inline std::vector<CaseTask> RepOracle(bool swirl) {
  std::vector<CaseTask> tasks;
  for (std::uint64_t q = 3; q <= kWitnessMaxQ; ++q) {
    if (!IsPrimePower(q)) continue;
    for (int k = 3; k <= kWitnessMaxK; ++k) {
      tasks.push_back({"q" + internal::Pad(static_cast<int>(q)) + "/k" + internal::Pad(k),
                       swirl ? "swirl_witness_search" : "spike_witness_search", "", nullptr,
                       [q, k, swirl](CaseResult& r) {
                         const bool closed = swirl ? SwirlRepPredicate(k, q) : SpikeRepPredicate(k, q);
                         std::optional<SpikeWitness> w = swirl ? SwirlWitnessSearch(k, q) : SpikeWitnessSearch(k, q);
                         const bool valid = !w || VerifySpikeWitness(*w);
                         r.expected = closed;
                         r.got = w.has_value();
                         if (w) {
                           Json alphas = Json::array();
                           for (FieldElement a : w->alphas) alphas.push_back(a.index);
                           r.witness = Json{{"alphas", alphas}, {"betas", {w->beta1.index, w->beta2.index}}};
                         }
                         r.pass = valid && closed == w.has_value();
                       }});
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// rep-cross

inline std::vector<CaseTask> RepCross() {
  std::vector<CaseTask> tasks;
  auto add = [&](const std::string& desc, const NamedMatroid& nm, std::uint64_t q, bool want) {
    tasks.push_back({desc, "brute_force_linear_rep", nm.provenance, nm.matroid,
                     [m = nm.matroid, q, want](CaseResult& r) {
                       auto rep = BruteForceLinearRep(m, q);
                       r.expected = want;
                       r.got = rep.has_value();
                       if (rep) r.witness = MatroidToJson(*rep);
                       r.pass = rep.has_value() == want;
                     }});
  };
  for (std::uint64_t q : {3, 4, 5, 7}) {
    for (int k = 3; k <= 5; ++k) {
      add("spike/k" + std::to_string(k) + "/q" + std::to_string(q), FreeSpike(k), q, SpikeRepPredicate(k, q));
    }
    for (int k = 4; k <= 5; ++k) {
      add("swirl/k" + std::to_string(k) + "/q" + std::to_string(q), FreeSwirl(k), q, SwirlRepPredicate(k, q));
    }
    // Swirl(3) is U(3,6), which needs at least four elements on a line.
    add("swirl/k3/q" + std::to_string(q), FreeSwirl(3), q, q >= 4);
  }
  tasks.push_back({"swirl/k3/iso-U(3,6)", "are_isomorphic", "", FreeSwirl(3).matroid, [](CaseResult& r) {
                     auto iso = AreIsomorphic(FreeSwirl(3).matroid, Uniform(3, 6).matroid);
                     r.expected = true;
                     r.got = iso.has_value();
                     r.pass = iso && VerifyIsomorphism(*FreeSwirl(3).matroid, *Uniform(3, 6).matroid, *iso);
                   }});
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (std::uint64_t m : {q + 1, q + 2}) {
      add("line/U(2," + std::to_string(m) + ")/q" + std::to_string(q), Uniform(2, static_cast<int>(m)), q, m <= q + 1);
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    add("fano/q" + std::to_string(q), Pg(3, 2), q, q % 2 == 0);
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// growth-witness

inline std::vector<CaseTask> GrowthWitness() {
  std::vector<CaseTask> tasks;
  for (std::uint64_t q : {2, 3}) {
    for (int n = 2; n <= 4; ++n) {
      for (GrowthClass cls : {GrowthClass::kL, GrowthClass::kLcirc, GrowthClass::kLlambda}) {
        tasks.push_back({"witness/" + GrowthClassName(cls) + "/q" + std::to_string(q) + "/n" + std::to_string(n),
                         "density_witness", "", nullptr, [q, n, cls](CaseResult& r) {
                           NamedMatroid w = DensityWitness(q, cls, n);
                           std::uint64_t want = cls == GrowthClass::kL ? GeometricCount(q, n) : GeometricCount(q, n + 1);
                           if (cls == GrowthClass::kLlambda) want -= q;
                           const int eps = Epsilon(*w.matroid);
                           const bool simple = IsSimple(*w.matroid);
                           const int rank = w.matroid->FullRank();
                           r.expected = Json{{"eps", want}, {"rank", n}, {"simple", true}};
                           r.got = Json{{"eps", eps}, {"rank", rank}, {"simple", simple}, {"name", w.name}};
                           r.pass = static_cast<std::uint64_t>(eps) == want && rank == n && simple;
                         }});
      }
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 2; GeometricCount(q, n) <= 4096; ++n) {
      tasks.push_back({"geometry/PG/q" + std::to_string(q) + "/n" + internal::Pad(n), "eps", "", nullptr,
                       [q, n](CaseResult& r) {
                         NamedMatroid pg = Pg(n, q);
                         r.expected = GeometricCount(q, n);
                         r.got = Epsilon(*pg.matroid);
                         r.pass = r.got == r.expected && pg.matroid->FullRank() == n;
                       }});
    }
    for (int n = 2; SaturatingPow(q, n - 1) <= 4096; ++n) {
      tasks.push_back({"geometry/AG/q" + std::to_string(q) + "/n" + internal::Pad(n), "eps", "", nullptr,
                       [q, n](CaseResult& r) {
                         NamedMatroid ag = Ag(n, q);
                         r.expected = SaturatingPow(q, n - 1);
                         r.got = Epsilon(*ag.matroid);
                         r.pass = r.got == r.expected && ag.matroid->FullRank() == n;
                       }});
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// spike-structure, swirl-structure

inline std::vector<CaseTask> Structure(bool swirl) {
  std::vector<CaseTask> tasks;
  for (int k = 3; k <= 6; ++k) {
    NamedMatroid nm = swirl ? FreeSwirl(k) : FreeSpike(k);
    tasks.push_back({nm.name, swirl ? "free_swirl" : "free_spike", nm.provenance, nm.matroid,
                     [m = nm.matroid, k, swirl](CaseResult& r) {
                       const int n = m->size();
                       std::vector<ElementSet> circuits = Circuits(m);
                       std::set<ElementSet> circuit_set(circuits.begin(), circuits.end());
                       int pair_circuits = 0;
                       std::optional<std::string> bad;
                       for (int i = 0; i < k; ++i) {
                         for (int j = i + 1; j < k; ++j) {
                           const ElementSet u(n, {2 * i, 2 * i + 1, 2 * j, 2 * j + 1});
                           const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                           const bool want_circuit = !swirl || consecutive;
                           const bool is_circuit = IsCircuit(*m, u);
                           if (is_circuit != (circuit_set.count(u) > 0)) bad = "circuit list disagrees at " + u.ToString();
                           if (want_circuit && !is_circuit) bad = u.ToString() + " is not a circuit";
                           if (!want_circuit && m->Rank(u) != 4) bad = u.ToString() + " is not independent";
                           pair_circuits += is_circuit;
                         }
                       }
                       const int want_pairs = swirl ? (k == 3 ? 3 : k) : k * (k - 1) / 2;
                       r.expected = Json{{"size", 2 * k}, {"rank", k}, {"pair_circuits", want_pairs}};
                       r.got = Json{{"size", n}, {"rank", m->FullRank()}, {"pair_circuits", pair_circuits}};
                       if (bad) r.got["error"] = *bad;
                       r.pass = !bad && n == 2 * k && m->FullRank() == k && pair_circuits == want_pairs;
                     }});
  }
  if (!swirl) {
    tasks.push_back({"Spike(3)/iso-U(3,6)", "are_isomorphic", "", FreeSpike(3).matroid, [](CaseResult& r) {
                       MatroidPtr s = FreeSpike(3).matroid, u = Uniform(3, 6).matroid;
                       auto iso = AreIsomorphic(s, u);
                       r.expected = true;
                       r.got = iso.has_value();
                       if (iso) r.witness = iso->bijection;
                       r.pass = iso && VerifyIsomorphism(*s, *u, *iso);
                     }});
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// eventual-base

inline Json BaseReportJson(const BaseReport& b) {
  Json blocking = Json::array();
  for (const Blocking& x : b.blocking) {
    blocking.push_back(Json{{"structure", x.structure}, {"minor", x.minor ? Json(*x.minor) : Json(nullptr)}});
  }
  return Json{{"base", b.base ? Json(*b.base) : Json(nullptr)},
              {"certified", b.certified},
              {"scan_bound", b.scan_bound},
              {"blocking", blocking},
              {"gaps", b.gaps}};
}

inline std::string SpecName(const ClassSpec& s) {
  std::string out = "l" + (s.line_ell ? internal::Pad(static_cast<int>(*s.line_ell)) : std::string("-"));
  out += "/spikes";
  for (int k : s.spike_ranks) out += "-" + std::to_string(k);
  out += "/swirls";
  for (int k : s.swirl_ranks) out += "-" + std::to_string(k);
  return out;
}

inline std::uint64_t LargestPrimeAtMost(std::uint64_t x, bool prime_power) {
  for (std::uint64_t q = x; q >= 2; --q) {
    if (prime_power ? IsPrimePower(q) : IsPrime(q)) return q;
  }
  return 0;
}

inline std::vector<CaseTask> EventualBaseSuite() {
  std::vector<CaseTask> tasks;
  auto add = [&](const std::string& group, const ClassSpec& spec, std::uint64_t want, bool certified,
                 std::vector<std::string> gaps) {
    tasks.push_back({group + "/" + SpecName(spec), "eventual_base", "", nullptr,
                     [spec, want, certified, gaps](CaseResult& r) {
                       BaseReport b = EventualBase(spec);
                       r.expected = Json{{"base", want}, {"certified", certified}, {"gaps", gaps}};
                       r.got = BaseReportJson(b);
                       r.pass = b.base == want && b.certified == certified && b.gaps == gaps;
                     }});
  };
  add("table", {9, {}, {}}, 9, true, {});
  add("table", {10, {5}, {}}, 5, true, {});
  add("table", {3, {3}, {3}}, 3, true, {});
  add("table", {5, {}, {4}}, 4, true, {});
  add("table", {25, {}, {4}}, 4, false, {"Lcirc(4)"});
  // Lines only: the largest prime power not exceeding l.
  for (std::int64_t ell = 2; ell <= 40; ++ell) {
    add("lines", {ell, {}, {}}, LargestPrimeAtMost(ell, true), true, {});
  }
  // Lines and a spike: the largest prime p <= min(l, k+1).
  for (std::int64_t ell = 2; ell <= 20; ++ell) {
    for (int k = 3; k <= 12; ++k) {
      add("spike", {ell, {k}, {}}, LargestPrimeAtMost(std::min<std::int64_t>(ell, k + 1), false), true, {});
    }
  }
  // Lines, spike and swirl of the same rank: base 3.
  for (std::int64_t ell = 3; ell <= 12; ++ell) {
    for (int k = 3; k <= 8; ++k) add("spike-swirl", {ell, {k}, {k}}, 3, true, {});
  }
  // Lines and a swirl between consecutive Mersenne exponents p, p'.
  const std::pair<int, int> mersenne[] = {{2, 3}, {3, 5}, {5, 7}};
  for (auto [p, pp] : mersenne) {
    const std::int64_t lo = std::int64_t{1} << p;
    const std::int64_t hi = std::min<std::int64_t>((std::int64_t{1} << (2 * p)) + lo, std::int64_t{1} << pp);
    for (std::int64_t ell : {lo, (lo + hi) / 2, hi - 1}) {
      const int kmin = std::max<int>(4, static_cast<int>(lo) - 2);
      for (int k : {kmin, kmin + 3}) add("swirl", {ell, {}, {k}}, static_cast<std::uint64_t>(lo), true, {});
    }
  }
  // Monotonicity: further exclusions never raise the base.
  tasks.push_back({"monotone/grid", "eventual_base", "", nullptr, [](CaseResult& r) {
                     int checked = 0;
                     std::optional<std::string> bad;
                     for (std::int64_t ell = 2; ell <= 12; ++ell) {
                       for (int sk : {0, 3, 4, 5}) {
                         for (int wk : {0, 4, 5}) {
                           ClassSpec base{ell, {}, {}};
                           if (sk) base.spike_ranks.insert(sk);
                           if (wk) base.swirl_ranks.insert(wk);
                           const std::uint64_t q0 = *EventualBase(base).base;
                           for (int extra = 3; extra <= 6; ++extra) {
                             ClassSpec more = base;
                             more.spike_ranks.insert(extra);
                             ClassSpec more2 = base;
                             more2.swirl_ranks.insert(extra + 1);
                             ++checked;
                             if (*EventualBase(more).base > q0 || *EventualBase(more2).base > q0) {
                               bad = SpecName(base);
                             }
                           }
                         }
                       }
                     }
                     r.expected = "non-increasing";
                     r.got = bad ? Json(*bad) : Json{{"checked", checked}};
                     r.pass = !bad;
                   }});
  return tasks;
}

}  // namespace suites

// Runs `tasks` on `jobs` workers; results are sorted by descriptor.
inline std::vector<CaseResult> RunTasks(std::vector<CaseTask> tasks, int jobs) {
  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      CaseTask& t = tasks[i];
      CaseResult& r = results[i];
      r.descriptor = t.descriptor;
      r.op = t.op;
      try {
        t.run(r);
      } catch (const std::exception& e) {
        r.pass = false;
        r.got = Json{{"error", e.what()}};
      }
      if (!r.pass) {
        Json input{{"op", t.op}, {"provenance", t.provenance}};
        if (t.subject) {
          try {
            input["matroid"] = MatroidToJson(t.subject);
          } catch (const std::exception&) {
            input["matroid"] = nullptr;
          }
        }
        r.input = std::move(input);
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.descriptor < b.descriptor; });
  return results;
}

inline std::vector<CaseTask> BuildSuite(const SuiteConfig& c) {
  const auto& names = SuiteNames();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) {
    Fail(ErrorCode::kUnknownSuite, c.suite);
  }
  c.caps.Validate();
  auto corpus = [&]() { return CorpusGenerate(c.seed, c.caps); };
  if (c.suite == "field-axioms") return suites::FieldAxioms(c);
  if (c.suite == "rank-axioms") return suites::RankAxioms(c, corpus());
  if (c.suite == "kung") return suites::Kung(c, corpus());
  if (c.suite == "lemma4") return suites::LongLineSuite(c, corpus());
  if (c.suite == "lemma5") return suites::DenseRestrictionSuite(c, corpus());
  if (c.suite == "lemma6") return suites::UnavoidableMinorSuite(c);
  if (c.suite == "spike-oracle") return suites::RepOracle(false);
  if (c.suite == "swirl-oracle") return suites::RepOracle(true);
  if (c.suite == "rep-cross") return suites::RepCross();
  if (c.suite == "growth-witness") return suites::GrowthWitness();
  if (c.suite == "swirl-structure") return suites::Structure(true);
  if (c.suite == "spike-structure") return suites::Structure(false);
  return suites::EventualBaseSuite();
}

inline Json CaseJson(const CaseResult& r) {
  Json j{{"type", "case"}, {"case", r.descriptor}, {"op", r.op}, {"pass", r.pass},
         {"expected", r.expected}, {"got", r.got}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.input.is_null()) j["input"] = r.input;
  return j;
}

inline Json HeaderJson(const SuiteConfig& c) {
  return Json{{"type", "header"}, {"suite", c.suite}, {"params", c.params},
              {"seed", c.seed},   {"prng", kPrngName},  {"caps", c.caps.Entries()}};
}

// Builds and runs a suite. When `out` is given, writes a header line, one
// line per case in descriptor order, and a trailing summary line.
inline Report RunSuite(const SuiteConfig& c, std::ostream* out = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseTask> tasks = BuildSuite(c);
  Report report;
  report.suite = c.suite;
  report.params = c.params;
  report.cases = RunTasks(std::move(tasks), c.jobs);
  Json counterexamples = Json::array();
  for (const CaseResult& r : report.cases) {
    if (!r.pass) {
      ++report.failed;
      counterexamples.push_back(r.descriptor);
    }
  }
  report.pass = report.failed == 0;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (out) {
    *out << HeaderJson(c).dump() << "\n";
    for (const CaseResult& r : report.cases) *out << CaseJson(r).dump() << "\n";
    *out << Json{{"type", "summary"},
                 {"suite", c.suite},
                 {"params", c.params},
                 {"pass", report.pass},
                 {"cases", report.cases.size()},
                 {"failed", report.failed},
                 {"counterexamples", counterexamples},
                 {"elapsed_ms", static_cast<std::int64_t>(report.elapsed_ms)}}
                .dump()
         << "\n";
  }
  return report;
}

}  // namespace mforge

#endif  // MFORGE_SUITES_HPP_
