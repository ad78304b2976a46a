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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "amalgam/error.h"
#include "amalgam/szemeredi.h"

namespace amalgam {
namespace {

using Vec = std::vector<int>;

// Solutions by scanning all of Z_N^n against projection sets of E.
std::vector<Vec> brute_solutions(int n_mod, int len, const std::vector<TupleCode>& e) {
  std::vector<std::set<Vec>> proj(len);
  for (TupleCode code : e) {
    const Vec t = decode(code, n_mod, len);
    for (int omit = 0; omit < len; ++omit) {
      Vec p = t;
      p.erase(p.begin() + omit);
      proj[omit].insert(p);
    }
  }
  std::vector<Vec> out;
  Vec t(len, 0);
  for (std::int64_t c = 0; c < ipow(n_mod, len); ++c) {
    std::int64_t rest = c;
    for (int i = len - 1; i >= 0; --i) {
      t[i] = static_cast<int>(rest % n_mod);
      rest /= n_mod;
    }
    bool ok = true;
    for (int omit = 0; omit < len && ok; ++omit) {
      Vec p = t;
      p.erase(p.begin() + omit);
      ok = proj[omit].count(p) > 0;
    }
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<Vec> decoded(const CyclicInstance& inst, const std::vector<TupleCode>& codes) {
  std::vector<Vec> out;
  for (TupleCode c : codes) out.push_back(decode(c, inst.modulus, inst.length));
  return out;
}

TEST(CodesTest, RoundTripAndOrder) {
  EXPECT_EQ(encode({1, 2, 3}, 7), 1 * 49 + 2 * 7 + 3);
  EXPECT_EQ(decode(66, 7, 3), (Vec{1, 2, 3}));
  EXPECT_EQ(project(encode({1, 2, 3}, 7), 7, 3, 1), encode({1, 3}, 7));
  EXPECT_EQ(project(encode({1, 2, 3}, 7), 7, 3, 2), encode({1, 2}, 7));
  EXPECT_LT(encode({0, 6, 6}, 7), encode({1, 0, 0}, 7));
}

TEST(InstanceTest, Normalizes) {
  const CyclicInstance inst = make_instance(7, 3, {2, 0, 2, 1});
  EXPECT_EQ(inst.set, (Vec{0, 1, 2}));
  EXPECT_TRUE(inst.modulus_is_prime());
  EXPECT_FALSE(make_instance(8, 3, {}).modulus_is_prime());
  EXPECT_THROW(make_instance(7, 3, {7}), Error);
  EXPECT_THROW(make_instance(1, 3, {}), Error);
  EXPECT_THROW(make_instance(7, 2, {}), Error);
}

TEST(BuildETest, SmallInstance) {
  const CyclicInstance inst = make_instance(7, 3, {0, 1, 2});
  const auto e = build_E(inst);
  EXPECT_EQ(e.size(), 21u);
  EXPECT_TRUE(std::binary_search(e.begin(), e.end(), encode({0, 0, 0}, 7)));
  EXPECT_TRUE(std::binary_search(e.begin(), e.end(), encode({1, 0, 1}, 7)));
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
  for (const Vec& t : decoded(inst, e)) {
    EXPECT_EQ(t[2], (t[0] + t[1]) % 7);
    EXPECT_TRUE(inst.contains((t[0] + 2 * t[1]) % 7));
  }
}

TEST(BuildETest, SizeFormula) {
  for (int len = 3; len <= 5; ++len) {
    for (int n_mod : {2, 5, 6, 7}) {
      const CyclicInstance inst = make_instance(n_mod, len, {0, 1});
      EXPECT_EQ(static_cast<std::int64_t>(build_E(inst).size()), 2 * ipow(n_mod, len - 2));
    }
  }
  EXPECT_TRUE(build_E(make_instance(7, 3, {})).empty());
  EXPECT_EQ(build_E(make_instance(5, 3, {0, 1, 2, 3, 4})).size(), 25u);
}

TEST(BuildETest, BudgetExceeded) {
  Budget tight;
  tight.enumeration = 48;
  EXPECT_THROW(build_E(make_instance(7, 3, {0}), tight), Error);
  tight.enumeration = 49;
  EXPECT_NO_THROW(build_E(make_instance(7, 3, {0}), tight));
}

TEST(HypothesesTest, SmallInstance) {
  const CyclicInstance inst = make_instance(7, 3, {0, 1, 2});
  const HypothesesReport r = verify_main_hypotheses(inst, build_E(inst));
  EXPECT_EQ(r.a, Rational(3, 7));
  EXPECT_EQ(r.l, 1);
  EXPECT_EQ(r.k_exact, 1);
  EXPECT_EQ(r.max_sampled_ratio, Rational(1));
  EXPECT_TRUE(r.sampled_c_holds);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.samples, 100);
}

TEST(HypothesesTest, EmptySetFailsA) {
  const CyclicInstance inst = make_instance(7, 3, {});
  const HypothesesReport r = verify_main_hypotheses(inst, build_E(inst));
  EXPECT_EQ(r.a, 0);
  EXPECT_FALSE(r.holds());
}

TEST(HypothesesTest, FullCubeFibres) {
  const CyclicInstance inst = make_instance(2, 3, {0, 1});
  std::vector<TupleCode> cube;
  for (TupleCode c = 0; c < 8; ++c) cube.push_back(c);
  const HypothesesReport r = verify_main_hypotheses(inst, cube);
  EXPECT_EQ(r.l, 2);
  EXPECT_EQ(r.a, 1);
}

TEST(HypothesesTest, MeasureMatchesSetDensity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const int n_mod = 3 + static_cast<int>(rng() % 9);
    Vec a;
    for (int x = 0; x < n_mod; ++x) {
      if (rng() % 2) a.push_back(x);
    }
    const CyclicInstance inst = make_instance(n_mod, 3 + static_cast<int>(rng() % 2), a);
    const HypothesesReport r = verify_main_hypotheses(inst, build_E(inst), 20, i);
    EXPECT_EQ(r.a, Rational(static_cast<int>(inst.set.size()), n_mod));
    if (!inst.set.empty()) {
      EXPECT_EQ(r.l, 1);
      EXPECT_TRUE(r.holds());
    }
  }
}

TEST(SolveTest, SmallInstance) {
  const CyclicInstance inst = make_instance(7, 3, {0, 1, 2});
  const auto e = build_E(inst);
  const SolveResult s = solve_amalgamation(inst, e);
  EXPECT_FALSE(s.truncated);
  EXPECT_TRUE(std::is_sorted(s.solutions.begin(), s.solutions.end()));
  EXPECT_TRUE(std::binary_search(s.solutions.begin(), s.solutions.end(), encode({0, 0, 1}, 7)));
  for (TupleCode c : e) {
    EXPECT_TRUE(std::binary_search(s.solutions.begin(), s.solutions.end(), c));
  }
  EXPECT_EQ(decoded(inst, s.solutions), brute_solutions(7, 3, e));
  EXPECT_EQ(s.count, 35);
}

TEST(SolveTest, AgreesWithScanning) {
  for (int len = 3; len <= 4; ++len) {
    for (int n_mod : {4, 5, 6}) {
      const CyclicInstance inst = make_instance(n_mod, len, {0, 2, 3});
      const auto e = build_E(inst);
      const SolveResult s = solve_amalgamation(inst, e);
      EXPECT_EQ(decoded(inst, s.solutions), brute_solutions(n_mod, len, e)) << n_mod << "," << len;
    }
  }
}

TEST(SolveTest, EmptySet) {
  const CyclicInstance inst = make_instance(7, 3, {});
  EXPECT_EQ(solve_amalgamation(inst, build_E(inst)).count, 0);
}

TEST(SolveTest, StorageAndBudgetLimits) {
  const CyclicInstance inst = make_instance(7, 3, {0, 1, 2});
  const auto e = build_E(inst);
  const SolveResult capped = solve_amalgamation(inst, e, 3);
  EXPECT_EQ(capped.count, 35);
  EXPECT_EQ(capped.solutions.size(), 3u);
  Budget tight;
  tight.enumeration = 10;
  EXPECT_TRUE(solve_amalgamation(inst, e, 100, tight).truncated);
}

TEST(SolveTest, TranslationCovariance) {
  std::mt19937_64 rng(23);
  const int n_mod = 7, len = 3;
  const CyclicInstance inst = make_instance(n_mod, len, {0, 1, 3});
  const auto base = decoded(inst, solve_amalgamation(inst, build_E(inst)).solutions);
  for (int trial = 0; trial < 10; ++trial) {
    const int c1 = static_cast<int>(rng() % n_mod), c2 = static_cast<int>(rng() % n_mod);
    const int shift = (c1 + 2 * c2) % n_mod;
    Vec moved_set;
    for (int x : inst.set) moved_set.push_back((x + shift) % n_mod);
    const CyclicInstance moved = make_instance(n_mod, len, moved_set);
    const auto got = decoded(moved, solve_amalgamation(moved, build_E(moved)).solutions);
    std::set<Vec> expected;
    for (const Vec& t : base) {
      expected.insert({(t[0] + c1) % n_mod, (t[1] + c2) % n_mod, (t[2] + c1 + c2) % n_mod});
    }
    EXPECT_EQ(std::set<Vec>(got.begin(), got.end()), expected);
  }
}

TEST(ProgressionTest, Examples) {
  const CyclicInstance inst = make_instance(7, 3, {0, 1, 2});
  const Progression p = extract_progression(inst, {0, 0, 1});
  EXPECT_EQ(p.a, 0);
  EXPECT_EQ(p.d, 1);
  EXPECT_TRUE(p.nondegenerate);
  EXPECT_TRUE(p.valid);
  EXPECT_EQ(p.terms, (Vec{0, 1, 2}));
  const Progression q = extract_progression(inst, {1, 0, 1});
  EXPECT_EQ(q.a, 1);
  EXPECT_EQ(q.d, 0);
  EXPECT_FALSE(q.nondegenerate);
  EXPECT_TRUE(q.valid);
  const Progression z = extract_progression(inst, {0, 0, 0});
  EXPECT_EQ(z.a, 0);
  EXPECT_FALSE(z.nondegenerate);
  EXPECT_TRUE(z.valid);
  EXPECT_FALSE(extract_progression(make_instance(7, 3, {1}), {0, 0, 0}).valid);
}

TEST(ProgressionTest, EverySolutionValidates) {
  for (int len = 3; len <= 4; ++len) {
    for (int n_mod : {7, 11, 13}) {
      const CyclicInstance inst = make_instance(n_mod, len, {0, 1, 2, 3, 5});
      int nondegenerate = 0;
      for (TupleCode c : solve_amalgamation(inst, build_E(inst)).solutions) {
        const Progression p = extract_progression(inst, decode(c, n_mod, len));
        EXPECT_TRUE(p.valid);
        nondegenerate += p.nondegenerate;
      }
      EXPECT_GT(nondegenerate, 0);
    }
  }
}

TEST(ProjectionInequalityTest, NoViolations) {
  const CyclicInstance inst = make_instance(7, 3, {0, 1, 2});
  const auto e = build_E(inst);
  const Lemma26Report r = lemma26_checks(inst, e, 100, 1);
  EXPECT_EQ(r.samples, 100);
  EXPECT_GT(r.checks, 0);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.k, 1);
  const CyclicInstance four = make_instance(5, 4, {1, 3});
  EXPECT_EQ(lemma26_checks(four, build_E(four), 50, 9).violations, 0);
}

TEST(FubiniTest, RandomSubsets) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    std::vector<TupleCode> b;
    for (TupleCode c = 0; c < 343; ++c) {
      if (rng() % 3 == 0) b.push_back(c);
    }
    for (std::uint32_t inner = 1; inner < 7; ++inner) {
      const FubiniResult r = counting_fubini(7, 3, b, inner);
      EXPECT_TRUE(r.holds());
      EXPECT_EQ(r.total, Rational(static_cast<int>(b.size()), 343));
    }
  }
}

TEST(FubiniTest, EdgeCases) {
  EXPECT_EQ(counting_fubini(7, 3, {}, 1).total, 0);
  std::vector<TupleCode> all;
  for (TupleCode c = 0; c < 343; ++c) all.push_back(c);
  EXPECT_EQ(counting_fubini(7, 3, all, 3).iterated, 1);
}

}  // namespace
}  // namespace amalgam
