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

#include <gtest/gtest.h>

#include "amalgam/counterexample.h"
#include "amalgam/error.h"
#include "amalgam/predimension.h"
#include "amalgam/structure.h"
#include "support/oracles.h"

namespace amalgam {
namespace {

using testing::Mask;

FinStruct s1() { return parse_structure("points 3\nrel R 3\nR 0 1 2\n"); }
FinStruct s2() { return parse_structure("points 4\nrel R 3\nR 0 1 2\nR 0 1 3\n"); }

TEST(DeltaTest, Examples) {
  EXPECT_EQ(delta(s1(), {0, 1, 2}), 2);
  EXPECT_EQ(delta(s1(), {}), 0);
  EXPECT_EQ(delta(s2()), 2);
  EXPECT_EQ(delta(build_flower({3, 3})), 2);
  EXPECT_THROW(delta(s1(), {3}), Error);
}

TEST(DeltaTest, NegativeValuesAreKept) {
  FinStruct dense = parse_structure(
      "points 3\nrel R 3\nR 0 1 2\nR 0 2 1\nR 1 0 2\nR 1 2 0\nR 2 0 1\nR 2 1 0\n");
  EXPECT_EQ(delta(dense), -3);
  EXPECT_FALSE(in_k0(dense));
  DimReport d = dim_report(dense, {0});
  EXPECT_TRUE(d.outside_k0);
  EXPECT_EQ(d.value, -3);
}

TEST(SelfSufficientTest, Examples) {
  EXPECT_FALSE(is_self_sufficient(s2(), {0, 1}));
  EXPECT_TRUE(is_self_sufficient(s1(), {0}));
  EXPECT_TRUE(is_self_sufficient(s2(), {0, 1, 2, 3}));
  EXPECT_TRUE(is_self_sufficient(s1(), {}));
}

TEST(ClosureTest, Examples) {
  ClosureResult c = closure(s2(), {0, 1});
  EXPECT_EQ(c.closure, (PointSet{0, 1, 2, 3}));
  EXPECT_EQ(c.dimension, 2);
  ClosureResult same = closure(s1(), {0});
  EXPECT_EQ(same.closure, (PointSet{0}));
  EXPECT_EQ(same.dimension, 1);
  FinStruct flower = build_flower({3, 3});
  ClosureResult f = closure(flower, {0, 1});
  EXPECT_EQ(f.closure, all_points(8));
  EXPECT_EQ(f.dimension, 2);
}

TEST(ClosureTest, AgreesWithBothOracles) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    FinStruct s = testing::random_structure(rng, testing::RandomShape{});
    const auto delta_table = testing::delta_table(s);
    const auto ss = testing::self_sufficient_table(delta_table, s.size());
    for (int trial = 0; trial < 6; ++trial) {
      const Mask seed = static_cast<Mask>(testing::uniform(rng, Mask{1} << s.size()));
      const auto by_min = testing::closure_by_minimizers(delta_table, s.size(), seed);
      const Mask by_int = testing::closure_by_intersection(ss, s.size(), seed);
      const ClosureResult c = closure(s, testing::points_of(seed));
      EXPECT_EQ(testing::mask_of(c.closure), by_min.closure) << serialize(s);
      EXPECT_EQ(c.dimension, by_min.minimum);
      EXPECT_EQ(by_min.closure, by_int);
      EXPECT_EQ(is_self_sufficient(s, testing::points_of(seed)), static_cast<bool>(ss[seed]));
    }
  }
}

TEST(ClosureTest, ClosureOperatorLaws) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    FinStruct s = testing::random_structure(rng, testing::RandomShape{10, 12, 3, 2});
    const Mask full = (Mask{1} << s.size()) - 1;
    const Mask x = static_cast<Mask>(testing::uniform(rng, full + 1));
    const Mask y = x | static_cast<Mask>(testing::uniform(rng, full + 1));
    const PointSet cx = closure(s, testing::points_of(x)).closure;
    const PointSet cy = closure(s, testing::points_of(y)).closure;
    EXPECT_EQ(testing::mask_of(cx) & x, x);                      // extensive
    EXPECT_EQ(testing::mask_of(cx) & ~testing::mask_of(cy), 0u);  // monotone
    EXPECT_EQ(closure(s, cx).closure, cx);                         // idempotent
    EXPECT_TRUE(is_self_sufficient(s, cx));
  }
}

TEST(PredimensionLawsTest, SubmodularityMonotoneIntersectionTransitivity) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    FinStruct s = testing::random_structure(rng, testing::RandomShape{10, 14, 3, 2});
    const auto d = testing::delta_table(s);
    const auto ss = testing::self_sufficient_table(d, s.size());
    const Mask full = (Mask{1} << s.size()) - 1;
    for (int trial = 0; trial < 40; ++trial) {
      const Mask x = static_cast<Mask>(testing::uniform(rng, full + 1));
      const Mask y = static_cast<Mask>(testing::uniform(rng, full + 1));
      EXPECT_LE(delta(s, testing::points_of(x | y)) + delta(s, testing::points_of(x & y)),
                delta(s, testing::points_of(x)) + delta(s, testing::points_of(y)));
      if (ss[x]) {
        // A = x is self-sufficient, so x n y is self-sufficient in y
        Substructure sub = induced_substructure(s, testing::points_of(y));
        PointSet inside;
        for (size_t k = 0; k < sub.points.size(); ++k) {
          if ((x >> sub.points[k]) & 1) inside.push_back(static_cast<Point>(k));
        }
        EXPECT_TRUE(is_self_sufficient(sub.structure, inside));
      }
      const Mask a = x & y;
      if (ss[y] && a != y) {
        // A <= B (inside B) and B <= C imply A <= C
        Substructure b = induced_substructure(s, testing::points_of(y));
        PointSet a_in_b;
        for (size_t k = 0; k < b.points.size(); ++k) {
          if ((a >> b.points[k]) & 1) a_in_b.push_back(static_cast<Point>(k));
        }
        if (is_self_sufficient(b.structure, a_in_b)) {
          EXPECT_TRUE(is_self_sufficient(s, testing::points_of(a)));
        }
      }
    }
  }
}

TEST(DimTest, Examples) {
  EXPECT_EQ(dim(s1(), {0}), 1);
  FinStruct flower = build_flower({3, 3});
  EXPECT_EQ(dim(flower, {0, 1, 2}), 2);
  EXPECT_EQ(dim_rel(flower, {2}, {0, 1}), 0);
  EXPECT_EQ(dim(s2(), {}), 0);
}

TEST(DimTest, MonotoneAndNonNegativeInK0) {
  std::mt19937_64 rng(8);
  int in_k0_count = 0;
  for (int i = 0; i < 200; ++i) {
    FinStruct s = testing::random_structure(rng, testing::RandomShape{9, 6, 3, 1});
    if (!in_k0(s)) continue;
    ++in_k0_count;
    const Mask full = (Mask{1} << s.size()) - 1;
    const Mask x = static_cast<Mask>(testing::uniform(rng, full + 1));
    const Mask y = static_cast<Mask>(testing::uniform(rng, full + 1));
    EXPECT_LE(dim(s, testing::points_of(x)), dim(s, testing::points_of(x | y)));
    EXPECT_GE(dim_rel(s, testing::points_of(x), testing::points_of(y)), 0);
  }
  EXPECT_GT(in_k0_count, 50);
}

TEST(IndependenceTest, Examples) {
  FinStruct flower = build_flower({3, 3});
  EXPECT_TRUE(is_d_independent(flower, {{0}, {1}}, {}));
  EXPECT_FALSE(is_d_independent(flower, {{0}, {0}}, {}));
  EXPECT_FALSE(is_d_independent(s2(), {{2}, {3}}, {0, 1}));
  // all three hub points are not independent: two of them close off the third
  EXPECT_FALSE(is_d_independent(flower, {{0}, {1}, {2}}, {}));
}

TEST(InK0Test, Examples) {
  EXPECT_TRUE(in_k0(s1()));
  EXPECT_TRUE(in_k0(FinStruct(Signature({{"R", 3}}), 0)));
  FinStruct two = parse_structure("points 3\nrel R 3\nR 0 1 2\nR 1 0 2\nR 2 1 0\nR 0 2 1\n");
  EXPECT_FALSE(in_k0(two));
}

}  // namespace
}  // namespace amalgam
