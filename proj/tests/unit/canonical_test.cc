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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "amalgam/canonical.h"
#include "amalgam/counterexample.h"
#include "amalgam/structure.h"
#include "support/oracles.h"

namespace amalgam {
namespace {

std::vector<Point> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Point> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[testing::uniform(rng, i + 1)]);
  return perm;
}

TEST(CanonicalTest, RelabelingInvariance) {
  FinStruct s1 = parse_structure("points 3\nrel R 3\nR 0 1 2\n");
  FinStruct moved = permute(s1, {2, 0, 1});
  EXPECT_EQ(canonical_form(s1), canonical_form(moved));
  FinStruct bare = parse_structure("points 3\nrel R 3\n");
  EXPECT_NE(canonical_form(s1), canonical_form(bare));
}

TEST(CanonicalTest, FlowerPetalsAreInterchangeable) {
  FinStruct flower = build_flower({3, 3});
  FinStruct moved = permute(flower, {0, 1, 2, 7, 6, 5, 3, 4});
  EXPECT_EQ(canonical_form(flower), canonical_form(moved));
  // moving a hub point into a petal slot changes the tuples, not the type
  FinStruct shuffled = permute(flower, {4, 1, 2, 7, 0, 5, 3, 6});
  EXPECT_EQ(canonical_form(flower), canonical_form(shuffled));
}

TEST(CanonicalTest, LabelingMapsOntoCode) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    FinStruct s = testing::random_structure(rng, testing::RandomShape{9, 10, 3, 2});
    CanonicalForm form = canonical_form(s);
    ASSERT_EQ(static_cast<int>(form.labeling.size()), s.size());
    EXPECT_EQ(canonical_form(permute(s, form.labeling)), form);
  }
}

TEST(CanonicalTest, InvariantUnderRandomPermutationsUpToTwelvePoints) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    FinStruct s = testing::random_structure(rng, testing::RandomShape{12, 15, 3, 2});
    FinStruct t = permute(s, random_permutation(rng, s.size()));
    EXPECT_EQ(canonical_form(s), canonical_form(t)) << serialize(s);
  }
}

TEST(CanonicalTest, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(9);
  int isomorphic_pairs = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(testing::uniform(rng, 7));
    Signature sig({{"R", 3}, {"E", 2}});
    FinStruct a = testing::random_structure(rng, sig, n, 1 + static_cast<int>(testing::uniform(rng, 6)));
    FinStruct b = permute(a, random_permutation(rng, n));
    if (testing::uniform(rng, 2) == 0) {
      // perturb: move one tuple to a random other tuple of the same relation
      auto tuples = b.all_tuples();
      const int r = static_cast<int>(testing::uniform(rng, 2));
      if (!tuples[r].empty() && n >= sig[r].arity) {
        FinStruct extra = testing::random_structure(rng, Signature({sig[r]}), n, 1);
        if (extra.tuple_count() == 1 && !b.contains(r, extra.tuples(0)[0])) {
          tuples[r].back() = extra.tuples(0)[0];
          b = FinStruct(sig, n, tuples);
        }
      }
    }
    const bool brute = testing::brute_isomorphic(a, b);
    isomorphic_pairs += brute;
    EXPECT_EQ(are_isomorphic(a, b), brute) << serialize(a) << "--\n" << serialize(b);
  }
  EXPECT_GT(isomorphic_pairs, 100);
  EXPECT_LT(isomorphic_pairs, 400);
}

TEST(CanonicalTest, ColorsAreRespected) {
  FinStruct s = parse_structure("points 3\nrel R 3\nR 0 1 2\n");
  // R(0,1,2): coloring point 0 versus point 2 distinguishes positions
  EXPECT_NE(canonical_form(s, {1, 0, 0}), canonical_form(s, {0, 0, 1}));
  FinStruct free3 = parse_structure("points 3\nrel R 3\n");
  EXPECT_EQ(canonical_form(free3, {1, 0, 0}), canonical_form(free3, {0, 0, 1}));
}

TEST(CanonicalTest, HighlySymmetricStructures) {
  // disjoint triangles of a binary relation: many automorphisms
  StructBuilder b(Signature({{"E", 2}}), 12);
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < 3; ++i) {
      b.add("E", {3 * c + i, 3 * c + (i + 1) % 3});
    }
  }
  FinStruct triangles = b.build();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(canonical_form(triangles), canonical_form(permute(triangles, random_permutation(rng, 12))));
  }
  // a 12-cycle has the same degree profile but is not isomorphic
  StructBuilder c(Signature({{"E", 2}}), 12);
  for (int i = 0; i < 12; ++i) c.add("E", {i, (i + 1) % 12});
  EXPECT_NE(canonical_form(triangles), canonical_form(c.build()));
}

}  // namespace
}  // namespace amalgam
