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

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "amalgam/canonical.h"
#include "amalgam/counterexample.h"
#include "amalgam/error.h"
#include "amalgam/generic.h"
#include "amalgam/predimension.h"
#include "amalgam/structure.h"
#include "support/oracles.h"

namespace amalgam {
namespace {

const Signature kTriple({{"R", 3}});

GenericChain single_point_chain(const ControlFunction& f) {
  GenericChain chain = GenericChain::start(f, kTriple);
  return extend_chain(chain, {}, FinStruct(kTriple, 1), {});
}

void expect_chain_invariants(const GenericChain& chain) {
  for (size_t k = 0; k < chain.stages.size(); ++k) {
    EXPECT_TRUE(kf_member(chain.stages[k], chain.f).member);
    if (k + 1 < chain.stages.size()) {
      EXPECT_TRUE(is_embedding(chain.stages[k], chain.stages[k + 1], chain.links[k]));
      EXPECT_TRUE(is_self_sufficient(chain.stages[k + 1],
                                     make_point_set(chain.links[k], chain.stages[k + 1].size())));
    }
  }
}

TEST(ExtendChainTest, FirstPoint) {
  GenericChain chain = single_point_chain(ControlFunction::log(8));
  EXPECT_EQ(chain.stages.size(), 2u);
  EXPECT_EQ(chain.tail().size(), 1);
  EXPECT_EQ(chain.tail().tuple_count(), 0);
}

TEST(ExtendChainTest, FlowerOverEmptyBase) {
  GenericChain chain = GenericChain::start(ControlFunction::log(3), flower_signature(3));
  chain = extend_chain(chain, {}, build_flower({3, 3}), {});
  EXPECT_EQ(chain.tail(), build_flower({3, 3}));
  EXPECT_TRUE(is_self_sufficient(chain.tail(), all_points(8)));
  EXPECT_EQ(acl(chain, {0, 1}), all_points(8));
  expect_chain_invariants(chain);
}

TEST(ExtendChainTest, ExtensionByBaseItselfChangesNothing) {
  GenericChain chain = GenericChain::start(ControlFunction::log(8), kTriple);
  FinStruct s1 = parse_structure("points 3\nrel R 3\nR 0 1 2\n");
  chain = extend_chain(chain, {}, s1, {});
  GenericChain same = extend_chain(chain, {0, 1, 2}, s1, {0, 1, 2});
  EXPECT_TRUE(are_isomorphic(same.tail(), chain.tail()));
}

TEST(ExtendChainTest, PreconditionsChecked) {
  GenericChain chain = GenericChain::start(ControlFunction::log(8), kTriple);
  chain = extend_chain(chain, {}, parse_structure("points 4\nrel R 3\nR 0 1 2\nR 0 1 3\n"), {});
  FinStruct b = parse_structure("points 3\nrel R 3\n");
  try {
    extend_chain(chain, {0, 1}, b, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSelfSufficient);
  }
  // delta 1 on 8 points, with every non-empty subset still positive
  FinStruct crowded = parse_structure(
      "points 8\nrel R 3\nR 0 1 2\nR 1 2 3\nR 2 3 4\nR 3 4 5\nR 4 5 6\nR 5 6 7\nR 0 2 4\n");
  try {
    extend_chain(chain, {}, crowded, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInClass);
  }
}

TEST(ExtendChainTest, UncertifiedControlIsCheckedExplicitly) {
  // Two triples fit the table one at a time, but their amalgam over a point
  // has 5 points and delta 3 < f(5) = 4.
  const ControlFunction steep = ControlFunction::table({{0, Rational(0)}, {3, Rational(2)}, {5, Rational(4)}});
  ASSERT_FALSE(good_f_report(steep).free_amalgamation);
  const FinStruct s1 = parse_structure("points 3\nrel R 3\nR 0 1 2\n");
  GenericChain chain = GenericChain::start(steep, kTriple);
  chain = extend_chain(chain, {}, s1, {});
  try {
    extend_chain(chain, {0}, s1, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInClass);
  }
}

TEST(EnumerateExtensionsTest, SinglePointTail) {
  GenericChain chain = single_point_chain(ControlFunction::log(8));
  ExtensionList list = enumerate_extensions(chain, 1, 1);
  EXPECT_FALSE(list.truncated);
  ASSERT_EQ(list.candidates.size(), 2u);
  for (const auto& c : list.candidates) {
    EXPECT_EQ(c.extension.size(), static_cast<int>(c.base.size()) + 1);
    EXPECT_EQ(c.extension.tuple_count(), 0);
  }
  EXPECT_TRUE(enumerate_extensions(chain, 1, 0).candidates.empty());
}

TEST(EnumerateExtensionsTest, OverATriple) {
  GenericChain chain = GenericChain::start(ControlFunction::log(8), kTriple);
  chain = extend_chain(chain, {}, parse_structure("points 3\nrel R 3\nR 0 1 2\n"), {});
  ExtensionList list = enumerate_extensions(chain, 3, 1);
  FinStruct with_013 = parse_structure("points 4\nrel R 3\nR 0 1 2\nR 0 1 3\n");
  FinStruct free_point = parse_structure("points 4\nrel R 3\nR 0 1 2\n");
  bool saw_tuple = false, saw_free = false;
  for (const auto& c : list.candidates) {
    EXPECT_TRUE(is_self_sufficient(chain.tail(), c.base));
    EXPECT_TRUE(is_self_sufficient(c.extension, all_points(static_cast<int>(c.base.size()))));
    EXPECT_TRUE(kf_member(c.extension, chain.f).member);
    if (c.base == PointSet{0, 1, 2}) {
      saw_tuple = saw_tuple || c.extension == with_013;
      saw_free = saw_free || c.extension == free_point;
    }
  }
  // R(0,1,3) over the triple keeps delta at 2, so the triple is not <= it
  EXPECT_FALSE(saw_tuple);
  EXPECT_TRUE(saw_free);
}

TEST(EnumerateExtensionsTest, NoTwoCandidatesIsomorphicOverTheBase) {
  GenericChain chain = GenericChain::start(ControlFunction::log(3), Signature({{"E", 2}}));
  chain = extend_chain(chain, {}, parse_structure("points 2\nrel E 2\n"), {});
  ExtensionList list = enumerate_extensions(chain, 2, 2);
  for (size_t i = 0; i < list.candidates.size(); ++i) {
    for (size_t j = i + 1; j < list.candidates.size(); ++j) {
      const auto& a = list.candidates[i];
      const auto& b = list.candidates[j];
      if (a.base != b.base || a.extension.size() != b.extension.size()) continue;
      std::vector<int> colors(a.extension.size(), 0);
      for (size_t k = 0; k < a.base.size(); ++k) colors[k] = static_cast<int>(k) + 1;
      EXPECT_NE(canonical_form(a.extension, colors), canonical_form(b.extension, colors));
    }
  }
  EXPECT_GT(list.candidates.size(), 4u);
}

TEST(EnumerateExtensionsTest, BudgetTruncates) {
  GenericChain chain = single_point_chain(ControlFunction::log(8));
  Budget tiny;
  tiny.enumeration = 1;
  EXPECT_TRUE(enumerate_extensions(chain, 1, 3, tiny).truncated);
}

TEST(BuildGenericTest, InvariantsAndDeterminism) {
  BuildOptions options;
  options.rounds = 3;
  options.max_base = 2;
  options.max_new = 2;
  options.max_points = 12;
  options.seed = 17;
  const GenericChain a = build_generic(ControlFunction::log(8), kTriple, options);
  const GenericChain b = build_generic(ControlFunction::log(8), kTriple, options);
  expect_chain_invariants(a);
  EXPECT_GT(a.tail().size(), 3);
  EXPECT_LE(a.tail().size(), 12);
  ASSERT_EQ(a.stages.size(), b.stages.size());
  for (size_t k = 0; k < a.stages.size(); ++k) EXPECT_EQ(a.stages[k], b.stages[k]);
}

TEST(AclTest, StableAcrossStages) {
  BuildOptions options;
  options.rounds = 2;
  options.max_base = 2;
  options.max_new = 2;
  options.max_points = 10;
  const GenericChain chain = build_generic(ControlFunction::log(8), kTriple, options);
  std::mt19937_64 rng(4);
  for (size_t k = 0; k + 1 < chain.stages.size(); ++k) {
    const FinStruct& stage = chain.stages[k];
    if (stage.size() == 0) continue;
    for (int trial = 0; trial < 10; ++trial) {
      PointSet x;
      for (Point p = 0; p < stage.size(); ++p) {
        if (testing::uniform(rng, 3) == 0) x.push_back(p);
      }
      const PointSet here = closure(stage, x).closure;
      std::vector<Point> image;
      for (Point p : x) image.push_back(chain.links[k][p]);
      const PointSet there = closure(chain.stages[k + 1], make_point_set(image, chain.stages[k + 1].size())).closure;
      std::vector<Point> mapped;
      for (Point p : here) mapped.push_back(chain.links[k][p]);
      EXPECT_EQ(make_point_set(mapped, chain.stages[k + 1].size()), there);
    }
  }
}

TEST(SameTypeTest, Examples) {
  GenericChain chain = GenericChain::start(ControlFunction::log(3), flower_signature(3));
  chain = extend_chain(chain, {}, build_flower({3, 3}), {});
  chain = extend_chain(chain, {}, FinStruct(flower_signature(3), 2), {});
  EXPECT_TRUE(same_type(chain, {3}, {3}));
  EXPECT_TRUE(same_type(chain, {8}, {9}));   // two free points
  EXPECT_TRUE(same_type(chain, {3}, {8}));   // a lone petal is closed
  EXPECT_FALSE(same_type(chain, {0, 3}, {8, 9}));  // hub and petal close off the flower
  EXPECT_TRUE(same_type(chain, {3}, {4}));   // two petals
  EXPECT_TRUE(same_type(chain, {8, 9}, {9, 8}));
  EXPECT_FALSE(same_type(chain, {0, 1}, {1, 0}));  // hub order is visible in S
  EXPECT_THROW(same_type(chain, {0}, {0, 1}), Error);
}

TEST(SameTypeTest, IsAnEquivalenceOnPairs) {
  GenericChain chain = GenericChain::start(ControlFunction::log(3), flower_signature(3));
  chain = extend_chain(chain, {}, build_flower({3, 3}), {});
  chain = extend_chain(chain, {}, FinStruct(flower_signature(3), 1), {});
  const int n = chain.tail().size();
  std::vector<std::vector<Point>> pairs;
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) pairs.push_back({a, b});
  }
  for (size_t i = 0; i < pairs.size(); i += 7) {
    for (size_t j = 0; j < pairs.size(); j += 5) {
      const bool ij = same_type(chain, pairs[i], pairs[j]);
      EXPECT_EQ(ij, same_type(chain, pairs[j], pairs[i]));
      if (!ij) continue;
      for (size_t k = 0; k < pairs.size(); k += 11) {
        if (same_type(chain, pairs[j], pairs[k])) EXPECT_TRUE(same_type(chain, pairs[i], pairs[k]));
      }
    }
  }
}

TEST(ChainFilesTest, SaveLoadRoundTrip) {
  BuildOptions options;
  options.rounds = 2;
  options.max_base = 1;
  options.max_new = 2;
  options.max_points = 8;
  options.seed = 3;
  const GenericChain chain = build_generic(ControlFunction::log(8), kTriple, options);
  const auto dir = std::filesystem::temp_directory_path() / "amalgam_chain_test";
  std::filesystem::remove_all(dir);
  save_chain(chain, dir.string());
  EXPECT_TRUE(std::filesystem::exists(dir / "stage_0000.struct"));
  const GenericChain back = load_chain(dir.string());
  EXPECT_EQ(back.f.describe(), chain.f.describe());
  EXPECT_EQ(back.stages, chain.stages);
  EXPECT_EQ(back.links, chain.links);

  GenericChain table_chain = GenericChain::start(ControlFunction::table({{0, Rational(0)}, {6, Rational(5, 2)}}), kTriple);
  table_chain = extend_chain(table_chain, {}, FinStruct(kTriple, 2), {});
  std::filesystem::remove_all(dir);
  save_chain(table_chain, dir.string());
  EXPECT_EQ(load_chain(dir.string()).f.describe(), table_chain.f.describe());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace amalgam
