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

#ifndef AMALGAM_TESTS_SUPPORT_ORACLES_H_
#define AMALGAM_TESTS_SUPPORT_ORACLES_H_

// Exponential reference implementations. They read structures only through
// their tuple lists and share no code with the library algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "amalgam/structure.h"

namespace amalgam::testing {

using Mask = std::uint32_t;

// delta of every subset, indexed by bitmask. At most 20 points.
std::vector<int> delta_table(const FinStruct& s);

// self_sufficient[m]: every strict superset of m has larger delta.
std::vector<char> self_sufficient_table(const std::vector<int>& delta, int points);

// The largest superset of `seed` minimizing delta (the union of all
// minimizers), and the minimum itself.
struct OracleClosure {
  Mask closure = 0;
  int minimum = 0;
};
OracleClosure closure_by_minimizers(const std::vector<int>& delta, int points, Mask seed);

// Intersection of all self-sufficient supersets of `seed`.
Mask closure_by_intersection(const std::vector<char>& self_sufficient, int points, Mask seed);

// base^delta >= |X| + 1 for every X, with delta >= 0 throughout.
bool kf_log_oracle(const std::vector<int>& delta, int points, int base);

// Smallest violating subsets of the log_base condition, lex order of
// sorted point lists; empty when the structure is in K_f.
std::vector<PointSet> kf_log_minimal_violators(const std::vector<int>& delta, int points, int base);

// Isomorphism by trying every bijection.
bool brute_isomorphic(const FinStruct& a, const FinStruct& b);

// All maps that are induced embeddings with self-sufficient image, in
// lexicographic order of the map.
std::vector<std::vector<Point>> brute_leq_embeddings(const FinStruct& source, const FinStruct& target);

Mask mask_of(const PointSet& points);
PointSet points_of(Mask mask);

struct RandomShape {
  int max_points = 12;
  int max_tuples = 15;
  int max_arity = 3;
  int relations = 2;
};

// Random signature of `relations` symbols with arities in 1..max_arity
// (at least one of arity max_arity), and a random structure over it.
FinStruct random_structure(std::mt19937_64& rng, const RandomShape& shape);
FinStruct random_structure(std::mt19937_64& rng, const Signature& signature, int points, int tuples);

// Random structure over `signature` built by adding tuples one at a time and
// keeping only those that leave the structure in K_{log_base}.
FinStruct random_kf_structure(std::mt19937_64& rng, const Signature& signature, int points,
                              int attempts, int base);

// Adds `new_points` points after those of `base` and random tuples meeting
// them, keeping a tuple only if base stays self-sufficient and the result
// stays in K_{log_base}. Points 0..|base|-1 are the copy of base.
FinStruct random_leq_extension(std::mt19937_64& rng, const FinStruct& base, int new_points,
                               int attempts, int log_base);

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace amalgam::testing

#endif  // AMALGAM_TESTS_SUPPORT_ORACLES_H_
