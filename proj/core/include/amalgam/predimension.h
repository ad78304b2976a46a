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

#ifndef AMALGAM_PREDIMENSION_H_
#define AMALGAM_PREDIMENSION_H_

#include <vector>

#include "amalgam/structure.h"

namespace amalgam {

// delta(X) = |X| minus the number of tuples lying entirely inside X.
// May be negative; never clamped.
int delta(const FinStruct& ambient, const PointSet& points);
int delta(const FinStruct& ambient);

struct ClosureResult {
  PointSet closure;
  // delta(closure), which is the minimum of delta over supersets of the seed.
  int dimension = 0;
};

// Smallest self-sufficient superset of `seed`, computed as the maximal
// minimizer of delta over supersets of the seed. Minimization runs as a
// maximum-closure problem on a unit-capacity network: tuples earn one
// unit, non-seed points cost one unit, and the maximal minimum cut is read
// off residual reachability to the sink.
ClosureResult closure(const FinStruct& ambient, const PointSet& seed);

// A <= B: every strictly larger subset of B containing A has larger delta.
// Holds iff the closure of A is A itself.
bool is_self_sufficient(const FinStruct& ambient, const PointSet& points);

// The empty set is self-sufficient, i.e. delta > 0 on every non-empty subset.
bool in_k0(const FinStruct& ambient);

int dim(const FinStruct& ambient, const PointSet& points);
// dim(X u Y) - dim(Y).
int dim_rel(const FinStruct& ambient, const PointSet& points, const PointSet& over);

struct DimReport {
  int value = 0;
  // Set when the ambient structure is not in K_0; `value` is then the raw
  // delta of the closure and may be negative.
  bool outside_k0 = false;
};
DimReport dim_report(const FinStruct& ambient, const PointSet& points);

// Each listed set X_i has positive dimension over `over`, and adding the
// union of the other sets to the base does not lower it:
//   dim(X_i / over u others) == dim(X_i / over) > 0.
// For singletons this is independence of the points in the pregeometry.
bool is_d_independent(const FinStruct& ambient, const std::vector<PointSet>& sets,
                      const PointSet& over);

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);

}  // namespace amalgam

#endif  // AMALGAM_PREDIMENSION_H_
