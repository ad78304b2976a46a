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

#include "amalgam/predimension.h"

#include <algorithm>
#include <iterator>

#include "amalgam/error.h"
#include "maxflow.h"

namespace amalgam {
namespace {

std::vector<char> membership(const FinStruct& ambient, const PointSet& points) {
  std::vector<char> in(ambient.size(), 0);
  for (Point p : points) {
    if (p < 0 || p >= ambient.size()) {
      throw Error(ErrorCode::kOutOfRange, "point " + std::to_string(p) + " outside 0.." +
                                              std::to_string(ambient.size() - 1));
    }
    in[p] = 1;
  }
  return in;
}

}  // namespace

int delta(const FinStruct& ambient, const PointSet& points) {
  std::vector<char> in = membership(ambient, points);
  int count = static_cast<int>(std::count(in.begin(), in.end(), 1));
  for (int r = 0; r < ambient.signature().size(); ++r) {
    for (const Tuple& t : ambient.tuples(r)) {
      if (std::all_of(t.begin(), t.end(), [&](Point p) { return in[p] != 0; })) --count;
    }
  }
  return count;
}

int delta(const FinStruct& ambient) { return ambient.size() - ambient.tuple_count(); }

ClosureResult closure(const FinStruct& ambient, const PointSet& seed) {
  std::vector<char> in_seed = membership(ambient, seed);
  const int n = ambient.size();

  // Node layout: 0 = source, 1 = sink, then one node per free point, then
  // one node per tuple leaving the seed.
  std::vector<int> point_node(n, -1);
  int nodes = 2;
  for (Point p = 0; p < n; ++p) {
    if (!in_seed[p]) point_node[p] = nodes++;
  }
  internal::MaxFlow flow(nodes);
  constexpr int kSource = 0;
  constexpr int kSink = 1;
  for (Point p = 0; p < n; ++p) {
    if (point_node[p] >= 0) flow.add_edge(point_node[p], kSink, 1);
  }
  for (int r = 0; r < ambient.signature().size(); ++r) {
    for (const Tuple& t : ambient.tuples(r)) {
      bool inside = std::all_of(t.begin(), t.end(), [&](Point p) { return in_seed[p] != 0; });
      if (inside) continue;
      int node = flow.add_node();
      flow.add_edge(kSource, node, 1);
      for (Point p : t) {
        if (point_node[p] >= 0) flow.add_edge(node, point_node[p], internal::MaxFlow::kInfinity);
      }
    }
  }
  flow.solve(kSource, kSink);
  std::vector<char> to_sink = flow.reaches_sink(kSink);

  ClosureResult result;
  for (Point p = 0; p < n; ++p) {
    if (in_seed[p] || !to_sink[point_node[p]]) result.closure.push_back(p);
  }
  result.dimension = delta(ambient, result.closure);
  return result;
}

bool is_self_sufficient(const FinStruct& ambient, const PointSet& points) {
  PointSet normalized = make_point_set(points, ambient.size());
  return closure(ambient, normalized).closure == normalized;
}

bool in_k0(const FinStruct& ambient) { return closure(ambient, {}).closure.empty(); }

int dim(const FinStruct& ambient, const PointSet& points) {
  return closure(ambient, points).dimension;
}

int dim_rel(const FinStruct& ambient, const PointSet& points, const PointSet& over) {
  PointSet x = make_point_set(points, ambient.size());
  PointSet y = make_point_set(over, ambient.size());
  return dim(ambient, set_union(x, y)) - dim(ambient, y);
}

DimReport dim_report(const FinStruct& ambient, const PointSet& points) {
  return {dim(ambient, points), !in_k0(ambient)};
}

bool is_d_independent(const FinStruct& ambient, const std::vector<PointSet>& sets,
                      const PointSet& over) {
  PointSet base = make_point_set(over, ambient.size());
  std::vector<PointSet> normalized;
  for (const auto& s : sets) normalized.push_back(make_point_set(s, ambient.size()));
  for (size_t i = 0; i < normalized.size(); ++i) {
    PointSet others;
    for (size_t j = 0; j < normalized.size(); ++j) {
      if (j != i) others = set_union(others, normalized[j]);
    }
    int alone = dim_rel(ambient, normalized[i], base);
    if (alone <= 0) return false;
    if (dim_rel(ambient, normalized[i], set_union(base, others)) != alone) return false;
  }
  return true;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace amalgam
