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

#include "amalgam/canonical.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "amalgam/error.h"

namespace amalgam {
namespace {

using Coloring = std::vector<int>;

int count_cells(const Coloring& col) {
  if (col.empty()) return 0;
  return *std::max_element(col.begin(), col.end()) + 1;
}

// Replaces arbitrary integer keys by their dense rank.
template <typename Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  Coloring out(keys.size());
  int rank = -1;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[order[i - 1]] < keys[order[i]]) ++rank;
    out[order[i]] = rank;
  }
  return out;
}

class Canonizer {
 public:
  explicit Canonizer(const FinStruct& s) : s_(s) {}

  CanonicalForm run(const Coloring& initial) {
    Coloring start = refine(rank_keys(initial));
    std::vector<Point> prefix;
    search(start, prefix);
    CanonicalForm out;
    out.code = header(initial) ;
    out.code.insert(out.code.end(), best_code_.begin(), best_code_.end());
    out.labeling = best_labeling_;
    return out;
  }

 private:
  // The color values of the initial coloring listed in canonical order,
  // prefixed by size and signature arities.
  std::vector<int> header(const Coloring& initial) const {
    std::vector<int> h;
    h.push_back(s_.size());
    h.push_back(s_.signature().size());
    for (const auto& rel : s_.signature().relations()) h.push_back(rel.arity);
    std::vector<int> by_position(s_.size());
    for (Point p = 0; p < s_.size(); ++p) by_position[best_labeling_[p]] = initial[p];
    h.insert(h.end(), by_position.begin(), by_position.end());
    return h;
  }

  Coloring refine(Coloring col) const {
    const int n = s_.size();
    int cells = count_cells(col);
    while (true) {
      std::vector<std::vector<int>> keys(n);
      for (Point p = 0; p < n; ++p) {
        std::vector<std::vector<int>> descriptors;
        for (auto ref : s_.incident(p)) {
          const Tuple& t = s_.tuple(ref);
          std::vector<int> d;
          d.reserve(t.size() + 2);
          d.push_back(ref.relation);
          d.push_back(static_cast<int>(std::find(t.begin(), t.end(), p) - t.begin()));
          for (Point q : t) d.push_back(col[q]);
          descriptors.push_back(std::move(d));
        }
        std::sort(descriptors.begin(), descriptors.end());
        auto& key = keys[p];
        key.push_back(col[p]);
        for (const auto& d : descriptors) {
          key.push_back(static_cast<int>(d.size()));
          key.insert(key.end(), d.begin(), d.end());
        }
      }
      Coloring next = rank_keys(keys);
      int next_cells = count_cells(next);
      col = std::move(next);
      if (next_cells == cells) return col;
      cells = next_cells;
    }
  }

  std::vector<int> certificate(const Coloring& labeling) const {
    std::vector<int> code;
    for (int r = 0; r < s_.signature().size(); ++r) {
      std::vector<Tuple> mapped;
      mapped.reserve(s_.tuples(r).size());
      for (const Tuple& t : s_.tuples(r)) {
        Tuple m;
        for (Point p : t) m.push_back(labeling[p]);
        mapped.push_back(std::move(m));
      }
      std::sort(mapped.begin(), mapped.end());
      code.push_back(static_cast<int>(mapped.size()));
      for (const auto& m : mapped) code.insert(code.end(), m.begin(), m.end());
    }
    return code;
  }

  void record_leaf(const Coloring& labeling) {
    std::vector<int> code = certificate(labeling);
    if (!have_best_ || code < best_code_) {
      best_code_ = std::move(code);
      best_labeling_ = labeling;
      have_best_ = true;
      return;
    }
    if (code == best_code_) {
      // labeling^-1 o best is an automorphism.
      std::vector<Point> at_position(s_.size());
      for (Point p = 0; p < s_.size(); ++p) at_position[best_labeling_[p]] = p;
      std::vector<Point> gamma(s_.size());
      for (Point p = 0; p < s_.size(); ++p) gamma[p] = at_position[labeling[p]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbits of the group generated by the stored automorphisms that fix
  // every point of `prefix`.
  std::vector<int> stabilizer_orbits(const std::vector<Point>& prefix) const {
    std::vector<int> parent(s_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](Point p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Point p = 0; p < s_.size(); ++p) parent[find(p)] = find(gamma[p]);
    }
    for (Point p = 0; p < s_.size(); ++p) parent[p] = find(p);
    return parent;
  }

  void search(const Coloring& col, std::vector<Point>& prefix) {
    const int n = s_.size();
    int cells = count_cells(col);
    if (cells == n) {
      record_leaf(col);
      return;
    }
    // Target cell: the smallest non-singleton cell, lowest color first.
    std::vector<int> cell_size(cells, 0);
    for (int c : col) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }
    std::vector<Point> members;
    for (Point p = 0; p < n; ++p) {
      if (col[p] == target) members.push_back(p);
    }
    std::vector<Point> explored;
    for (Point v : members) {
      if (!explored.empty()) {
        std::vector<int> orbit = stabilizer_orbits(prefix);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](Point u) { return orbit[u] == orbit[v]; });
        if (equivalent) continue;
      }
      std::vector<std::pair<int, int>> keys(n);
      for (Point p = 0; p < n; ++p) keys[p] = {col[p], p == v ? 0 : 1};
      Coloring child = refine(rank_keys(keys));
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const FinStruct& s_;
  bool have_best_ = false;
  std::vector<int> best_code_;
  Coloring best_labeling_;
  std::vector<std::vector<Point>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const FinStruct& structure) {
  return canonical_form(structure, std::vector<int>(structure.size(), 0));
}

CanonicalForm canonical_form(const FinStruct& structure, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != structure.size()) {
    throw Error(ErrorCode::kInvalidArgument, "one color per point required");
  }
  if (structure.size() == 0) {
    CanonicalForm empty;
    empty.code = {0, structure.signature().size()};
    for (const auto& rel : structure.signature().relations()) empty.code.push_back(rel.arity);
    for (int r = 0; r < structure.signature().size(); ++r) empty.code.push_back(0);
    return empty;
  }
  return Canonizer(structure).run(colors);
}

bool are_isomorphic(const FinStruct& a, const FinStruct& b) {
  if (a.size() != b.size() || !(a.signature() == b.signature())) return false;
  if (a.tuple_count() != b.tuple_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

FinStruct permute(const FinStruct& structure, const std::vector<Point>& perm) {
  if (static_cast<int>(perm.size()) != structure.size()) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<std::vector<Tuple>> tuples(structure.signature().size());
  for (int r = 0; r < structure.signature().size(); ++r) {
    for (const Tuple& t : structure.tuples(r)) {
      Tuple m;
      for (Point p : t) m.push_back(perm.at(p));
      tuples[r].push_back(std::move(m));
    }
  }
  return FinStruct(structure.signature(), structure.size(), std::move(tuples));
}

}  // namespace amalgam
