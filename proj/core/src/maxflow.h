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

#ifndef AMALGAM_SRC_MAXFLOW_H_
#define AMALGAM_SRC_MAXFLOW_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace amalgam::internal {

// Dinic's algorithm on an integer-capacity network. Edges are stored in
// pairs so that edge i and i ^ 1 are mutual reverses.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int nodes) : adjacency_(nodes), level_(nodes), cursor_(nodes) {}

  int add_node() {
    adjacency_.emplace_back();
    level_.push_back(0);
    cursor_.push_back(0);
    return static_cast<int>(adjacency_.size()) - 1;
  }

  void add_edge(int from, int to, std::int64_t capacity) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  std::int64_t solve(int source, int sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (std::int64_t pushed = augment(source, sink, kInfinity)) total += pushed;
    }
    return total;
  }

  // Nodes that can still reach `sink` in the residual network. Their
  // complement is the source side of the maximal minimum cut.
  std::vector<char> reaches_sink(int sink) const {
    std::vector<char> mark(adjacency_.size(), 0);
    std::vector<int> stack{sink};
    mark[sink] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : adjacency_[v]) {
        // Edge e leaves v; its reverse e ^ 1 enters v from edges_[e].to.
        int u = edges_[e].to;
        if (!mark[u] && edges_[e ^ 1].capacity > 0) {
          mark[u] = 1;
          stack.push_back(u);
        }
      }
    }
    return mark;
  }

 private:
  struct Edge {
    int to;
    std::int64_t capacity;  // residual
  };

  bool build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int e : adjacency_[v]) {
        const Edge& edge = edges_[e];
        if (edge.capacity > 0 && level_[edge.to] < 0) {
          level_[edge.to] = level_[v] + 1;
          queue.push(edge.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t augment(int v, int sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (int& i = cursor_[v]; i < static_cast<int>(adjacency_[v].size()); ++i) {
      int e = adjacency_[v][i];
      Edge& edge = edges_[e];
      if (edge.capacity <= 0 || level_[edge.to] != level_[v] + 1) continue;
      std::int64_t pushed = augment(edge.to, sink, std::min(limit, edge.capacity));
      if (pushed > 0) {
        edge.capacity -= pushed;
        edges_[e ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace amalgam::internal

#endif  // AMALGAM_SRC_MAXFLOW_H_
