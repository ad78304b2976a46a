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

#include "amalgam/embedding.h"

#include <algorithm>
#include <map>

#include "amalgam/predimension.h"

namespace amalgam {
namespace {

// Per point: number of tuples in which it sits at (relation, position).
std::vector<std::map<std::pair<int, int>, int>> incidence_profile(const FinStruct& s) {
  std::vector<std::map<std::pair<int, int>, int>> profile(s.size());
  for (Point p = 0; p < s.size(); ++p) {
    for (auto ref : s.incident(p)) {
      const Tuple& t = s.tuple(ref);
      int pos = static_cast<int>(std::find(t.begin(), t.end(), p) - t.begin());
      ++profile[p][{ref.relation, pos}];
    }
  }
  return profile;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FinStruct& source, const FinStruct& target,
                  const EmbeddingSearchOptions& options)
      : source_(source),
        target_(target),
        options_(options),
        source_profile_(incidence_profile(source)),
        target_profile_(incidence_profile(target)),
        map_(source.size(), -1),
        inverse_(target.size(), -1) {}

  std::vector<Embedding> run() {
    if (source_.size() > target_.size()) return {};
    if (!(source_.signature() == target_.signature())) return {};
    extend(0);
    return std::move(results_);
  }

 private:
  static constexpr int kContinue = 1 << 30;

  bool profile_fits(Point p, Point q) const {
    const auto& need = source_profile_[p];
    const auto& have = target_profile_[q];
    for (const auto& [key, count] : need) {
      auto it = have.find(key);
      if (it == have.end() || it->second < count) return false;
    }
    return true;
  }

  bool consistent(Point p, Point q) const {
    for (auto ref : source_.incident(p)) {
      const Tuple& t = source_.tuple(ref);
      Tuple image;
      for (Point x : t) {
        if (map_[x] < 0) break;
        image.push_back(map_[x]);
      }
      if (image.size() == t.size() && !target_.contains(ref.relation, image)) return false;
    }
    for (auto ref : target_.incident(q)) {
      const Tuple& t = target_.tuple(ref);
      Tuple pre;
      for (Point y : t) {
        if (inverse_[y] < 0) break;
        pre.push_back(inverse_[y]);
      }
      if (pre.size() == t.size() && !source_.contains(ref.relation, pre)) return false;
    }
    return true;
  }

  // Returns kContinue, or the depth to unwind to after a prefix is served.
  int extend(int depth) {
    if (done_) return -1;
    if (depth == source_.size()) {
      PointSet image = make_point_set(map_, target_.size());
      if (!is_self_sufficient(target_, image)) return kContinue;
      results_.push_back({map_});
      if (options_.max_results > 0 &&
          static_cast<std::int64_t>(results_.size()) >= options_.max_results) {
        done_ = true;
        return -1;
      }
      return options_.distinct_prefix > 0 ? options_.distinct_prefix : kContinue;
    }
    const Point p = depth;
    for (Point q = 0; q < target_.size(); ++q) {
      if (inverse_[q] >= 0 || !profile_fits(p, q)) continue;
      map_[p] = q;
      inverse_[q] = p;
      int signal = consistent(p, q) ? extend(depth + 1) : kContinue;
      map_[p] = -1;
      inverse_[q] = -1;
      if (signal != kContinue && depth >= signal) return signal;
    }
    return kContinue;
  }

  const FinStruct& source_;
  const FinStruct& target_;
  EmbeddingSearchOptions options_;
  std::vector<std::map<std::pair<int, int>, int>> source_profile_;
  std::vector<std::map<std::pair<int, int>, int>> target_profile_;
  std::vector<Point> map_;
  std::vector<Point> inverse_;
  std::vector<Embedding> results_;
  bool done_ = false;
};

}  // namespace

std::vector<Embedding> find_leq_embeddings(const FinStruct& source, const FinStruct& target,
                                           const EmbeddingSearchOptions& options) {
  return EmbeddingSearch(source, target, options).run();
}

}  // namespace amalgam
