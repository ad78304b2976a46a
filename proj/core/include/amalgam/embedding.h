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

#ifndef AMALGAM_EMBEDDING_H_
#define AMALGAM_EMBEDDING_H_

#include <cstdint>
#include <vector>

#include "amalgam/structure.h"

namespace amalgam {

// map[p] is the image of source point p.
struct Embedding {
  std::vector<Point> map;

  bool operator==(const Embedding&) const = default;
  bool operator<(const Embedding& other) const { return map < other.map; }
};

struct EmbeddingSearchOptions {
  // When positive, at most one embedding is reported for each assignment
  // of the first `distinct_prefix` source points.
  int distinct_prefix = 0;
  // Stop after this many results (0 = no limit).
  std::int64_t max_results = 0;
};

// All embeddings of `source` into `target` whose image is self-sufficient
// in `target`, in lexicographic order of the point map.
std::vector<Embedding> find_leq_embeddings(const FinStruct& source, const FinStruct& target,
                                           const EmbeddingSearchOptions& options = {});

}  // namespace amalgam

#endif  // AMALGAM_EMBEDDING_H_
