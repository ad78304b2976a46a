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

#ifndef AMALGAM_CANONICAL_H_
#define AMALGAM_CANONICAL_H_

#include <vector>

#include "amalgam/structure.h"

namespace amalgam {

// Canonical representation of a (vertex-colored) structure. Two structures
// over the same signature get equal `code`s iff they are isomorphic by a
// color-preserving map.
struct CanonicalForm {
  std::vector<int> code;
  // labeling[p] is the canonical position of point p.
  std::vector<int> labeling;

  bool operator==(const CanonicalForm& other) const { return code == other.code; }
  bool operator<(const CanonicalForm& other) const { return code < other.code; }
};

// Color refinement with individualization; the certificate is the
// lexicographically least relabeled encoding over the search tree, with
// branches pruned by automorphisms discovered along the way.
CanonicalForm canonical_form(const FinStruct& structure);
CanonicalForm canonical_form(const FinStruct& structure, const std::vector<int>& colors);

bool are_isomorphic(const FinStruct& a, const FinStruct& b);

// Relabels `structure` by a permutation: point p becomes perm[p].
FinStruct permute(const FinStruct& structure, const std::vector<Point>& perm);

}  // namespace amalgam

#endif  // AMALGAM_CANONICAL_H_
