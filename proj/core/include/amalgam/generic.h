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

#ifndef AMALGAM_GENERIC_H_
#define AMALGAM_GENERIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/budget.h"
#include "amalgam/control.h"
#include "amalgam/structure.h"

namespace amalgam {

// Finite approximation of the generic structure M_f: a chain of K_f
// structures, each self-sufficient in the next.
struct GenericChain {
  ControlFunction f;
  std::vector<FinStruct> stages;
  // links[k][p] is the image in stage k+1 of point p of stage k.
  std::vector<std::vector<Point>> links;

  const FinStruct& tail() const { return stages.back(); }

  // A chain whose only stage is the empty structure.
  static GenericChain start(ControlFunction f, Signature signature);
};

// Realizes one instance of the extension property: `base` <= tail, and
// `extension` is B with ident[i] the point of B matched to base[i]. The new
// tail is the free amalgam of the tail and B over the base. When f is not
// certified good the new tail is checked against K_f explicitly.
GenericChain extend_chain(const GenericChain& chain, const PointSet& base,
                          const FinStruct& extension, const std::vector<Point>& ident,
                          int cap = 20);

struct ExtensionCandidate {
  PointSet base;  // in the tail
  // Points 0..|base|-1 stand for base[0..], new points follow.
  FinStruct extension;
};

struct ExtensionList {
  std::vector<ExtensionCandidate> candidates;
  bool truncated = false;
};

// Pairs (A, B) with A <= tail, |A| <= max_base, A <= B, B in K_f and
// 1..max_new new points, one per isomorphism type of B over A.
ExtensionList enumerate_extensions(const GenericChain& chain, int max_base, int max_new,
                                   const Budget& budget = {});

struct BuildOptions {
  int rounds = 1;
  int max_base = 1;
  int max_new = 1;
  int max_points = 20;
  // 0 keeps the enumeration order; otherwise candidates are shuffled by a
  // generator seeded with this value.
  std::uint64_t seed = 0;
};

// Round-robin scheduler over enumerate_extensions.
GenericChain build_generic(const ControlFunction& f, const Signature& signature,
                           const BuildOptions& options, const Budget& budget = {});

// Closure of X in the tail.
PointSet acl(const GenericChain& chain, const PointSet& points);

// True iff an isomorphism acl(xs) -> acl(ys) carries xs to ys coordinatewise.
bool same_type(const GenericChain& chain, const std::vector<Point>& xs,
               const std::vector<Point>& ys);

// Directory with stage_0000.struct, ... and chain.manifest.
void save_chain(const GenericChain& chain, const std::string& directory);
GenericChain load_chain(const std::string& directory);

}  // namespace amalgam

#endif  // AMALGAM_GENERIC_H_
