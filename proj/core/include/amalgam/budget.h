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

#ifndef AMALGAM_BUDGET_H_
#define AMALGAM_BUDGET_H_

#include <cstdint>

namespace amalgam {

// Enumeration limits shared by the brute-force routines.
struct Budget {
  // Largest structure handled by exhaustive subset enumeration.
  int subset_points = 20;
  // Largest number of items any single enumeration may visit
  // (tuples of Z_N^n, extension candidates, materialized points).
  std::int64_t enumeration = 10'000'000;

  // Defaults, with `enumeration` replaced by $AMALGAM_BUDGET when that
  // variable holds a positive integer.
  static Budget from_environment();
};

}  // namespace amalgam

#endif  // AMALGAM_BUDGET_H_
