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

#ifndef AMALGAM_COUNTEREXAMPLE_H_
#define AMALGAM_COUNTEREXAMPLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam/control.h"
#include "amalgam/structure.h"

namespace amalgam {

// The flower: hub points a_0..a_{n-1} in one S-tuple, and petals u_i each
// in one U-tuple U(a_0, ..., a_{n-1}, u_i). With r = base^(n-1) - (n+1)
// petals the flower sits exactly on the log_base growth bound.
struct FlowerParams {
  int n = 3;
  int base = 2;

  BigInt petals() const;
  BigInt size() const { return n + petals(); }
};

// Signature R:3, S:n, U:n+1 used by flowers and glued structures.
Signature flower_signature(int n);

// Points 0..n-1 are the hub, n.. are petals. Throws kOutOfRange when
// r < 0 and kCapExceeded above max_points.
FinStruct build_flower(const FlowerParams& params, std::int64_t max_points = 1 << 20);

// Membership of the flower (or of a flower with `petals` petals) in
// K_{log_base}, decided by case analysis instead of subset enumeration.
bool flower_kf_parametric(const FlowerParams& params);
bool flower_kf_parametric(const FlowerParams& params, const BigInt& petals);

// n hub points b_0..b_{n-1}; for each k a flower copy whose hub is the
// b_i with i != k plus one fresh point in position k, with fresh petals.
FinStruct build_glued(const FlowerParams& params, std::int64_t max_points = 1 << 20);

struct HrConCheck {
  std::string name;
  BigInt lhs;
  std::string op;  // one of ==, >=, >
  BigInt rhs;
  bool pass = false;
};

struct HrConReport {
  FlowerParams params;
  std::vector<HrConCheck> checks;
  bool overall = false;
};

// Closed-form check that the glued structure escapes K_{log_base} although
// every flower copy lies in it. Nothing is materialized.
HrConReport verify_hrcon(int n, int base);

// Text form: one CHECK line per check, then OVERALL.
std::string format_hrcon(const HrConReport& report);

struct TechFInput {
  FinStruct c_part;
  FinStruct t_part;
  // base_in_c[i] and base_in_t[i] are the same point of the common part A.
  std::vector<Point> base_in_c;
  std::vector<Point> base_in_t;
  Point c = 0;               // in C \ A
  std::vector<Point> t;      // in T \ A, d-independent over A
  // When set the new tuples are R(t_i, s_i, c) rather than R(c, s_i, t_i).
  bool reversed = false;
};

struct TechF {
  FinStruct structure;
  std::vector<Point> c_map;  // C -> F
  std::vector<Point> t_map;  // T -> F
  PointSet base;             // A in F
  std::vector<Point> s;      // the fresh points s_1..s_r
};

// Free amalgam of C and T over A, plus points s_i with R(c, s_i, t_i).
TechF build_tech_F(const TechFInput& input);

struct TechFReport {
  bool base_with_s_leq = false;  // A s_1..s_r <= F
  bool c_leq = false;
  bool t_leq = false;
  bool in_class = false;
  bool all() const { return base_with_s_leq && c_leq && t_leq && in_class; }
};

TechFReport verify_tech_F(const TechF& gadget, const ControlFunction& f, int cap = 20);

// First step of the non-orthogonality argument: given A <= B and a point b
// of B \ A, T is the free amalgam of r copies of B over A, C another copy,
// and the new tuples are R(b_j, s_j, b_0).
TechF build_step1_gadget(const FinStruct& b_structure, const PointSet& a_points, Point b, int r);

struct Cor23Report {
  std::int64_t e_size = 0;
  std::int64_t solution_count = 0;
  std::vector<std::vector<Point>> solutions;  // first `max_listed`, lex order
  std::int64_t solutions_in_e = 0;
  int max_dimension = 0;  // max d of a solution's point set
  int target = 0;         // n
  bool truncated = false;
};

// E = hub tuples of <=-embedded copies of the flower in `ambient`; counts
// tuples whose every (n-1)-projection lies in the matching projection of E.
Cor23Report cor23_search(const FinStruct& ambient, const FlowerParams& params,
                         std::int64_t max_listed = 100, std::int64_t budget = 10'000'000);

}  // namespace amalgam

#endif  // AMALGAM_COUNTEREXAMPLE_H_
