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

#ifndef AMALGAM_SZEMEREDI_H_
#define AMALGAM_SZEMEREDI_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "amalgam/budget.h"
#include "amalgam/control.h"

namespace amalgam {

struct CyclicInstance {
  int modulus = 2;        // N
  int length = 3;         // n
  std::vector<int> set;   // A, sorted, inside 0..N-1

  bool modulus_is_prime() const;
  bool contains(std::int64_t x) const;
};

// Validates and normalizes (sorts, removes duplicates).
CyclicInstance make_instance(int modulus, int length, std::vector<int> set);

// Tuples of Z_N^n are stored as base-N codes with the first coordinate most
// significant, so code order is lexicographic order.
using TupleCode = std::int64_t;
std::int64_t ipow(std::int64_t base, int exponent);
TupleCode encode(const std::vector<int>& tuple, int modulus);
std::vector<int> decode(TupleCode code, int modulus, int length);

// Code of the projection that drops coordinate `omit`.
TupleCode project(TupleCode code, int modulus, int length, int omit);

// E = {(x_1, ..., x_{n-1}, sum x_i) : sum i*x_i in A}, sorted.
std::vector<TupleCode> build_E(const CyclicInstance& inst, const Budget& budget = {});

struct HypothesesReport {
  Rational a;                 // nu^J(pi_J(E))
  int l = 0;                  // largest fibre of any (n-1)-projection on E
  int k_exact = 1;            // least k that works for every F in condition (c)
  Rational max_sampled_ratio; // max |pi_J F| / |pi_I F| over samples
  bool sampled_c_holds = true;  // every sample satisfied (c) with k_exact
  int samples = 0;
  std::uint64_t seed = 0;
  bool modulus_prime = false;
  bool holds() const { return a > 0 && l > 0 && sampled_c_holds; }
};

// J drops the last coordinate. Works for any explicit E, not only build_E.
HypothesesReport verify_main_hypotheses(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                                        int samples = 100, std::uint64_t seed = 1);

// Calls `visit` on every tuple whose (n-1)-projections all lie in the
// projections of E, in lexicographic order. Each candidate checked costs one
// unit of budget.enumeration; returns false if the budget ran out.
bool for_each_solution(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                       const std::function<void(TupleCode)>& visit, const Budget& budget = {});

struct SolveResult {
  std::int64_t count = 0;
  std::vector<TupleCode> solutions;  // the first max_stored
  bool truncated = false;
};

SolveResult solve_amalgamation(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                               std::int64_t max_stored = 1'000'000, const Budget& budget = {});

struct Progression {
  int a = 0;
  int d = 0;
  bool nondegenerate = false;
  bool valid = false;  // a + i*d in A for i = 0..n-1
  std::vector<int> terms;
};

Progression extract_progression(const CyclicInstance& inst, const std::vector<int>& b);

struct Lemma26Report {
  int samples = 0;
  std::int64_t checks = 0;
  std::int64_t violations = 0;
  int k = 1;
};

// Inequalities (1)-(3) on seeded random F within E and random C, B in the
// I-projection space, with k = k_exact.
Lemma26Report lemma26_checks(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                             int samples, std::uint64_t seed);

struct FubiniResult {
  Rational total;     // nu^V(B)
  Rational iterated;  // integral over V\J of nu^J of the slices
  bool holds() const { return total == iterated; }
};

// `inner` is a bitmask of the coordinates integrated first.
FubiniResult counting_fubini(int modulus, int length, const std::vector<TupleCode>& b,
                             std::uint32_t inner);

}  // namespace amalgam

#endif  // AMALGAM_SZEMEREDI_H_
