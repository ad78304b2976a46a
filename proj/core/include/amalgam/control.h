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

#ifndef AMALGAM_CONTROL_H_
#define AMALGAM_CONTROL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "amalgam/structure.h"

namespace amalgam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// f(x) = log_base(x + 1).
struct LogBase {
  int base = 2;
};

// Piecewise-linear interpolation of (size, bound) points, constant before
// the first and after the last entry. Sizes strictly increase; bounds are
// non-negative and non-decreasing.
struct RationalTable {
  std::vector<std::pair<std::int64_t, Rational>> entries;

  Rational at(std::int64_t size) const;
};

// The growth bound of an amalgamation class K_f.
class ControlFunction {
 public:
  static ControlFunction log(int base);
  static ControlFunction table(std::vector<std::pair<std::int64_t, Rational>> entries);

  const std::variant<LogBase, RationalTable>& variant() const { return variant_; }
  bool is_log() const { return std::holds_alternative<LogBase>(variant_); }
  int log_base() const { return std::get<LogBase>(variant_).base; }
  std::string describe() const;

 private:
  explicit ControlFunction(std::variant<LogBase, RationalTable> v) : variant_(std::move(v)) {}
  std::variant<LogBase, RationalTable> variant_;
};

// "log:<base>" or "table:<file>".
ControlFunction parse_control(std::string_view spec);
// Lines of "size num/den" (or "size num"); '#' comments allowed.
ControlFunction parse_control_table(std::istream& in);

// delta >= f(size), decided exactly: base^delta >= size + 1 over big
// naturals for LogBase, rational comparison for tables.
bool holds_at(const ControlFunction& f, std::int64_t delta, const BigInt& size);

// Least integer delta with holds_at(f, delta, size).
std::int64_t required_delta(const ControlFunction& f, std::int64_t size);

struct KfResult {
  bool member = false;
  // Smallest violating subset (lexicographically least among those) when
  // membership fails.
  std::optional<PointSet> witness;
};

// Exhaustive K_f test: delta(X) >= f(|X|) for every subset X, and
// delta(X) > 0 for non-empty X. Throws kCapExceeded above `cap` points.
KfResult kf_member(const FinStruct& structure, const ControlFunction& f, int cap = 20);

struct GoodFReport {
  bool free_amalgamation = false;  // f'(x) <= 1/(x+1), non-increasing
  bool dim_theorem = false;        // f'(x) <= 1/(2(x+1))
  bool slow_growth = false;        // f(3x) <= f(x) + 1
  // False for tables, whose flags come from sampled necessary conditions.
  bool authoritative = true;
};

GoodFReport good_f_report(const ControlFunction& f);

struct FreeAmalgamationCheck {
  Amalgam amalgam;
  bool left_self_sufficient = false;
  bool right_self_sufficient = false;
  bool in_class = false;
  bool holds() const { return left_self_sufficient && right_self_sufficient && in_class; }
};

// Builds left *_{A0} right where A0 is given by `gluing` (pairs of left and
// right points) and checks both images are self-sufficient in the amalgam
// and the amalgam lies in K_f. Throws kNotSelfSufficient when A0 is not
// self-sufficient in a factor, kNotInClass when a factor is outside K_f,
// and kNotIsomorphism for an invalid gluing.
FreeAmalgamationCheck check_free_amalgamation_instance(const FinStruct& left,
                                                      const FinStruct& right,
                                                      const Gluing& gluing,
                                                      const ControlFunction& f, int cap = 20);

}  // namespace amalgam

#endif  // AMALGAM_CONTROL_H_
