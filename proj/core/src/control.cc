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

#include "amalgam/control.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>

#include "amalgam/error.h"
#include "amalgam/predimension.h"

namespace amalgam {
namespace {

// Integer thresholds for f = log_b(x+1). With f'(x) = 1/(ln b (x+1)):
//   f' <= 1/(x+1)       iff ln b >= 1, i.e. b >= 3 since 2 < e < 3;
//   f' <= 1/(2(x+1))    iff ln b >= 2, i.e. b >= 8 since 7 < e^2 < 8;
//   f(3x) <= f(x) + 1   iff (3 - b) x <= b - 1 for all x >= 0, i.e. b >= 3.
constexpr int kFreeAmalgamationBase = 3;
constexpr int kDimTheoremBase = 8;
constexpr int kSlowGrowthBase = 3;

std::int64_t ceil_rational(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;  // truncates toward zero
  if (num > 0 && quotient * den != num) quotient += 1;
  return quotient.convert_to<std::int64_t>();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw Error(ErrorCode::kParse, "invalid rational '" + s + "'");
  }
}

}  // namespace

Rational RationalTable::at(std::int64_t size) const {
  if (entries.empty()) return Rational(0);
  if (size <= entries.front().first) return entries.front().second;
  if (size >= entries.back().first) return entries.back().second;
  auto upper = std::upper_bound(entries.begin(), entries.end(), size,
                                [](std::int64_t x, const auto& e) { return x < e.first; });
  auto lower = upper - 1;
  Rational span(upper->first - lower->first);
  Rational offset(size - lower->first);
  return lower->second + (upper->second - lower->second) * offset / span;
}

ControlFunction ControlFunction::log(int base) {
  if (base < 2) throw Error(ErrorCode::kInvalidArgument, "log base must be >= 2");
  return ControlFunction(LogBase{base});
}

ControlFunction ControlFunction::table(std::vector<std::pair<std::int64_t, Rational>> entries) {
  if (entries.empty()) throw Error(ErrorCode::kInvalidArgument, "empty control table");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first < 0 || entries[i].second < 0) {
      throw Error(ErrorCode::kInvalidArgument, "control table entries must be non-negative");
    }
    if (i > 0 && entries[i].first <= entries[i - 1].first) {
      throw Error(ErrorCode::kInvalidArgument, "control table sizes must strictly increase");
    }
    if (i > 0 && entries[i].second < entries[i - 1].second) {
      throw Error(ErrorCode::kInvalidArgument, "control table bounds must not decrease");
    }
  }
  return ControlFunction(RationalTable{std::move(entries)});
}

std::string ControlFunction::describe() const {
  if (is_log()) return "log:" + std::to_string(log_base());
  const auto& t = std::get<RationalTable>(variant_);
  std::ostringstream out;
  out << "table[";
  for (size_t i = 0; i < t.entries.size(); ++i) {
    if (i) out << ' ';
    out << t.entries[i].first << ':' << t.entries[i].second;
  }
  out << ']';
  return out.str();
}

ControlFunction parse_control_table(std::istream& in) {
  std::vector<std::pair<std::int64_t, Rational>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string size_text, bound_text, extra;
    if (!(fields >> size_text) || size_text.front() == '#') continue;
    if (!(fields >> bound_text) || (fields >> extra)) {
      throw Error(ErrorCode::kParse, "expected 'size bound'", line_no);
    }
    std::int64_t size = 0;
    try {
      size = std::stoll(size_text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "invalid size", line_no);
    }
    try {
      entries.emplace_back(size, parse_rational(bound_text));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, e.what(), line_no);
    }
  }
  return ControlFunction::table(std::move(entries));
}

ControlFunction parse_control(std::string_view spec) {
  if (spec.starts_with("log:")) {
    std::string rest(spec.substr(4));
    int base = 0;
    try {
      size_t used = 0;
      base = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "invalid log base '" + rest + "'");
    }
    return ControlFunction::log(base);
  }
  if (spec.starts_with("table:")) {
    std::string path(spec.substr(6));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, "cannot open control table " + path);
    return parse_control_table(in);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "control function must be log:<base> or table:<file>, got '" + std::string(spec) + "'");
}

bool holds_at(const ControlFunction& f, std::int64_t delta, const BigInt& size) {
  if (size < 0) throw Error(ErrorCode::kInvalidArgument, "negative size");
  if (f.is_log()) {
    if (delta < 0) return false;
    const BigInt target = size + 1;
    BigInt power = 1;
    for (std::int64_t i = 0; i < delta && power < target; ++i) power *= f.log_base();
    return power >= target;
  }
  const auto& table = std::get<RationalTable>(f.variant());
  std::int64_t clamped = size > table.entries.back().first
                             ? table.entries.back().first
                             : size.convert_to<std::int64_t>();
  return Rational(delta) >= table.at(clamped);
}

std::int64_t required_delta(const ControlFunction& f, std::int64_t size) {
  if (f.is_log()) {
    const BigInt target = BigInt(size) + 1;
    BigInt power = 1;
    std::int64_t d = 0;
    while (power < target) {
      power *= f.log_base();
      ++d;
    }
    return d;
  }
  return ceil_rational(std::get<RationalTable>(f.variant()).at(size));
}

KfResult kf_member(const FinStruct& structure, const ControlFunction& f, int cap) {
  const int n = structure.size();
  if (n > cap || n > 62) {
    throw Error(ErrorCode::kCapExceeded, "kf_member: " + std::to_string(n) +
                                             " points exceeds the enumeration cap of " +
                                             std::to_string(std::min(cap, 62)));
  }
  std::vector<std::int64_t> need(n + 1);
  for (int k = 0; k <= n; ++k) {
    need[k] = required_delta(f, k);
    if (k > 0) need[k] = std::max<std::int64_t>(need[k], 1);
  }

  // Gray-code sweep over all subsets, low-degree points on the fast bits,
  // tracking the smallest size at which some subset violates the bound.
  std::vector<Point> order = all_points(n);
  std::stable_sort(order.begin(), order.end(), [&](Point a, Point b) {
    return structure.incident(a).size() < structure.incident(b).size();
  });
  std::vector<int> bit_of(n);
  for (int i = 0; i < n; ++i) bit_of[order[i]] = i;
  std::vector<std::vector<std::uint64_t>> incident_masks(n);
  std::vector<std::uint64_t> original_masks;
  for (int r = 0; r < structure.signature().size(); ++r) {
    for (const Tuple& t : structure.tuples(r)) {
      std::uint64_t mask = 0;
      std::uint64_t original = 0;
      for (Point p : t) {
        mask |= std::uint64_t{1} << bit_of[p];
        original |= std::uint64_t{1} << p;
      }
      for (Point p : t) incident_masks[bit_of[p]].push_back(mask);
      original_masks.push_back(original);
    }
  }

  int smallest_violation = need[0] > 0 ? 0 : n + 1;
  std::uint64_t mask = 0;
  int size = 0;
  int inside = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < total && smallest_violation > 1; ++g) {
    int bit = std::countr_zero(g);
    std::uint64_t b = std::uint64_t{1} << bit;
    if (mask & b) {
      for (std::uint64_t t : incident_masks[bit]) inside -= ((mask & t) == t);
      mask ^= b;
      --size;
    } else {
      mask ^= b;
      ++size;
      for (std::uint64_t t : incident_masks[bit]) inside += ((mask & t) == t);
    }
    if (size < smallest_violation && size - inside < need[size]) smallest_violation = size;
  }
  if (smallest_violation > n) return {true, std::nullopt};

  // Lexicographically least violator of that size.
  const int k = smallest_violation;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int p : combo) m |= std::uint64_t{1} << p;
    int count = 0;
    for (std::uint64_t t : original_masks) count += ((m & t) == t);
    if (k - count < need[k]) return {false, PointSet(combo.begin(), combo.end())};
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  throw Error(ErrorCode::kInvalidArgument, "kf_member: violator vanished");
}

GoodFReport good_f_report(const ControlFunction& f) {
  GoodFReport report;
  if (f.is_log()) {
    const int b = f.log_base();
    report.free_amalgamation = b >= kFreeAmalgamationBase;
    report.dim_theorem = b >= kDimTheoremBase;
    report.slow_growth = b >= kSlowGrowthBase;
    return report;
  }
  // Tables: slopes of the interpolant stand in for the right derivative.
  report.authoritative = false;
  const auto& entries = std::get<RationalTable>(f.variant()).entries;
  bool slopes_ok = true;
  bool half_slopes_ok = true;
  std::optional<Rational> previous_slope;
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    Rational slope = (entries[i + 1].second - entries[i].second) /
                     Rational(entries[i + 1].first - entries[i].first);
    Rational limit(1, entries[i].first + 1);
    if (slope > limit) slopes_ok = false;
    if (slope * 2 > limit) half_slopes_ok = false;
    if (previous_slope && slope > *previous_slope) {
      slopes_ok = false;
      half_slopes_ok = false;
    }
    previous_slope = slope;
  }
  report.free_amalgamation = slopes_ok;
  report.dim_theorem = slopes_ok && half_slopes_ok;
  const auto& table = std::get<RationalTable>(f.variant());
  const std::int64_t last = entries.back().first;
  bool slow = true;
  for (std::int64_t x = 0; x <= last && x <= 100000; ++x) {
    if (table.at(3 * x) > table.at(x) + 1) {
      slow = false;
      break;
    }
  }
  report.slow_growth = slow;
  return report;
}

FreeAmalgamationCheck check_free_amalgamation_instance(const FinStruct& left,
                                                      const FinStruct& right,
                                                      const Gluing& gluing,
                                                      const ControlFunction& f, int cap) {
  PointSet base_left;
  PointSet base_right;
  for (auto [l, r] : gluing) {
    base_left.push_back(l);
    base_right.push_back(r);
  }
  base_left = make_point_set(base_left, left.size());
  base_right = make_point_set(base_right, right.size());
  if (!is_self_sufficient(left, base_left)) {
    throw Error(ErrorCode::kNotSelfSufficient, "common part is not self-sufficient in the left factor");
  }
  if (!is_self_sufficient(right, base_right)) {
    throw Error(ErrorCode::kNotSelfSufficient, "common part is not self-sufficient in the right factor");
  }
  if (!kf_member(left, f, cap).member) {
    throw Error(ErrorCode::kNotInClass, "left factor is not in K_f");
  }
  if (!kf_member(right, f, cap).member) {
    throw Error(ErrorCode::kNotInClass, "right factor is not in K_f");
  }
  FreeAmalgamationCheck check;
  check.amalgam = free_amalgam(left, right, gluing);
  const FinStruct& s = check.amalgam.structure;
  check.left_self_sufficient = is_self_sufficient(s, make_point_set(check.amalgam.left_map, s.size()));
  check.right_self_sufficient = is_self_sufficient(s, make_point_set(check.amalgam.right_map, s.size()));
  check.in_class = kf_member(s, f, cap).member;
  return check;
}

}  // namespace amalgam
