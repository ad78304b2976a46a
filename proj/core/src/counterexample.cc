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

#include "amalgam/counterexample.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "amalgam/embedding.h"
#include "amalgam/error.h"
#include "amalgam/predimension.h"

namespace amalgam {
namespace {

BigInt power(int base, int exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

void check_params(const FlowerParams& params) {
  if (params.n < 3) throw Error(ErrorCode::kInvalidArgument, "flower arity n must be at least 3");
  if (params.base < 2) throw Error(ErrorCode::kInvalidArgument, "control base must be at least 2");
}

std::int64_t checked_points(const BigInt& points, std::int64_t max_points) {
  if (points > max_points) {
    throw Error(ErrorCode::kCapExceeded,
                "structure would have " + points.str() + " points, cap is " + std::to_string(max_points));
  }
  return points.convert_to<std::int64_t>();
}

HrConCheck make_check(std::string name, BigInt lhs, std::string op, BigInt rhs) {
  bool pass = op == "==" ? lhs == rhs : op == ">=" ? lhs >= rhs : lhs > rhs;
  return {std::move(name), std::move(lhs), std::move(op), std::move(rhs), pass};
}

}  // namespace

BigInt FlowerParams::petals() const { return power(base, n - 1) - (n + 1); }

Signature flower_signature(int n) {
  return Signature({{"R", 3}, {"S", n}, {"U", n + 1}});
}

FinStruct build_flower(const FlowerParams& params, std::int64_t max_points) {
  check_params(params);
  const BigInt r = params.petals();
  if (r < 0) throw Error(ErrorCode::kOutOfRange, "base too small for a flower: r = " + r.str());
  const auto size = checked_points(params.size(), max_points);
  StructBuilder builder(flower_signature(params.n), static_cast<int>(size));
  Tuple hub(params.n);
  for (int i = 0; i < params.n; ++i) hub[i] = i;
  builder.add(1, hub);
  for (Point u = params.n; u < size; ++u) {
    Tuple petal = hub;
    petal.push_back(u);
    builder.add(2, std::move(petal));
  }
  return builder.build();
}

bool flower_kf_parametric(const FlowerParams& params) {
  return flower_kf_parametric(params, params.petals());
}

bool flower_kf_parametric(const FlowerParams& params, const BigInt& petals) {
  check_params(params);
  if (petals < 0) return false;
  // A subset with j < n hub points carries no tuple, so delta = |X| and
  // base^|X| >= |X| + 1 holds for every base >= 2. With the whole hub and m
  // petals delta is n - 1 and the bound is tightest at m = petals.
  return power(params.base, params.n - 1) >= params.n + petals + 1;
}

FinStruct build_glued(const FlowerParams& params, std::int64_t max_points) {
  check_params(params);
  const BigInt r = params.petals();
  if (r < 0) throw Error(ErrorCode::kOutOfRange, "base too small for a flower: r = " + r.str());
  const int n = params.n;
  const auto size = checked_points(n + n * (1 + r), max_points);
  const auto petals = r.convert_to<std::int64_t>();
  StructBuilder builder(flower_signature(n), static_cast<int>(size));
  Point next = n;
  for (int k = 0; k < n; ++k) {
    Tuple hub(n);
    for (int i = 0; i < n; ++i) hub[i] = i;
    hub[k] = next++;
    builder.add(1, hub);
    for (std::int64_t i = 0; i < petals; ++i) {
      Tuple petal = hub;
      petal.push_back(next++);
      builder.add(2, std::move(petal));
    }
  }
  return builder.build();
}

HrConReport verify_hrcon(int n, int base) {
  FlowerParams params{n, base};
  check_params(params);
  HrConReport report{params, {}, false};
  auto& checks = report.checks;
  const GoodFReport good = good_f_report(ControlFunction::log(base));
  checks.push_back(make_check("good_f_free_amalgamation", base, ">=", 3));
  checks.back().pass = good.free_amalgamation;
  checks.push_back(make_check("good_f_dim_theorem", base, ">=", 8));
  checks.back().pass = good.dim_theorem;
  checks.push_back(make_check("good_f_slow_growth", base, ">=", 3));
  checks.back().pass = good.slow_growth;

  const BigInt r = params.petals();
  const BigInt top = power(base, n - 1);
  const BigInt flower_points = n + r;
  const BigInt flower_tuples = 1 + r;
  checks.push_back(make_check("petal_count", r, ">=", 0));
  checks.push_back(make_check("flower_delta", flower_points - flower_tuples, "==", n - 1));
  checks.push_back(make_check("flower_size", flower_points, "==", top - 1));
  checks.push_back(make_check("flower_kf_binding", top, ">=", n + r + 1));
  checks.back().pass = checks.back().pass && flower_kf_parametric(params);

  const BigInt glued_points = n + n * (1 + r);
  const BigInt glued_tuples = n * (1 + r);
  checks.push_back(make_check("glued_delta", glued_points - glued_tuples, "==", n));
  checks.push_back(make_check("glued_size", glued_points, "==", n * top - n * (n - 1)));
  // log_base(|B| + 1) > n = delta(B)
  checks.push_back(make_check("contradiction", glued_points + 1, ">", power(base, n)));

  report.overall = std::all_of(checks.begin(), checks.end(), [](const HrConCheck& c) { return c.pass; });
  return report;
}

std::string format_hrcon(const HrConReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << "CHECK " << c.name << ' ' << c.lhs << ' ' << c.op << ' ' << c.rhs << ' '
        << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  out << "OVERALL " << (report.overall ? "PASS" : "FAIL") << '\n';
  return out.str();
}

TechF build_tech_F(const TechFInput& in) {
  const FinStruct& c_part = in.c_part;
  const FinStruct& t_part = in.t_part;
  const auto r_index = c_part.signature().find("R");
  if (!r_index || c_part.signature()[*r_index].arity != 3) {
    throw Error(ErrorCode::kInvalidArgument, "signature needs a 3-ary relation R");
  }
  if (in.base_in_c.size() != in.base_in_t.size()) {
    throw Error(ErrorCode::kInvalidArgument, "common part is listed with different lengths");
  }
  const PointSet a_in_c = make_point_set(in.base_in_c, c_part.size());
  const PointSet a_in_t = make_point_set(in.base_in_t, t_part.size());
  if (a_in_c.size() != in.base_in_c.size() || a_in_t.size() != in.base_in_t.size()) {
    throw Error(ErrorCode::kInvalidArgument, "common part lists a point twice");
  }
  if (a_in_c.size() == static_cast<size_t>(c_part.size()) ||
      a_in_t.size() == static_cast<size_t>(t_part.size())) {
    throw Error(ErrorCode::kInvalidArgument, "C and T must be proper extensions of A");
  }
  if (!is_self_sufficient(c_part, a_in_c)) {
    throw Error(ErrorCode::kNotSelfSufficient, "A is not self-sufficient in C");
  }
  if (!is_self_sufficient(t_part, a_in_t)) {
    throw Error(ErrorCode::kNotSelfSufficient, "A is not self-sufficient in T");
  }
  if (in.c < 0 || in.c >= c_part.size() ||
      std::binary_search(a_in_c.begin(), a_in_c.end(), in.c)) {
    throw Error(ErrorCode::kInvalidArgument, "c must be a point of C outside A");
  }
  const PointSet t_set = make_point_set(in.t, t_part.size());
  if (t_set.size() != in.t.size()) throw Error(ErrorCode::kInvalidArgument, "t lists a point twice");
  std::vector<PointSet> singles;
  for (Point t : in.t) {
    if (std::binary_search(a_in_t.begin(), a_in_t.end(), t)) {
      throw Error(ErrorCode::kInvalidArgument, "t must lie outside A");
    }
    singles.push_back({t});
  }
  if (!singles.empty() && !is_d_independent(t_part, singles, a_in_t)) {
    throw Error(ErrorCode::kNotIndependent, "t is not d-independent over A in T");
  }

  Gluing gluing;
  for (size_t i = 0; i < in.base_in_c.size(); ++i) gluing.emplace_back(in.base_in_c[i], in.base_in_t[i]);
  Amalgam amalgam = free_amalgam(c_part, t_part, gluing);
  const int r = static_cast<int>(in.t.size());
  StructBuilder builder(amalgam.structure.signature(), amalgam.structure.size() + r);
  for (int rel = 0; rel < amalgam.structure.signature().size(); ++rel) {
    for (const Tuple& tuple : amalgam.structure.tuples(rel)) builder.add(rel, tuple);
  }
  TechF out;
  const Point c = amalgam.left_map[in.c];
  for (int i = 0; i < r; ++i) {
    const Point s = amalgam.structure.size() + i;
    const Point t = amalgam.right_map[in.t[i]];
    builder.add(*r_index, in.reversed ? Tuple{t, s, c} : Tuple{c, s, t});
    out.s.push_back(s);
  }
  out.structure = builder.build();
  out.c_map = amalgam.left_map;
  out.t_map = amalgam.right_map;
  for (Point p : a_in_c) out.base.push_back(amalgam.left_map[p]);
  std::sort(out.base.begin(), out.base.end());
  return out;
}

TechFReport verify_tech_F(const TechF& gadget, const ControlFunction& f, int cap) {
  const FinStruct& F = gadget.structure;
  TechFReport report;
  report.base_with_s_leq = is_self_sufficient(F, set_union(gadget.base, PointSet(gadget.s.begin(), gadget.s.end())));
  report.c_leq = is_self_sufficient(F, make_point_set(gadget.c_map, F.size()));
  report.t_leq = is_self_sufficient(F, make_point_set(gadget.t_map, F.size()));
  report.in_class = kf_member(F, f, cap).member;
  return report;
}

TechF build_step1_gadget(const FinStruct& b_structure, const PointSet& a_points, Point b, int r) {
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "the gadget needs r >= 1");
  const PointSet a = make_point_set(a_points, b_structure.size());
  if (b < 0 || b >= b_structure.size() || std::binary_search(a.begin(), a.end(), b)) {
    throw Error(ErrorCode::kInvalidArgument, "b must be a point of B outside A");
  }
  // The left side of a free amalgam keeps its labels, so A and b_1 stay put.
  FinStruct t_part = b_structure;
  std::vector<Point> t{b};
  Gluing gluing;
  for (Point p : a) gluing.emplace_back(p, p);
  for (int j = 1; j < r; ++j) {
    Amalgam amalgam = free_amalgam(t_part, b_structure, gluing);
    t.push_back(amalgam.right_map[b]);
    t_part = std::move(amalgam.structure);
  }
  TechFInput input{b_structure, t_part, a, a, b, t, true};
  return build_tech_F(input);
}

Cor23Report cor23_search(const FinStruct& ambient, const FlowerParams& params,
                         std::int64_t max_listed, std::int64_t budget) {
  check_params(params);
  const int n = params.n;
  const FinStruct flower = build_flower(params, ambient.size());
  Cor23Report report;
  report.target = n;
  EmbeddingSearchOptions options;
  options.distinct_prefix = n;
  std::set<std::vector<Point>> e;
  for (const Embedding& emb : find_leq_embeddings(flower, ambient, options)) {
    e.emplace(emb.map.begin(), emb.map.begin() + n);
  }
  report.e_size = static_cast<std::int64_t>(e.size());
  std::vector<std::set<std::vector<Point>>> projections(n);
  for (const auto& tuple : e) {
    for (int k = 0; k < n; ++k) {
      std::vector<Point> proj = tuple;
      proj.erase(proj.begin() + k);
      projections[k].insert(std::move(proj));
    }
  }
  std::int64_t steps = 0;
  for (const auto& prefix : projections[n - 1]) {
    for (Point p = 0; p < ambient.size(); ++p) {
      if (++steps > budget) {
        report.truncated = true;
        return report;
      }
      std::vector<Point> candidate = prefix;
      candidate.push_back(p);
      bool ok = true;
      for (int k = 0; k + 1 < n && ok; ++k) {
        std::vector<Point> proj = candidate;
        proj.erase(proj.begin() + k);
        ok = projections[k].count(proj) > 0;
      }
      if (!ok) continue;
      ++report.solution_count;
      if (e.count(candidate)) ++report.solutions_in_e;
      std::vector<Point> pts = candidate;
      report.max_dimension = std::max(report.max_dimension, dim(ambient, make_point_set(pts, ambient.size())));
      if (static_cast<std::int64_t>(report.solutions.size()) < max_listed) {
        report.solutions.push_back(std::move(candidate));
      }
    }
  }
  return report;
}

}  // namespace amalgam
