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

#include "amalgam/szemeredi.h"

#include <algorithm>
#include <map>
#include <random>

#include "amalgam/error.h"

namespace amalgam {
namespace {

std::int64_t mod(std::int64_t x, int n) {
  x %= n;
  return x < 0 ? x + n : x;
}

std::int64_t distinct_count(std::vector<TupleCode> codes) {
  if (codes.empty()) return 0;
  const TupleCode top = *std::max_element(codes.begin(), codes.end());
  if (top < (TupleCode{1} << 26)) {
    std::vector<char> seen(top + 1, 0);
    std::int64_t count = 0;
    for (TupleCode c : codes) {
      count += !seen[c];
      seen[c] = 1;
    }
    return count;
  }
  std::sort(codes.begin(), codes.end());
  return std::unique(codes.begin(), codes.end()) - codes.begin();
}

std::vector<TupleCode> projections(const std::vector<TupleCode>& codes, int modulus, int length,
                                   int omit) {
  std::vector<TupleCode> out;
  out.reserve(codes.size());
  for (TupleCode c : codes) out.push_back(project(c, modulus, length, omit));
  return out;
}

std::int64_t largest_fibre(std::vector<TupleCode> projected) {
  std::sort(projected.begin(), projected.end());
  std::int64_t best = 0;
  for (size_t i = 0; i < projected.size();) {
    size_t j = i;
    while (j < projected.size() && projected[j] == projected[i]) ++j;
    best = std::max<std::int64_t>(best, j - i);
    i = j;
  }
  return best;
}

std::vector<TupleCode> random_subset(const std::vector<TupleCode>& e, std::mt19937_64& rng) {
  std::vector<TupleCode> f;
  std::uint64_t bits = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i % 64 == 0) bits = rng();
    if (bits & 1) f.push_back(e[i]);
    bits >>= 1;
  }
  return f;
}

void check_codes(const CyclicInstance& inst, const std::vector<TupleCode>& e) {
  const std::int64_t limit = ipow(inst.modulus, inst.length);
  for (TupleCode c : e) {
    if (c < 0 || c >= limit) throw Error(ErrorCode::kOutOfRange, "tuple code outside Z_N^n");
  }
}

}  // namespace

bool CyclicInstance::modulus_is_prime() const {
  if (modulus < 2) return false;
  for (int d = 2; d * d <= modulus; ++d) {
    if (modulus % d == 0) return false;
  }
  return true;
}

bool CyclicInstance::contains(std::int64_t x) const {
  return std::binary_search(set.begin(), set.end(), static_cast<int>(mod(x, modulus)));
}

CyclicInstance make_instance(int modulus, int length, std::vector<int> set) {
  if (modulus < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2");
  if (length < 3) throw Error(ErrorCode::kInvalidArgument, "tuple length must be at least 3");
  for (int x : set) {
    if (x < 0 || x >= modulus) {
      throw Error(ErrorCode::kOutOfRange, "set element " + std::to_string(x) + " outside Z_N");
    }
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return {modulus, length, std::move(set)};
}

std::int64_t ipow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > (std::int64_t{1} << 62) / base) throw Error(ErrorCode::kCapExceeded, "power overflows");
    out *= base;
  }
  return out;
}

TupleCode encode(const std::vector<int>& tuple, int modulus) {
  TupleCode code = 0;
  for (int x : tuple) {
    if (x < 0 || x >= modulus) throw Error(ErrorCode::kOutOfRange, "coordinate outside Z_N");
    code = code * modulus + x;
  }
  return code;
}

std::vector<int> decode(TupleCode code, int modulus, int length) {
  std::vector<int> tuple(length);
  for (int i = length - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(code % modulus);
    code /= modulus;
  }
  return tuple;
}

TupleCode project(TupleCode code, int modulus, int length, int omit) {
  const std::int64_t low_weight = ipow(modulus, length - 1 - omit);
  return code / (low_weight * modulus) * low_weight + code % low_weight;
}

std::vector<TupleCode> build_E(const CyclicInstance& inst, const Budget& budget) {
  const int n = inst.length;
  const std::int64_t prefixes = ipow(inst.modulus, n - 1);
  if (prefixes > budget.enumeration) {
    throw Error(ErrorCode::kCapExceeded, "N^(n-1) = " + std::to_string(prefixes) +
                                             " exceeds the enumeration budget");
  }
  std::vector<TupleCode> e;
  std::vector<int> x(n - 1, 0);
  for (std::int64_t p = 0; p < prefixes; ++p) {
    std::int64_t weighted = 0, sum = 0;
    for (int i = 0; i < n - 1; ++i) {
      weighted += static_cast<std::int64_t>(i + 1) * x[i];
      sum += x[i];
    }
    if (inst.contains(weighted)) e.push_back(p * inst.modulus + mod(sum, inst.modulus));
    for (int i = n - 2; i >= 0; --i) {
      if (++x[i] < inst.modulus) break;
      x[i] = 0;
    }
  }
  return e;
}

HypothesesReport verify_main_hypotheses(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                                        int samples, std::uint64_t seed) {
  check_codes(inst, e);
  const int n = inst.length, big_n = inst.modulus;
  const int j = n - 1;
  HypothesesReport report;
  report.samples = samples;
  report.seed = seed;
  report.modulus_prime = inst.modulus_is_prime();
  report.a = Rational(distinct_count(projections(e, big_n, n, j)), ipow(big_n, n - 1));
  std::int64_t k = 1;
  for (int omit = 0; omit < n; ++omit) {
    const std::int64_t fibre = largest_fibre(projections(e, big_n, n, omit));
    report.l = static_cast<int>(std::max<std::int64_t>(report.l, fibre));
    if (omit != j) k = std::max(k, fibre);
  }
  report.k_exact = static_cast<int>(k);

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto f = random_subset(e, rng);
    const std::int64_t pj = distinct_count(projections(f, big_n, n, j));
    for (int omit = 0; omit < j; ++omit) {
      const std::int64_t pi = distinct_count(projections(f, big_n, n, omit));
      if (pj > k * pi) report.sampled_c_holds = false;
      if (pi > 0) report.max_sampled_ratio = std::max(report.max_sampled_ratio, Rational(pj, pi));
    }
  }
  return report;
}

bool for_each_solution(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                       const std::function<void(TupleCode)>& visit, const Budget& budget) {
  check_codes(inst, e);
  const int n = inst.length, big_n = inst.modulus;
  const std::int64_t space = ipow(big_n, n - 1);
  std::vector<std::vector<char>> member(n, std::vector<char>(space, 0));
  for (TupleCode c : e) {
    for (int omit = 0; omit < n; ++omit) member[omit][project(c, big_n, n, omit)] = 1;
  }
  std::int64_t used = 0;
  std::vector<TupleCode> dropped(n - 1);
  for (TupleCode prefix = 0; prefix < space; ++prefix) {
    if (!member[n - 1][prefix]) continue;
    if (used + big_n > budget.enumeration) return false;
    used += big_n;
    // prefix with its k-th coordinate removed, for each k < n-1
    for (int k = 0; k < n - 1; ++k) dropped[k] = project(prefix, big_n, n - 1, k);
    for (int x = 0; x < big_n; ++x) {
      bool ok = true;
      for (int k = 0; k < n - 1 && ok; ++k) ok = member[k][dropped[k] * big_n + x];
      if (ok) visit(prefix * big_n + x);
    }
  }
  return true;
}

SolveResult solve_amalgamation(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                               std::int64_t max_stored, const Budget& budget) {
  SolveResult result;
  result.truncated = !for_each_solution(
      inst, e,
      [&](TupleCode c) {
        ++result.count;
        if (static_cast<std::int64_t>(result.solutions.size()) < max_stored) result.solutions.push_back(c);
      },
      budget);
  return result;
}

Progression extract_progression(const CyclicInstance& inst, const std::vector<int>& b) {
  const int n = inst.length;
  if (static_cast<int>(b.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "tuple length does not match the instance");
  }
  std::int64_t a = 0, sum = 0;
  for (int i = 0; i < n - 1; ++i) {
    a += static_cast<std::int64_t>(i + 1) * b[i];
    sum += b[i];
  }
  Progression p;
  p.a = static_cast<int>(mod(a, inst.modulus));
  p.d = static_cast<int>(mod(b[n - 1] - sum, inst.modulus));
  p.nondegenerate = p.d != 0;
  p.valid = true;
  for (int i = 0; i < n; ++i) {
    const int term = static_cast<int>(mod(p.a + static_cast<std::int64_t>(i) * p.d, inst.modulus));
    p.terms.push_back(term);
    p.valid = p.valid && inst.contains(term);
  }
  return p;
}

Lemma26Report lemma26_checks(const CyclicInstance& inst, const std::vector<TupleCode>& e,
                             int samples, std::uint64_t seed) {
  check_codes(inst, e);
  const int n = inst.length, big_n = inst.modulus;
  const int j = n - 1;
  const std::int64_t space = ipow(big_n, n - 1);
  const Rational unit(1, space);
  Lemma26Report report;
  report.samples = samples;
  report.k = verify_main_hypotheses(inst, e, 0, seed).k_exact;
  const Rational k(report.k);
  std::mt19937_64 rng(seed);
  auto note = [&](bool ok) {
    ++report.checks;
    if (!ok) ++report.violations;
  };
  for (int s = 0; s < samples; ++s) {
    const auto f = random_subset(e, rng);
    const int omit = static_cast<int>(rng() % j);
    std::vector<char> in_pi_f(space, 0);
    std::vector<TupleCode> pi_f;
    for (TupleCode t : f) {
      const TupleCode p = project(t, big_n, n, omit);
      if (!in_pi_f[p]) pi_f.push_back(p);
      in_pi_f[p] = 1;
    }
    // Only the parts of C and B inside pi_I(F) affect the inequalities.
    const std::vector<TupleCode> c_set = random_subset(pi_f, rng);
    const std::vector<TupleCode> b_set = random_subset(pi_f, rng);
    std::vector<char> in_c(space, 0), in_b(space, 0);
    for (TupleCode p : c_set) in_c[p] = 1;
    for (TupleCode p : b_set) in_b[p] = 1;
    std::vector<TupleCode> outside_c, inside_b;
    for (TupleCode t : f) {
      const TupleCode p = project(t, big_n, n, omit);
      if (!in_c[p]) outside_c.push_back(t);
      if (in_b[p]) inside_b.push_back(t);
    }
    const Rational nu_j_f = unit * distinct_count(projections(f, big_n, n, j));
    const Rational nu_i_f = unit * static_cast<std::int64_t>(pi_f.size());
    note(nu_j_f <= k * nu_i_f);
    note(unit * distinct_count(projections(outside_c, big_n, n, j)) >=
         nu_j_f - k * unit * static_cast<std::int64_t>(c_set.size()));
    note(unit * distinct_count(projections(inside_b, big_n, n, j)) >=
         nu_j_f - k * unit * static_cast<std::int64_t>(pi_f.size() - b_set.size()));
  }
  return report;
}

FubiniResult counting_fubini(int modulus, int length, const std::vector<TupleCode>& b,
                             std::uint32_t inner) {
  int inner_size = 0;
  for (int i = 0; i < length; ++i) inner_size += (inner >> i) & 1;
  std::map<std::vector<int>, std::int64_t> slices;
  for (TupleCode code : b) {
    const auto tuple = decode(code, modulus, length);
    std::vector<int> outer;
    for (int i = 0; i < length; ++i) {
      if (!((inner >> i) & 1)) outer.push_back(tuple[i]);
    }
    ++slices[outer];
  }
  FubiniResult result;
  result.total = Rational(distinct_count(b), ipow(modulus, length));
  const Rational outer_point(1, ipow(modulus, length - inner_size));
  for (const auto& [outer, count] : slices) {
    result.iterated += Rational(count, ipow(modulus, inner_size)) * outer_point;
  }
  return result;
}

}  // namespace amalgam
