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

#include "amalgam/generic.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "amalgam/canonical.h"
#include "amalgam/error.h"
#include "amalgam/predimension.h"

namespace amalgam {
namespace {

std::string stage_name(size_t index) {
  std::ostringstream name;
  name << "stage_" << std::setw(4) << std::setfill('0') << index << ".struct";
  return name.str();
}

// All tuples over `points` points with distinct entries that use at least
// one point >= first_new.
std::vector<std::pair<int, Tuple>> fresh_tuples(const Signature& sig, int points, int first_new) {
  std::vector<std::pair<int, Tuple>> out;
  for (int r = 0; r < sig.size(); ++r) {
    const int arity = sig[r].arity;
    if (arity > points) continue;
    Tuple t(arity, 0);
    std::vector<char> used(points, 0);
    // Odometer over injective tuples.
    std::function<void(int)> rec = [&](int i) {
      if (i == arity) {
        if (std::any_of(t.begin(), t.end(), [&](Point p) { return p >= first_new; })) {
          out.emplace_back(r, t);
        }
        return;
      }
      for (Point p = 0; p < points; ++p) {
        if (used[p]) continue;
        used[p] = 1;
        t[i] = p;
        rec(i + 1);
        used[p] = 0;
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace

GenericChain GenericChain::start(ControlFunction f, Signature signature) {
  GenericChain chain{std::move(f), {}, {}};
  chain.stages.emplace_back(std::move(signature), 0);
  return chain;
}

GenericChain extend_chain(const GenericChain& chain, const PointSet& base,
                          const FinStruct& extension, const std::vector<Point>& ident,
                          int cap) {
  const FinStruct& tail = chain.tail();
  PointSet a = make_point_set(base, tail.size());
  if (a.size() != base.size() || ident.size() != a.size()) {
    throw Error(ErrorCode::kInvalidArgument, "base and identification must have equal length");
  }
  if (!is_self_sufficient(tail, a)) {
    throw Error(ErrorCode::kNotSelfSufficient, "base is not self-sufficient in the chain tail");
  }
  PointSet image = make_point_set(ident, extension.size());
  if (image.size() != ident.size()) {
    throw Error(ErrorCode::kNotIsomorphism, "identification is not injective");
  }
  if (!is_self_sufficient(extension, image)) {
    throw Error(ErrorCode::kNotSelfSufficient, "base image is not self-sufficient in the extension");
  }
  if (!kf_member(extension, chain.f, cap).member) {
    throw Error(ErrorCode::kNotInClass, "extension is not in K_f");
  }
  Gluing gluing;
  for (size_t i = 0; i < a.size(); ++i) gluing.emplace_back(base[i], ident[i]);
  Amalgam amalgam = free_amalgam(tail, extension, gluing);
  if (!good_f_report(chain.f).free_amalgamation &&
      !kf_member(amalgam.structure, chain.f, cap).member) {
    throw Error(ErrorCode::kNotInClass, "amalgam leaves K_f for a control function not certified good");
  }
  GenericChain next = chain;
  next.links.push_back(amalgam.left_map);
  next.stages.push_back(std::move(amalgam.structure));
  return next;
}

ExtensionList enumerate_extensions(const GenericChain& chain, int max_base, int max_new,
                                   const Budget& budget) {
  ExtensionList list;
  if (max_base < 0 || max_new < 0) {
    throw Error(ErrorCode::kInvalidArgument, "extension caps must be non-negative");
  }
  if (max_new == 0) return list;
  const FinStruct& tail = chain.tail();
  const Signature& sig = tail.signature();
  std::int64_t visited = 0;

  for (int a = 0; a <= std::min(max_base, tail.size()); ++a) {
    std::vector<int> combo(a);
    for (int i = 0; i < a; ++i) combo[i] = i;
    while (true) {
      PointSet base(combo.begin(), combo.end());
      if (is_self_sufficient(tail, base)) {
        Substructure induced = induced_substructure(tail, base);
        std::set<std::vector<int>> seen;
        for (int k = 1; k <= max_new; ++k) {
          const int points = a + k;
          auto fresh = fresh_tuples(sig, points, a);
          std::vector<int> colors(points, 0);
          for (int i = 0; i < a; ++i) colors[i] = i + 1;
          // B <= requires delta(B) > delta(A), so at most k - 1 new tuples.
          for (int t = 0; t <= std::min<int>(k - 1, static_cast<int>(fresh.size())); ++t) {
            std::vector<int> pick(t);
            for (int i = 0; i < t; ++i) pick[i] = i;
            while (true) {
              if (++visited > budget.enumeration) {
                list.truncated = true;
                return list;
              }
              std::vector<std::vector<Tuple>> tuples = induced.structure.all_tuples();
              for (int i : pick) tuples[fresh[i].first].push_back(fresh[i].second);
              FinStruct candidate(sig, points, std::move(tuples));
              if (is_self_sufficient(candidate, all_points(a)) &&
                  kf_member(candidate, chain.f, std::max(budget.subset_points, points)).member) {
                auto form = canonical_form(candidate, colors);
                if (seen.insert(form.code).second) {
                  list.candidates.push_back({base, std::move(candidate)});
                }
              }
              int i = t - 1;
              const int m = static_cast<int>(fresh.size());
              while (i >= 0 && pick[i] == m - t + i) --i;
              if (i < 0) break;
              ++pick[i];
              for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
            }
          }
        }
      }
      int i = a - 1;
      while (i >= 0 && combo[i] == tail.size() - a + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < a; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return list;
}

GenericChain build_generic(const ControlFunction& f, const Signature& signature,
                           const BuildOptions& options, const Budget& budget) {
  GenericChain chain = GenericChain::start(f, signature);
  std::mt19937_64 rng(options.seed);
  for (int round = 0; round < options.rounds; ++round) {
    ExtensionList list = enumerate_extensions(chain, options.max_base, options.max_new, budget);
    auto& candidates = list.candidates;
    if (options.seed != 0) {
      for (size_t i = candidates.size(); i > 1; --i) {
        std::swap(candidates[i - 1], candidates[rng() % i]);
      }
    }
    bool grew = false;
    for (const auto& c : candidates) {
      const int added = c.extension.size() - static_cast<int>(c.base.size());
      if (chain.tail().size() + added > options.max_points) continue;
      chain = extend_chain(chain, c.base, c.extension,
                           all_points(static_cast<int>(c.base.size())),
                           std::max(budget.subset_points, options.max_points));
      grew = true;
    }
    if (!grew) break;
  }
  return chain;
}

PointSet acl(const GenericChain& chain, const PointSet& points) {
  return closure(chain.tail(), points).closure;
}

bool same_type(const GenericChain& chain, const std::vector<Point>& xs,
               const std::vector<Point>& ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kInvalidArgument, "same_type needs tuples of equal length");
  }
  if (xs.size() > 30) throw Error(ErrorCode::kCapExceeded, "same_type supports tuples up to 30");
  const FinStruct& tail = chain.tail();
  auto colored_closure = [&](const std::vector<Point>& tuple) {
    PointSet cl = acl(chain, make_point_set(tuple, tail.size()));
    Substructure sub = induced_substructure(tail, cl);
    std::vector<int> colors(sub.points.size(), 0);
    for (size_t i = 0; i < tuple.size(); ++i) {
      auto pos = std::lower_bound(sub.points.begin(), sub.points.end(), tuple[i]) - sub.points.begin();
      colors[pos] |= 1 << i;
    }
    return canonical_form(sub.structure, colors);
  };
  return colored_closure(xs) == colored_closure(ys);
}

void save_chain(const GenericChain& chain, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + directory);
  for (size_t k = 0; k < chain.stages.size(); ++k) {
    write_structure_file((fs::path(directory) / stage_name(k)).string(), chain.stages[k]);
  }
  std::ofstream out(fs::path(directory) / "chain.manifest", std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write manifest in " + directory);
  if (chain.f.is_log()) {
    out << "control log:" << chain.f.log_base() << '\n';
  } else {
    out << "control table\n";
    for (const auto& [size, bound] : std::get<RationalTable>(chain.f.variant()).entries) {
      out << "entry " << size << ' ' << boost::multiprecision::numerator(bound) << '/'
          << boost::multiprecision::denominator(bound) << '\n';
    }
  }
  out << "stages " << chain.stages.size() << '\n';
  for (size_t k = 0; k < chain.links.size(); ++k) {
    out << "link " << k;
    for (Point p : chain.links[k]) out << ' ' << p;
    out << '\n';
  }
}

GenericChain load_chain(const std::string& directory) {
  namespace fs = std::filesystem;
  std::ifstream in(fs::path(directory) / "chain.manifest");
  if (!in) throw Error(ErrorCode::kIo, "missing chain.manifest in " + directory);
  std::string line;
  std::optional<ControlFunction> f;
  bool table = false;
  std::ostringstream table_text;
  size_t stages = 0;
  std::vector<std::vector<Point>> links;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key.front() == '#') continue;
    if (key == "control") {
      std::string spec;
      fields >> spec;
      if (spec == "table") {
        table = true;
      } else {
        f = parse_control(spec);
      }
    } else if (key == "entry") {
      std::string size, bound;
      fields >> size >> bound;
      table_text << size << ' ' << bound << '\n';
    } else if (key == "stages") {
      fields >> stages;
    } else if (key == "link") {
      size_t index = 0;
      fields >> index;
      if (index != links.size()) throw Error(ErrorCode::kParse, "links out of order", line_no);
      std::vector<Point> map;
      Point p;
      while (fields >> p) map.push_back(p);
      links.push_back(std::move(map));
    } else {
      throw Error(ErrorCode::kParse, "unknown manifest key " + key, line_no);
    }
  }
  if (table) {
    std::istringstream t(table_text.str());
    f = parse_control_table(t);
  }
  if (!f) throw Error(ErrorCode::kParse, "manifest lacks a control line");
  if (stages == 0 || links.size() + 1 != stages) {
    throw Error(ErrorCode::kParse, "manifest stage and link counts disagree");
  }
  GenericChain chain{*f, {}, std::move(links)};
  for (size_t k = 0; k < stages; ++k) {
    chain.stages.push_back(read_structure_file((fs::path(directory) / stage_name(k)).string()));
  }
  for (size_t k = 0; k < chain.links.size(); ++k) {
    if (static_cast<int>(chain.links[k].size()) != chain.stages[k].size() ||
        !is_embedding(chain.stages[k], chain.stages[k + 1], chain.links[k])) {
      throw Error(ErrorCode::kParse, "link " + std::to_string(k) + " is not an embedding");
    }
  }
  return chain;
}

}  // namespace amalgam
