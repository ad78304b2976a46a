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

#include "amalgam/structure.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "amalgam/error.h"

namespace amalgam {
namespace {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

// Validates one tuple; returns an error message or empty on success.
std::string tuple_problem(const Tuple& tuple, int arity, int size) {
  if (static_cast<int>(tuple.size()) != arity) {
    return "arity mismatch: expected " + std::to_string(arity) + " entries, got " +
           std::to_string(tuple.size());
  }
  for (Point p : tuple) {
    if (p < 0 || p >= size) {
      return "point identifier " + std::to_string(p) + " out of range 0.." +
             std::to_string(size - 1);
    }
  }
  Tuple sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "repeated entry in tuple";
  }
  return {};
}

}  // namespace

Signature::Signature(std::vector<RelationSymbol> relations) : relations_(std::move(relations)) {
  std::set<std::string> seen;
  for (const auto& rel : relations_) {
    if (!is_identifier(rel.name)) {
      throw Error(ErrorCode::kInvalidArgument, "invalid relation name '" + rel.name + "'");
    }
    if (rel.arity < 1) {
      throw Error(ErrorCode::kInvalidArgument, "relation " + rel.name + " has arity < 1");
    }
    if (!seen.insert(rel.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate relation name " + rel.name);
    }
  }
}

std::optional<int> Signature::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

Signature parse_signature(std::string_view text) {
  std::vector<RelationSymbol> rels;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (!item.empty()) {
      size_t colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw Error(ErrorCode::kInvalidArgument, "signature item needs Name:arity");
      }
      auto arity = to_integer(item.substr(colon + 1));
      if (!arity) throw Error(ErrorCode::kInvalidArgument, "bad arity in signature");
      rels.push_back({std::string(item.substr(0, colon)), static_cast<int>(*arity)});
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Signature(std::move(rels));
}

FinStruct::FinStruct(Signature signature, int size)
    : signature_(std::move(signature)), size_(size), tuples_(signature_.size()) {
  if (size < 0) throw Error(ErrorCode::kInvalidArgument, "negative structure size");
  build_index();
}

FinStruct::FinStruct(Signature signature, int size, std::vector<std::vector<Tuple>> tuples)
    : signature_(std::move(signature)), size_(size), tuples_(std::move(tuples)) {
  if (size < 0) throw Error(ErrorCode::kInvalidArgument, "negative structure size");
  if (static_cast<int>(tuples_.size()) != signature_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "tuple lists do not match the signature");
  }
  for (int r = 0; r < signature_.size(); ++r) {
    for (const Tuple& t : tuples_[r]) {
      std::string problem = tuple_problem(t, signature_[r].arity, size_);
      if (!problem.empty()) {
        throw Error(ErrorCode::kInvalidArgument, signature_[r].name + ": " + problem);
      }
    }
    std::sort(tuples_[r].begin(), tuples_[r].end());
    if (std::adjacent_find(tuples_[r].begin(), tuples_[r].end()) != tuples_[r].end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate tuple in " + signature_[r].name);
    }
  }
  build_index();
}

void FinStruct::build_index() {
  incidence_.assign(size_, {});
  tuple_count_ = 0;
  for (int r = 0; r < static_cast<int>(tuples_.size()); ++r) {
    tuple_count_ += static_cast<int>(tuples_[r].size());
    for (int i = 0; i < static_cast<int>(tuples_[r].size()); ++i) {
      for (Point p : tuples_[r][i]) incidence_[p].push_back({r, i});
    }
  }
}

bool FinStruct::contains(int relation, const Tuple& tuple) const {
  const auto& list = tuples_[relation];
  return std::binary_search(list.begin(), list.end(), tuple);
}

StructBuilder::StructBuilder(Signature signature, int size)
    : signature_(std::move(signature)), size_(size), tuples_(signature_.size()) {}

StructBuilder& StructBuilder::add(std::string_view relation, Tuple tuple) {
  auto index = signature_.find(relation);
  if (!index) {
    throw Error(ErrorCode::kInvalidArgument, "undeclared relation " + std::string(relation));
  }
  return add(*index, std::move(tuple));
}

StructBuilder& StructBuilder::add(int relation, Tuple tuple) {
  tuples_.at(relation).push_back(std::move(tuple));
  return *this;
}

FinStruct StructBuilder::build() const { return FinStruct(signature_, size_, tuples_); }

FinStruct parse_structure(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<int> size;
  std::vector<RelationSymbol> rels;
  std::vector<std::pair<int, Tuple>> entries;
  std::vector<std::set<Tuple>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!size) {
      if (tokens[0] != "points" || tokens.size() != 2) {
        throw Error(ErrorCode::kParse, "expected 'points <N>' as the first line", line_no);
      }
      auto n = to_integer(tokens[1]);
      if (!n || *n < 0 || *n > (1LL << 30)) {
        throw Error(ErrorCode::kParse, "invalid point count", line_no);
      }
      size = static_cast<int>(*n);
      continue;
    }
    if (tokens[0] == "points") {
      throw Error(ErrorCode::kParse, "'points' declared twice", line_no);
    }
    if (tokens[0] == "rel") {
      if (tokens.size() != 3) throw Error(ErrorCode::kParse, "expected 'rel <Name> <arity>'", line_no);
      std::string name(tokens[1]);
      auto arity = to_integer(tokens[2]);
      if (!is_identifier(name) || name == "points" || name == "rel") {
        throw Error(ErrorCode::kParse, "invalid relation name '" + name + "'", line_no);
      }
      if (!arity || *arity < 1 || *arity > 1024) {
        throw Error(ErrorCode::kParse, "invalid arity", line_no);
      }
      for (const auto& r : rels) {
        if (r.name == name) throw Error(ErrorCode::kParse, "relation " + name + " declared twice", line_no);
      }
      rels.push_back({name, static_cast<int>(*arity)});
      seen.emplace_back();
      continue;
    }
    int index = -1;
    for (int r = 0; r < static_cast<int>(rels.size()); ++r) {
      if (rels[r].name == tokens[0]) index = r;
    }
    if (index < 0) {
      throw Error(ErrorCode::kParse, "undeclared relation " + std::string(tokens[0]), line_no);
    }
    Tuple tuple;
    for (size_t k = 1; k < tokens.size(); ++k) {
      auto v = to_integer(tokens[k]);
      if (!v) throw Error(ErrorCode::kParse, "invalid point identifier", line_no);
      if (*v < 0 || *v >= *size) {
        throw Error(ErrorCode::kParse,
                    "point identifier " + std::string(tokens[k]) + " out of range", line_no);
      }
      tuple.push_back(static_cast<Point>(*v));
    }
    std::string problem = tuple_problem(tuple, rels[index].arity, *size);
    if (!problem.empty()) throw Error(ErrorCode::kParse, problem, line_no);
    if (!seen[index].insert(tuple).second) {
      throw Error(ErrorCode::kParse, "duplicate tuple", line_no);
    }
    entries.emplace_back(index, std::move(tuple));
  }
  if (!size) throw Error(ErrorCode::kParse, "missing 'points <N>' line", line_no + 1);

  std::vector<std::vector<Tuple>> tuples(rels.size());
  for (auto& [r, t] : entries) tuples[r].push_back(std::move(t));
  return FinStruct(Signature(std::move(rels)), *size, std::move(tuples));
}

FinStruct parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_structure(in);
}

std::string serialize(const FinStruct& s) {
  std::ostringstream out;
  out << "points " << s.size() << '\n';
  for (const auto& rel : s.signature().relations()) {
    out << "rel " << rel.name << ' ' << rel.arity << '\n';
  }
  for (int r = 0; r < s.signature().size(); ++r) {
    for (const Tuple& t : s.tuples(r)) {
      out << s.signature()[r].name;
      for (Point p : t) out << ' ' << p;
      out << '\n';
    }
  }
  return out.str();
}

FinStruct read_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return parse_structure(in);
}

void write_structure_file(const std::string& path, const FinStruct& structure) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << serialize(structure);
}

PointSet make_point_set(std::vector<Point> points, int size) {
  for (Point p : points) {
    if (p < 0 || p >= size) {
      throw Error(ErrorCode::kOutOfRange, "point " + std::to_string(p) + " outside 0.." +
                                              std::to_string(size - 1));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

PointSet all_points(int size) {
  PointSet out(size);
  for (int i = 0; i < size; ++i) out[i] = i;
  return out;
}

std::vector<Point> parse_point_list(std::string_view text) {
  std::vector<Point> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto v = to_integer(item);
      if (!v) throw Error(ErrorCode::kInvalidArgument, "bad point list entry '" + std::string(item) + "'");
      out.push_back(static_cast<Point>(*v));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Substructure induced_substructure(const FinStruct& ambient, const PointSet& points) {
  PointSet sorted = make_point_set(points, ambient.size());
  std::vector<int> relabel(ambient.size(), -1);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) relabel[sorted[i]] = i;

  std::vector<std::vector<Tuple>> tuples(ambient.signature().size());
  for (int r = 0; r < ambient.signature().size(); ++r) {
    for (const Tuple& t : ambient.tuples(r)) {
      Tuple image;
      image.reserve(t.size());
      for (Point p : t) {
        if (relabel[p] < 0) break;
        image.push_back(relabel[p]);
      }
      if (image.size() == t.size()) tuples[r].push_back(std::move(image));
    }
  }
  return {FinStruct(ambient.signature(), static_cast<int>(sorted.size()), std::move(tuples)),
          std::move(sorted)};
}

Amalgam free_amalgam(const FinStruct& left, const FinStruct& right, const Gluing& gluing) {
  if (!(left.signature() == right.signature())) {
    throw Error(ErrorCode::kInvalidArgument, "amalgam factors have different signatures");
  }
  std::vector<Point> right_to_left(right.size(), -1);
  std::vector<char> left_used(left.size(), 0);
  for (auto [l, r] : gluing) {
    if (l < 0 || l >= left.size() || r < 0 || r >= right.size()) {
      throw Error(ErrorCode::kOutOfRange, "gluing pair outside the factors");
    }
    if (left_used[l] || right_to_left[r] >= 0) {
      throw Error(ErrorCode::kNotIsomorphism, "gluing is not injective");
    }
    left_used[l] = 1;
    right_to_left[r] = l;
  }
  // The glued parts must carry the same induced relations.
  auto glued_image = [&](const Tuple& t, bool& inside) {
    Tuple image;
    inside = true;
    for (Point p : t) {
      if (right_to_left[p] < 0) {
        inside = false;
        break;
      }
      image.push_back(right_to_left[p]);
    }
    return image;
  };
  size_t left_glued_tuples = 0;
  for (int r = 0; r < left.signature().size(); ++r) {
    for (const Tuple& t : left.tuples(r)) {
      if (std::all_of(t.begin(), t.end(), [&](Point p) { return left_used[p] != 0; })) {
        ++left_glued_tuples;
      }
    }
  }
  size_t right_glued_tuples = 0;
  for (int r = 0; r < right.signature().size(); ++r) {
    for (const Tuple& t : right.tuples(r)) {
      bool inside = false;
      Tuple image = glued_image(t, inside);
      if (!inside) continue;
      ++right_glued_tuples;
      if (!left.contains(r, image)) {
        throw Error(ErrorCode::kNotIsomorphism,
                    "gluing does not preserve relation " + right.signature()[r].name);
      }
    }
  }
  if (left_glued_tuples != right_glued_tuples) {
    throw Error(ErrorCode::kNotIsomorphism, "gluing does not reflect relations");
  }

  Amalgam out;
  out.left_map = all_points(left.size());
  out.right_map.assign(right.size(), -1);
  int next = left.size();
  for (Point r = 0; r < right.size(); ++r) {
    out.right_map[r] = right_to_left[r] >= 0 ? right_to_left[r] : next++;
  }
  std::vector<std::vector<Tuple>> tuples = left.all_tuples();
  for (int r = 0; r < right.signature().size(); ++r) {
    for (const Tuple& t : right.tuples(r)) {
      if (std::all_of(t.begin(), t.end(), [&](Point p) { return right_to_left[p] >= 0; })) {
        continue;
      }
      Tuple image;
      for (Point p : t) image.push_back(out.right_map[p]);
      tuples[r].push_back(std::move(image));
    }
  }
  out.structure = FinStruct(left.signature(), next, std::move(tuples));
  return out;
}

Amalgam disjoint_union(const FinStruct& left, const FinStruct& right) {
  return free_amalgam(left, right, {});
}

bool is_embedding(const FinStruct& source, const FinStruct& target,
                  const std::vector<Point>& map) {
  if (static_cast<int>(map.size()) != source.size()) return false;
  if (!(source.signature() == target.signature())) return false;
  std::vector<int> inverse(target.size(), -1);
  for (Point p = 0; p < source.size(); ++p) {
    Point q = map[p];
    if (q < 0 || q >= target.size() || inverse[q] >= 0) return false;
    inverse[q] = p;
  }
  for (int r = 0; r < source.signature().size(); ++r) {
    for (const Tuple& t : source.tuples(r)) {
      Tuple image;
      for (Point p : t) image.push_back(map[p]);
      if (!target.contains(r, image)) return false;
    }
    // Reflection: every target tuple inside the image comes from source.
    for (const Tuple& t : target.tuples(r)) {
      Tuple pre;
      for (Point q : t) {
        if (inverse[q] < 0) break;
        pre.push_back(inverse[q]);
      }
      if (pre.size() == t.size() && !source.contains(r, pre)) return false;
    }
  }
  return true;
}

std::uint64_t to_mask(const PointSet& points) {
  std::uint64_t mask = 0;
  for (Point p : points) {
    if (p < 0 || p >= 64) throw Error(ErrorCode::kCapExceeded, "bitmask needs points < 64");
    mask |= std::uint64_t{1} << p;
  }
  return mask;
}

PointSet from_mask(std::uint64_t mask) {
  PointSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace amalgam
