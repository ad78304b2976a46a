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

#ifndef AMALGAM_STRUCTURE_H_
#define AMALGAM_STRUCTURE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amalgam {

// Points of a finite structure are the dense identifiers 0..size-1.
using Point = int;
using Tuple = std::vector<Point>;
// Sorted, duplicate-free list of points.
using PointSet = std::vector<Point>;

struct RelationSymbol {
  std::string name;
  int arity = 0;

  bool operator==(const RelationSymbol&) const = default;
};

// Ordered list of relation symbols with unique names and positive arities.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<RelationSymbol> relations);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  int size() const { return static_cast<int>(relations_.size()); }
  const RelationSymbol& operator[](int index) const { return relations_[index]; }
  std::optional<int> find(std::string_view name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<RelationSymbol> relations_;
};

// Parses "R:3,S:2" into a signature.
Signature parse_signature(std::string_view text);

// A finite relational structure. Each relation holds a set of ordered
// tuples whose entries are pairwise distinct points. Immutable once built.
class FinStruct {
 public:
  // A relation index paired with a tuple index inside that relation.
  struct TupleRef {
    int relation;
    int index;
  };

  FinStruct() = default;
  FinStruct(Signature signature, int size);
  // Validates every invariant; throws Error on violation. Tuples may be
  // given in any order and are stored sorted.
  FinStruct(Signature signature, int size, std::vector<std::vector<Tuple>> tuples);

  const Signature& signature() const { return signature_; }
  int size() const { return size_; }
  const std::vector<Tuple>& tuples(int relation) const { return tuples_[relation]; }
  const std::vector<std::vector<Tuple>>& all_tuples() const { return tuples_; }
  int tuple_count() const { return tuple_count_; }
  bool contains(int relation, const Tuple& tuple) const;

  // Tuples in which `point` occurs.
  const std::vector<TupleRef>& incident(Point point) const { return incidence_[point]; }
  const Tuple& tuple(TupleRef ref) const { return tuples_[ref.relation][ref.index]; }

  bool operator==(const FinStruct& other) const {
    return size_ == other.size_ && signature_ == other.signature_ && tuples_ == other.tuples_;
  }

 private:
  void build_index();

  Signature signature_;
  int size_ = 0;
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<std::vector<TupleRef>> incidence_;
  int tuple_count_ = 0;
};

// Accumulates tuples by relation name, then validates once in build().
class StructBuilder {
 public:
  StructBuilder(Signature signature, int size);

  StructBuilder& add(std::string_view relation, Tuple tuple);
  StructBuilder& add(int relation, Tuple tuple);
  Point add_point() { return size_++; }
  int size() const { return size_; }
  FinStruct build() const;

 private:
  Signature signature_;
  int size_;
  std::vector<std::vector<Tuple>> tuples_;
};

// Line-oriented text format:
//   # comment
//   points <N>
//   rel <Name> <arity>
//   <Name> <i1> ... <ik>
FinStruct parse_structure(std::istream& in);
FinStruct parse_structure(std::string_view text);
// Emits points, rel lines in declaration order, then each relation's
// tuples in lexicographic order.
std::string serialize(const FinStruct& structure);
FinStruct read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const FinStruct& structure);

// Sorts and deduplicates, throwing kOutOfRange for identifiers outside
// 0..size-1.
PointSet make_point_set(std::vector<Point> points, int size);
PointSet all_points(int size);
// Parses "0,1,2" (empty string gives the empty set).
std::vector<Point> parse_point_list(std::string_view text);

struct Substructure {
  FinStruct structure;
  // points[i] is the point of the ambient structure relabeled to i.
  std::vector<Point> points;
};

Substructure induced_substructure(const FinStruct& ambient, const PointSet& points);

// Pairs (point of left, point of right) identifying the common part.
using Gluing = std::vector<std::pair<Point, Point>>;

struct Amalgam {
  FinStruct structure;
  std::vector<Point> left_map;   // left point -> amalgam point (identity)
  std::vector<Point> right_map;  // right point -> amalgam point
};

// Free amalgam of `left` and `right` over the glued part. Left points keep
// their identifiers; unglued right points follow in increasing order.
// Throws kNotIsomorphism when the gluing is not an isomorphism between the
// induced substructures.
Amalgam free_amalgam(const FinStruct& left, const FinStruct& right, const Gluing& gluing);

// Disjoint union with no identification.
Amalgam disjoint_union(const FinStruct& left, const FinStruct& right);

// True when `map` is an injective map of source points into target points
// under which a tuple holds in source iff its image holds in target.
bool is_embedding(const FinStruct& source, const FinStruct& target,
                  const std::vector<Point>& map);

// Bitmask helpers for structures with at most 64 points.
std::uint64_t to_mask(const PointSet& points);
PointSet from_mask(std::uint64_t mask);

}  // namespace amalgam

#endif  // AMALGAM_STRUCTURE_H_
