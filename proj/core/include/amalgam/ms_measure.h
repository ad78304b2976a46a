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

#ifndef AMALGAM_MS_MEASURE_H_
#define AMALGAM_MS_MEASURE_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/control.h"

namespace amalgam {

// A dimension-measure value h(X) = (dim, mu).
struct DimMeasure {
  int dim = 0;
  Rational mu;
  bool operator==(const DimMeasure&) const = default;
};

std::string to_string(const DimMeasure& h);

struct CatalogSet {
  std::string name;
  DimMeasure h;
  std::optional<std::int64_t> explicit_size;
};

// Every fibre over points of `piece` has value `value`; `count` is the
// number of points in the piece.
struct FibreClass {
  std::string piece;
  DimMeasure value;
  std::int64_t count = 0;
};

struct CatalogMap {
  std::string name;
  std::string source;
  std::string target;
  std::vector<FibreClass> fibres;
};

// Sets in one piece must share their h value.
struct CatalogFamily {
  std::string name;
  std::vector<std::vector<std::string>> pieces;
};

struct CatalogProduct {
  std::string name;
  std::vector<std::string> factors;
};

// name = base x (the other factors), with base a subset of factor `factor`.
struct CatalogCylinder {
  std::string name;
  std::string base;
  int factor = 0;  // 0-based
  std::string product;
};

struct DimMeasureCatalog {
  std::vector<CatalogSet> sets;
  std::vector<std::pair<std::string, std::string>> subsets;  // (D, S) with D in S
  std::vector<CatalogMap> maps;
  std::vector<CatalogFamily> families;
  std::vector<CatalogProduct> products;
  std::vector<CatalogCylinder> cylinders;

  // Throws kUndeclared.
  const CatalogSet& set(std::string_view name) const;
  const CatalogMap& map(std::string_view name) const;
  bool is_declared_subset(std::string_view d, std::string_view s) const;
};

// Line format:
//   set <name> <dim> <num>/<den> [explicit <k>]
//   subset <name> of <name>
//   map <name> from <X> to <Y>
//   fibre <map> over <piece> value <dim> <num>/<den> count <n>
//   family <name> = <set>,<set>,...     (repeat the name for more pieces)
//   product <name> = <factor>,<factor>,...
//   cylinder <name> = <base> at <factor index, 1-based> in <product>
// Blank lines and lines starting with # are ignored.
DimMeasureCatalog parse_catalog(std::istream& in);
DimMeasureCatalog parse_catalog(std::string_view text);
DimMeasureCatalog read_catalog_file(const std::string& path);
std::string serialize(const DimMeasureCatalog& catalog);

struct MsCheck {
  std::string name;  // <axiom>.<subject>
  std::string lhs;
  std::string op;
  std::string rhs;
  bool pass = false;
};

struct MsReport {
  std::vector<MsCheck> checks;
  bool overall() const;
  void append(const MsReport& other);
};

MsReport check_axiom_finite(const DimMeasureCatalog& catalog);
MsReport check_axiom_family(const DimMeasureCatalog& catalog);
MsReport check_axiom_fubini(const DimMeasureCatalog& catalog, const std::string& map);
MsReport check_product_pushforward(const DimMeasureCatalog& catalog);

// All of the above, every map included, in that order.
MsReport check_all(const DimMeasureCatalog& catalog);

// mu(D)/mu(S) when dim D = dim S, else 0. D must be S or declared inside S.
Rational nu_normalize(const DimMeasureCatalog& catalog, const std::string& s, const std::string& d);

std::string format_ms_report(const MsReport& report);

// Counting catalog on Z_N^factors: every set carries (0, cardinality).
// Includes the initial segments D_j of Z_N, their cylinders, coordinate
// projections, restrictions of projections to cylinders and a fibre family.
DimMeasureCatalog counting_catalog(int modulus, int factors);

}  // namespace amalgam

#endif  // AMALGAM_MS_MEASURE_H_
