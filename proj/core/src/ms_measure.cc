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

#include "amalgam/ms_measure.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "amalgam/error.h"

namespace amalgam {
namespace {

std::string rational_text(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) out << '/' << boost::multiprecision::denominator(q);
  return out.str();
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational parse_rational(const std::string& text, int line) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse, "bad rational '" + text + "'", line);
  }
  const BigInt d(den);
  if (d == 0) throw Error(ErrorCode::kParse, "zero denominator", line);
  return Rational(BigInt(num), d);
}

std::int64_t parse_count(const std::string& text, int line) {
  if (!all_digits(text) || text.size() > 18) throw Error(ErrorCode::kParse, "bad count '" + text + "'", line);
  return std::stoll(text);
}

int parse_dim(const std::string& text, int line) {
  if (!all_digits(text) || text.size() > 9) throw Error(ErrorCode::kParse, "bad dimension '" + text + "'", line);
  return std::stoi(text);
}

std::vector<std::string> split_names(const std::string& text, int line) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  names.push_back(current);
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::kParse, "empty name in list", line);
  }
  return names;
}

MsCheck compare(std::string name, const DimMeasure& lhs, const DimMeasure& rhs) {
  return {std::move(name), to_string(lhs), "==", to_string(rhs), lhs == rhs};
}

}  // namespace

std::string to_string(const DimMeasure& h) {
  return "(" + std::to_string(h.dim) + "," + rational_text(h.mu) + ")";
}

const CatalogSet& DimMeasureCatalog::set(std::string_view name) const {
  for (const auto& s : sets) {
    if (s.name == name) return s;
  }
  throw Error(ErrorCode::kUndeclared, "undeclared set " + std::string(name));
}

const CatalogMap& DimMeasureCatalog::map(std::string_view name) const {
  for (const auto& m : maps) {
    if (m.name == name) return m;
  }
  throw Error(ErrorCode::kUndeclared, "undeclared map " + std::string(name));
}

bool DimMeasureCatalog::is_declared_subset(std::string_view d, std::string_view s) const {
  if (d == s) return true;
  for (const auto& [sub, super] : subsets) {
    if (sub == d && super == s) return true;
  }
  for (const auto& c : cylinders) {
    if (c.name == d && c.product == s) return true;
  }
  return false;
}

DimMeasureCatalog parse_catalog(std::istream& in) {
  DimMeasureCatalog catalog;
  std::set<std::string> set_names, map_names;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string& key = tok[0];
    auto expect = [&](bool ok) {
      if (!ok) throw Error(ErrorCode::kParse, "malformed '" + key + "' line", line);
    };
    auto rest_after = [&](size_t index) {
      std::string joined;
      for (size_t i = index; i < tok.size(); ++i) joined += tok[i];
      return joined;
    };
    if (key == "set") {
      expect(tok.size() == 4 || (tok.size() == 6 && tok[4] == "explicit"));
      CatalogSet s{tok[1], {parse_dim(tok[2], line), parse_rational(tok[3], line)}, std::nullopt};
      if (s.h.mu <= 0) throw Error(ErrorCode::kParse, "measure must be positive", line);
      if (tok.size() == 6) s.explicit_size = parse_count(tok[5], line);
      if (!set_names.insert(s.name).second) throw Error(ErrorCode::kParse, "duplicate set " + s.name, line);
      catalog.sets.push_back(std::move(s));
    } else if (key == "subset") {
      expect(tok.size() == 4 && tok[2] == "of");
      catalog.subsets.emplace_back(tok[1], tok[3]);
    } else if (key == "map") {
      expect(tok.size() == 6 && tok[2] == "from" && tok[4] == "to");
      if (!map_names.insert(tok[1]).second) throw Error(ErrorCode::kParse, "duplicate map " + tok[1], line);
      catalog.maps.push_back({tok[1], tok[3], tok[5], {}});
    } else if (key == "fibre") {
      expect(tok.size() == 9 && tok[2] == "over" && tok[4] == "value" && tok[7] == "count");
      auto it = std::find_if(catalog.maps.begin(), catalog.maps.end(),
                             [&](const CatalogMap& m) { return m.name == tok[1]; });
      if (it == catalog.maps.end()) {
        throw Error(ErrorCode::kUndeclared, "fibre line for undeclared map " + tok[1], line);
      }
      it->fibres.push_back({tok[3], {parse_dim(tok[5], line), parse_rational(tok[6], line)},
                            parse_count(tok[8], line)});
    } else if (key == "family") {
      expect(tok.size() >= 4 && tok[2] == "=");
      auto names = split_names(rest_after(3), line);
      auto it = std::find_if(catalog.families.begin(), catalog.families.end(),
                             [&](const CatalogFamily& f) { return f.name == tok[1]; });
      if (it == catalog.families.end()) {
        catalog.families.push_back({tok[1], {std::move(names)}});
      } else {
        it->pieces.push_back(std::move(names));
      }
    } else if (key == "product") {
      expect(tok.size() >= 4 && tok[2] == "=");
      catalog.products.push_back({tok[1], split_names(rest_after(3), line)});
    } else if (key == "cylinder") {
      expect(tok.size() == 8 && tok[2] == "=" && tok[4] == "at" && tok[6] == "in");
      const auto index = parse_count(tok[5], line);
      if (index < 1) throw Error(ErrorCode::kParse, "factor index is 1-based", line);
      catalog.cylinders.push_back({tok[1], tok[3], static_cast<int>(index - 1), tok[7]});
    } else {
      throw Error(ErrorCode::kParse, "unknown catalog line '" + key + "'", line);
    }
  }
  return catalog;
}

DimMeasureCatalog parse_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_catalog(in);
}

DimMeasureCatalog read_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return parse_catalog(in);
}

std::string serialize(const DimMeasureCatalog& catalog) {
  std::ostringstream out;
  auto h_text = [](const DimMeasure& h) { return std::to_string(h.dim) + " " + rational_text(h.mu); };
  auto join = [](const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s;
  };
  for (const auto& s : catalog.sets) {
    out << "set " << s.name << ' ' << h_text(s.h);
    if (s.explicit_size) out << " explicit " << *s.explicit_size;
    out << '\n';
  }
  for (const auto& [d, s] : catalog.subsets) out << "subset " << d << " of " << s << '\n';
  for (const auto& p : catalog.products) out << "product " << p.name << " = " << join(p.factors) << '\n';
  for (const auto& c : catalog.cylinders) {
    out << "cylinder " << c.name << " = " << c.base << " at " << c.factor + 1 << " in " << c.product << '\n';
  }
  for (const auto& m : catalog.maps) {
    out << "map " << m.name << " from " << m.source << " to " << m.target << '\n';
    for (const auto& f : m.fibres) {
      out << "fibre " << m.name << " over " << f.piece << " value " << h_text(f.value) << " count "
          << f.count << '\n';
    }
  }
  for (const auto& f : catalog.families) {
    for (const auto& piece : f.pieces) out << "family " << f.name << " = " << join(piece) << '\n';
  }
  return out.str();
}

bool MsReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const MsCheck& c) { return c.pass; });
}

void MsReport::append(const MsReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

MsReport check_axiom_finite(const DimMeasureCatalog& catalog) {
  MsReport report;
  for (const auto& s : catalog.sets) {
    if (!s.explicit_size) continue;
    report.checks.push_back(compare("finite." + s.name, s.h, {0, Rational(*s.explicit_size)}));
  }
  return report;
}

MsReport check_axiom_family(const DimMeasureCatalog& catalog) {
  MsReport report;
  for (const auto& family : catalog.families) {
    for (size_t i = 0; i < family.pieces.size(); ++i) {
      std::vector<DimMeasure> values;
      for (const auto& name : family.pieces[i]) {
        const DimMeasure& h = catalog.set(name).h;
        if (std::find(values.begin(), values.end(), h) == values.end()) values.push_back(h);
      }
      report.checks.push_back({"family." + family.name + ".piece" + std::to_string(i + 1),
                               std::to_string(values.size()), "==", "1", values.size() == 1});
    }
  }
  return report;
}

MsReport check_axiom_fubini(const DimMeasureCatalog& catalog, const std::string& map_name) {
  const CatalogMap& m = catalog.map(map_name);
  const CatalogSet& source = catalog.set(m.source);
  catalog.set(m.target);
  if (m.fibres.empty()) throw Error(ErrorCode::kUndeclared, "map " + m.name + " has no fibre classes");
  MsReport report;
  int top = -1;
  Rational total;
  for (const auto& f : m.fibres) {
    const CatalogSet& piece = catalog.set(f.piece);
    if (!catalog.is_declared_subset(f.piece, m.target)) {
      throw Error(ErrorCode::kUndeclared, "fibre class " + f.piece + " is not declared inside " + m.target);
    }
    if (piece.explicit_size) {
      report.checks.push_back({"fubini." + m.name + ".count." + f.piece, std::to_string(f.count), "==",
                               std::to_string(*piece.explicit_size), f.count == *piece.explicit_size});
    }
    const int c = f.value.dim + piece.h.dim;
    const Rational contribution = f.value.mu * piece.h.mu;
    if (c > top) {
      top = c;
      total = contribution;
    } else if (c == top) {
      total += contribution;
    }
  }
  report.checks.push_back(compare("fubini." + m.name, {top, total}, source.h));
  return report;
}

Rational nu_normalize(const DimMeasureCatalog& catalog, const std::string& s, const std::string& d) {
  const CatalogSet& whole = catalog.set(s);
  const CatalogSet& part = catalog.set(d);
  if (!catalog.is_declared_subset(d, s)) {
    throw Error(ErrorCode::kUndeclared, d + " is not declared as a subset of " + s);
  }
  if (part.h.dim != whole.h.dim) return Rational(0);
  return part.h.mu / whole.h.mu;
}

MsReport check_product_pushforward(const DimMeasureCatalog& catalog) {
  MsReport report;
  auto product_of = [&](const std::string& name) -> const CatalogProduct& {
    for (const auto& p : catalog.products) {
      if (p.name == name) return p;
    }
    throw Error(ErrorCode::kUndeclared, "undeclared product " + name);
  };
  for (const auto& p : catalog.products) {
    DimMeasure expected{0, Rational(1)};
    for (const auto& factor : p.factors) {
      expected.dim += catalog.set(factor).h.dim;
      expected.mu *= catalog.set(factor).h.mu;
    }
    report.checks.push_back(compare("product." + p.name, catalog.set(p.name).h, expected));
  }
  for (const auto& c : catalog.cylinders) {
    const CatalogProduct& p = product_of(c.product);
    if (c.factor >= static_cast<int>(p.factors.size())) {
      throw Error(ErrorCode::kOutOfRange, "cylinder " + c.name + " names a missing factor");
    }
    const std::string& factor = p.factors[c.factor];
    DimMeasure expected = catalog.set(c.base).h;
    for (size_t i = 0; i < p.factors.size(); ++i) {
      if (static_cast<int>(i) == c.factor) continue;
      expected.dim += catalog.set(p.factors[i]).h.dim;
      expected.mu *= catalog.set(p.factors[i]).h.mu;
    }
    report.checks.push_back(compare("cylinder." + c.name, catalog.set(c.name).h, expected));
    const Rational pulled = nu_normalize(catalog, c.product, c.name);
    const Rational pushed = nu_normalize(catalog, factor, c.base);
    report.checks.push_back({"pushforward." + c.name, rational_text(pulled), "==", rational_text(pushed),
                             pulled == pushed});
  }
  return report;
}

MsReport check_all(const DimMeasureCatalog& catalog) {
  MsReport report = check_axiom_finite(catalog);
  report.append(check_axiom_family(catalog));
  for (const auto& m : catalog.maps) report.append(check_axiom_fubini(catalog, m.name));
  report.append(check_product_pushforward(catalog));
  return report;
}

std::string format_ms_report(const MsReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << "CHECK " << c.name << ' ' << c.lhs << ' ' << c.op << ' ' << c.rhs << ' '
        << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  out << "OVERALL " << (report.overall() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

DimMeasureCatalog counting_catalog(int modulus, int factors) {
  if (modulus < 2 || factors < 1) {
    throw Error(ErrorCode::kInvalidArgument, "counting catalogs need N >= 2 and at least one factor");
  }
  DimMeasureCatalog catalog;
  auto add_set = [&](const std::string& name, std::int64_t size) {
    catalog.sets.push_back({name, {0, Rational(size)}, size});
  };
  std::int64_t fibre = 1;
  for (int i = 1; i < factors; ++i) fibre *= modulus;
  add_set("Z", modulus);
  for (int j = 1; j < modulus; ++j) {
    add_set("D" + std::to_string(j), j);
    catalog.subsets.emplace_back("D" + std::to_string(j), "Z");
    catalog.families.push_back({"segment" + std::to_string(j), {{"D" + std::to_string(j)}}});
  }
  if (factors == 1) {
    catalog.maps.push_back({"id", "Z", "Z", {{"Z", {0, Rational(1)}, modulus}}});
    return catalog;
  }
  add_set("P", fibre * modulus);
  catalog.products.push_back({"P", std::vector<std::string>(factors, "Z")});
  add_set("F", fibre);
  add_set("G", fibre);
  catalog.families.push_back({"slices", {{"F", "G"}, {"D1"}}});
  for (int i = 1; i <= factors; ++i) {
    const std::string pi = "pi" + std::to_string(i);
    catalog.maps.push_back({pi, "P", "Z", {{"Z", {0, Rational(fibre)}, modulus}}});
    for (int j = 1; j < modulus; ++j) {
      const std::string d = "D" + std::to_string(j);
      const std::string cyl = "C" + std::to_string(j) + "_" + std::to_string(i);
      add_set(cyl, fibre * j);
      catalog.cylinders.push_back({cyl, d, i - 1, "P"});
      catalog.maps.push_back({"rho" + std::to_string(j) + "_" + std::to_string(i), cyl, d,
                              {{d, {0, Rational(fibre)}, j}}});
    }
  }
  return catalog;
}

}  // namespace amalgam
