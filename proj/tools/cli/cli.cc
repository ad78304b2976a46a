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

#include "cli/cli.h"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "amalgam/budget.h"
#include "amalgam/control.h"
#include "amalgam/counterexample.h"
#include "amalgam/error.h"
#include "amalgam/generic.h"
#include "amalgam/ms_measure.h"
#include "amalgam/predimension.h"
#include "amalgam/structure.h"
#include "amalgam/szemeredi.h"

namespace amalgam::cli {
namespace {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  std::string lhs;
  std::string op;
  std::string rhs;
  bool pass = false;
};

// Everything a subcommand prints. Text and JSON renderings are produced
// from the same fields, so both carry the same content.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  // `text` replaces the default text rendering of the field.
  void set(const std::string& key, json value, std::vector<std::string> text = {}) {
    fields_.push_back({key, std::move(value), std::move(text)});
  }
  void add_check(Check check) { checks_.push_back(std::move(check)); }
  void set_overall(bool pass) { overall_ = pass; }
  // Text form prints only the field values.
  void set_bare() { bare_ = true; }

  bool checks_pass() const {
    for (const auto& c : checks_) {
      if (!c.pass) return false;
    }
    return true;
  }

  std::string render(bool as_json) const {
    return as_json ? render_json() : render_text();
  }

 private:
  struct Field {
    std::string key;
    json value;
    std::vector<std::string> text;
  };

  static std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    if (v.is_array()) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
      return s;
    }
    return v.dump();
  }

  std::string render_text() const {
    std::ostringstream out;
    for (const auto& f : fields_) {
      if (!f.text.empty()) {
        for (const auto& line : f.text) out << line << '\n';
      } else if (bare_) {
        out << scalar_text(f.value) << '\n';
      } else if (f.value.is_array() && !f.value.empty() && f.value[0].is_array()) {
        for (const auto& item : f.value) out << f.key << ' ' << scalar_text(item) << '\n';
      } else {
        out << f.key << ' ' << scalar_text(f.value) << '\n';
      }
    }
    for (const auto& c : checks_) {
      out << "CHECK " << c.name << ' ' << c.lhs << ' ' << c.op << ' ' << c.rhs << ' '
          << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    if (overall_) out << "OVERALL " << (*overall_ ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

  std::string render_json() const {
    json doc = json::object();
    doc["command"] = command_;
    for (const auto& f : fields_) doc[f.key] = f.value;
    if (!checks_.empty()) {
      json list = json::array();
      for (const auto& c : checks_) {
        list.push_back({{"name", c.name}, {"lhs", c.lhs}, {"op", c.op}, {"rhs", c.rhs},
                        {"result", c.pass ? "PASS" : "FAIL"}});
      }
      doc["checks"] = std::move(list);
    }
    if (overall_) doc["overall"] = *overall_ ? "PASS" : "FAIL";
    return doc.dump(2) + "\n";
  }

  std::string command_;
  std::vector<Field> fields_;
  std::vector<Check> checks_;
  std::optional<bool> overall_;
  bool bare_ = false;
};

struct Options {
  std::string format = "text";
  std::string file;
  std::string second_file;
  std::string subset;
  std::string over;
  std::string control = "log:8";
  int cap = 20;
  std::string glue;
  std::string output;
  std::string signature = "R:3";
  int rounds = 1;
  int max_base = 1;
  int max_new = 1;
  int max_points = 20;
  std::uint64_t seed = 0;
  int n = 3;
  int base = 8;
  std::int64_t max_materialized = 1 << 20;
  std::string base_c;
  std::string base_t;
  int c_point = 0;
  std::string t_points;
  int show = 5;
  int modulus = 7;
  std::string set;
  int samples = 100;
  std::uint64_t sample_seed = 1;
  int generate = 0;
  int factors = 2;
  bool emit = false;
  std::string nu;
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

json points_json(const std::vector<Point>& points) {
  json a = json::array();
  for (Point p : points) a.push_back(p);
  return a;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Check bool_check(std::string name, bool value) {
  return {std::move(name), bool_text(value), "==", "true", value};
}

Gluing parse_gluing(const std::string& text) {
  Gluing gluing;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "gluing entries look like left:right, got '" + item + "'");
    }
    auto left = parse_point_list(item.substr(0, colon));
    auto right = parse_point_list(item.substr(colon + 1));
    if (left.size() != 1 || right.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "bad gluing entry '" + item + "'");
    }
    gluing.emplace_back(left[0], right[0]);
  }
  return gluing;
}

// Each command fills the report and returns its exit status (0 or 1).
int cmd_delta(const Options& o, Report& r) {
  const FinStruct s = read_structure_file(o.file);
  const int value = o.subset.empty() ? delta(s) : delta(s, make_point_set(parse_point_list(o.subset), s.size()));
  r.set("delta", value);
  r.set_bare();
  return 0;
}

int cmd_selfsuff(const Options& o, Report& r) {
  const FinStruct s = read_structure_file(o.file);
  const bool ok = is_self_sufficient(s, make_point_set(parse_point_list(o.subset), s.size()));
  r.set("self_sufficient", ok);
  return ok ? 0 : 1;
}

int cmd_closure(const Options& o, Report& r) {
  const FinStruct s = read_structure_file(o.file);
  const ClosureResult c = closure(s, make_point_set(parse_point_list(o.subset), s.size()));
  r.set("closure", points_json(c.closure));
  r.set("dimension", c.dimension);
  return 0;
}

int cmd_dim(const Options& o, Report& r) {
  const FinStruct s = read_structure_file(o.file);
  const PointSet x = make_point_set(parse_point_list(o.subset), s.size());
  if (!o.over.empty()) {
    r.set("dim", dim_rel(s, x, make_point_set(parse_point_list(o.over), s.size())));
  } else {
    const DimReport d = dim_report(s, x);
    r.set("dim", d.value);
    if (d.outside_k0) r.set("outside_k0", true);
  }
  r.set_bare();
  return 0;
}

int cmd_kf(const Options& o, Report& r) {
  const FinStruct s = read_structure_file(o.file);
  const ControlFunction f = parse_control(o.control);
  const KfResult k = kf_member(s, f, o.cap);
  r.set("control", f.describe());
  r.set("member", k.member);
  if (k.witness) r.set("witness", points_json(*k.witness));
  return k.member ? 0 : 1;
}

int cmd_goodf(const Options& o, Report& r) {
  const ControlFunction f = parse_control(o.control);
  const GoodFReport g = good_f_report(f);
  r.set("control", f.describe());
  r.set("free_amalgamation", g.free_amalgamation);
  r.set("dim_theorem", g.dim_theorem);
  r.set("slow_growth", g.slow_growth);
  r.set("authoritative", g.authoritative);
  return g.free_amalgamation && g.dim_theorem && g.slow_growth ? 0 : 1;
}

int cmd_amalgam(const Options& o, Report& r, bool with_control) {
  const FinStruct left = read_structure_file(o.file);
  const FinStruct right = read_structure_file(o.second_file);
  const Gluing gluing = parse_gluing(o.glue);
  int status = 0;
  Amalgam amalgam;
  if (with_control) {
    const ControlFunction f = parse_control(o.control);
    FreeAmalgamationCheck check = check_free_amalgamation_instance(left, right, gluing, f, o.cap);
    r.add_check(bool_check("left_self_sufficient", check.left_self_sufficient));
    r.add_check(bool_check("right_self_sufficient", check.right_self_sufficient));
    r.add_check(bool_check("in_class", check.in_class));
    r.set_overall(check.holds());
    status = check.holds() ? 0 : 1;
    amalgam = std::move(check.amalgam);
  } else {
    amalgam = free_amalgam(left, right, gluing);
  }
  if (o.output.empty()) {
    r.set("structure", serialize(amalgam.structure), lines_of(serialize(amalgam.structure)));
  } else {
    write_structure_file(o.output, amalgam.structure);
    r.set("points", amalgam.structure.size());
    r.set("tuples", amalgam.structure.tuple_count());
    r.set("delta", delta(amalgam.structure));
    r.set("right_map", points_json(amalgam.right_map));
  }
  return status;
}

int cmd_generic_build(const Options& o, Report& r, const Budget& budget) {
  const ControlFunction f = parse_control(o.control);
  BuildOptions options;
  options.rounds = o.rounds;
  options.max_base = o.max_base;
  options.max_new = o.max_new;
  options.max_points = o.max_points;
  options.seed = o.seed;
  const GenericChain chain = build_generic(f, parse_signature(o.signature), options, budget);
  if (!o.output.empty()) save_chain(chain, o.output);
  r.set("control", f.describe());
  r.set("seed", o.seed);
  r.set("stages", chain.stages.size());
  r.set("tail_points", chain.tail().size());
  r.set("tail_tuples", chain.tail().tuple_count());
  r.set("tail_delta", delta(chain.tail()));
  return 0;
}

int cmd_structure_output(const Options& o, Report& r, const FinStruct& s, bool parametric) {
  if (o.output.empty()) {
    r.set("structure", serialize(s), lines_of(serialize(s)));
    return 0;
  }
  write_structure_file(o.output, s);
  r.set("points", s.size());
  r.set("tuples", s.tuple_count());
  r.set("delta", delta(s));
  if (parametric) r.set("kf_parametric", flower_kf_parametric({o.n, o.base}));
  return 0;
}

int cmd_verify_hrcon(const Options& o, Report& r) {
  const HrConReport report = verify_hrcon(o.n, o.base);
  r.set("n", o.n);
  r.set("base", o.base);
  for (const auto& c : report.checks) {
    r.add_check({c.name, c.lhs.str(), c.op, c.rhs.str(), c.pass});
  }
  r.set_overall(report.overall);
  return report.overall ? 0 : 1;
}

int cmd_tech_f(const Options& o, Report& r) {
  TechFInput input;
  input.c_part = read_structure_file(o.file);
  input.t_part = read_structure_file(o.second_file);
  input.base_in_c = parse_point_list(o.base_c);
  input.base_in_t = parse_point_list(o.base_t);
  input.c = o.c_point;
  input.t = parse_point_list(o.t_points);
  const ControlFunction f = parse_control(o.control);
  const TechF gadget = build_tech_F(input);
  const TechFReport report = verify_tech_F(gadget, f, o.cap);
  const int delta_a = delta(input.c_part, make_point_set(input.base_in_c, input.c_part.size()));
  const int expected = delta(input.c_part) + delta(input.t_part) - delta_a;
  const int actual = delta(gadget.structure);
  r.set("control", f.describe());
  r.set("points", gadget.structure.size());
  r.set("s_points", points_json(gadget.s));
  if (!o.output.empty()) write_structure_file(o.output, gadget.structure);
  r.add_check(bool_check("base_with_s_self_sufficient", report.base_with_s_leq));
  r.add_check(bool_check("c_self_sufficient", report.c_leq));
  r.add_check(bool_check("t_self_sufficient", report.t_leq));
  r.add_check(bool_check("in_class", report.in_class));
  r.add_check({"delta_formula", std::to_string(actual), "==", std::to_string(expected), actual == expected});
  r.set_overall(r.checks_pass());
  return r.checks_pass() ? 0 : 1;
}

int cmd_cor23(const Options& o, Report& r, const Budget& budget) {
  const FinStruct s = read_structure_file(o.file);
  const Cor23Report report = cor23_search(s, {o.n, o.base}, o.show, budget.enumeration);
  r.set("e_size", report.e_size);
  r.set("solutions", report.solution_count);
  r.set("solutions_in_e", report.solutions_in_e);
  r.set("max_dimension", report.max_dimension);
  r.set("target", report.target);
  r.set("truncated", report.truncated);
  json listed = json::array();
  for (const auto& sol : report.solutions) listed.push_back(points_json(sol));
  r.set("solution", listed);
  return 0;
}

int cmd_szemeredi(const Options& o, Report& r, const Budget& budget) {
  const CyclicInstance inst = make_instance(o.modulus, o.n, parse_point_list(o.set));
  const auto e = build_E(inst, budget);
  const HypothesesReport h = verify_main_hypotheses(inst, e, o.samples, o.sample_seed);
  std::int64_t total = 0, nondegenerate = 0, failures = 0;
  std::vector<Progression> shown;
  const bool complete = for_each_solution(
      inst, e,
      [&](TupleCode code) {
        ++total;
        const Progression p = extract_progression(inst, decode(code, inst.modulus, inst.length));
        if (!p.valid) ++failures;
        if (!p.nondegenerate) return;
        ++nondegenerate;
        if (static_cast<int>(shown.size()) < o.show) shown.push_back(p);
      },
      budget);
  const Lemma26Report lemma = lemma26_checks(inst, e, o.samples, o.sample_seed);

  auto rational = [](const Rational& q) {
    std::ostringstream s;
    s << q;
    return s.str();
  };
  r.set("modulus", inst.modulus);
  r.set("length", inst.length);
  r.set("modulus_prime", inst.modulus_is_prime());
  r.set("seed", o.sample_seed);
  r.set("samples", o.samples);
  r.set("e_size", e.size());
  r.set("a", rational(h.a));
  r.set("l", h.l);
  r.set("k", h.k_exact);
  r.set("max_sampled_ratio", rational(h.max_sampled_ratio));
  r.set("solutions", total);
  r.set("nondegenerate", nondegenerate);
  r.set("progression_failures", failures);
  r.set("lemma26_checks", lemma.checks);
  r.set("lemma26_violations", lemma.violations);
  r.set("truncated", !complete);
  json aps = json::array();
  std::vector<std::string> ap_lines;
  for (const auto& p : shown) {
    aps.push_back({{"a", p.a}, {"d", p.d}, {"terms", p.terms}});
    std::string line = "AP " + std::to_string(p.a) + " " + std::to_string(p.d) + " :";
    for (size_t i = 0; i < p.terms.size(); ++i) line += (i ? ", " : " ") + std::to_string(p.terms[i]);
    ap_lines.push_back(line);
  }
  r.set("progressions", aps, ap_lines.empty() ? std::vector<std::string>{"progressions none"} : ap_lines);
  const bool ok = h.holds() && failures == 0 && lemma.violations == 0;
  return ok ? 0 : 1;
}

int cmd_ms_check(const Options& o, Report& r) {
  DimMeasureCatalog catalog;
  if (o.generate > 0) {
    catalog = counting_catalog(o.generate, o.factors);
  } else if (!o.file.empty()) {
    catalog = read_catalog_file(o.file);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "ms-check needs a catalog file or --generate N");
  }
  if (o.emit) {
    r.set("catalog", serialize(catalog), lines_of(serialize(catalog)));
    return 0;
  }
  if (!o.nu.empty()) {
    const auto comma = o.nu.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "--nu expects S,D");
    std::ostringstream value;
    value << nu_normalize(catalog, o.nu.substr(0, comma), o.nu.substr(comma + 1));
    r.set("nu", value.str());
  }
  const MsReport report = check_all(catalog);
  for (const auto& c : report.checks) r.add_check({c.name, c.lhs, c.op, c.rhs, c.pass});
  r.set_overall(report.overall());
  return report.overall() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Predimension, amalgamation and measure verification workbench", "amalgam"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto structure_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Structure file")->required();
  };
  auto subset = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--subset", o.subset, "Comma-separated point list");
    if (required) opt->required();
  };
  auto control = [&](CLI::App* sub) {
    sub->add_option("--control", o.control, "log:B or table:FILE")->capture_default_str();
  };
  auto cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Largest structure checked by subset enumeration")->capture_default_str();
  };
  auto flower_params = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Arity of S")->required();
    sub->add_option("--base", o.base, "Base b of the control function log_b")->required();
  };

  auto* delta_cmd = app.add_subcommand("delta", "Predimension of a structure or of a subset");
  structure_file(delta_cmd);
  subset(delta_cmd, false);

  auto* selfsuff_cmd = app.add_subcommand("selfsuff", "Whether a subset is self-sufficient");
  structure_file(selfsuff_cmd);
  subset(selfsuff_cmd, true);

  auto* closure_cmd = app.add_subcommand("closure", "Self-sufficient closure of a subset");
  structure_file(closure_cmd);
  subset(closure_cmd, false);

  auto* dim_cmd = app.add_subcommand("dim", "Dimension d(X) or d(X/Y)");
  structure_file(dim_cmd);
  subset(dim_cmd, false);
  dim_cmd->add_option("--over", o.over, "Base set Y for relative dimension");

  auto* kf_cmd = app.add_subcommand("kf", "Membership in K_f");
  structure_file(kf_cmd);
  control(kf_cmd);
  cap(kf_cmd);

  auto* goodf_cmd = app.add_subcommand("goodf", "Good-control-function conditions");
  control(goodf_cmd);

  auto* amalgam_cmd = app.add_subcommand("amalgam", "Free amalgam of two structures");
  amalgam_cmd->add_option("left", o.file, "Left structure file")->required();
  amalgam_cmd->add_option("right", o.second_file, "Right structure file")->required();
  amalgam_cmd->add_option("--glue", o.glue, "Pairs left:right identified in the amalgam");
  auto* amalgam_control = amalgam_cmd->add_option("--control", o.control,
                                                  "Also check the instance against K_f");
  cap(amalgam_cmd);
  amalgam_cmd->add_option("--output", o.output, "Write the amalgam here");

  auto* generic_cmd = app.add_subcommand("generic-build", "Finite approximation of the generic structure");
  control(generic_cmd);
  generic_cmd->add_option("--signature", o.signature, "Signature like R:3,S:2")->capture_default_str();
  generic_cmd->add_option("--rounds", o.rounds)->capture_default_str();
  generic_cmd->add_option("--max-base", o.max_base)->capture_default_str();
  generic_cmd->add_option("--max-new", o.max_new)->capture_default_str();
  generic_cmd->add_option("--max-points", o.max_points)->capture_default_str();
  generic_cmd->add_option("--seed", o.seed, "0 keeps enumeration order")->capture_default_str();
  generic_cmd->add_option("--output", o.output, "Directory for the saved chain");

  auto* flower_cmd = app.add_subcommand("flower", "Build the flower structure");
  flower_params(flower_cmd);
  flower_cmd->add_option("--output", o.output, "Write the structure here");
  flower_cmd->add_option("--max-points", o.max_materialized)->capture_default_str();

  auto* glued_cmd = app.add_subcommand("glued", "Build the glued structure");
  flower_params(glued_cmd);
  glued_cmd->add_option("--output", o.output, "Write the structure here");
  glued_cmd->add_option("--max-points", o.max_materialized)->capture_default_str();

  auto* hrcon_cmd = app.add_subcommand("verify-hrcon", "Exact counterexample arithmetic");
  flower_params(hrcon_cmd);

  auto* tech_cmd = app.add_subcommand("tech-f", "Build and check the gadget F");
  tech_cmd->add_option("--c", o.file, "Structure C")->required();
  tech_cmd->add_option("--t", o.second_file, "Structure T")->required();
  tech_cmd->add_option("--base-c", o.base_c, "Common part A as points of C");
  tech_cmd->add_option("--base-t", o.base_t, "Common part A as points of T, same order");
  tech_cmd->add_option("--c-point", o.c_point, "Point c of C outside A")->required();
  tech_cmd->add_option("--t-points", o.t_points, "Points t_1..t_r of T outside A");
  control(tech_cmd);
  cap(tech_cmd);
  tech_cmd->add_option("--output", o.output, "Write F here");

  auto* cor23_cmd = app.add_subcommand("cor23-search", "Amalgamation solutions for embedded flowers");
  structure_file(cor23_cmd);
  flower_params(cor23_cmd);
  cor23_cmd->add_option("--show", o.show, "How many solutions to list")->capture_default_str();

  auto* szem_cmd = app.add_subcommand("szemeredi", "Cyclic progression harness");
  szem_cmd->add_option("--modulus", o.modulus, "N")->required();
  szem_cmd->add_option("--len", o.n, "Tuple length n")->required();
  szem_cmd->add_option("--set", o.set, "Elements of A")->required();
  szem_cmd->add_option("--seed", o.sample_seed, "Sampling seed")->capture_default_str();
  szem_cmd->add_option("--samples", o.samples, "Random samples")->capture_default_str();
  szem_cmd->add_option("--show", o.show, "Progressions to list")->capture_default_str();

  auto* ms_cmd = app.add_subcommand("ms-check", "Dimension-measure axiom checks");
  ms_cmd->add_option("file", o.file, "Catalog file");
  ms_cmd->add_option("--generate", o.generate, "Use the counting catalog on Z_N^k");
  ms_cmd->add_option("--factors", o.factors, "k for --generate")->capture_default_str();
  ms_cmd->add_flag("--emit", o.emit, "Print the catalog instead of checking it");
  ms_cmd->add_option("--nu", o.nu, "Also print nu^S(D) for S,D");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Report report(chosen->get_name());
  int status = 0;
  try {
    const Budget budget = Budget::from_environment();
    const std::string name = chosen->get_name();
    if (name == "delta") {
      status = cmd_delta(o, report);
    } else if (name == "selfsuff") {
      status = cmd_selfsuff(o, report);
    } else if (name == "closure") {
      status = cmd_closure(o, report);
    } else if (name == "dim") {
      status = cmd_dim(o, report);
    } else if (name == "kf") {
      status = cmd_kf(o, report);
    } else if (name == "goodf") {
      status = cmd_goodf(o, report);
    } else if (name == "amalgam") {
      status = cmd_amalgam(o, report, amalgam_control->count() > 0);
    } else if (name == "generic-build") {
      status = cmd_generic_build(o, report, budget);
    } else if (name == "flower") {
      status = cmd_structure_output(o, report, build_flower({o.n, o.base}, o.max_materialized), true);
    } else if (name == "glued") {
      status = cmd_structure_output(o, report, build_glued({o.n, o.base}, o.max_materialized), false);
    } else if (name == "verify-hrcon") {
      status = cmd_verify_hrcon(o, report);
    } else if (name == "tech-f") {
      status = cmd_tech_f(o, report);
    } else if (name == "cor23-search") {
      status = cmd_cor23(o, report, budget);
    } else if (name == "szemeredi") {
      status = cmd_szemeredi(o, report, budget);
    } else if (name == "ms-check") {
      status = cmd_ms_check(o, report);
    }
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  out << report.render(o.format == "json");
  return status;
}

}  // namespace amalgam::cli
