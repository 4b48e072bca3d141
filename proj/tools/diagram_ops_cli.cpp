// Copyright 2026 The diagram-ops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Text output uses the partition and power-sum
// grammars; --json switches every command to machine-readable output.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diagram_ops/characters.hpp"
#include "diagram_ops/class_algebra.hpp"
#include "diagram_ops/config.hpp"
#include "diagram_ops/diagram_sum.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/hurwitz.hpp"
#include "diagram_ops/json_io.hpp"
#include "diagram_ops/psym.hpp"
#include "diagram_ops/selftest.hpp"
#include "diagram_ops/w_ops.hpp"

namespace dops = diagram_ops;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;
constexpr int kHardMaxDegree = 14;

struct CliConfig {
  std::optional<std::string> cache_dir;
  int max_degree = 10;
  bool json = false;
  std::uint64_t seed = dops::kDefaultSeed;
};

void emit(const CliConfig& cfg, const dops::Json& doc, const std::string& text) {
  if (cfg.json) std::cout << doc.dump() << '\n';
  else std::cout << text << '\n';
}

void check_degree(const CliConfig& cfg, int degree, const std::string& what) {
  if (degree > cfg.max_degree)
    throw dops::ResourceError(what + " has degree " + std::to_string(degree) +
                              ", above --max-degree " + std::to_string(cfg.max_degree));
}

dops::Partition read_partition(const CliConfig& cfg, const std::string& text) {
  dops::Partition d = dops::parse_partition(text);
  check_degree(cfg, d.degree(), to_string(d));
  return d;
}

void cmd_mult(const CliConfig& cfg, const std::string& lhs, const std::string& rhs) {
  const dops::DiagramSum a = dops::parse_diagram_sum(lhs);
  const dops::DiagramSum b = dops::parse_diagram_sum(rhs);
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms())
      check_degree(cfg, da.degree() + db.degree(), "product " + to_string(da) + "*" + to_string(db));
  const dops::DiagramSum product = dops::mult_sum(a, b);
  emit(cfg, dops::to_json(product), to_string(product));
}

void cmd_chartable(const CliConfig& cfg, int n) {
  if (n < 0) throw dops::ArgumentError("chartable: negative degree");
  check_degree(cfg, n, "character table");
  const auto table = dops::char_table(n);
  std::string text = "n = " + std::to_string(n) + "\nclasses:";
  for (const auto& d : table->order()) text += " " + to_string(d);
  for (std::size_t r = 0; r < table->size(); ++r) {
    text += "\n" + to_string(table->order()[r]) + ":";
    for (std::int64_t v : table->row(r)) text += " " + std::to_string(v);
  }
  emit(cfg, dops::to_json(*table), text);
}

void cmd_schur(const CliConfig& cfg, const std::string& irrep) {
  const dops::PPoly s = dops::schur(read_partition(cfg, irrep));
  emit(cfg, dops::to_json(s), to_string(s));
}

void cmd_eigenvalue(const CliConfig& cfg, const std::string& diagram, const std::string& irrep) {
  const dops::Partition d = read_partition(cfg, diagram);
  const dops::Partition r = read_partition(cfg, irrep);
  const dops::Rational value = dops::eigenvalue(d, r);
  emit(cfg, {{"diagram", to_string(d)}, {"irrep", dops::to_string(r)}, {"value", dops::to_string(value)}},
       dops::to_string(value));
}

void cmd_wapply(const CliConfig& cfg, const std::string& diagram, const std::string& poly,
                bool explicit_route, std::optional<int> bound) {
  const dops::DiagramSum x = dops::parse_diagram_sum(diagram);
  dops::PPoly f = dops::parse_ppoly(poly).truncated(bound);
  check_degree(cfg, f.max_degree(), "polynomial");
  dops::PPoly result;
  if (explicit_route) {
    for (const auto& [d, c] : x.terms()) result += dops::apply_explicit(dops::explicit_operator(d), f) * c;
    result = result.truncated(f.bound());
  } else {
    result = dops::apply_spectral(x, f);
  }
  emit(cfg, dops::to_json(result), to_string(result));
}

void cmd_hurwitz(const CliConfig& cfg, std::optional<int> degree, const std::vector<std::string>& diagrams,
                 const std::optional<std::string>& final_diagram) {
  dops::BranchSpec spec;
  std::vector<dops::Partition> branches;
  int n = 0;
  for (const auto& text : diagrams) {
    branches.push_back(read_partition(cfg, text));
    n = std::max(n, branches.back().degree());
  }
  if (final_diagram) {
    spec.final_diagram = read_partition(cfg, *final_diagram);
    n = spec.final_diagram->degree();
  }
  if (degree) {
    if (spec.final_diagram && *degree != n)
      throw dops::ArgumentError("--n disagrees with the degree of --final");
    n = *degree;
  }
  check_degree(cfg, n, "Hurwitz bracket");
  spec.degree = n;
  for (const auto& b : branches) spec.branches.emplace_back(b, 1);
  const dops::Rational value = dops::hurwitz_padded(spec);

  dops::Json doc;
  doc["n"] = n;
  doc["branches"] = dops::Json::array();
  for (const auto& b : branches) doc["branches"].push_back(to_string(b));
  if (spec.final_diagram) doc["final"] = to_string(*spec.final_diagram);
  doc["value"] = dops::to_string(value);
  emit(cfg, doc, dops::to_string(value));
}

std::string beta_label(const dops::HurwitzSeries& series, const std::vector<int>& index) {
  std::string label;
  for (std::size_t d = 0; d < index.size(); ++d) {
    if (index[d] == 0) continue;
    if (!label.empty()) label += '*';
    label += "beta" + to_string(series.directions[d]) + "^" + std::to_string(index[d]);
  }
  return label.empty() ? "1" : label;
}

void cmd_evolve(const CliConfig& cfg, const std::vector<std::string>& directions, int p_bound, int order,
                bool check) {
  check_degree(cfg, p_bound, "p-bound");
  std::vector<dops::Partition> dirs;
  for (const auto& text : directions) dirs.push_back(read_partition(cfg, text));
  const dops::HurwitzSeries series = dops::generating_function(dirs, p_bound, order);

  dops::Json doc = dops::to_json(series);
  std::string text;
  for (const auto& [index, poly] : series.coefficients) {
    if (!text.empty()) text += '\n';
    text += beta_label(series, index) + ": " + to_string(poly);
  }
  if (check) {
    dops::Json residuals = dops::Json::object();
    for (const auto& d : series.directions) {
      const dops::Rational r = dops::pde_residual(d, series);
      residuals[to_string(d)] = dops::to_string(r);
      text += "\nresidual " + to_string(d) + ": " + dops::to_string(r);
    }
    doc["residuals"] = residuals;
  }
  emit(cfg, doc, text);
}

int cmd_selftest(const CliConfig& cfg, const std::string& level) {
  const auto report = dops::run_selftest(
      level == "full" ? dops::SelftestLevel::full : dops::SelftestLevel::quick, cfg.seed);
  std::string text;
  for (const auto& s : report.suites) {
    text += "suite " + s.name + ": checked " + std::to_string(s.checked) + ", failed " +
            std::to_string(s.failed) + "\n";
    for (const auto& f : s.failures) text += "  failure: " + f + "\n";
  }
  text += "selftest " + level + ": " + (report.passed() ? "PASS" : "FAIL");
  emit(cfg, dops::to_json(report), text);
  return report.passed() ? 0 : kExitInternal;
}

int report_error(const CliConfig& cfg, const std::string& kind, const std::string& msg, int code) {
  if (cfg.json) {
    std::cout << dops::Json{{"error", {{"kind", kind}, {"msg", msg}}}}.dump() << '\n';
  } else {
    std::cerr << "error (" << kind << "): " << msg << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the algebra of Young diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  CliConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable JSON output");
  app.add_option("--max-degree", cfg.max_degree, "Largest diagram degree any command may touch")
      ->check(CLI::Range(0, kHardMaxDegree));
  app.add_option("--cache-dir", cfg.cache_dir, "Character table cache directory");
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling");

  std::string mult_lhs, mult_rhs;
  auto* mult = app.add_subcommand("mult", "Product of two diagram sums");
  mult->add_option("lhs", mult_lhs)->required();
  mult->add_option("rhs", mult_rhs)->required();

  int table_n = 0;
  auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
  chartable->add_option("n", table_n)->required();

  std::string schur_irrep;
  auto* schur = app.add_subcommand("schur", "Schur function in power sums");
  schur->add_option("irrep", schur_irrep)->required();

  std::string ev_diagram, ev_irrep;
  auto* eigen = app.add_subcommand("eigenvalue", "Eigenvalue of W(diagram) on s_irrep");
  eigen->add_option("diagram", ev_diagram)->required();
  eigen->add_option("irrep", ev_irrep)->required();

  std::string wa_diagram, wa_poly;
  bool wa_explicit = false;
  std::optional<int> wa_bound;
  auto* wapply = app.add_subcommand("wapply", "Apply W(diagram) to a power-sum polynomial");
  wapply->add_option("diagram", wa_diagram, "Diagram or diagram sum")->required();
  wapply->add_option("poly", wa_poly, "Polynomial, e.g. \"1/2*p1^2 + 1/2*p2\"")->required();
  wapply->add_flag("--explicit", wa_explicit, "Use the closed-form differential operators");
  wapply->add_option("--bound", wa_bound, "Truncation bound for the polynomial");

  std::optional<int> hz_n;
  std::vector<std::string> hz_diagrams;
  std::optional<std::string> hz_final;
  auto* hurwitz = app.add_subcommand("hurwitz", "Genus-0 Hurwitz number of padded branch types");
  hurwitz->add_option("--n", hz_n, "Degree of the covering");
  hurwitz->add_option("--final", hz_final, "Final (unpadded) diagram");
  // Branch diagrams are read from the raw extras: CLI11 would split "[2,1]" as a list.
  hurwitz->allow_extras();
  hurwitz->footer("Positional arguments: the branch diagrams, e.g. \"[2]\" \"[2]\" \"[1,1]\".");

  std::vector<std::string> ev_dirs;
  int ev_pbound = 4;
  int ev_order = 2;
  bool ev_check = false;
  auto* evolve = app.add_subcommand("evolve", "Truncated Hurwitz generating function");
  evolve->add_option("-d,--direction", ev_dirs, "Active beta directions (repeatable)")->required()->allow_extra_args(false);
  evolve->add_option("--p-bound", ev_pbound, "Largest p-degree kept")->check(CLI::NonNegativeNumber);
  evolve->add_option("--order", ev_order, "Largest total beta order kept")->check(CLI::Range(0, 8));
  evolve->add_flag("--check", ev_check, "Also report the flow-equation residual per direction");

  std::string st_level = "quick";
  auto* selftest = app.add_subcommand("selftest", "Run the oracle-equivalence suites");
  selftest->add_option("level", st_level)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (cfg.cache_dir) dops::set_cache_directory(std::filesystem::path(*cfg.cache_dir));
    dops::limits().char_table_degree = cfg.max_degree;
    dops::limits().algebra_degree = cfg.max_degree;

    if (!*hurwitz && !app.remaining().empty())
      throw dops::ArgumentError("unexpected argument " + app.remaining().front());

    if (*mult) cmd_mult(cfg, mult_lhs, mult_rhs);
    else if (*chartable) cmd_chartable(cfg, table_n);
    else if (*schur) cmd_schur(cfg, schur_irrep);
    else if (*eigen) cmd_eigenvalue(cfg, ev_diagram, ev_irrep);
    else if (*wapply) cmd_wapply(cfg, wa_diagram, wa_poly, wa_explicit, wa_bound);
    else if (*hurwitz) {
      hz_diagrams = app.remaining();
      if (hz_diagrams.empty()) throw dops::ArgumentError("hurwitz: at least one branch diagram is required");
      cmd_hurwitz(cfg, hz_n, hz_diagrams, hz_final);
    }
    else if (*evolve) cmd_evolve(cfg, ev_dirs, ev_pbound, ev_order, ev_check);
    else if (*selftest) return cmd_selftest(cfg, st_level);
    return 0;
  } catch (const dops::ParseError& e) {
    return report_error(cfg, "parse", e.what(), kExitParse);
  } catch (const dops::ArgumentError& e) {
    return report_error(cfg, "argument", e.what(), kExitParse);
  } catch (const dops::ResourceError& e) {
    return report_error(cfg, "resource", e.what(), kExitResource);
  } catch (const dops::ConsistencyError& e) {
    return report_error(cfg, "internal", e.what(), kExitInternal);
  } catch (const std::exception& e) {
    return report_error(cfg, "internal", e.what(), kExitInternal);
  }
}
