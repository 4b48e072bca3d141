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

#include "diagram_ops/selftest.hpp"

#include <algorithm>
#include <random>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/class_algebra.hpp"
#include "diagram_ops/hurwitz.hpp"
#include "diagram_ops/kernels.hpp"
#include "diagram_ops/permutation.hpp"
#include "diagram_ops/psym.hpp"
#include "diagram_ops/w_ops.hpp"

namespace diagram_ops {
namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checked;
    if (ok) return;
    ++result_.failed;
    if (result_.failures.size() < kMaxReportedFailures) result_.failures.push_back(what);
  }

  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<Partition> partitions_up_to(int lo, int hi) {
  std::vector<Partition> out;
  for (int n = lo; n <= hi; ++n)
    for (Partition& d : partitions_of(n)) out.push_back(std::move(d));
  return out;
}

Integer hook_length_dimension(const Partition& r) {
  const Partition c = conjugate(r);
  Integer hooks = 1;
  for (std::size_t i = 0; i < r.length(); ++i)
    for (int j = 0; j < r[i]; ++j)
      hooks *= (r[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return factorial(static_cast<unsigned>(r.degree())) / hooks;
}

SuiteResult partitions_suite(int top) {
  Suite s("partitions");
  for (int n = 0; n <= top; ++n) {
    Integer total = 0;
    const auto& by_type = permutations_by_type(n);
    for (const Partition& d : partitions_of(n)) {
      total += class_size(d);
      s.check(kappa(d) * Rational(aut_order(d)) == 1, "kappa * aut for " + to_string(d));
      s.check(class_size(d) == by_type.at(d).size(), "class size vs enumeration for " + to_string(d));
    }
    s.check(total == factorial(static_cast<unsigned>(n)), "class sizes sum to n! for n=" + std::to_string(n));
  }
  return s.finish();
}

SuiteResult characters_suite(int top) {
  Suite s("characters");
  for (int n = 1; n <= top; ++n) {
    const auto table = char_table(n);
    const auto& order = table->order();
    const Integer n_fact = factorial(static_cast<unsigned>(n));
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t b = 0; b < order.size(); ++b) {
        Integer rows = 0;
        Integer cols = 0;
        for (std::size_t c = 0; c < order.size(); ++c) {
          rows += class_size(order[c]) * static_cast<long>(table->at(a, c)) * static_cast<long>(table->at(b, c));
          cols += Integer(static_cast<long>(table->at(c, a))) * static_cast<long>(table->at(c, b));
        }
        s.check(rows == (a == b ? n_fact : Integer(0)), "row orthogonality n=" + std::to_string(n));
        s.check(cols == (a == b ? Integer(aut_order(order[a])) : Integer(0)),
                "column orthogonality n=" + std::to_string(n));
      }
      s.check(dimension(order[a]) == hook_length_dimension(order[a]), "hook length for " + to_string(order[a]));
      s.check(d_R(order[a]) == d_R_product_formula(order[a]), "d_R product formula for " + to_string(order[a]));
    }
    s.check(kernels::character_table_entries(n, kernels::Exec::serial) == table->entries(),
            "serial vs parallel table n=" + std::to_string(n));
  }
  return s.finish();
}

SuiteResult structure_constant_suite(int top) {
  Suite s("structure_constants");
  for (int n = 1; n <= std::min(top, kOracleMaxDegree); ++n) {
    const auto order = partitions_of(n);
    for (const Partition& a : order)
      for (const Partition& b : order)
        for (const Partition& c : order)
          s.check(structure_constant(a, b, c) == oracle_structure_constant(a, b, c),
                  "C^" + to_string(c) + "_{" + to_string(a) + "," + to_string(b) + "}");
    s.check(kernels::structure_constant_tensor(n, kernels::Exec::serial) ==
                kernels::structure_constant_tensor(n, kernels::Exec::parallel),
            "serial vs parallel tensor n=" + std::to_string(n));
  }
  return s.finish();
}

SuiteResult algebra_suite(int factor_degree) {
  Suite s("algebra");
  const auto factors = partitions_up_to(0, factor_degree);
  for (const Partition& a : factors) {
    for (const Partition& b : factors) {
      const DiagramSum ab = mult_infinity(a, b);
      s.check(ab == mult_infinity(b, a), "commutativity " + to_string(a) + " " + to_string(b));
      for (const auto& [d, c] : ab.terms())
        s.check(d.degree() >= std::max(a.degree(), b.degree()) && d.degree() <= a.degree() + b.degree(),
                "grading of " + to_string(a) + " " + to_string(b));
      for (const Partition& c : factors)
        s.check(mult_sum(ab, DiagramSum(c)) == mult_sum(DiagramSum(a), mult_infinity(b, c)),
                "associativity " + to_string(a) + " " + to_string(b) + " " + to_string(c));
    }
  }
  return s.finish();
}

SuiteResult multiplicativity_suite(int top, int factor_degree) {
  Suite s("phi_multiplicativity");
  const auto factors = partitions_up_to(0, factor_degree);
  const auto irreps = partitions_up_to(0, top);
  for (const Partition& a : factors) {
    for (const Partition& b : factors) {
      const DiagramSum ab = mult_infinity(a, b);
      for (const Partition& r : irreps) {
        Rational rhs = 0;
        for (const auto& [d, c] : ab.terms()) rhs += c * phi(r, d);
        s.check(phi(r, a) * phi(r, b) == rhs,
                "phi_" + to_string(r) + " on " + to_string(a) + " " + to_string(b));
      }
    }
  }
  return s.finish();
}

SuiteResult schur_suite(int top, std::mt19937_64& rng) {
  Suite s("schur");
  for (const Partition& r : partitions_up_to(0, top)) {
    s.check(schur(r) == schur_from_characters(r), "Jacobi-Trudi vs characters for " + to_string(r));
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t count = r.length() + static_cast<std::size_t>(rng() % 3);
      std::vector<Rational> xs;
      while (xs.size() < count) {
        Rational x = make_rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      }
      s.check(eval_at_power_sums(schur(r), xs) == bialternant_eval(r, xs),
              "bialternant vs power sums for " + to_string(r));
    }
  }
  return s.finish();
}

SuiteResult w_operator_suite(int top) {
  Suite s("w_operators");
  for (const Partition& op : explicit_operator_ids()) {
    const DiffOpSpec& spec = explicit_operator(op);
    for (const Partition& r : partitions_up_to(1, top)) {
      const PPoly sr = schur(r);
      const PPoly expected = sr * eigenvalue(op, r);
      s.check(apply_explicit(spec, sr) == expected, "explicit W" + to_string(op) + " on s" + to_string(r));
      s.check(apply_spectral(op, sr) == expected, "spectral W" + to_string(op) + " on s" + to_string(r));
    }
  }
  return s.finish();
}

SuiteResult hurwitz_suite(int top, std::mt19937_64& rng) {
  Suite s("hurwitz");
  const int n_max = std::min(top, 5);
  for (int n = 1; n <= n_max; ++n) {
    const auto order = partitions_of(n);
    for (std::size_t k = 3; k <= 4; ++k) {
      std::size_t combos = 1;
      for (std::size_t i = 0; i < k; ++i) combos *= order.size();
      const bool exhaustive = combos <= 200;
      const std::size_t samples = exhaustive ? combos : 30;
      for (std::size_t t = 0; t < samples; ++t) {
        std::vector<Partition> pts;
        std::size_t code = t;
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t pick = exhaustive ? code % order.size() : rng() % order.size();
          code /= order.size();
          pts.push_back(order[pick]);
        }
        const Rational chain = hurwitz_chain(pts);
        s.check(chain == oracle_tuple_count(pts, n), "chain vs tuple oracle n=" + std::to_string(n));
        s.check(chain >= 0, "nonnegativity");
        if (k == 4) s.check(hurwitz_split(pts, 1) == hurwitz_split(pts, 2), "split independence");
      }
    }
  }
  return s.finish();
}

SuiteResult pde_suite(int p_bound, int order, int direction_degree) {
  Suite s("pde");
  const auto directions = partitions_up_to(1, direction_degree);
  const HurwitzSeries z = generating_function(directions, p_bound, order);
  for (const Partition& y : directions)
    s.check(pde_residual(y, z) == 0, "residual for " + to_string(y));
  s.check(z.at(std::vector<int>(directions.size(), 0)) == exp_p1(p_bound), "Z at beta = 0");
  return s.finish();
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

SelftestReport run_selftest(SelftestLevel level, std::uint64_t seed) {
  SelftestReport report;
  report.level = level;
  report.seed = seed;
  const bool full = level == SelftestLevel::full;
  const int top = full ? 6 : 4;
  std::mt19937_64 rng(seed);

  report.suites.push_back(partitions_suite(top));
  report.suites.push_back(characters_suite(top));
  report.suites.push_back(structure_constant_suite(top));
  report.suites.push_back(algebra_suite(full ? 3 : 2));
  report.suites.push_back(multiplicativity_suite(top, full ? 3 : 2));
  report.suites.push_back(schur_suite(full ? 5 : 4, rng));
  report.suites.push_back(w_operator_suite(top));
  report.suites.push_back(hurwitz_suite(top, rng));
  report.suites.push_back(pde_suite(full ? 5 : 4, full ? 3 : 2, full ? 3 : 2));
  return report;
}

Json to_json(const SelftestReport& report) {
  Json doc;
  doc["level"] = report.level == SelftestLevel::full ? "full" : "quick";
  doc["seed"] = report.seed;
  doc["suites"] = Json::array();
  for (const SuiteResult& s : report.suites) {
    Json suite{{"name", s.name}, {"checked", s.checked}, {"failed", s.failed}};
    if (!s.failures.empty()) suite["failures"] = s.failures;
    doc["suites"].push_back(std::move(suite));
  }
  doc["passed"] = report.passed();
  return doc;
}

}  // namespace diagram_ops
