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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/class_algebra.hpp"
#include "diagram_ops/config.hpp"
#include "diagram_ops/hurwitz.hpp"
#include "diagram_ops/psym.hpp"
#include "diagram_ops/selftest.hpp"
#include "diagram_ops/w_ops.hpp"
#include "support/oracles.hpp"

using namespace diagram_ops;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
};

std::vector<Partition> up_to(int lo, int hi) {
  std::vector<Partition> out;
  for (int n = lo; n <= hi; ++n)
    for (const auto& d : partitions_of(n)) out.push_back(d);
  return out;
}

Rational brute_tuples(const std::vector<Partition>& classes, int n) {
  return Rational(oracle::identity_tuples(classes, n)) / Rational(factorial(n));
}

std::string join(const std::vector<Partition>& ds) {
  std::string s;
  for (const auto& d : ds) s += (s.empty() ? "" : " ") + to_string(d);
  return s;
}

void criterion_1(Tally& t) {
  const auto pieces = graded_pieces(Partition{1}, Partition{2});
  t.check(pieces.size() == 2 && pieces[0] == DiagramSum(Partition{2}, 2) &&
              pieces[1] == DiagramSum(Partition{2, 1}),
          [] { return std::string("graded pieces of [1]*[2]"); });
  const auto prod = mult_infinity(Partition{1}, Partition{2});
  t.check(to_string(prod) == "2*[2] + 1*[2,1]", [&] { return "[1]*[2] = " + to_string(prod); });
}

void criterion_2(Tally& t) {
  const auto prod = mult_infinity(Partition{2}, Partition{2});
  t.check(to_string(prod) == "1*[1,1] + 3*[3] + 2*[2,2]", [&] { return "[2]*[2] = " + to_string(prod); });
  const auto mid = mult_same_degree(Partition{2, 1}, Partition{2, 1});
  t.check(mid == parse_diagram_sum("3*[3] + 3*[1,1,1]"), [&] { return "[2,1]o[2,1] = " + to_string(mid); });
  const auto top = mult_same_degree(Partition{2, 1, 1}, Partition{2, 1, 1});
  t.check(top.coeff(Partition{3, 1}) == 3 && top.coeff(Partition{1, 1, 1, 1}) == 6 &&
              top.coeff(Partition{2, 2}) == 2,
          [&] { return "[2,1,1]o[2,1,1] = " + to_string(top); });
}

void criterion_3(Tally& t) {
  auto one = [&](const Partition& a, const Partition& b, const Partition& c) {
    const Integer frob = structure_constant(a, b, c);
    const Integer lib_oracle = oracle_structure_constant(a, b, c);
    const Integer brute(static_cast<long>(oracle::pair_count(a, b, c)));
    t.check(frob == lib_oracle && frob == brute,
            [&] { return "C(" + join({a, b, c}) + ") = " + to_string(frob) + " vs " + to_string(brute); });
  };
  for (int n = 0; n <= 5; ++n) {
    const auto all = partitions_of(n);
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) one(a, b, c);
  }
  std::mt19937_64 rng(kDefaultSeed);
  const auto six = partitions_of(6);
  std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
  for (int i = 0; i < 50; ++i) one(six[pick(rng)], six[pick(rng)], six[pick(rng)]);
}

void criterion_4(Tally& t) {
  const auto irreps = up_to(0, 6);
  for (const auto& r : irreps) {
    const PPoly s = schur(r);
    for (const auto& d : up_to(0, 4)) {
      const PPoly got = apply_spectral(d, s);
      t.check(got == phi(r, d) * s, [&] { return "spectral W" + to_string(d) + " on s" + to_string(r); });
    }
    for (const auto& d : explicit_operator_ids()) {
      const PPoly got = apply_explicit(explicit_operator(d), s);
      t.check(got == phi(r, d) * s, [&] { return "explicit W" + to_string(d) + " on s" + to_string(r); });
    }
  }
}

void criterion_5(Tally& t) {
  const auto factors = up_to(0, 4);
  const auto irreps = up_to(0, 6);
  for (const auto& a : factors)
    for (const auto& b : factors) {
      const DiagramSum prod = mult_infinity(a, b);
      for (const auto& r : irreps) {
        Rational rhs = 0;
        for (const auto& [d, c] : prod.terms()) rhs += c * phi(r, d);
        t.check(phi(r, a) * phi(r, b) == rhs,
                [&] { return "phi multiplicativity " + join({a, b, r}); });
      }
    }
}

void criterion_6(Tally& t) {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), extra(0, 2);
  for (const auto& r : up_to(0, 5)) {
    const PPoly s = schur(r);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t size = std::max<std::size_t>(1, r.length()) + extra(rng);
      std::vector<Rational> xs;
      while (xs.size() < size) {
        const Rational x = make_rational(num(rng), den(rng));
        if (x != 0 && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      }
      const Rational bialt = bialternant_eval(r, xs);
      t.check(eval_at_power_sums(s, xs) == bialt && bialt == oracle::tableau_schur(r, xs),
              [&] { return "Schur evaluation " + to_string(r); });
      xs.push_back(0);
      t.check(bialternant_eval(r, xs) == bialt, [&] { return "stability " + to_string(r); });
    }
  }
}

void criterion_7(Tally& t) {
  std::mt19937_64 rng(kDefaultSeed);
  for (int n = 1; n <= 5; ++n) {
    const auto all = partitions_of(n);
    for (int k = 1; k <= 4; ++k) {
      std::size_t total = 1;
      for (int i = 0; i < k; ++i) total *= all.size();
      const bool exhaustive = total <= 200;
      const std::size_t samples = exhaustive ? total : 200;
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Partition> pts;
        std::size_t code = s;
        for (int i = 0; i < k; ++i) {
          pts.push_back(all[exhaustive ? code % all.size() : rng() % all.size()]);
          code /= all.size();
        }
        const Rational value = k >= 3 ? hurwitz_chain(pts) : hurwitz_bracket(pts);
        const Rational oracle_value = oracle_tuple_count(pts, n);
        t.check(value == oracle_value && value == brute_tuples(pts, n) && value >= 0,
                [&] { return "<" + join(pts) + "> = " + to_string(value); });
      }
    }
  }
  const std::vector<Partition> pinned{Partition{2}, Partition{2}, Partition{1, 1}};
  t.check(hurwitz_chain(pinned) == Rational(1, 2), [] { return std::string("<[2],[2],[1,1]>"); });
  const std::vector<Partition> four(4, Partition{2});
  t.check(hurwitz_chain(four) == Rational(1, 2) && oracle_tuple_count(four, 2) == Rational(1, 2),
          [] { return std::string("four transpositions in S_2"); });
}

void criterion_8(Tally& t) {
  const auto directions = up_to(1, 4);
  const auto z = generating_function(directions, 5, 3);
  t.check(z.at(std::vector<int>(directions.size(), 0)) == exp_p1(5),
          [] { return std::string("initial condition"); });
  const auto& explicit_ids = explicit_operator_ids();
  for (const auto& d : directions) {
    t.check(pde_residual(d, z) == 0, [&] { return "spectral residual " + to_string(d); });
    if (std::find(explicit_ids.begin(), explicit_ids.end(), d) != explicit_ids.end())
      t.check(pde_residual(d, z, WRoute::explicit_ops) == 0,
              [&] { return "explicit residual " + to_string(d); });
  }
}

void criterion_9(Tally& t) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      const auto row = simple_hurwitz(n, m);
      for (const auto& d : partitions_of(n)) {
        Rational expected = 0;
        if (m == 0 || n >= 2) {
          std::vector<Partition> classes(m, pad(Partition{2}, std::max(0, n - 2)));
          classes.push_back(d);
          expected = oracle_tuple_count(classes, n);
          t.check(expected == brute_tuples(classes, n), [&] { return "tuple oracles disagree"; });
        }
        t.check(row.at(d) == expected, [&] {
          return "h(" + std::to_string(n) + "," + std::to_string(m) + ")" + to_string(d);
        });
      }
    }
}

std::pair<std::string, int> capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {"", -1};
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

void criterion_10(Tally& t) {
  const std::string cmd = std::string("'") + DIAGRAM_OPS_CLI + "' --cache-dir '" +
                          cache_directory()->string() + "' --json selftest full";
  const auto [first, rc1] = capture(cmd);
  const auto [second, rc2] = capture(cmd);
  t.check(rc1 == 0 && rc2 == 0, [&] { return "selftest exit codes " + std::to_string(rc1) + "," + std::to_string(rc2); });
  t.check(!first.empty() && first == second, [] { return std::string("reports differ"); });
}

}  // namespace

int main() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("diagram-ops-acceptance-" + std::to_string(::getpid()));
  set_cache_directory(dir);

  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"product [1]*[2] with graded pieces", criterion_1},
      {"product [2]*[2] with intermediates", criterion_2},
      {"Frobenius structure constants vs enumeration", criterion_3},
      {"Schur functions are W eigenvectors", criterion_4},
      {"phi multiplicativity", criterion_5},
      {"Jacobi-Trudi vs bialternant, stability", criterion_6},
      {"Hurwitz brackets vs tuple counts", criterion_7},
      {"flow equation residuals and initial condition", criterion_8},
      {"simple Hurwitz numbers vs tuple counts", criterion_9},
      {"selftest full determinism", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && tally.failed == 0 && tally.checked > 0;
    failures += ok ? 0 : 1;
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first
         << " (" << tally.checked << " checks, " << std::fixed;
    line.precision(2);
    line << secs << " s)";
    if (!error.empty()) line << "  exception: " << error;
    else if (!ok) line << "  first failure: " << tally.first_failure;
    std::cout << line.str() << std::endl;
  }
  std::filesystem::remove_all(dir);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
