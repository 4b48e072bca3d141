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

#include "diagram_ops/hurwitz.hpp"

#include <algorithm>
#include <numeric>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/class_algebra.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/psym.hpp"
#include "diagram_ops/w_ops.hpp"

namespace diagram_ops {
namespace {

int common_degree(std::span<const Partition> points) {
  if (points.empty()) throw ArgumentError("Hurwitz bracket needs at least one point");
  const int n = points.front().degree();
  for (const Partition& p : points)
    if (p.degree() != n)
      throw ArgumentError("Hurwitz bracket: " + to_string(p) + " is not of degree " +
                          std::to_string(n));
  return n;
}

Rational z(const Partition& d) { return Rational(aut_order(d)); }

}  // namespace

Rational hurwitz3(const Partition& a, const Partition& b, const Partition& c) {
  const Partition pts[] = {a, b, c};
  common_degree(pts);
  return make_rational(structure_constant(a, b, c), aut_order(c));
}

Rational hurwitz_chain(std::span<const Partition> points) {
  const int n = common_degree(points);
  const std::size_t k = points.size();
  if (k < 3) throw ArgumentError("hurwitz_chain needs at least three points");
  if (k == 3) return hurwitz3(points[0], points[1], points[2]);

  const auto classes = partitions_of(n);
  // weight[Y] = <d1, d2, Y> z_Y, then pushed through the middle points.
  std::vector<Rational> weight(classes.size());
  for (std::size_t y = 0; y < classes.size(); ++y)
    weight[y] = hurwitz3(points[0], points[1], classes[y]) * z(classes[y]);
  for (std::size_t j = 2; j + 2 < k; ++j) {
    std::vector<Rational> next(classes.size());
    for (std::size_t y = 0; y < classes.size(); ++y) {
      if (weight[y] == 0) continue;
      for (std::size_t y2 = 0; y2 < classes.size(); ++y2)
        next[y2] += weight[y] * hurwitz3(classes[y], points[j], classes[y2]) * z(classes[y2]);
    }
    weight = std::move(next);
  }
  Rational total = 0;
  for (std::size_t y = 0; y < classes.size(); ++y)
    if (weight[y] != 0) total += weight[y] * hurwitz3(classes[y], points[k - 2], points[k - 1]);
  return total;
}

Rational hurwitz_bracket(std::span<const Partition> points) {
  const int n = common_degree(points);
  switch (points.size()) {
    case 1:
      return points[0] == pad(Partition{}, n)
                 ? make_rational(1, factorial(static_cast<unsigned>(n)))
                 : Rational(0);
    case 2:
      return points[0] == points[1] ? make_rational(1, aut_order(points[0])) : Rational(0);
    default:
      return hurwitz_chain(points);
  }
}

Rational hurwitz_split(std::span<const Partition> points, std::size_t r) {
  const int n = common_degree(points);
  if (r < 1 || r >= points.size())
    throw ArgumentError("hurwitz_split: split position out of range");
  std::vector<Partition> left(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(r));
  std::vector<Partition> right{Partition{}};
  right.insert(right.end(), points.begin() + static_cast<std::ptrdiff_t>(r), points.end());
  left.emplace_back();
  Rational total = 0;
  for (const Partition& y : partitions_of(n)) {
    left.back() = y;
    right.front() = y;
    const Rational l = hurwitz_bracket(left);
    if (l == 0) continue;
    total += l * z(y) * hurwitz_bracket(right);
  }
  return total;
}

Rational oracle_tuple_count(std::span<const Partition> classes, int n, kernels::Exec exec) {
  if (n > kOracleMaxDegree)
    throw ResourceError("tuple oracle limited to n <= " + std::to_string(kOracleMaxDegree));
  return make_rational(kernels::count_identity_tuples(classes, n, exec),
                       factorial(static_cast<unsigned>(n)));
}

Rational hurwitz_padded(const BranchSpec& spec) {
  const int n = spec.target_degree();
  Rational scale = 1;
  std::vector<Partition> points;
  for (const auto& [d, count] : spec.branches) {
    if (count < 1) throw ArgumentError("branch multiplicity must be at least 1");
    if (d.degree() > n) return 0;
    const DiagramSum padded = rho(d, n - d.degree());
    const auto& [diagram, coef] = *padded.terms().begin();
    for (int i = 0; i < count; ++i) {
      points.push_back(diagram);
      scale *= coef;
    }
  }
  if (spec.final_diagram) points.push_back(*spec.final_diagram);
  if (points.empty()) return make_rational(1, factorial(static_cast<unsigned>(n)));
  return scale * hurwitz_bracket(points);
}

std::vector<std::vector<int>> multi_indices(std::size_t dims, int max_order) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(dims, 0);
  for (int total = 0; total <= max_order; ++total) {
    // All compositions of `total` into `dims` parts, lexicographically
    // decreasing in the first coordinate.
    auto fill = [&](auto&& self, std::size_t pos, int remaining) -> void {
      if (pos + 1 == dims) {
        current[pos] = remaining;
        out.push_back(current);
        return;
      }
      for (int v = remaining; v >= 0; --v) {
        current[pos] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    if (dims == 0) {
      if (total == 0) out.emplace_back();
      continue;
    }
    fill(fill, 0, total);
  }
  return out;
}

const PPoly& HurwitzSeries::at(const std::vector<int>& index) const {
  static const PPoly zero;
  auto it = coefficients.find(index);
  return it == coefficients.end() ? zero : it->second;
}

Rational HurwitzSeries::coefficient(const std::vector<int>& index, const Partition& mono) const {
  return at(index).coeff(mono);
}

std::size_t HurwitzSeries::direction_index(const Partition& d) const {
  auto it = std::find(directions.begin(), directions.end(), d);
  if (it == directions.end())
    throw ArgumentError("direction " + to_string(d) + " is not active in this series");
  return static_cast<std::size_t>(it - directions.begin());
}

HurwitzSeries generating_function(std::vector<Partition> directions, int p_bound, int order,
                                  kernels::Exec exec) {
  if (p_bound < 0 || order < 0) throw ArgumentError("generating_function: negative bound");
  std::sort(directions.begin(), directions.end());
  if (std::adjacent_find(directions.begin(), directions.end()) != directions.end())
    throw ArgumentError("generating_function: repeated direction");

  HurwitzSeries series;
  series.directions = directions;
  series.p_bound = p_bound;
  series.order = order;
  const auto indices = multi_indices(directions.size(), order);

  // Everything that touches caches is gathered serially; the parallel loop
  // below only does polynomial arithmetic.
  std::vector<Partition> irreps;
  for (int n = 0; n <= p_bound; ++n)
    for (const Partition& r : partitions_of(n)) irreps.push_back(r);
  std::vector<PPoly> schur_polys;
  std::vector<Rational> dims;
  std::vector<std::vector<Rational>> eigen(irreps.size());
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    schur_polys.push_back(schur(irreps[i]));
    dims.push_back(d_R(irreps[i]));
    for (const Partition& y : directions) eigen[i].push_back(phi(irreps[i], y));
  }

  // contributions[i][j]: d_R prod phi^n s_R for irrep i and multi-index j.
  std::vector<std::vector<PPoly>> contributions(irreps.size());
  auto contribute = [&](std::ptrdiff_t i) {
    const auto ui = static_cast<std::size_t>(i);
    auto& row = contributions[ui];
    row.reserve(indices.size());
    for (const auto& index : indices) {
      Rational w = dims[ui];
      for (std::size_t d = 0; d < index.size(); ++d)
        for (int e = 0; e < index[d]; ++e) w *= eigen[ui][d];
      row.push_back(schur_polys[ui] * w);
    }
  };
  const auto count = static_cast<std::ptrdiff_t>(irreps.size());
  if (exec == kernels::Exec::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) contribute(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) contribute(i);
  }

  for (std::size_t j = 0; j < indices.size(); ++j) {
    PPoly total = PPoly().truncated(p_bound);
    for (std::size_t i = 0; i < irreps.size(); ++i) total += contributions[i][j];
    if (!total.is_zero()) series.coefficients.emplace(indices[j], std::move(total));
  }
  return series;
}

Rational pde_residual(const Partition& direction, const HurwitzSeries& series, WRoute route) {
  const std::size_t axis = series.direction_index(direction);
  const DiffOpSpec* spec = route == WRoute::explicit_ops ? &explicit_operator(direction) : nullptr;
  Rational worst = 0;
  for (const auto& index : multi_indices(series.directions.size(), series.order - 1)) {
    std::vector<int> shifted = index;
    ++shifted[axis];
    const PPoly& base = series.at(index);
    const PPoly rhs = spec ? apply_explicit(*spec, base) : apply_spectral(direction, base);
    const PPoly residual = series.at(shifted) - rhs;
    for (const auto& [mono, c] : residual.terms()) worst = std::max(worst, abs(c));
  }
  return worst;
}

std::map<Partition, Rational> simple_hurwitz(int n, int m) {
  if (n < 0 || m < 0) throw ArgumentError("simple_hurwitz: negative argument");
  const HurwitzSeries series = generating_function({Partition{2}}, n, m);
  std::map<Partition, Rational> out;
  for (const Partition& d : partitions_of(n)) out[d] = series.coefficient({m}, d);
  return out;
}

}  // namespace diagram_ops
