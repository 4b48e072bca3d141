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

#ifndef DIAGRAM_OPS_HURWITZ_HPP_
#define DIAGRAM_OPS_HURWITZ_HPP_

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diagram_ops/kernels.hpp"
#include "diagram_ops/partition.hpp"
#include "diagram_ops/ppoly.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// All Hurwitz numbers here are genus 0 and count possibly disconnected
// covers: <d_1, ..., d_k> = #{(g_1..g_k) : type(g_i) = d_i, g_1...g_k = 1} / n!.
// Automorphism weights |Aut(d)| are the centralizer orders z_d.

// <a, b, c> = C^c_{a,b} / z_c. Throws ArgumentError on degree mismatch.
Rational hurwitz3(const Partition& a, const Partition& b, const Partition& c);

// Contraction of three-point numbers along a chain:
//   sum_{Y_1..Y_{k-3}} <d1,d2,Y_1> z_{Y_1} <Y_1,d3,Y_2> ... <Y_{k-3},d_{k-1},d_k>.
// Requires k >= 3 and equal degrees.
Rational hurwitz_chain(std::span<const Partition> points);

// Any k >= 1 points of one degree: closed forms for k = 1, 2 and the chain
// for k >= 3.
Rational hurwitz_bracket(std::span<const Partition> points);

// Associativity relation split after position r (1 <= r < k):
//   sum_Y <d_1..d_r, Y> z_Y <Y, d_{r+1}..d_k>.
Rational hurwitz_split(std::span<const Partition> points, std::size_t r);

// Literal enumeration (1/n!) #{tuples multiplying to the identity}; n <= 6.
Rational oracle_tuple_count(std::span<const Partition> classes, int n,
                            kernels::Exec exec = kernels::Exec::parallel);

// Marked branch types (d_i, n_i) and an optional final diagram. Every d_i is
// replaced by rho_{N - |d_i|}(d_i) and repeated n_i times, where N is the
// degree of the final diagram (or `degree` without one).
struct BranchSpec {
  int degree = 0;
  std::vector<std::pair<Partition, int>> branches;
  std::optional<Partition> final_diagram;

  int target_degree() const { return final_diagram ? final_diagram->degree() : degree; }
};

// Bracket of the padded points, times the product of the rho multiplicities;
// 0 when some |d_i| exceeds the target degree.
Rational hurwitz_padded(const BranchSpec& spec);

// Multi-indices over `dims` directions with total order <= max_order, in
// graded lexicographic order.
std::vector<std::vector<int>> multi_indices(std::size_t dims, int max_order);

// Truncated generating function
//   Z = sum_{|R| <= N} d_R exp(sum_Y beta_Y phi_R(Y)) s_R(p).
// coefficients[n] is the coefficient of prod_Y beta_Y^{n_Y} / n_Y! expressed
// on power-sum monomials p_d (not kappa(d) p_d).
struct HurwitzSeries {
  std::vector<Partition> directions;
  int p_bound = 0;
  int order = 0;
  std::map<std::vector<int>, PPoly> coefficients;

  const PPoly& at(const std::vector<int>& index) const;
  Rational coefficient(const std::vector<int>& index, const Partition& mono) const;
  std::size_t direction_index(const Partition& d) const;  // ArgumentError if inactive
};

HurwitzSeries generating_function(std::vector<Partition> directions, int p_bound, int order,
                                  kernels::Exec exec = kernels::Exec::parallel);

enum class WRoute { spectral, explicit_ops };

// max |coefficient| of dZ/dbeta_Y - W(Y) Z over all beta orders < series.order.
// The derivative is read off the stored Taylor coefficients; W(Y) is applied
// through the chosen route (explicit_ops needs |Y| <= 3).
Rational pde_residual(const Partition& direction, const HurwitzSeries& series,
                      WRoute route = WRoute::spectral);

// Coefficient of beta^m / m! on p_d in the single-direction series for
// Y = [2], for every d of degree n.
std::map<Partition, Rational> simple_hurwitz(int n, int m);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_HURWITZ_HPP_
