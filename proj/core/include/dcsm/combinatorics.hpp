// Copyright 2026 The dcsm Authors
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

#ifndef DCSM_COMBINATORICS_HPP
#define DCSM_COMBINATORICS_HPP

#include <cstdint>

namespace dcsm {

/// Linear count of length-b binary patterns whose ones are separated by at
/// least a zeros. Throws std::invalid_argument for a < 1 or b < 0 and
/// std::overflow_error when the value leaves 64 bits.
std::uint64_t kappa(int a, int b);

/// Circular count: as kappa, with the gap across the wrap also >= a zeros.
/// Patterns of weight <= 1 always count. Requires a >= 1, 1 <= b <= 30.
std::uint64_t tau(int a, int b);

/// Root in (1, 2) of z^(a+1) - z^a - 1, by bisection.
double gamma_root(int a);

struct DeltaBound {
  int a = 0;
  double gamma = 0.0;
  double delta = 0.0;   // 1 / (gamma - 1)
  double power = 0.0;   // a^0.7
  bool holds = false;   // delta > power
};

DeltaBound delta_bound_check(int a);

/// Interior minimum over x >= 1 of f(x) = x^0.3 - 0.5 x^-0.4 - 0.7 ln x.
/// Stationary points satisfy 3y^7 - 7y^4 + 2 = 0 with x = y^10.
struct GrowthRatioMinimum {
  double y = 0.0;
  double x = 0.0;
  double value = 0.0;
};

GrowthRatioMinimum growth_ratio_minimum();

struct ScalingReport {
  int mtilde = 0;
  int i = 0;
  std::uint64_t m = 0;
  std::uint64_t tau = 0;
  std::uint64_t n = 0;  // saturates at UINT64_MAX
  double log2_n = 0.0;
  bool pn_case = false;
  std::uint64_t certified_k = 0;
  /// certified_k comes from the analytic distance bound, not a built matrix.
  bool analytic_k = false;
  double dimension_lhs = 0.0;  // tau
  double dimension_rhs = 0.0;  // 2^((mtilde - i) ln(i) / i)
  double rows_lhs = 0.0;       // m
  double rows_rhs = 0.0;       // k (log2 n)^(log2 k / ln log2 k), NaN when undefined
};

/// Largest matrix built to measure the certified order; beyond it the
/// analytic order from the distance lower bound is reported.
inline constexpr std::uint64_t kScalingBuildLimit = 4096;

ScalingReport scaling_report(int mtilde, int i);

}  // namespace dcsm

#endif  // DCSM_COMBINATORICS_HPP
