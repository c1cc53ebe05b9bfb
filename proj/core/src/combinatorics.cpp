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

#include "dcsm/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dcsm/analysis.hpp"
#include "dcsm/bch.hpp"

namespace dcsm {

std::uint64_t kappa(int a, int b) {
  if (a < 1 || b < 0) throw std::invalid_argument("kappa requires a >= 1 and b >= 0");
  std::vector<std::uint64_t> k(static_cast<std::size_t>(b) + 1);
  for (int t = 0; t <= b; ++t) {
    if (t <= a + 1) {
      k[t] = static_cast<std::uint64_t>(t) + 1;
      continue;
    }
    const auto prev = k[t - 1];
    const auto back = k[t - a - 1];
    if (prev > std::numeric_limits<std::uint64_t>::max() - back) {
      throw std::overflow_error("kappa exceeds 64 bits");
    }
    k[t] = prev + back;
  }
  return k[b];
}

namespace {

// Chains of ones starting after `last`; the wrap gap back to `first` must
// also hold.
std::uint64_t count_chains(int a, int b, int first, int last) {
  std::uint64_t total = 1;  // stop here
  for (int next = last + a + 1; next < b && next + a + 1 <= first + b; ++next) {
    total += count_chains(a, b, first, next);
  }
  return total;
}

}  // namespace

std::uint64_t tau(int a, int b) {
  if (a < 1 || b < 1 || b > 30) throw std::invalid_argument("tau requires a >= 1 and 1 <= b <= 30");
  std::uint64_t total = 1;  // all zeros
  for (int first = 0; first < b; ++first) total += count_chains(a, b, first, first);
  return total;
}

double gamma_root(int a) {
  if (a < 1) throw std::invalid_argument("gamma_root requires a >= 1");
  auto f = [a](double z) { return std::pow(z, a + 1) - std::pow(z, a) - 1.0; };
  double lo = 1.0;
  double hi = 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DeltaBound delta_bound_check(int a) {
  if (a < 2) throw std::invalid_argument("delta bound requires a >= 2");
  DeltaBound d;
  d.a = a;
  d.gamma = gamma_root(a);
  d.delta = 1.0 / (d.gamma - 1.0);
  d.power = std::pow(static_cast<double>(a), 0.7);
  d.holds = d.delta > d.power;
  return d;
}

GrowthRatioMinimum growth_ratio_minimum() {
  auto p = [](double y) { return 3.0 * std::pow(y, 7) - 7.0 * std::pow(y, 4) + 2.0; };
  // p(1) = -2 < 0 < p(2); the root below 1 is a local maximum of f.
  double lo = 1.0;
  double hi = 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  GrowthRatioMinimum out;
  out.y = 0.5 * (lo + hi);
  out.x = std::pow(out.y, 10);
  out.value = std::pow(out.x, 0.3) - 0.5 * std::pow(out.x, -0.4) - 0.7 * std::log(out.x);
  return out;
}

ScalingReport scaling_report(int mtilde, int i) {
  const auto spec = build_code_spec(mtilde, i);
  ScalingReport r;
  r.mtilde = mtilde;
  r.i = i;
  r.m = spec.length;
  r.tau = tau(i, mtilde);
  r.pn_case = spec.is_pn_case();
  if (r.pn_case) {
    r.n = spec.length;
    r.log2_n = std::log2(static_cast<double>(r.n));
  } else {
    r.n = r.tau - 1 < 64 ? std::uint64_t{1} << (r.tau - 1) : std::numeric_limits<std::uint64_t>::max();
    r.log2_n = static_cast<double>(r.tau - 1);
  }

  if (r.n <= kScalingBuildLimit) {
    r.certified_k = coherence(assemble_bipolar_matrix(spec)).rip_order_max;
  } else {
    const auto t1 = code_bound_constants(spec.length, spec.distance_lower_bound);
    r.certified_k = t1.unbounded ? r.n : static_cast<std::uint64_t>(t1.max_order);
    r.analytic_k = true;
  }

  const double a = i;
  r.dimension_lhs = static_cast<double>(r.tau);
  r.dimension_rhs = std::pow(2.0, (mtilde - i) * std::log(a) / a);
  r.rows_lhs = static_cast<double>(r.m);
  const double k = static_cast<double>(r.certified_k);
  const double log2k = std::log2(k);
  const double log2n = r.log2_n;
  if (log2k > 0.0 && std::log(log2k) != 0.0 && log2n > 0.0) {
    r.rows_rhs = k * std::pow(log2n, log2k / std::log(log2k));
  } else {
    r.rows_rhs = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace dcsm
