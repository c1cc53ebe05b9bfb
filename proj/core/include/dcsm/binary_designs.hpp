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

#ifndef DCSM_BINARY_DESIGNS_HPP
#define DCSM_BINARY_DESIGNS_HPP

#include <cstdint>
#include <vector>

#include "dcsm/sensing_matrix.hpp"

namespace dcsm {

/// p^2 x p^(r+1) incidence matrix of the graphs of all polynomials of degree
/// <= r over GF(p). Row (x, y) is x * p + y; the column of coefficient vector
/// (c_0, ..., c_r) is its base-p value with c_0 most significant.
///
/// p must be prime or a power of two, 2 <= p <= 64, r < p, and the matrix
/// must fit the in-memory cap (p^(r+1) <= 2^20 columns).
SensingMatrix devore_matrix(std::uint32_t p, std::uint32_t r);

/// Nested-floor upper bound on the number of weight-w binary vectors of
/// length m with pairwise inner products <= lambda, evaluated innermost
/// first. Requires 0 <= lambda < w <= m.
std::uint64_t johnson_bound(std::uint64_t m, std::uint64_t w, std::uint64_t lambda);

/// p^(r+1) / johnson_bound(p^2, p, r).
double devore_optimality_ratio(std::uint32_t p, std::uint32_t r);

/// (16^a - 1, 5, 2) optical orthogonal code from GF(16^a).
struct OocCodeFamily {
  int a = 0;
  std::uint32_t length = 0;
  std::uint32_t weight = 5;
  std::uint32_t lambda = 2;
  std::vector<std::vector<std::uint32_t>> supports;  // each sorted ascending
};

/// Maximum of |C ∩ (C + s)| over 0 < s < length.
std::uint32_t max_autocorrelation(const std::vector<std::uint32_t>& support, std::uint32_t length);
/// Maximum of |C1 ∩ (C2 + s)| over all shifts s.
std::uint32_t max_crosscorrelation(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t length);

/// Requires a in {1, 2}. Throws InvariantViolation if a support has the
/// wrong weight or a correlation exceeds lambda.
OocCodeFamily ooc_construct(int a);

/// Every distinct circular shift of every codeword indicator, ordered by
/// (codeword index, shift); repeated columns are dropped.
SensingMatrix ooc_matrix(int a);

}  // namespace dcsm

#endif  // DCSM_BINARY_DESIGNS_HPP
