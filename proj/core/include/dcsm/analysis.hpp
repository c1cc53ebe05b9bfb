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

#ifndef DCSM_ANALYSIS_HPP
#define DCSM_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dcsm/sensing_matrix.hpp"

namespace dcsm {

/// Non-negative rational in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

/// Coherence and the RIP orders it certifies through Gershgorin discs:
/// delta_k = (k - 1) * mu, valid while delta_k < 1.
struct CoherenceCertificate {
  std::int64_t max_inner = 0;    // max |<a_i, a_j>| over distinct integer columns
  std::int64_t norm_square = 0;  // shared column norm-square
  Rational coherence;
  std::size_t max_pair_first = 0;
  std::size_t max_pair_second = 0;
  /// Largest k with (k - 1) mu < 1; the column count when mu == 0.
  std::size_t rip_order_max = 0;
  /// delta_table[k - 1] = (k - 1) mu for k = 1 .. rip_order_max.
  std::vector<Rational> delta_table;
  /// Some column equals another up to sign (mu == 1).
  bool degenerate = false;

  Rational delta(std::size_t k) const { return delta_table.at(k - 1); }
};

/// Exact integer Gram maximum over all column pairs, parallel across column
/// blocks. Requires n >= 2 and a constant column norm-square; throws
/// std::invalid_argument otherwise.
CoherenceCertificate coherence(const SensingMatrix& a);

/// Certificate for an already-known maximum inner product.
CoherenceCertificate certificate_from_max_inner(std::int64_t max_inner, std::int64_t norm_square,
                                                std::size_t columns);

/// Largest k with (k - 1) * mu < 1 (column count when mu is zero).
std::size_t rip_order_for(const Rational& mu, std::size_t columns);

/// Coherence bound (n - 2 dmin) / n and RIP-order threshold
/// k < n / (n - 2 dmin) + 1 for a symmetric code of length n.
struct CodeBoundConstants {
  Rational coherence_bound;
  Rational order_threshold;  // strict upper bound on k; meaningless if unbounded
  bool unbounded = false;
  /// Largest integer strictly below order_threshold.
  std::int64_t max_order = 0;
};

/// Requires 0 <= dmin and n - 2 dmin >= 0.
CodeBoundConstants code_bound_constants(std::int64_t code_length, std::int64_t dmin);

/// Columns that are circular rotations of one base pattern.
struct ShiftGroup {
  /// Lexicographically smallest rotation of every member.
  std::vector<std::int8_t> base;
  /// Smallest positive shift mapping base onto itself; divides the row count.
  std::size_t period = 0;
  std::vector<std::size_t> columns;  // ascending column indices
  std::vector<std::size_t> offsets;  // column = rotate_left(base, offset)
};

struct ShiftGroupPartition {
  std::size_t rows = 0;
  std::vector<ShiftGroup> groups;  // ordered by smallest member column

  std::size_t column_count() const;
  /// Every group has exactly one member.
  bool all_singletons() const;
  /// Singleton groups without base patterns, for real-valued dictionaries.
  static ShiftGroupPartition singletons(std::size_t rows, std::size_t cols);
};

/// Shift of the lexicographically smallest rotation.
std::size_t minimal_rotation(std::span<const std::int8_t> v);

ShiftGroupPartition shift_group_partition(const SensingMatrix& a);

}  // namespace dcsm

#endif  // DCSM_ANALYSIS_HPP
