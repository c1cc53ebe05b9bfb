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

#ifndef DCSM_BCH_HPP
#define DCSM_BCH_HPP

#include <cstdint>
#include <vector>

#include "dcsm/galois.hpp"
#include "dcsm/sensing_matrix.hpp"

namespace dcsm {

/// Bit patterns of a fixed length whose 1s, read around a circle, are
/// separated by at least `min_spacing` zeros. Patterns of weight <= 1 always
/// qualify.
struct SpacingSequenceSet {
  int length = 0;
  int min_spacing = 0;
  std::vector<std::uint32_t> members;  // ascending
};

/// Exhaustive enumeration over all 2^length patterns.
/// Requires 1 <= min_spacing <= length <= 24.
SpacingSequenceSet enumerate_spacing_sequences(int length, int min_spacing);

/// Circular left rotation of the low `length` bits.
std::uint32_t rotate_bits_left(std::uint32_t pattern, int length, int shift);

/// Cyclic code of length 2^mtilde - 1 whose parity-check polynomial has the
/// roots alpha^r for r in the spacing set (min spacing = i).
struct BchCodeSpec {
  int mtilde = 0;
  int i = 0;
  std::uint32_t length = 0;  // 2^mtilde - 1
  BinaryPolynomial modulus;
  BinaryPolynomial parity_check;  // h(x)
  BinaryPolynomial generator;     // g(x) = (x^length + 1) / h(x)
  int dimension = 0;              // deg h
  std::int64_t distance_lower_bound = 0;
  std::vector<std::uint32_t> root_exponents;

  /// The PN special case mtilde == i: the zero codeword is not used and the
  /// matrix is the square circulant of a maximal-length sequence.
  bool is_pn_case() const { return mtilde == i; }
};

inline constexpr int kMaxBchMtilde = 12;
inline constexpr int kMaxMessageBits = 26;

/// Requires 1 <= i <= mtilde <= 12. Throws InvariantViolation if g*h differs
/// from x^n + 1.
BchCodeSpec build_code_spec(int mtilde, int i);

/// All u(x) * (x + 1) * g(x) for deg u < dimension - 1, in increasing order
/// of the integer value of u. Requires dimension - 1 <= 26.
std::vector<BinaryPolynomial> enumerate_even_parity_codewords(const BchCodeSpec& spec);

/// Bipolar matrix with one column per even-parity codeword (0 -> -1, 1 -> +1),
/// columns sorted by codeword integer value. Row t holds the coefficient of x^t.
SensingMatrix assemble_bipolar_matrix(const BchCodeSpec& spec);

}  // namespace dcsm

#endif  // DCSM_BCH_HPP
