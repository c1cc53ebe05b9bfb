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

#include "dcsm/bch.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dcsm/errors.hpp"

namespace dcsm {

namespace {
constexpr std::size_t kMaxMatrixEntries = std::size_t{1} << 28;
}

std::uint32_t rotate_bits_left(std::uint32_t pattern, int length, int shift) {
  const std::uint32_t mask = length >= 32 ? ~0u : ((1u << length) - 1);
  shift %= length;
  if (shift == 0) return pattern & mask;
  return ((pattern << shift) | (pattern >> (length - shift))) & mask;
}

SpacingSequenceSet enumerate_spacing_sequences(int length, int min_spacing) {
  if (min_spacing < 1 || min_spacing > length || length > 24) {
    throw std::invalid_argument("spacing enumeration requires 1 <= a <= length <= 24");
  }
  SpacingSequenceSet set;
  set.length = length;
  set.min_spacing = min_spacing;
  // Two 1s at circular distance d (1 <= d < length) are separated by d - 1
  // zeros on the short side, so spacing >= a rules out every d <= a.
  const int max_distance = std::min(min_spacing, length - 1);
  const std::uint32_t count = 1u << length;
  for (std::uint32_t p = 0; p < count; ++p) {
    bool ok = true;
    if (std::popcount(p) > 1) {
      for (int d = 1; d <= max_distance && ok; ++d) {
        ok = (p & rotate_bits_left(p, length, d)) == 0;
      }
    }
    if (ok) set.members.push_back(p);
  }
  return set;
}

BchCodeSpec build_code_spec(int mtilde, int i) {
  // GF(2) has a single nonzero element, so length-1 codes collapse
  if (i < 1 || i > mtilde || mtilde < 2 || mtilde > kMaxBchMtilde) {
    throw std::invalid_argument("code parameters require 1 <= i <= mtilde <= 12, mtilde >= 2");
  }
  const ExtensionField field = field_build(2, mtilde);
  const auto spacing = enumerate_spacing_sequences(mtilde, i);

  BchCodeSpec spec;
  spec.mtilde = mtilde;
  spec.i = i;
  spec.length = (1u << mtilde) - 1;
  spec.modulus = field.modulus();
  spec.root_exponents = spacing.members;
  spec.parity_check = product_of_roots(field, spec.root_exponents);
  spec.dimension = spec.parity_check.degree();

  const auto full = BinaryPolynomial::monomial(static_cast<int>(spec.length)) + BinaryPolynomial::one();
  auto division = poly_divmod(full, spec.parity_check);
  if (!division.remainder.is_zero()) {
    throw InvariantViolation("parity-check polynomial does not divide x^n + 1");
  }
  spec.generator = std::move(division.quotient);
  if (poly_mul(spec.generator, spec.parity_check) != full) {
    throw InvariantViolation("g(x) h(x) != x^n + 1");
  }
  if (!poly_divmod(spec.parity_check, BinaryPolynomial::from_bits(0b11)).remainder.is_zero()) {
    throw InvariantViolation("x + 1 does not divide h(x)");
  }

  // The roots of g contain alpha^j for 2^(m-1) + 2^l <= j <= 2^m - 2 with
  // l = mtilde - i - 1. In the PN case the run starts at 2^(m-1) + 1.
  const int l = mtilde - i - 1;
  const std::int64_t half = std::int64_t{1} << (mtilde - 1);
  spec.distance_lower_bound = half - (l >= 0 ? (std::int64_t{1} << l) : 1);
  return spec;
}

std::vector<BinaryPolynomial> enumerate_even_parity_codewords(const BchCodeSpec& spec) {
  const int message_bits = spec.dimension - 1;
  if (message_bits < 0 || message_bits > kMaxMessageBits) {
    throw std::invalid_argument("code dimension too large for full enumeration");
  }
  const auto even_generator = poly_mul(spec.generator, BinaryPolynomial::from_bits(0b11));
  std::vector<BinaryPolynomial> basis;
  basis.reserve(static_cast<std::size_t>(message_bits));
  for (int j = 0; j < message_bits; ++j) basis.push_back(even_generator.shifted(j));

  const std::size_t count = std::size_t{1} << message_bits;
  std::vector<BinaryPolynomial> codewords(count);
  for (std::size_t u = 1; u < count; ++u) {
    codewords[u] = codewords[u & (u - 1)] + basis[static_cast<std::size_t>(std::countr_zero(u))];
  }
  return codewords;
}

SensingMatrix assemble_bipolar_matrix(const BchCodeSpec& spec) {
  const std::size_t rows = spec.length;
  if (spec.dimension - 1 > kMaxMessageBits ||
      rows * (std::size_t{1} << (spec.dimension - 1)) > kMaxMatrixEntries) {
    throw std::invalid_argument("bipolar matrix exceeds the in-memory size cap");
  }
  auto codewords = enumerate_even_parity_codewords(spec);
  std::sort(codewords.begin(), codewords.end());
  if (spec.is_pn_case()) {
    // sorted ascending, so the zero codeword is first
    codewords.erase(codewords.begin());
  }
  const std::size_t cols = codewords.size();
  std::vector<std::int8_t> entries(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t t = 0; t < rows; ++t) {
      entries[j * rows + t] = codewords[j].coefficient(static_cast<int>(t)) ? 1 : -1;
    }
  }

  Descriptor d;
  d.set("family", "bch");
  d.set("mtilde", spec.mtilde);
  d.set("i", spec.i);
  d.set("modulus", spec.modulus.to_string());
  d.set("h", spec.parity_check.to_string());
  d.set("g_degree", spec.generator.degree());
  d.set("dimension", spec.dimension);
  d.set("dmin_lower", spec.distance_lower_bound);
  d.set("pn_case", spec.is_pn_case() ? "1" : "0");
  return SensingMatrix::from_columns(rows, cols, std::move(entries), Alphabet::bipolar,
                                     std::move(d));
}

}  // namespace dcsm
