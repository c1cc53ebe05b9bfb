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

#include "dcsm/ternary.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace dcsm {

namespace {

constexpr std::array<std::uint32_t, 5> kMersennePrimes = {3, 7, 31, 127, 8191};

std::int64_t max_offdiagonal_inner(const SensingMatrix& a) {
  if (a.cols() < 2) return 0;
  return coherence(a).max_inner;
}

}  // namespace

EmbeddingPattern EmbeddingPattern::from_indicator(std::span<const std::int8_t> indicator) {
  EmbeddingPattern s;
  s.length = indicator.size();
  for (std::size_t t = 0; t < indicator.size(); ++t) {
    if (indicator[t] == 1) {
      s.positions.push_back(t);
    } else if (indicator[t] != 0) {
      throw std::invalid_argument("embedding pattern must be a 0/1 vector");
    }
  }
  return s;
}

TernaryParams ternary_params(std::uint32_t p, std::uint32_t k) {
  if (std::find(kMersennePrimes.begin(), kMersennePrimes.end(), p) == kMersennePrimes.end()) {
    throw std::invalid_argument("p must be one of the Mersenne primes 3, 7, 31, 127, 8191");
  }
  if (k < 2 || k >= p) throw std::invalid_argument("k must satisfy 2 <= k < p");
  return {p / k, static_cast<int>(std::bit_width(k - 1))};
}

SensingMatrix ternary_matrix(const SensingMatrix& s, const SensingMatrix& x) {
  if (s.alphabet() != Alphabet::binary) throw std::invalid_argument("pattern matrix must be binary");
  if (x.alphabet() != Alphabet::bipolar) throw std::invalid_argument("filling matrix must be bipolar");
  const auto w = s.constant_norm_square();
  if (!w) throw std::invalid_argument("pattern matrix has non-constant column weight");
  if (static_cast<std::size_t>(*w) != x.rows()) {
    throw std::invalid_argument("pattern weight differs from filling row count");
  }
  const std::size_t m = s.rows();
  const std::size_t n = s.cols() * x.cols();
  std::vector<std::int8_t> data;
  data.reserve(m * n);
  for (std::size_t i = 0; i < s.cols(); ++i) {
    const auto pattern = EmbeddingPattern::from_indicator(s.column(i));
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const auto y = embed<std::int8_t>(pattern, x.column(j));
      data.insert(data.end(), y.begin(), y.end());
    }
  }
  Descriptor d;
  d.set("family", "ternary");
  for (const auto& [key, value] : s.descriptor().entries()) d.set("s_" + key, value);
  for (const auto& [key, value] : x.descriptor().entries()) d.set("x_" + key, value);
  return SensingMatrix::from_columns(m, n, std::move(data), Alphabet::ternary, std::move(d));
}

TernaryBound ternary_bound(const SensingMatrix& s, const SensingMatrix& x) {
  const auto w = s.constant_norm_square();
  if (!w || static_cast<std::size_t>(*w) != x.rows()) {
    throw std::invalid_argument("factor matrices are incompatible");
  }
  TernaryBound b;
  b.same_pattern = max_offdiagonal_inner(x);
  b.cross_pattern = max_offdiagonal_inner(s);
  b.norm_square = *w;
  b.certificate = certificate_from_max_inner(std::max(b.same_pattern, b.cross_pattern), *w,
                                             s.cols() * x.cols());
  return b;
}

SensingMatrix walsh_hadamard_matrix(int i) {
  if (i < 0 || i > 12) throw std::invalid_argument("Hadamard order exponent must be in [0, 12]");
  const std::size_t n = std::size_t{1} << i;
  std::vector<std::int8_t> data(n * n);
  // H[r][c] = (-1)^popcount(r & c)
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) data[c * n + r] = (std::popcount(r & c) & 1) ? -1 : 1;
  }
  Descriptor d;
  d.set("family", "hadamard");
  d.set("i", i);
  return SensingMatrix::from_columns(n, n, std::move(data), Alphabet::bipolar, std::move(d));
}

}  // namespace dcsm
