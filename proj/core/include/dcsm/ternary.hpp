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

#ifndef DCSM_TERNARY_HPP
#define DCSM_TERNARY_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dcsm/analysis.hpp"
#include "dcsm/sensing_matrix.hpp"

namespace dcsm {

/// Binary indicator of length `length` and the ascending positions of its ones.
struct EmbeddingPattern {
  std::size_t length = 0;
  std::vector<std::size_t> positions;

  /// Throws std::invalid_argument on entries outside {0, 1}.
  static EmbeddingPattern from_indicator(std::span<const std::int8_t> indicator);
  std::size_t weight() const { return positions.size(); }
};

/// y[positions[j]] = x[j], zero elsewhere.
template <class T>
std::vector<T> embed(const EmbeddingPattern& s, std::span<const T> x) {
  if (x.size() != s.positions.size()) throw std::invalid_argument("embedding length mismatch");
  std::vector<T> y(s.length, T{});
  for (std::size_t j = 0; j < x.size(); ++j) y[s.positions[j]] = x[j];
  return y;
}

struct TernaryParams {
  std::uint32_t r = 0;
  int i = 0;
};

/// r = floor(p / k), i = ceil(log2 k). p must be one of the Mersenne primes
/// 3, 7, 31, 127, 8191 and 2 <= k < p.
TernaryParams ternary_params(std::uint32_t p, std::uint32_t k);

/// Column (i, j) = embed(support of S column i, X column j), i-major.
/// S must be binary with constant column weight equal to X.rows().
SensingMatrix ternary_matrix(const SensingMatrix& s, const SensingMatrix& x);

struct TernaryBound {
  std::int64_t same_pattern = 0;   // max |<x_a, x_b>| over distinct X columns
  std::int64_t cross_pattern = 0;  // max <s_a, s_b> over distinct S columns
  std::int64_t norm_square = 0;    // weight of S columns
  CoherenceCertificate certificate;  // from max(same, cross)
};

/// Certificate assembled from the exact inner-product maxima of the factors.
TernaryBound ternary_bound(const SensingMatrix& s, const SensingMatrix& x);

/// Sylvester Hadamard matrix of order 2^i as a bipolar matrix.
SensingMatrix walsh_hadamard_matrix(int i);

}  // namespace dcsm

#endif  // DCSM_TERNARY_HPP
