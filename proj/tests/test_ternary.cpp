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

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dcsm/analysis.hpp"
#include "dcsm/bch.hpp"
#include "dcsm/binary_designs.hpp"
#include "dcsm/ternary.hpp"

using namespace dcsm;

TEST_CASE("embedding") {
  const std::vector<std::int8_t> all{1, 1, 1};
  const auto s = EmbeddingPattern::from_indicator(all);
  const std::vector<int> x{4, -2, 7};
  CHECK(embed<int>(s, x) == x);

  const std::vector<std::int8_t> alt{1, 0, 1, 0};
  const auto t = EmbeddingPattern::from_indicator(alt);
  CHECK(t.weight() == 2);
  const std::vector<int> uv{5, 9};
  CHECK(embed<int>(t, uv) == std::vector<int>{5, 0, 9, 0});
  CHECK_THROWS_AS(embed<int>(t, x), std::invalid_argument);
  const std::vector<std::int8_t> bad{1, -1};
  CHECK_THROWS_AS(EmbeddingPattern::from_indicator(bad), std::invalid_argument);

  std::mt19937 rng(2);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int8_t> ind(12, 0);
    std::vector<double> x1, x2;
    for (auto& v : ind) v = rng() & 1;
    const auto p = EmbeddingPattern::from_indicator(ind);
    for (std::size_t j = 0; j < p.weight(); ++j) {
      x1.push_back(normal(rng));
      x2.push_back(normal(rng));
    }
    const auto y1 = embed<double>(p, x1);
    const auto y2 = embed<double>(p, x2);
    double a = 0, b = 0;
    for (std::size_t j = 0; j < x1.size(); ++j) a += x1[j] * x2[j];
    for (std::size_t j = 0; j < y1.size(); ++j) b += y1[j] * y2[j];
    CHECK(a == doctest::Approx(b));
  }
}

TEST_CASE("cross-pattern embeddings are bounded by the pattern overlap") {
  // every pair of weight-3 patterns in length 6 and every pair of sign fillings
  std::vector<std::vector<std::int8_t>> patterns;
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::vector<std::int8_t> v(6);
    for (int t = 0; t < 6; ++t) v[t] = (mask >> t) & 1;
    patterns.push_back(v);
  }
  for (const auto& a : patterns) {
    for (const auto& b : patterns) {
      const auto pa = EmbeddingPattern::from_indicator(a);
      const auto pb = EmbeddingPattern::from_indicator(b);
      const auto overlap = dot(a, b);
      for (int sa = 0; sa < 8; ++sa) {
        for (int sb = 0; sb < 8; ++sb) {
          std::vector<std::int8_t> xa(3), xb(3);
          for (int t = 0; t < 3; ++t) {
            xa[t] = (sa >> t) & 1 ? 1 : -1;
            xb[t] = (sb >> t) & 1 ? 1 : -1;
          }
          const auto ya = embed<std::int8_t>(pa, xa);
          const auto yb = embed<std::int8_t>(pb, xb);
          CHECK(std::abs(dot(ya, yb)) <= overlap);
        }
      }
    }
  }
}

TEST_CASE("ternary parameters") {
  CHECK(ternary_params(7, 4).r == 1);
  CHECK(ternary_params(7, 4).i == 2);
  CHECK(ternary_params(31, 4).r == 7);
  CHECK(ternary_params(31, 4).i == 2);
  CHECK(ternary_params(31, 5).i == 3);
  CHECK_THROWS_AS(ternary_params(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(ternary_params(15, 4), std::invalid_argument);
  CHECK_THROWS_AS(ternary_params(7, 1), std::invalid_argument);
}

TEST_CASE("ternary matrix from devore(7,2) and the 7x8 bipolar factor") {
  const auto s = devore_matrix(7, 2);
  const auto x = assemble_bipolar_matrix(build_code_spec(3, 1));
  const auto a = ternary_matrix(s, x);
  CHECK(a.rows() == 49);
  CHECK(a.cols() == 2744);
  CHECK(a.alphabet() == Alphabet::ternary);
  CHECK(a.constant_norm_square() == 7);

  // i-major ordering
  const auto p3 = EmbeddingPattern::from_indicator(s.column(3));
  const auto c = embed<std::int8_t>(p3, x.column(5));
  CHECK(std::vector<std::int8_t>(a.column(3 * 8 + 5).begin(), a.column(3 * 8 + 5).end()) == c);

  std::int64_t same = 0, cross = 0;
  for (std::size_t u = 0; u < a.cols(); ++u) {
    for (std::size_t v = u + 1; v < a.cols(); ++v) {
      auto& slot = u / 8 == v / 8 ? same : cross;
      slot = std::max(slot, std::abs(dot(a.column(u), a.column(v))));
    }
  }
  CHECK(same <= 3);
  CHECK(cross <= 2);

  const auto bound = ternary_bound(s, x);
  CHECK(bound.same_pattern == coherence(x).max_inner);
  CHECK(bound.cross_pattern == 2);
  CHECK(bound.norm_square == 7);
  CHECK(coherence(a).max_inner <= std::max(bound.same_pattern, bound.cross_pattern));
  CHECK(bound.certificate.rip_order_max <= coherence(a).rip_order_max);
}

TEST_CASE("trivial filling reproduces the pattern matrix") {
  const auto s = devore_matrix(3, 1);
  const auto one = SensingMatrix::from_columns(3, 1, {1, 1, 1}, Alphabet::bipolar);
  const auto a = ternary_matrix(s, one);
  CHECK(std::vector<std::int8_t>(a.entries().begin(), a.entries().end()) ==
        std::vector<std::int8_t>(s.entries().begin(), s.entries().end()));
  CHECK(ternary_bound(s, one).same_pattern == 0);
}

TEST_CASE("walsh hadamard filling") {
  const auto h = walsh_hadamard_matrix(2);
  CHECK(h.rows() == 4);
  CHECK(coherence(h).max_inner == 0);
  // Sylvester recursion oracle
  std::vector<std::vector<int>> syl{{1}};
  for (int level = 0; level < 3; ++level) {
    const auto n = syl.size();
    std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        next[r][c] = next[r][c + n] = next[r + n][c] = syl[r][c];
        next[r + n][c + n] = -syl[r][c];
      }
    }
    syl = next;
  }
  const auto h3 = walsh_hadamard_matrix(3);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) CHECK(h3.at(r, c) == syl[r][c]);
  }
  const auto s = devore_matrix(4, 1);  // 16 x 16, weight 4
  const auto a = ternary_matrix(s, h);
  CHECK(a.rows() == 16);
  CHECK(a.cols() == 64);  // p^2 x p^(r+2)
  CHECK_THROWS_AS(ternary_matrix(devore_matrix(5, 1), h), std::invalid_argument);
  CHECK_THROWS_AS(ternary_matrix(h, s), std::invalid_argument);
}
