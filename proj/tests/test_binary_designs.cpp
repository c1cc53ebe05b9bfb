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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "dcsm/analysis.hpp"
#include "dcsm/binary_designs.hpp"

using namespace dcsm;

namespace {

// Nested floors, innermost first, in plain integer arithmetic.
std::uint64_t johnson_oracle(std::uint64_t m, std::uint64_t w, std::uint64_t lambda) {
  std::uint64_t v = (m - lambda) / (w - lambda);
  for (std::uint64_t t = 1; t <= lambda; ++t) v = (m - lambda + t) * v / (w - lambda + t);
  return v;
}

std::int64_t max_inner(const SensingMatrix& a) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) best = std::max(best, std::abs(dot(a.column(i), a.column(j))));
  }
  return best;
}

}  // namespace

TEST_CASE("devore matrix shapes and weights") {
  const auto a = devore_matrix(8, 2);
  CHECK(a.rows() == 64);
  CHECK(a.cols() == 512);
  CHECK(a.alphabet() == Alphabet::binary);
  CHECK(a.constant_norm_square() == 8);
  CHECK(max_inner(a) == 2);

  const auto b = devore_matrix(7, 2);
  CHECK(b.rows() == 49);
  CHECK(b.cols() == 343);

  const auto c = devore_matrix(2, 1);
  CHECK(c.rows() == 4);
  CHECK(c.cols() == 4);
  CHECK(c.constant_norm_square() == 2);
  CHECK(max_inner(c) <= 1);

  CHECK_THROWS_AS(devore_matrix(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(devore_matrix(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(devore_matrix(1, 0), std::invalid_argument);
}

TEST_CASE("devore columns are graphs of distinct low-degree polynomials") {
  for (std::uint32_t p : {2u, 3u, 4u, 5u, 7u, 8u}) {
    for (std::uint32_t r = 1; r < std::min(p, 3u); ++r) {
      const auto a = devore_matrix(p, r);
      CAPTURE(p);
      CAPTURE(r);
      std::set<std::vector<std::int8_t>> distinct;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto col = a.column(j);
        distinct.emplace(col.begin(), col.end());
        // exactly one row per x value
        for (std::uint32_t x = 0; x < p; ++x) {
          int ones = 0;
          for (std::uint32_t y = 0; y < p; ++y) ones += col[x * p + y];
          CHECK(ones == 1);
        }
      }
      CHECK(distinct.size() == a.cols());
      CHECK(max_inner(a) <= static_cast<std::int64_t>(r));
      CHECK(a.cols() <= johnson_bound(a.rows(), p, r));
    }
  }
}

TEST_CASE("devore prime-field columns follow the coefficient ordering") {
  // column = c_0 p^r + ... + c_r for Q(x) = c_0 + c_1 x + ... + c_r x^r
  const auto a = devore_matrix(5, 1);
  CHECK(a.cols() == 25);
  for (std::uint32_t x = 0; x < 5; ++x) {
    CHECK(a.at(x * 5 + x, 1) == 1);            // Q = x
    CHECK(a.at(x * 5 + 1, 5) == 1);            // Q = 1
    CHECK(a.at(x * 5 + (x + 1) % 5, 6) == 1);  // Q = 1 + x
    CHECK(a.at(x * 5 + (3 * x + 2) % 5, 13) == 1);  // Q = 2 + 3x
  }
}

TEST_CASE("devore sampled pair bound at larger sizes") {
  const auto a = devore_matrix(31, 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10000; ++t) {
    const auto i = rng() % a.cols();
    const auto j = rng() % a.cols();
    if (i == j) continue;
    CHECK(dot(a.column(i), a.column(j)) <= 2);
  }
}

TEST_CASE("johnson bound") {
  CHECK(johnson_bound(64, 8, 2) == 720);
  CHECK(johnson_bound(15, 5, 2) == 42);
  CHECK(johnson_bound(20, 4, 0) == 5);
  for (std::uint64_t m = 4; m <= 40; ++m) {
    for (std::uint64_t w = 2; w <= m; ++w) {
      for (std::uint64_t l = 0; l < w && l <= 4; ++l) CHECK(johnson_bound(m, w, l) == johnson_oracle(m, w, l));
    }
  }
  CHECK_THROWS_AS(johnson_bound(10, 3, 3), std::invalid_argument);
}

TEST_CASE("devore optimality ratio") {
  CHECK(devore_optimality_ratio(8, 2) == doctest::Approx(512.0 / 720.0));
  CHECK(std::abs(1.0 - devore_optimality_ratio(64, 2)) < std::abs(1.0 - devore_optimality_ratio(8, 2)));
  CHECK(devore_optimality_ratio(7, 0) == doctest::Approx(1.0));
}

TEST_CASE("optical orthogonal codes") {
  const auto c1 = ooc_construct(1);
  CHECK(c1.length == 15);
  CHECK(c1.supports.size() == 2);
  for (const auto& s : c1.supports) {
    CHECK(s.size() == 5);
    CHECK(std::set<std::uint32_t>(s.begin(), s.end()).size() == 5);
  }
  // brute force over every shift, independent of the library helpers
  auto corr = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y, std::uint32_t s) {
    int c = 0;
    for (auto u : x) {
      for (auto v : y) c += (u + s) % 15 == v;
    }
    return c;
  };
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::uint32_t s = 1; s < 15; ++s) CHECK(corr(c1.supports[i], c1.supports[i], s) <= 2);
  }
  for (std::uint32_t s = 0; s < 15; ++s) CHECK(corr(c1.supports[0], c1.supports[1], s) <= 2);
  CHECK(max_autocorrelation(c1.supports[0], 15) <= 2);
  CHECK(max_crosscorrelation(c1.supports[0], c1.supports[1], 15) <= 2);

  const auto c2 = ooc_construct(2);
  CHECK(c2.length == 255);
  CHECK(c2.supports.size() == 50);

  const auto m1 = ooc_matrix(1);
  CHECK(m1.rows() == 15);
  CHECK(m1.cols() == 30);
  CHECK(m1.constant_norm_square() == 5);
  CHECK(max_inner(m1) <= 2);
  CHECK(m1.cols() <= johnson_bound(15, 5, 2));
  CHECK_THROWS_AS(ooc_construct(3), std::invalid_argument);
}
