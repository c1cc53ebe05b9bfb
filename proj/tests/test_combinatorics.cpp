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

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dcsm/bch.hpp"
#include "dcsm/combinatorics.hpp"

using namespace dcsm;

namespace {

// Ones separated by at least a zeros, reading the pattern as a line.
std::uint64_t brute_linear(int a, int b) {
  std::uint64_t count = 0;
  for (std::uint64_t p = 0; p < (1ull << b); ++p) {
    bool ok = true;
    for (int d = 1; d <= a && ok; ++d) ok = (p & (p >> d)) == 0;
    count += ok;
  }
  return count;
}

// Same, with the wrap-around gap included; weight <= 1 always counts.
std::uint64_t brute_circular(int a, int b) {
  std::uint64_t count = 0;
  const std::uint64_t mask = (1ull << b) - 1;
  for (std::uint64_t p = 0; p < (1ull << b); ++p) {
    if (std::popcount(p) <= 1) {
      ++count;
      continue;
    }
    bool ok = true;
    for (int d = 1; d <= a && ok; ++d) {
      if (d >= b) {
        ok = false;
        break;
      }
      const std::uint64_t rot = ((p << d) | (p >> (b - d))) & mask;
      ok = (p & rot) == 0;
    }
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("kappa") {
  CHECK(kappa(3, 0) == 1);
  CHECK(kappa(3, 1) == 2);
  CHECK(kappa(3, 2) == 3);
  CHECK(kappa(3, 3) == 4);
  CHECK(kappa(3, 4) == 5);
  CHECK(kappa(3, 5) == 7);
  for (int a = 1; a <= 6; ++a) {
    for (int b = 0; b <= 20; ++b) CHECK(kappa(a, b) == brute_linear(a, b));
  }
  CHECK(kappa(1, 90) > 0);
  CHECK_THROWS_AS(kappa(1, 200), std::overflow_error);
  CHECK(kappa(40, 256) > 0);
  CHECK_THROWS_AS(kappa(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(kappa(2, -1), std::invalid_argument);
}

TEST_CASE("tau") {
  CHECK(tau(3, 4) == 5);
  CHECK(tau(3, 6) == 7);
  CHECK(tau(3, 8) == 13);
  CHECK(tau(3, 10) == 26);
  CHECK(tau(2, 6) == 10);
  for (int b = 1; b <= 20; ++b) CHECK(tau(b, b) == static_cast<std::uint64_t>(b) + 1);
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 18; ++b) CHECK(tau(a, b) == brute_circular(a, b));
  }
  CHECK_THROWS_AS(tau(1, 31), std::invalid_argument);
  CHECK_THROWS_AS(tau(0, 5), std::invalid_argument);
}

TEST_CASE("tau sandwich") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = a; b <= 24; ++b) {
      CHECK(kappa(a, b - a) <= tau(a, b));
      CHECK(tau(a, b) <= kappa(a, b));
    }
  }
}

TEST_CASE("tau equals the parity-check degree") {
  for (int mt = 2; mt <= 12; ++mt) {
    for (int i = 1; i <= mt; ++i) CHECK(tau(i, mt) == static_cast<std::uint64_t>(build_code_spec(mt, i).dimension));
  }
}

TEST_CASE("gamma root") {
  CHECK(std::abs(gamma_root(1) - std::numbers::phi) < 1e-12);
  CHECK(gamma_root(5) == doctest::Approx(1.2852).epsilon(1e-4));
  for (int a = 1; a <= 50; ++a) {
    const double g = gamma_root(a);
    CHECK(g > 1.0);
    CHECK(g < 2.0);
    CHECK(std::abs(std::pow(g, a + 1) - std::pow(g, a) - 1.0) <= 1e-12);
    CHECK(gamma_root(a + 1) < g);
  }
  // growth rate of the linear count approaches gamma
  for (int b = 60; b <= 80; ++b) {
    CHECK(std::abs(static_cast<double>(kappa(5, b + 1)) / static_cast<double>(kappa(5, b)) - gamma_root(5)) < 1e-3);
  }
}

TEST_CASE("delta bound") {
  const auto d5 = delta_bound_check(5);
  CHECK(d5.delta == doctest::Approx(3.506).epsilon(1e-3));
  CHECK(d5.power == doctest::Approx(3.085).epsilon(1e-3));
  for (int a = 2; a <= 100; ++a) CHECK(delta_bound_check(a).holds);
  CHECK_THROWS_AS(delta_bound_check(1), std::invalid_argument);
}

TEST_CASE("growth ratio minimum") {
  const auto m = growth_ratio_minimum();
  CHECK(m.y == doctest::Approx(1.277).epsilon(1e-3));
  CHECK(std::abs(m.x - 11.53) < 0.05);
  CHECK(std::abs(m.value - 0.18) < 0.01);
  CHECK(std::abs(3 * std::pow(m.y, 7) - 7 * std::pow(m.y, 4) + 2) < 1e-9);
  // an interior minimum: nearby points are not lower
  auto f = [](double x) { return std::pow(x, 0.3) - 0.5 * std::pow(x, -0.4) - 0.7 * std::log(x); };
  for (double x = 1.0; x <= 200.0; x += 0.25) CHECK(f(x) >= m.value - 1e-12);
}

TEST_CASE("scaling report") {
  const auto r = scaling_report(6, 2);
  CHECK(r.m == 63);
  CHECK(r.tau == 10);
  CHECK(r.n == 512);
  CHECK(r.certified_k == 7);
  CHECK_FALSE(r.analytic_k);

  const auto pn = scaling_report(4, 4);
  CHECK(pn.pn_case);
  CHECK(pn.m == 15);
  CHECK(pn.n == 15);

  const auto big = scaling_report(10, 3);
  CHECK(big.analytic_k);
  CHECK(big.tau == 26);

  for (int i = 1; i <= 4; ++i) {
    std::uint64_t last = 0;
    for (int mt = i + 1; mt <= 12; ++mt) {
      const auto s = scaling_report(mt, i);
      CHECK(s.n >= last);
      last = s.n;
    }
  }
}
