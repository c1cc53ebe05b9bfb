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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dcsm/analysis.hpp"
#include "dcsm/bch.hpp"
#include "dcsm/binary_designs.hpp"
#include "dcsm/fft.hpp"
#include "dcsm/recovery.hpp"

using namespace dcsm;

namespace {

std::vector<Complex> naive_dft(const std::vector<Complex>& x) {
  const auto n = x.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < n; ++t) {
      out[k] += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(t * k % n) / n);
    }
  }
  return out;
}

std::vector<double> naive_xcorr(const std::vector<double>& r, const std::vector<double>& a) {
  const auto m = r.size();
  std::vector<double> out(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t t = 0; t < m; ++t) out[j] += r[t] * a[(t + j) % m];
  }
  return out;
}

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (auto x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("dft plans match the naive transform") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 3u, 7u, 8u, 15u, 16u, 31u, 63u, 64u, 100u, 255u, 1023u}) {
    std::vector<Complex> x(n);
    std::normal_distribution<double> normal;
    for (auto& v : x) v = {normal(rng), normal(rng)};
    const DftPlan plan(n);
    auto fx = x;
    plan.forward(fx);
    const auto oracle = naive_dft(x);
    double err = 0;
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(fx[k] - oracle[k]));
    CAPTURE(n);
    CHECK(err < 1e-9 * std::sqrt(static_cast<double>(n)) * 10);
    plan.inverse(fx);
    double back = 0;
    for (std::size_t k = 0; k < n; ++k) back = std::max(back, std::abs(fx[k] - x[k]));
    CHECK(back < 1e-10);
  }
  CHECK_THROWS_AS(DftPlan(0), std::invalid_argument);
}

TEST_CASE("circular cross-correlation") {
  std::vector<double> r{3, -1, 4, 1, -5, 9, 2};
  std::vector<double> spike(7, 0.0);
  spike[0] = 1;
  CHECK(max_abs_diff(circular_cross_correlation(r, spike), naive_xcorr(r, spike)) < 1e-12);
  // out[j] = r[(m - j) mod m] for a spike at 0
  const auto s = circular_cross_correlation(r, spike);
  for (std::size_t j = 0; j < 7; ++j) CHECK(s[j] == doctest::Approx(r[(7 - j) % 7]));

  const auto pn = assemble_bipolar_matrix(build_code_spec(3, 3));
  std::vector<double> c(pn.column(0).begin(), pn.column(0).end());
  const auto auto_corr = circular_cross_correlation(c, c);
  CHECK(auto_corr[0] == doctest::Approx(7.0));
  for (std::size_t j = 1; j < 7; ++j) CHECK(auto_corr[j] == doctest::Approx(-1.0));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_vector(63, rng);
    const auto y = random_vector(63, rng);
    CHECK(max_abs_diff(circular_cross_correlation(x, y), naive_xcorr(x, y)) < 1e-9);
  }
  CHECK_THROWS_AS(circular_cross_correlation(std::vector<double>(3), std::vector<double>(4)),
                  std::invalid_argument);
}

TEST_CASE("dictionary and measurement") {
  const auto a = assemble_bipolar_matrix(build_code_spec(4, 2));
  const auto d = Dictionary::from_matrix(a);
  for (std::size_t j = 0; j < d.cols(); ++j) {
    double s = 0;
    for (auto v : d.column(j)) s += v * v;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
  }
  SparseSignal zero{d.cols(), {}, {}};
  for (auto v : measure(d, zero)) CHECK(v == 0.0);
  SparseSignal spike{d.cols(), {5}, {1.0}};
  const auto y = measure(d, spike);
  for (std::size_t t = 0; t < d.rows(); ++t) CHECK(y[t] == d.column(5)[t]);

  SparseSignal s1{d.cols(), {1, 4}, {0.5, -2.0}};
  SparseSignal s2{d.cols(), {2, 4}, {1.5, 3.0}};
  SparseSignal sum{d.cols(), {1, 2, 4}, {0.5, 1.5, 1.0}};
  const auto y1 = measure(d, s1), y2 = measure(d, s2), ys = measure(d, sum);
  for (std::size_t t = 0; t < d.rows(); ++t) CHECK(std::abs(y1[t] + y2[t] - ys[t]) < 1e-12);

  SparseSignal bad{d.cols(), {4, 1}, {1.0, 1.0}};
  CHECK_THROWS_AS(measure(d, bad), std::invalid_argument);
  SparseSignal oob{d.cols(), {d.cols()}, {1.0}};
  CHECK_THROWS_AS(measure(d, oob), std::invalid_argument);
}

TEST_CASE("gaussian baseline") {
  const auto g = gaussian_baseline(64, 512, 42);
  CHECK(g.rows() == 64);
  CHECK(g.cols() == 512);
  CHECK(g == gaussian_baseline(64, 512, 42));
  CHECK_FALSE(g == gaussian_baseline(64, 512, 43));
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double s = 0;
    for (auto v : g.column(j)) s += v * v;
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("fast correlation equals the direct path") {
  std::mt19937_64 rng(8);
  for (auto [mt, i] : {std::pair{3, 3}, {4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
    const auto a = assemble_bipolar_matrix(build_code_spec(mt, i));
    const auto d = Dictionary::from_matrix(a);
    const Correlator corr(d, shift_group_partition(a));
    for (int trial = 0; trial < 50; ++trial) {
      const auto r = random_vector(d.rows(), rng);
      const auto fast = corr.correlate(r, CorrelationPath::circulant_fast);
      const auto direct = corr.correlate(r, CorrelationPath::direct);
      CHECK(max_abs_diff(fast, direct) <= 1e-9 * norm(r));
    }
  }
  // devore and ooc columns are binary circulant-free or partially circulant
  for (const auto& a : {devore_matrix(8, 2), ooc_matrix(1)}) {
    const auto d = Dictionary::from_matrix(a);
    const Correlator corr(d, shift_group_partition(a));
    const auto r = random_vector(d.rows(), rng);
    CHECK(max_abs_diff(corr.correlate(r, CorrelationPath::circulant_fast),
                       corr.correlate(r, CorrelationPath::direct)) <= 1e-9 * norm(r));
  }
}

TEST_CASE("singleton partition reproduces the direct path exactly") {
  const auto g = gaussian_baseline(20, 50, 1);
  const Correlator corr(g, ShiftGroupPartition::singletons(20, 50));
  std::mt19937_64 rng(2);
  const auto r = random_vector(20, rng);
  CHECK(corr.correlate(r, CorrelationPath::circulant_fast) == corr.correlate(r, CorrelationPath::direct));
  const auto all = correlate_all(g, ShiftGroupPartition::singletons(20, 50), r, CorrelationPath::direct);
  for (std::size_t j = 0; j < 50; ++j) {
    double s = 0;
    for (std::size_t t = 0; t < 20; ++t) s += r[t] * g.column(j)[t];
    CHECK(all[j] == doctest::Approx(s));
  }
}

TEST_CASE("pn circulant normalized correlation") {
  const auto a = assemble_bipolar_matrix(build_code_spec(3, 3));
  const auto d = Dictionary::from_matrix(a);
  const std::vector<double> r(d.column(0).begin(), d.column(0).end());
  const auto out = correlate_all(d, shift_group_partition(a), r, CorrelationPath::circulant_fast);
  CHECK(out[0] == doctest::Approx(1.0));
  for (std::size_t j = 1; j < 7; ++j) CHECK(out[j] == doctest::Approx(-1.0 / 7.0));
}

TEST_CASE("correlator rejects a mismatched partition") {
  const auto a = assemble_bipolar_matrix(build_code_spec(4, 2));
  const auto d = Dictionary::from_matrix(a);
  auto p = shift_group_partition(a);
  CHECK_THROWS_AS(Correlator(d, ShiftGroupPartition::singletons(d.rows(), d.cols() - 1)), std::invalid_argument);
  for (auto& g : p.groups) {
    if (g.columns.size() > 1) {
      g.offsets[1] = (g.offsets[1] + 1) % g.period;
      break;
    }
  }
  CHECK_THROWS_AS(Correlator(d, p), std::invalid_argument);
}

TEST_CASE("multiplication counts") {
  const auto a = assemble_bipolar_matrix(build_code_spec(10, 5));
  const auto d = Dictionary::from_matrix(a);
  const Correlator corr(d, shift_group_partition(a));
  const auto c = corr.multiplication_count();
  CHECK(c.direct == 1023ull * 1024ull);
  CHECK(c.fast < c.direct);
}

TEST_CASE("omp basics") {
  const auto a = assemble_bipolar_matrix(build_code_spec(6, 2));
  const auto d = Dictionary::from_matrix(a);
  const Correlator corr(d, shift_group_partition(a));
  const std::vector<double> y(d.column(77).begin(), d.column(77).end());
  const auto t = omp(corr, y, 1, CorrelationPath::direct);
  CHECK(t.estimate.support == std::vector<std::size_t>{77});
  CHECK(t.estimate.values[0] == doctest::Approx(1.0));
  CHECK(t.residual_norm_squares[0] < 1e-20);

  const std::vector<double> zero(63, 0.0);
  const auto z = omp(corr, zero, 3, CorrelationPath::circulant_fast);
  CHECK(z.estimate.support == std::vector<std::size_t>{0, 1, 2});
  for (auto v : z.estimate.values) CHECK(v == 0.0);
  for (auto v : z.residual_norm_squares) CHECK(v == 0.0);

  const auto e = omp(corr, y, 0, CorrelationPath::direct);
  CHECK(e.estimate.support.empty());
  CHECK(e.selected.empty());

  CHECK_THROWS_AS(omp(corr, y, 64, CorrelationPath::direct), std::invalid_argument);
  CHECK_THROWS_AS(omp(corr, std::vector<double>(10), 1, CorrelationPath::direct), std::invalid_argument);
}

TEST_CASE("omp fails loudly on a rank-deficient active set") {
  std::vector<std::int8_t> dup{1, 1, -1, 1, 1, -1, 1, -1, 1};
  const auto a = SensingMatrix::from_columns(3, 3, dup, Alphabet::bipolar);
  const auto d = Dictionary::from_matrix(a);
  const Correlator corr(d, ShiftGroupPartition::singletons(3, 3));
  // after column 0 the residual vanishes, so the duplicate column 1 is chosen next
  const std::vector<double> y(d.column(0).begin(), d.column(0).end());
  CHECK_THROWS_AS(omp(corr, y, 2, CorrelationPath::direct), std::runtime_error);
}

TEST_CASE("omp exact recovery in the guaranteed regime") {
  const auto a = assemble_bipolar_matrix(build_code_spec(6, 2));
  const auto d = Dictionary::from_matrix(a);
  const Correlator corr(d, shift_group_partition(a));
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const auto s = random_sparse_signal(d.cols(), 3, 99, trial);
    const auto y = measure(d, s);
    const auto t = omp(corr, y, 3, CorrelationPath::direct);
    CHECK(reconstruction_snr_db(s, t.estimate) >= kPerfectRecoveryDb);
    // residual is orthogonal to the active columns after every update
    std::vector<double> r(y.begin(), y.end());
    for (std::size_t p = 0; p < t.estimate.support.size(); ++p) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= t.estimate.values[p] * d.column(t.estimate.support[p])[i];
    }
    for (auto j : t.estimate.support) {
      double ip = 0;
      for (std::size_t i = 0; i < r.size(); ++i) ip += r[i] * d.column(j)[i];
      CHECK(std::abs(ip) <= 1e-9);
    }
  }
}

TEST_CASE("snr") {
  SparseSignal s{4, {1}, {2.0}};
  CHECK(std::isinf(reconstruction_snr_db(s, s)));
  SparseSignal e{4, {1}, {1.0}};
  CHECK(reconstruction_snr_db(s, e) == doctest::Approx(10 * std::log10(4.0)));
  SparseSignal other{5, {}, {}};
  CHECK_THROWS_AS(reconstruction_snr_db(s, other), std::invalid_argument);
}

TEST_CASE("random signals and seeds") {
  const auto s = random_sparse_signal(512, 5, 7, 3);
  CHECK(s.support.size() == 5);
  CHECK_NOTHROW(s.validate());
  const auto t = random_sparse_signal(512, 5, 7, 3);
  CHECK(s.support == t.support);
  CHECK(s.values == t.values);
  CHECK(random_sparse_signal(512, 5, 7, 4).support != s.support);
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
  CHECK(derive_seed(1, 2, 3, 0) == derive_seed(1, 2, 3));
  CHECK_THROWS_AS(random_sparse_signal(3, 4, 1, 0), std::invalid_argument);
}

TEST_CASE("recovery sweep") {
  const auto a = assemble_bipolar_matrix(build_code_spec(6, 2));
  const auto d = Dictionary::from_matrix(a);
  const Correlator corr(d, shift_group_partition(a));
  const std::vector<std::size_t> ks{1, 3, 4};
  const auto r = recovery_sweep(corr, ks, 200, 5);
  REQUIRE(r.points.size() == 3);
  for (const auto& p : r.points) CHECK(p.value == 1.0);
  CHECK(r.axis_name == "k");
  const auto again = recovery_sweep(corr, ks, 200, 5);
  for (std::size_t i = 0; i < 3; ++i) CHECK(again.points[i].value == r.points[i].value);

  const auto dev = devore_matrix(8, 2);
  const auto dd = Dictionary::from_matrix(dev);
  const Correlator dc(dd, shift_group_partition(dev));
  const std::vector<std::size_t> one{1};
  CHECK(recovery_sweep(dc, one, 100, 5).points[0].value == 1.0);
  CHECK_THROWS_AS(recovery_sweep(corr, ks, 0, 5), std::invalid_argument);
}

TEST_CASE("noise sweep") {
  const auto a = assemble_bipolar_matrix(build_code_spec(6, 2));
  const auto d = Dictionary::from_matrix(a);
  const Correlator corr(d, shift_group_partition(a));
  const std::vector<double> clean{std::numeric_limits<double>::infinity()};
  CHECK(noise_sweep(corr, 3, clean, 100, 1).points[0].value >= 100.0);

  const std::vector<double> levels{10.0, 20.0, 30.0};
  const auto r = noise_sweep(corr, 8, levels, 1000, 2);
  REQUIRE(r.points.size() == 3);
  CHECK(r.points[0].value < r.points[1].value);
  CHECK(r.points[1].value < r.points[2].value);
  CHECK_THROWS_AS(noise_sweep(corr, 0, levels, 10, 1), std::invalid_argument);
}
