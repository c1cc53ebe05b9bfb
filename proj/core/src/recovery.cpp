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

#include "dcsm/recovery.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace dcsm {

// ---------------------------------------------------------------------------
// Dictionary

double column_scale(std::int64_t norm_square) {
  if (norm_square <= 0) throw std::invalid_argument("zero column cannot be normalized");
  return 1.0 / std::sqrt(static_cast<double>(norm_square));
}

Dictionary Dictionary::from_matrix(const SensingMatrix& a) {
  Dictionary d;
  d.rows_ = a.rows();
  d.cols_ = a.cols();
  d.descriptor_ = a.descriptor();
  d.data_.resize(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double scale = column_scale(a.norm_squares()[j]);
    const auto col = a.column(j);
    for (std::size_t t = 0; t < a.rows(); ++t) d.data_[j * d.rows_ + t] = col[t] * scale;
  }
  return d;
}

Dictionary Dictionary::from_values(std::size_t rows, std::size_t cols, std::vector<double> column_major,
                                   Descriptor descriptor) {
  if (rows == 0 || column_major.size() != rows * cols) {
    throw std::invalid_argument("dictionary size mismatch");
  }
  if (!std::all_of(column_major.begin(), column_major.end(), [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("dictionary entries must be finite");
  }
  Dictionary d;
  d.rows_ = rows;
  d.cols_ = cols;
  d.data_ = std::move(column_major);
  d.descriptor_ = std::move(descriptor);
  return d;
}

Dictionary gaussian_baseline(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("gaussian baseline needs positive size");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> data(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double norm = 0.0;
    for (std::size_t t = 0; t < rows; ++t) {
      const double v = normal(rng);
      data[j * rows + t] = v;
      norm += v * v;
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t t = 0; t < rows; ++t) data[j * rows + t] *= scale;
  }
  Descriptor d;
  d.set("family", "gaussian");
  d.set("m", static_cast<std::int64_t>(rows));
  d.set("n", static_cast<std::int64_t>(cols));
  d.set("seed", std::to_string(seed));
  return Dictionary::from_values(rows, cols, std::move(data), std::move(d));
}

void SparseSignal::validate() const {
  if (support.size() != values.size()) throw std::invalid_argument("support and values differ in length");
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= n) throw std::invalid_argument("support index out of range");
    if (i > 0 && support[i] <= support[i - 1]) {
      throw std::invalid_argument("support must be strictly ascending");
    }
  }
}

std::vector<double> SparseSignal::dense() const {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) out[support[i]] = values[i];
  return out;
}

MeasurementVector measure(const Dictionary& a, const SparseSignal& s) {
  s.validate();
  if (s.n != a.cols()) throw std::invalid_argument("signal length differs from column count");
  MeasurementVector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    const auto col = a.column(s.support[i]);
    for (std::size_t t = 0; t < a.rows(); ++t) y[t] += s.values[i] * col[t];
  }
  return y;
}

// ---------------------------------------------------------------------------
// Correlation

namespace {

// out[j] = sum_t r[t] a[(t + j) mod m]  <=>  DFT(out) = conj(DFT(r)) * DFT(a)
void correlate_spectra(const DftPlan& plan, std::span<const Complex> r_spectrum,
                       std::span<const Complex> a_spectrum, std::span<double> out) {
  std::vector<Complex> work(plan.size());
  for (std::size_t k = 0; k < work.size(); ++k) work[k] = std::conj(r_spectrum[k]) * a_spectrum[k];
  plan.inverse(work);
  for (std::size_t k = 0; k < work.size(); ++k) out[k] = work[k].real();
}

std::vector<Complex> spectrum_of(const DftPlan& plan, std::span<const double> v) {
  std::vector<Complex> out(v.begin(), v.end());
  plan.forward(out);
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::uint64_t ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : std::bit_width(v - 1); }

}  // namespace

std::string_view to_string(CorrelationPath path) {
  return path == CorrelationPath::direct ? "direct" : "circulant-fast";
}

std::vector<double> circular_cross_correlation(std::span<const double> r, std::span<const double> a) {
  if (r.size() != a.size()) throw std::invalid_argument("correlation length mismatch");
  if (r.empty()) return {};
  const DftPlan plan(r.size());
  const auto rs = spectrum_of(plan, r);
  const auto as = spectrum_of(plan, a);
  std::vector<double> out(r.size());
  correlate_spectra(plan, rs, as, out);
  return out;
}

Correlator::Correlator(const Dictionary& dictionary, ShiftGroupPartition partition)
    : dictionary_(dictionary), partition_(std::move(partition)) {
  const std::size_t m = dictionary_.rows();
  if (partition_.rows != m) throw std::invalid_argument("partition row count mismatch");
  std::vector<char> covered(dictionary_.cols(), 0);
  spectra_.resize(partition_.groups.size());
  for (std::size_t g = 0; g < partition_.groups.size(); ++g) {
    const auto& group = partition_.groups[g];
    if (group.columns.size() != group.offsets.size() || group.columns.empty()) {
      throw std::invalid_argument("malformed shift group");
    }
    for (auto c : group.columns) {
      if (c >= covered.size() || covered[c]) throw std::invalid_argument("partition does not cover columns exactly once");
      covered[c] = 1;
    }
    if (group.columns.size() == 1) continue;  // evaluated with a direct dot product
    if (group.base.size() != m || group.period == 0 || m % group.period != 0) {
      throw std::invalid_argument("shift group base does not match the row count");
    }
    std::int64_t norm_square = 0;
    for (auto v : group.base) norm_square += v * v;
    const double scale = column_scale(norm_square);
    for (std::size_t idx = 0; idx < group.columns.size(); ++idx) {
      const auto col = dictionary_.column(group.columns[idx]);
      for (std::size_t t = 0; t < m; ++t) {
        const double expected = group.base[(t + group.offsets[idx]) % m] * scale;
        if (std::abs(col[t] - expected) > 1e-12) {
          throw std::invalid_argument("dictionary column is not a rotation of its group base");
        }
      }
    }
    const std::size_t period = group.period;
    const auto& plan = plans_.try_emplace(period, period).first->second;
    std::vector<double> one_period(period);
    for (std::size_t t = 0; t < period; ++t) one_period[t] = group.base[t] * scale;
    spectra_[g] = {period, spectrum_of(plan, one_period)};
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw std::invalid_argument("partition does not cover every column");
  }
}

void Correlator::correlate(std::span<const double> residual, CorrelationPath path,
                           std::span<double> out) const {
  const std::size_t m = dictionary_.rows();
  if (residual.size() != m) throw std::invalid_argument("residual length mismatch");
  if (out.size() != dictionary_.cols()) throw std::invalid_argument("output length mismatch");

  if (path == CorrelationPath::direct) {
    for (std::size_t j = 0; j < dictionary_.cols(); ++j) out[j] = dot(residual, dictionary_.column(j));
    return;
  }

  // Residual folded onto each period length in use, then transformed once.
  std::map<std::size_t, std::vector<Complex>> folded_spectra;
  for (const auto& [period, plan] : plans_) {
    std::vector<double> folded(period, 0.0);
    for (std::size_t t = 0; t < m; ++t) folded[t % period] += residual[t];
    folded_spectra.emplace(period, spectrum_of(plan, folded));
  }

  std::vector<double> corr;
  for (std::size_t g = 0; g < partition_.groups.size(); ++g) {
    const auto& group = partition_.groups[g];
    if (group.columns.size() == 1) {
      out[group.columns[0]] = dot(residual, dictionary_.column(group.columns[0]));
      continue;
    }
    const auto& spec = spectra_[g];
    corr.resize(spec.period);
    correlate_spectra(plans_.at(spec.period), folded_spectra.at(spec.period), spec.spectrum, corr);
    for (std::size_t idx = 0; idx < group.columns.size(); ++idx) {
      out[group.columns[idx]] = corr[group.offsets[idx] % spec.period];
    }
  }
}

std::vector<double> Correlator::correlate(std::span<const double> residual, CorrelationPath path) const {
  std::vector<double> out(dictionary_.cols());
  correlate(residual, path, out);
  return out;
}

MultiplicationCount Correlator::multiplication_count() const {
  MultiplicationCount count;
  const std::uint64_t m = dictionary_.rows();
  count.direct = m * dictionary_.cols();
  for (std::size_t g = 0; g < partition_.groups.size(); ++g) {
    const auto& group = partition_.groups[g];
    if (group.columns.size() == 1) {
      count.fast += m;
      continue;
    }
    const std::uint64_t mu = group.period;
    // pointwise product plus one inverse transform
    count.fast += mu + 2 * mu * ceil_log2(mu);
  }
  count.residual_transform = 2 * m * ceil_log2(m);
  return count;
}

std::vector<double> correlate_all(const Dictionary& a, const ShiftGroupPartition& partition,
                                  std::span<const double> residual, CorrelationPath path) {
  const Correlator correlator(a, partition);
  return correlator.correlate(residual, path);
}

// ---------------------------------------------------------------------------
// OMP

OmpTrace omp(const Correlator& correlator, std::span<const double> y, std::size_t k,
             CorrelationPath path) {
  const Dictionary& a = correlator.dictionary();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (y.size() != m) throw std::invalid_argument("measurement length differs from row count");
  if (k > m) throw std::invalid_argument("sparsity exceeds the number of measurements");
  if (k > n) throw std::invalid_argument("sparsity exceeds the number of columns");

  OmpTrace trace;
  trace.path = path;
  std::vector<double> residual(y.begin(), y.end());
  std::vector<double> correlations(n);
  std::vector<char> active(n, 0);
  std::vector<std::size_t> order;  // active columns in selection order
  Eigen::VectorXd coeffs;

  for (std::size_t iter = 0; iter < k; ++iter) {
    correlator.correlate(residual, path, correlations);

    std::size_t best = n;
    double best_value = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (active[j]) continue;
      const double v = std::abs(correlations[j]);
      if (v > best_value) {
        best_value = v;
        best = j;
      }
    }
    if (path != CorrelationPath::direct) {
      // Re-score near-ties directly so both paths pick the same column.
      const double norm = std::sqrt(dot(residual, residual));
      const double tol = 1e-9 * std::max(norm, 1e-300);
      double adjudicated = -1.0;
      std::size_t winner = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (active[j] || std::abs(correlations[j]) < best_value - 2 * tol) continue;
        const double v = std::abs(dot(residual, a.column(j)));
        if (v > adjudicated) {
          adjudicated = v;
          winner = j;
        }
      }
      best = winner;
    }

    active[best] = 1;
    order.push_back(best);
    trace.selected.push_back(best);

    const auto s = static_cast<Eigen::Index>(order.size());
    Eigen::MatrixXd gram(s, s);
    Eigen::VectorXd rhs(s);
    for (Eigen::Index p = 0; p < s; ++p) {
      const auto cp = a.column(order[static_cast<std::size_t>(p)]);
      rhs(p) = dot(cp, y);
      for (Eigen::Index q = 0; q <= p; ++q) {
        const double g = dot(cp, a.column(order[static_cast<std::size_t>(q)]));
        gram(p, q) = g;
        gram(q, p) = g;
      }
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(gram);
    // Unit columns: a pivot this small means a numerically dependent active set.
    if (llt.info() != Eigen::Success || llt.matrixLLT().diagonal().minCoeff() < 1e-7) {
      throw std::runtime_error("active set is rank deficient");
    }
    coeffs = llt.solve(rhs);

    std::copy(y.begin(), y.end(), residual.begin());
    for (Eigen::Index p = 0; p < s; ++p) {
      const auto cp = a.column(order[static_cast<std::size_t>(p)]);
      for (std::size_t t = 0; t < m; ++t) residual[t] -= coeffs(p) * cp[t];
    }
    trace.residual_norm_squares.push_back(dot(residual, residual));
  }

  std::vector<std::size_t> idx(order.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t z) { return order[x] < order[z]; });
  trace.estimate.n = n;
  for (auto p : idx) {
    trace.estimate.support.push_back(order[p]);
    trace.estimate.values.push_back(coeffs(static_cast<Eigen::Index>(p)));
  }
  return trace;
}

double reconstruction_snr_db(const SparseSignal& truth, const SparseSignal& estimate) {
  if (truth.n != estimate.n) throw std::invalid_argument("signal lengths differ");
  const auto s = truth.dense();
  const auto e = estimate.dense();
  double signal = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    signal += s[i] * s[i];
    error += (s[i] - e[i]) * (s[i] - e[i]);
  }
  if (error == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / error);
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Trials are split into contiguous blocks; each trial writes only its own slot.
template <class Fn>
void for_each_trial(std::size_t trials, Fn&& fn) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(trials, 1));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < trials; t += workers) fn(t);
    });
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return splitmix64(h ^ c);
}

SparseSignal random_sparse_signal(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t trial) {
  if (k > n) throw std::invalid_argument("sparsity exceeds signal length");
  std::mt19937_64 rng(derive_seed(seed, k, trial));
  SparseSignal s;
  s.n = n;
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  s.support.reserve(k);
  std::sample(all.begin(), all.end(), std::back_inserter(s.support), k, rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t i = 0; i < k; ++i) s.values.push_back(normal(rng));
  return s;
}

ExperimentResult recovery_sweep(const Correlator& correlator, std::span<const std::size_t> k_values,
                                std::size_t trials, std::uint64_t seed, CorrelationPath path) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const Dictionary& a = correlator.dictionary();
  ExperimentResult result;
  result.axis_name = "k";
  result.value_name = "success_rate";
  result.seed = seed;
  for (auto k : k_values) {
    std::vector<char> success(trials, 0);
    for_each_trial(trials, [&](std::size_t t) {
      const auto s = random_sparse_signal(a.cols(), k, seed, t);
      const auto y = measure(a, s);
      const auto trace = omp(correlator, y, k, path);
      success[t] = reconstruction_snr_db(s, trace.estimate) >= kPerfectRecoveryDb;
    });
    const auto hits = static_cast<std::size_t>(std::count(success.begin(), success.end(), 1));
    result.points.push_back(
        {static_cast<double>(k), static_cast<double>(hits) / static_cast<double>(trials), trials});
  }
  return result;
}

ExperimentResult noise_sweep(const Correlator& correlator, std::size_t k,
                             std::span<const double> levels_db, std::size_t trials,
                             std::uint64_t seed, CorrelationPath path) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (k == 0) throw std::invalid_argument("noise sweep requires k >= 1");
  const Dictionary& a = correlator.dictionary();
  ExperimentResult result;
  result.axis_name = "noise_db";
  result.value_name = "mean_snr_db";
  result.seed = seed;
  for (std::size_t level = 0; level < levels_db.size(); ++level) {
    const double db = levels_db[level];
    std::vector<double> snr(trials, 0.0);
    for_each_trial(trials, [&](std::size_t t) {
      const auto s = random_sparse_signal(a.cols(), k, seed, t);
      auto y = measure(a, s);
      if (!std::isinf(db)) {
        std::mt19937_64 rng(derive_seed(seed, k, t, level + 1));
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<double> w(y.size());
        double noise_energy = 0.0;
        double signal_energy = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] = normal(rng);
          noise_energy += w[i] * w[i];
          signal_energy += y[i] * y[i];
        }
        const double target = signal_energy / std::pow(10.0, db / 10.0);
        const double scale = std::sqrt(target / noise_energy);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += scale * w[i];
      }
      const auto trace = omp(correlator, y, k, path);
      snr[t] = std::min(reconstruction_snr_db(s, trace.estimate), kSnrCeilingDb);
    });
    const double mean = std::accumulate(snr.begin(), snr.end(), 0.0) / static_cast<double>(trials);
    result.points.push_back({db, mean, trials});
  }
  return result;
}

}  // namespace dcsm
