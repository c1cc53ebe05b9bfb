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

#ifndef DCSM_RECOVERY_HPP
#define DCSM_RECOVERY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dcsm/analysis.hpp"
#include "dcsm/fft.hpp"
#include "dcsm/sensing_matrix.hpp"

namespace dcsm {

/// Real matrix with unit-norm columns, stored column-major.
class Dictionary {
 public:
  /// Scales every integer column by 1 / sqrt(norm-square).
  static Dictionary from_matrix(const SensingMatrix& a);
  /// Takes values as given (already normalized). Throws std::invalid_argument
  /// on non-finite entries or a size mismatch.
  static Dictionary from_values(std::size_t rows, std::size_t cols, std::vector<double> column_major,
                                Descriptor descriptor = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> column(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }
  std::span<const double> values() const { return data_; }
  const Descriptor& descriptor() const { return descriptor_; }

  friend bool operator==(const Dictionary&, const Dictionary&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
  Descriptor descriptor_;
};

/// Unit normalization factor used for integer columns.
double column_scale(std::int64_t norm_square);

/// i.i.d. standard normal entries from a seeded std::mt19937_64, columns
/// scaled to unit norm.
Dictionary gaussian_baseline(std::size_t rows, std::size_t cols, std::uint64_t seed);

struct SparseSignal {
  std::size_t n = 0;
  std::vector<std::size_t> support;  // ascending, distinct, < n
  std::vector<double> values;        // aligned with support

  /// Throws std::invalid_argument if the invariants do not hold.
  void validate() const;
  std::vector<double> dense() const;
};

using MeasurementVector = std::vector<double>;

/// y = sum over the support of s_i times normalized column i.
MeasurementVector measure(const Dictionary& a, const SparseSignal& s);

/// out[j] = sum_t r[t] * a[(t + j) mod m], evaluated through DFTs.
std::vector<double> circular_cross_correlation(std::span<const double> r, std::span<const double> a);

enum class CorrelationPath { direct, circulant_fast };

std::string_view to_string(CorrelationPath path);

/// Per-iteration multiplication counts for one full correlation pass.
struct MultiplicationCount {
  std::uint64_t direct = 0;
  std::uint64_t fast = 0;
  std::uint64_t residual_transform = 0;  // shared m-point transform of r, once per pass
};

/// Inner products of a residual with every normalized column. The fast path
/// correlates once per circulant group using the group's base pattern; the
/// direct path takes one dot product per column. Keeps a reference to the
/// dictionary, which must outlive the correlator.
class Correlator {
 public:
  /// Throws std::invalid_argument when the partition does not describe the
  /// dictionary columns.
  Correlator(const Dictionary& dictionary, ShiftGroupPartition partition);

  const Dictionary& dictionary() const { return dictionary_; }
  const ShiftGroupPartition& partition() const { return partition_; }

  void correlate(std::span<const double> residual, CorrelationPath path, std::span<double> out) const;
  std::vector<double> correlate(std::span<const double> residual, CorrelationPath path) const;

  /// Counts under the textbook FFT model: a mu-point transform costs
  /// 2 mu ceil(log2 mu) multiplications.
  MultiplicationCount multiplication_count() const;

 private:
  struct GroupSpectrum {
    std::size_t period = 0;
    std::vector<Complex> spectrum;  // DFT of one normalized period of the base
  };

  const Dictionary& dictionary_;
  ShiftGroupPartition partition_;
  std::vector<GroupSpectrum> spectra_;  // aligned with partition_.groups
  std::map<std::size_t, DftPlan> plans_;
};

/// Convenience wrapper building a correlator for a single pass.
std::vector<double> correlate_all(const Dictionary& a, const ShiftGroupPartition& partition,
                                  std::span<const double> residual, CorrelationPath path);

struct OmpTrace {
  std::vector<std::size_t> selected;              // one per iteration
  std::vector<double> residual_norm_squares;      // after each iteration
  SparseSignal estimate;                          // support ascending
  CorrelationPath path = CorrelationPath::direct;
};

/// Orthogonal matching pursuit with exactly k iterations. Each iteration
/// selects the inactive column with the largest |correlation| (lowest index
/// on ties), then re-solves least squares on the active set through a
/// Cholesky factorization of its Gram matrix.
///
/// Both correlation paths select identical indices: fast-path candidates
/// within 1e-9 of the maximum are re-scored with direct dot products.
/// Throws std::invalid_argument when k > rows or sizes disagree, and
/// std::runtime_error when the active Gram matrix is not positive definite.
OmpTrace omp(const Correlator& correlator, std::span<const double> y, std::size_t k,
             CorrelationPath path);

/// 10 log10(|s|^2 / |s - estimate|^2); +infinity for an exact match.
double reconstruction_snr_db(const SparseSignal& truth, const SparseSignal& estimate);

inline constexpr double kPerfectRecoveryDb = 100.0;
/// Per-trial SNR values are clamped here before averaging.
inline constexpr double kSnrCeilingDb = 300.0;

struct ExperimentPoint {
  double axis = 0.0;
  double value = 0.0;  // success rate or mean SNR in dB
  std::size_t trials = 0;
};

struct ExperimentResult {
  std::string axis_name;
  std::string value_name;
  std::vector<ExperimentPoint> points;
  std::uint64_t seed = 0;
};

/// Mixes a master seed with stream coordinates (splitmix64 finalizer chain).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

/// Uniform support without replacement and standard normal values, both
/// drawn from derive_seed(seed, k, trial).
SparseSignal random_sparse_signal(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t trial);

/// Perfect-recovery rate (SNR >= 100 dB) per sparsity level.
ExperimentResult recovery_sweep(const Correlator& correlator, std::span<const std::size_t> k_values,
                                std::size_t trials, std::uint64_t seed,
                                CorrelationPath path = CorrelationPath::direct);

/// Mean output SNR per input noise level (dB; +infinity means noiseless).
/// White Gaussian noise is scaled so that |A s|^2 / |w|^2 matches the level
/// exactly. The same signals are reused across levels.
ExperimentResult noise_sweep(const Correlator& correlator, std::size_t k,
                             std::span<const double> levels_db, std::size_t trials,
                             std::uint64_t seed, CorrelationPath path = CorrelationPath::direct);

}  // namespace dcsm

#endif  // DCSM_RECOVERY_HPP
