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

#ifndef DCSM_FFT_HPP
#define DCSM_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dcsm {

using Complex = std::complex<double>;

/// Precomputed DFT of one length. Powers of two run an iterative radix-2
/// transform; every other length goes through Bluestein's chirp-z identity
/// on a radix-2 transform of size >= 2n - 1.
///
/// forward computes X[k] = sum_t x[t] exp(-2 pi i t k / n); inverse applies
/// the conjugate kernel and divides by n. Plans are immutable and may be
/// shared between threads.
class DftPlan {
 public:
  explicit DftPlan(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

 private:
  void radix2(std::span<Complex> data, bool inverse) const;
  void bluestein(std::span<Complex> data) const;

  std::size_t n_ = 0;
  std::size_t pow2_ = 0;  // radix-2 working size
  std::vector<Complex> twiddles_;       // exp(-2 pi i k / pow2_), k < pow2_ / 2
  std::vector<std::size_t> bit_reverse_;
  std::vector<Complex> chirp_;          // exp(-i pi k^2 / n), Bluestein only
  std::vector<Complex> chirp_filter_;   // transformed conj chirp, Bluestein only
};

}  // namespace dcsm

#endif  // DCSM_FFT_HPP
