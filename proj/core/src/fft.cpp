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

#include "dcsm/fft.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

namespace dcsm {

DftPlan::DftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("DFT length must be positive");
  const bool direct = std::has_single_bit(n);
  pow2_ = direct ? n : std::bit_ceil(2 * n - 1);

  twiddles_.resize(pow2_ / 2);
  for (std::size_t k = 0; k < twiddles_.size(); ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(pow2_);
    twiddles_[k] = std::polar(1.0, angle);
  }
  bit_reverse_.resize(pow2_);
  const int bits = std::countr_zero(pow2_);
  for (std::size_t k = 0; k < pow2_; ++k) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((k >> b) & 1u) << (bits - 1 - b);
    bit_reverse_[k] = r;
  }

  if (!direct) {
    chirp_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the angle argument small
      const std::size_t k2 = (k * k) % (2 * n);
      chirp_[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n));
    }
    chirp_filter_.assign(pow2_, Complex{});
    chirp_filter_[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      chirp_filter_[k] = std::conj(chirp_[k]);
      chirp_filter_[pow2_ - k] = std::conj(chirp_[k]);
    }
    radix2(chirp_filter_, false);
  }
}

void DftPlan::radix2(std::span<Complex> data, bool inverse) const {
  const std::size_t n = pow2_;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < bit_reverse_[k]) std::swap(data[k], data[bit_reverse_[k]]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        Complex w = twiddles_[k * stride];
        if (inverse) w = std::conj(w);
        const Complex u = data[start + k];
        const Complex v = data[start + k + half] * w;
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
}

void DftPlan::bluestein(std::span<Complex> data) const {
  std::vector<Complex> work(pow2_, Complex{});
  for (std::size_t k = 0; k < n_; ++k) work[k] = data[k] * chirp_[k];
  radix2(work, false);
  for (std::size_t k = 0; k < pow2_; ++k) work[k] *= chirp_filter_[k];
  radix2(work, true);
  const double scale = 1.0 / static_cast<double>(pow2_);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * scale * chirp_[k];
}

void DftPlan::forward(std::span<Complex> data) const {
  if (data.size() != n_) throw std::invalid_argument("DFT length mismatch");
  if (chirp_.empty()) {
    radix2(data, false);
  } else {
    bluestein(data);
  }
}

void DftPlan::inverse(std::span<Complex> data) const {
  if (data.size() != n_) throw std::invalid_argument("DFT length mismatch");
  for (auto& v : data) v = std::conj(v);
  forward(data);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : data) v = std::conj(v) * scale;
}

}  // namespace dcsm
