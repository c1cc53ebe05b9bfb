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

#ifndef DCSM_SENSING_MATRIX_HPP
#define DCSM_SENSING_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcsm {

enum class Alphabet { binary, bipolar, ternary };

std::string_view to_string(Alphabet alphabet);
std::optional<Alphabet> parse_alphabet(std::string_view text);

/// Ordered key=value record of construction parameters.
class Descriptor {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, std::int64_t value) { set(std::move(key), std::to_string(value)); }
  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  friend bool operator==(const Descriptor&, const Descriptor&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Integer-entry measurement matrix stored column-major. Normalization by
/// 1/sqrt(norm-square) is metadata; entries stay exact.
class SensingMatrix {
 public:
  /// Validates entries against the alphabet and records per-column
  /// norm-squares. Throws std::invalid_argument on any mismatch.
  static SensingMatrix from_columns(std::size_t rows, std::size_t cols,
                                    std::vector<std::int8_t> column_major, Alphabet alphabet,
                                    Descriptor descriptor = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Alphabet alphabet() const { return alphabet_; }
  const Descriptor& descriptor() const { return descriptor_; }
  Descriptor& descriptor() { return descriptor_; }

  std::span<const std::int8_t> column(std::size_t j) const {
    return {entries_.data() + j * rows_, rows_};
  }
  int at(std::size_t row, std::size_t col) const { return entries_[col * rows_ + row]; }
  std::span<const std::int8_t> entries() const { return entries_; }

  std::span<const std::int64_t> norm_squares() const { return norm_squares_; }
  /// Shared norm-square when every column has the same one.
  std::optional<std::int64_t> constant_norm_square() const;

  friend bool operator==(const SensingMatrix&, const SensingMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Alphabet alphabet_ = Alphabet::binary;
  std::vector<std::int8_t> entries_;
  std::vector<std::int64_t> norm_squares_;
  Descriptor descriptor_;
};

/// Exact inner product of two integer columns.
std::int64_t dot(std::span<const std::int8_t> a, std::span<const std::int8_t> b);

/// Left circular rotation: out[t] = v[(t + shift) mod size].
template <class T>
std::vector<T> rotate_left(std::span<const T> v, std::size_t shift) {
  std::vector<T> out(v.size());
  const std::size_t m = v.size();
  if (m == 0) return out;
  shift %= m;
  for (std::size_t t = 0; t < m; ++t) out[t] = v[(t + shift) % m];
  return out;
}

}  // namespace dcsm

#endif  // DCSM_SENSING_MATRIX_HPP
