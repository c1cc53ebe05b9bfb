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

#include "dcsm/sensing_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcsm {

std::string_view to_string(Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::binary:
      return "binary";
    case Alphabet::bipolar:
      return "bipolar";
    case Alphabet::ternary:
      return "ternary";
  }
  return "unknown";
}

std::optional<Alphabet> parse_alphabet(std::string_view text) {
  if (text == "binary") return Alphabet::binary;
  if (text == "bipolar") return Alphabet::bipolar;
  if (text == "ternary") return Alphabet::ternary;
  return std::nullopt;
}

void Descriptor::set(std::string key, std::string value) {
  if (key.empty() || key.find_first_of("= \t\n") != std::string::npos) {
    throw std::invalid_argument("descriptor key must be non-empty without '=' or whitespace");
  }
  if (value.find_first_of("\n\r\t") != std::string::npos) {
    throw std::invalid_argument("descriptor value must be a single line without tabs");
  }
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Descriptor::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

SensingMatrix SensingMatrix::from_columns(std::size_t rows, std::size_t cols,
                                          std::vector<std::int8_t> column_major,
                                          Alphabet alphabet, Descriptor descriptor) {
  if (rows == 0) throw std::invalid_argument("matrix must have at least one row");
  if (column_major.size() != rows * cols) {
    throw std::invalid_argument("entry count does not match dimensions");
  }
  bool has_zero = false;
  bool has_negative = false;
  for (auto v : column_major) {
    if (v < -1 || v > 1) throw std::invalid_argument("entries must lie in {-1, 0, 1}");
    has_zero = has_zero || v == 0;
    has_negative = has_negative || v < 0;
  }
  if (alphabet == Alphabet::binary && has_negative) {
    throw std::invalid_argument("binary matrix contains -1 entries");
  }
  if (alphabet == Alphabet::bipolar && has_zero) {
    throw std::invalid_argument("bipolar matrix contains zero entries");
  }

  SensingMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.alphabet_ = alphabet;
  m.entries_ = std::move(column_major);
  m.descriptor_ = std::move(descriptor);
  m.norm_squares_.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto col = m.column(j);
    m.norm_squares_[j] = dot(col, col);
  }
  return m;
}

std::optional<std::int64_t> SensingMatrix::constant_norm_square() const {
  if (norm_squares_.empty()) return std::nullopt;
  const auto first = norm_squares_.front();
  if (std::all_of(norm_squares_.begin(), norm_squares_.end(),
                  [first](std::int64_t v) { return v == first; })) {
    return first;
  }
  return std::nullopt;
}

std::int64_t dot(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("column length mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace dcsm
