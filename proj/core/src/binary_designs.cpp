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

#include "dcsm/binary_designs.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "dcsm/errors.hpp"
#include "dcsm/galois.hpp"

namespace dcsm {

namespace {

constexpr std::uint64_t kMaxDevoreColumns = std::uint64_t{1} << 20;

ExtensionField field_for_order(std::uint32_t p) {
  if (is_prime(p)) return field_build(p, 1);
  if (std::has_single_bit(p)) return field_build(2, std::countr_zero(p));
  throw std::invalid_argument("p must be a prime or a power of two");
}

}  // namespace

SensingMatrix devore_matrix(std::uint32_t p, std::uint32_t r) {
  if (p < 2 || p > 64) throw std::invalid_argument("p must be in [2, 64]");
  if (r >= p) throw std::invalid_argument("r must be smaller than p");
  const ExtensionField field = field_for_order(p);

  std::uint64_t cols = 1;
  for (std::uint32_t t = 0; t <= r; ++t) {
    cols *= p;
    if (cols > kMaxDevoreColumns) throw std::invalid_argument("p^(r+1) exceeds 2^20 columns");
  }
  const std::size_t rows = std::size_t{p} * p;

  std::vector<std::int8_t> entries(rows * cols, 0);
  std::vector<std::uint32_t> coeffs(r + 1, 0);  // c_0 .. c_r
  for (std::uint64_t col = 0; col < cols; ++col) {
    std::uint64_t rest = col;
    for (std::uint32_t t = r + 1; t-- > 0;) {
      coeffs[t] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    for (std::uint32_t x = 0; x < p; ++x) {
      // Horner: Q(x) = c_0 + x (c_1 + x (c_2 + ...))
      FieldElement y{0};
      for (std::uint32_t t = r + 1; t-- > 0;) {
        y = field.add(field.mul(y, FieldElement{x}), FieldElement{coeffs[t]});
      }
      entries[col * rows + std::size_t{x} * p + y.value] = 1;
    }
  }

  Descriptor d;
  d.set("family", "devore");
  d.set("p", p);
  d.set("r", r);
  if (field.characteristic() == 2 && field.extension_degree() > 1) {
    d.set("modulus", field.modulus().to_string());
  }
  return SensingMatrix::from_columns(rows, static_cast<std::size_t>(cols), std::move(entries),
                                     Alphabet::binary, std::move(d));
}

std::uint64_t johnson_bound(std::uint64_t m, std::uint64_t w, std::uint64_t lambda) {
  if (!(lambda < w && w <= m)) throw std::invalid_argument("johnson bound requires lambda < w <= m");
  using wide = unsigned __int128;
  wide value = (m - lambda) / (w - lambda);
  for (std::uint64_t t = lambda; t-- > 0;) {
    value = wide{m - t} * value / (w - t);
  }
  if (value > ~std::uint64_t{0}) throw std::overflow_error("johnson bound exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

double devore_optimality_ratio(std::uint32_t p, std::uint32_t r) {
  if (p < 2 || p > 64 || r >= p) throw std::invalid_argument("ratio requires 2 <= p <= 64, r < p");
  double columns = 1.0;
  for (std::uint32_t t = 0; t <= r; ++t) columns *= p;
  const auto bound = johnson_bound(std::uint64_t{p} * p, p, r);
  return columns / static_cast<double>(bound);
}

std::uint32_t max_autocorrelation(const std::vector<std::uint32_t>& support, std::uint32_t length) {
  std::vector<char> mask(length, 0);
  for (auto c : support) mask[c] = 1;
  std::uint32_t best = 0;
  for (std::uint32_t s = 1; s < length; ++s) {
    std::uint32_t hits = 0;
    for (auto c : support) hits += mask[(c + s) % length];
    best = std::max(best, hits);
  }
  return best;
}

std::uint32_t max_crosscorrelation(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, std::uint32_t length) {
  std::vector<char> mask(length, 0);
  for (auto c : a) mask[c] = 1;
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < length; ++s) {
    std::uint32_t hits = 0;
    for (auto c : b) hits += mask[(c + s) % length];
    best = std::max(best, hits);
  }
  return best;
}

OocCodeFamily ooc_construct(int a) {
  if (a != 1 && a != 2) throw std::invalid_argument("OOC construction supports a in {1, 2}");
  const ExtensionField field = field_build(2, 4 * a);
  const std::uint32_t q = field.order();
  const std::uint32_t d = (q - 1) / 5;

  OocCodeFamily family;
  family.a = a;
  family.length = q - 1;
  for (std::uint32_t i = 1; i < d; ++i) {
    std::vector<std::uint32_t> support;
    for (std::uint32_t j = 1; j <= 5; ++j) {
      const FieldElement v = field.exp(std::int64_t{j} * d + i);
      support.push_back(field.log(field.sub(v, field.one())));
    }
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
      throw InvariantViolation("OOC support has repeated positions");
    }
    family.supports.push_back(std::move(support));
  }

  for (std::size_t x = 0; x < family.supports.size(); ++x) {
    if (max_autocorrelation(family.supports[x], family.length) > family.lambda) {
      throw InvariantViolation("OOC autocorrelation exceeds lambda");
    }
    for (std::size_t y = x + 1; y < family.supports.size(); ++y) {
      if (max_crosscorrelation(family.supports[x], family.supports[y], family.length) >
          family.lambda) {
        throw InvariantViolation("OOC cross-correlation exceeds lambda");
      }
    }
  }
  return family;
}

SensingMatrix ooc_matrix(int a) {
  const auto family = ooc_construct(a);
  const std::size_t m = family.length;
  std::vector<std::int8_t> entries;
  std::set<std::vector<std::int8_t>> seen;
  std::size_t cols = 0;
  for (const auto& support : family.supports) {
    for (std::size_t s = 0; s < m; ++s) {
      // left rotation by s moves position c to c - s
      std::vector<std::int8_t> column(m, 0);
      for (auto c : support) column[(c + m - s) % m] = 1;
      if (!seen.insert(column).second) continue;
      entries.insert(entries.end(), column.begin(), column.end());
      ++cols;
    }
  }

  Descriptor d;
  d.set("family", "ooc");
  d.set("a", a);
  d.set("modulus", field_build(2, 4 * a).modulus().to_string());
  d.set("codewords", static_cast<std::int64_t>(family.supports.size()));
  return SensingMatrix::from_columns(m, cols, std::move(entries), Alphabet::binary, std::move(d));
}

}  // namespace dcsm
