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

#include "dcsm/analysis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dcsm {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw std::invalid_argument("rational requires num >= 0, den > 0");
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// Columns as sign bitmasks: value = [pos bit] - [neg bit].
struct PackedColumns {
  std::size_t words = 0;
  std::vector<std::uint64_t> pos;
  std::vector<std::uint64_t> neg;

  explicit PackedColumns(const SensingMatrix& a) : words((a.rows() + 63) / 64) {
    pos.assign(words * a.cols(), 0);
    neg.assign(words * a.cols(), 0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto col = a.column(j);
      for (std::size_t t = 0; t < col.size(); ++t) {
        const std::uint64_t bit = std::uint64_t{1} << (t % 64);
        if (col[t] > 0) pos[j * words + t / 64] |= bit;
        if (col[t] < 0) neg[j * words + t / 64] |= bit;
      }
    }
  }

  std::int64_t inner(std::size_t i, std::size_t j) const {
    std::int64_t acc = 0;
    const auto* pi = &pos[i * words];
    const auto* ni = &neg[i * words];
    const auto* pj = &pos[j * words];
    const auto* nj = &neg[j * words];
    for (std::size_t w = 0; w < words; ++w) {
      acc += std::popcount(pi[w] & pj[w]) + std::popcount(ni[w] & nj[w]);
      acc -= std::popcount(pi[w] & nj[w]) + std::popcount(ni[w] & pj[w]);
    }
    return acc;
  }
};

struct PairMax {
  std::int64_t value = -1;
  std::size_t i = 0;
  std::size_t j = 0;

  void offer(std::int64_t v, std::size_t a, std::size_t b) {
    if (v > value || (v == value && std::pair(a, b) < std::pair(i, j))) {
      value = v;
      i = a;
      j = b;
    }
  }
};

}  // namespace

std::size_t rip_order_for(const Rational& mu, std::size_t columns) {
  if (mu.num == 0) return columns;
  // (k - 1) num < den  <=>  k - 1 <= (den - 1) / num
  return 1 + static_cast<std::size_t>((mu.den - 1) / mu.num);
}

CoherenceCertificate certificate_from_max_inner(std::int64_t max_inner, std::int64_t norm_square,
                                                std::size_t columns) {
  if (norm_square <= 0) throw std::invalid_argument("norm-square must be positive");
  if (max_inner < 0 || max_inner > norm_square) {
    throw std::invalid_argument("inner product exceeds norm-square");
  }
  CoherenceCertificate cert;
  cert.max_inner = max_inner;
  cert.norm_square = norm_square;
  cert.coherence = Rational::make(max_inner, norm_square);
  cert.degenerate = max_inner == norm_square;
  cert.rip_order_max = rip_order_for(cert.coherence, columns);
  cert.delta_table.reserve(cert.rip_order_max);
  for (std::size_t k = 1; k <= cert.rip_order_max; ++k) {
    cert.delta_table.push_back(
        Rational::make(static_cast<std::int64_t>(k - 1) * cert.coherence.num, cert.coherence.den));
  }
  return cert;
}

CoherenceCertificate coherence(const SensingMatrix& a) {
  if (a.cols() < 2) throw std::invalid_argument("coherence needs at least two columns");
  const auto norm = a.constant_norm_square();
  if (!norm) throw std::invalid_argument("columns do not share a norm-square");

  const PackedColumns packed(a);
  const std::size_t n = a.cols();
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n / 64, 1));
  std::vector<PairMax> partial(workers);
  auto scan = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto v = packed.inner(i, j);
        partial[w].offer(v < 0 ? -v : v, i, j);
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  PairMax best;
  for (const auto& p : partial) {
    if (p.value >= 0) best.offer(p.value, p.i, p.j);
  }

  auto cert = certificate_from_max_inner(best.value, *norm, n);
  cert.max_pair_first = best.i;
  cert.max_pair_second = best.j;
  return cert;
}

CodeBoundConstants code_bound_constants(std::int64_t code_length, std::int64_t dmin) {
  if (code_length <= 0 || dmin < 0) throw std::invalid_argument("invalid code parameters");
  const std::int64_t gap = code_length - 2 * dmin;
  if (gap < 0) throw std::invalid_argument("minimum distance exceeds half the code length");
  CodeBoundConstants out;
  out.coherence_bound = Rational::make(gap, code_length);
  if (gap == 0) {
    out.unbounded = true;
    out.order_threshold = Rational{0, 1};
    out.max_order = std::numeric_limits<std::int64_t>::max();
    return out;
  }
  out.order_threshold = Rational::make(code_length + gap, gap);
  const std::int64_t whole = (code_length + gap) / gap;
  out.max_order = (code_length + gap) % gap == 0 ? whole - 1 : whole;
  return out;
}

std::size_t ShiftGroupPartition::column_count() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.columns.size();
  return total;
}

bool ShiftGroupPartition::all_singletons() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const ShiftGroup& g) { return g.columns.size() == 1; });
}

ShiftGroupPartition ShiftGroupPartition::singletons(std::size_t rows, std::size_t cols) {
  ShiftGroupPartition p;
  p.rows = rows;
  p.groups.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    p.groups[j].period = rows;
    p.groups[j].columns = {j};
    p.groups[j].offsets = {0};
  }
  return p;
}

std::size_t minimal_rotation(std::span<const std::int8_t> v) {
  const std::size_t n = v.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const auto x = v[(i + k) % n];
    const auto y = v[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

namespace {

std::size_t rotation_period(const std::vector<std::int8_t>& base) {
  const std::size_t m = base.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool same = true;
    for (std::size_t t = 0; t < m && same; ++t) same = base[t] == base[(t + p) % m];
    if (same) return p;
  }
  return m;
}

}  // namespace

ShiftGroupPartition shift_group_partition(const SensingMatrix& a) {
  ShiftGroupPartition out;
  out.rows = a.rows();
  std::map<std::vector<std::int8_t>, std::size_t> index;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto col = a.column(j);
    const std::size_t shift = minimal_rotation(col);
    auto base = rotate_left(col, shift);
    auto [it, inserted] = index.try_emplace(std::move(base), out.groups.size());
    if (inserted) {
      ShiftGroup g;
      g.base = it->first;
      g.period = rotation_period(g.base);
      out.groups.push_back(std::move(g));
    }
    auto& g = out.groups[it->second];
    // col = rotate_left(base, offset) with base = rotate_left(col, shift)
    const std::size_t offset = (a.rows() - shift) % a.rows();
    g.columns.push_back(j);
    g.offsets.push_back(offset % g.period);
  }
  return out;
}

}  // namespace dcsm
