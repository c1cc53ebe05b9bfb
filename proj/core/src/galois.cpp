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

#include "dcsm/galois.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "dcsm/errors.hpp"

namespace dcsm {

// ---------------------------------------------------------------------------
// BinaryPolynomial

BinaryPolynomial BinaryPolynomial::from_bits(std::uint64_t bits) {
  BinaryPolynomial p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<std::uint64_t> words) {
  BinaryPolynomial p;
  p.words_ = std::move(words);
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<int> exponents) {
  BinaryPolynomial p;
  for (int e : exponents) p.set_coefficient(e, !p.coefficient(e));
  return p;
}

BinaryPolynomial BinaryPolynomial::monomial(int exponent) {
  BinaryPolynomial p;
  p.set_coefficient(exponent, true);
  return p;
}

int BinaryPolynomial::degree() const {
  if (words_.empty()) return kZeroDegree;
  const auto top = words_.back();
  return static_cast<int>((words_.size() - 1) * 64) + (63 - std::countl_zero(top));
}

bool BinaryPolynomial::coefficient(int t) const {
  if (t < 0) return false;
  const auto w = static_cast<std::size_t>(t) / 64;
  if (w >= words_.size()) return false;
  return ((words_[w] >> (t % 64)) & 1u) != 0;
}

void BinaryPolynomial::set_coefficient(int t, bool value) {
  if (t < 0) throw std::invalid_argument("negative exponent");
  const auto w = static_cast<std::size_t>(t) / 64;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (t % 64);
  } else if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (t % 64));
    trim();
  }
}

std::size_t BinaryPolynomial::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::uint64_t BinaryPolynomial::to_bits() const {
  if (words_.size() > 1) throw std::out_of_range("polynomial degree exceeds 63");
  return words_.empty() ? 0 : words_[0];
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int t = degree(); t >= 0; --t) {
    if (!coefficient(t)) continue;
    if (!out.empty()) out += " + ";
    if (t == 0) {
      out += "1";
    } else if (t == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(t);
    }
  }
  return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinaryPolynomial BinaryPolynomial::shifted(int places) const {
  if (places < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  const std::size_t word_shift = static_cast<std::size_t>(places) / 64;
  const int bit_shift = places % 64;
  std::vector<std::uint64_t> out(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift != 0) out[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
  }
  return from_words(std::move(out));
}

bool operator<(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto aw = a.words();
  const auto bw = b.words();
  std::vector<std::uint64_t> out(aw.size() + bw.size() + 1, 0);
  for (std::size_t i = 0; i < aw.size(); ++i) {
    std::uint64_t word = aw[i];
    while (word != 0) {
      const int s = std::countr_zero(word);
      word &= word - 1;
      for (std::size_t j = 0; j < bw.size(); ++j) {
        out[i + j] ^= bw[j] << s;
        if (s != 0) out[i + j + 1] ^= bw[j] >> (64 - s);
      }
    }
  }
  return BinaryPolynomial::from_words(std::move(out));
}

PolynomialDivision poly_divmod(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  PolynomialDivision result;
  result.remainder = a;
  const int db = b.degree();
  while (!result.remainder.is_zero() && result.remainder.degree() >= db) {
    const int shift = result.remainder.degree() - db;
    result.remainder += b.shifted(shift);
    result.quotient.set_coefficient(shift, true);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Small-degree arithmetic modulo a packed polynomial (degree <= 24).

namespace {

std::uint64_t mulmod_small(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int deg) {
  std::uint64_t product = 0;
  while (b != 0) {
    if (b & 1u) product ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> deg) & 1u) a ^= modulus;
  }
  return product;
}

std::uint64_t powmod_x(std::uint64_t exponent, std::uint64_t modulus, int deg) {
  std::uint64_t base = 2;
  if ((base >> deg) & 1u) base ^= modulus;  // deg == 1
  std::uint64_t acc = 1;
  while (exponent != 0) {
    if (exponent & 1u) acc = mulmod_small(acc, base, modulus, deg);
    base = mulmod_small(base, base, modulus, deg);
    exponent >>= 1;
  }
  return acc;
}

std::uint64_t powmod_int(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exponent != 0) {
    if (exponent & 1u) acc = acc * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_primitive_polynomial(const BinaryPolynomial& modulus) {
  const int deg = modulus.degree();
  if (deg < 1 || deg > 24) return false;
  if (!modulus.coefficient(0)) return false;
  const std::uint64_t f = modulus.to_bits();
  const std::uint64_t group = (std::uint64_t{1} << deg) - 1;
  if (powmod_x(group, f, deg) != 1) return false;
  for (auto r : prime_factors(group)) {
    if (powmod_x(group / r, f, deg) == 1) return false;
  }
  return true;
}

BinaryPolynomial find_primitive_polynomial(int e) {
  if (e < 1 || e > 24) throw std::invalid_argument("primitive polynomial degree must be in [1, 24]");
  const std::uint64_t lo = std::uint64_t{1} << e;
  for (std::uint64_t candidate = lo | 1u; candidate < (lo << 1); candidate += 2) {
    const auto poly = BinaryPolynomial::from_bits(candidate);
    if (is_primitive_polynomial(poly)) return poly;
  }
  throw InvariantViolation("no primitive polynomial found");
}

// ---------------------------------------------------------------------------
// ExtensionField

ExtensionField field_build(std::uint32_t p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (p != 2 && e != 1) {
    throw std::invalid_argument("odd-characteristic extension fields are not supported");
  }
  std::uint64_t order = 1;
  for (int i = 0; i < e; ++i) {
    order *= p;
    if (order > ExtensionField::kMaxOrder) throw std::invalid_argument("field order exceeds 2^24");
  }

  ExtensionField field;
  field.characteristic_ = p;
  field.extension_degree_ = e;
  field.order_ = static_cast<std::uint32_t>(order);
  const std::uint32_t q = field.order_;
  field.exp_.assign(q - 1, 0);
  field.log_.assign(q, std::numeric_limits<std::uint32_t>::max());

  std::uint64_t generator = 0;
  if (p == 2) {
    field.modulus_ = find_primitive_polynomial(e);
    generator = 2;
    if ((generator >> e) & 1u) generator ^= field.modulus_.to_bits();
  } else {
    const auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 1; g < p; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (powmod_int(g, (p - 1) / r, p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
  }

  std::uint64_t v = 1;
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    if (field.log_[v] != std::numeric_limits<std::uint32_t>::max()) {
      throw InvariantViolation("generator is not primitive");
    }
    field.exp_[j] = static_cast<std::uint32_t>(v);
    field.log_[v] = j;
    if (p == 2) {
      v = mulmod_small(v, generator, field.modulus_.to_bits(), e);
    } else {
      v = v * generator % p;
    }
  }
  if (v != 1) throw InvariantViolation("generator order mismatch");
  return field;
}

FieldElement ExtensionField::add(FieldElement a, FieldElement b) const {
  if (characteristic_ == 2) return {a.value ^ b.value};
  return {static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % characteristic_)};
}

FieldElement ExtensionField::sub(FieldElement a, FieldElement b) const {
  if (characteristic_ == 2) return {a.value ^ b.value};
  return {static_cast<std::uint32_t>((std::uint64_t{a.value} + characteristic_ - b.value) %
                                     characteristic_)};
}

FieldElement ExtensionField::neg(FieldElement a) const { return sub(zero(), a); }

FieldElement ExtensionField::mul(FieldElement a, FieldElement b) const {
  if (a.value == 0 || b.value == 0) return zero();
  const std::uint64_t s = std::uint64_t{log_[a.value]} + log_[b.value];
  return {exp_[s % (order_ - 1)]};
}

FieldElement ExtensionField::inv(FieldElement a) const {
  if (a.value == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t l = log_[a.value];
  return {exp_[l == 0 ? 0 : (order_ - 1) - l]};
}

FieldElement ExtensionField::exp(std::int64_t j) const {
  const auto period = static_cast<std::int64_t>(order_ - 1);
  auto r = j % period;
  if (r < 0) r += period;
  return {exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t ExtensionField::log(FieldElement v) const {
  if (v.value == 0) throw std::domain_error("logarithm of zero");
  if (v.value >= order_) throw std::out_of_range("field element out of range");
  return log_[v.value];
}

std::uint32_t discrete_log(const ExtensionField& field, FieldElement v) { return field.log(v); }

BinaryPolynomial product_of_roots(const ExtensionField& field,
                                  std::span<const std::uint32_t> exponents) {
  if (field.characteristic() != 2) {
    throw std::invalid_argument("product_of_roots requires characteristic 2");
  }
  const std::uint32_t period = field.order() - 1;
  std::vector<std::uint32_t> reduced;
  reduced.reserve(exponents.size());
  for (auto r : exponents) reduced.push_back(r % period);
  std::sort(reduced.begin(), reduced.end());
  if (std::adjacent_find(reduced.begin(), reduced.end()) != reduced.end()) {
    throw std::invalid_argument("duplicate root exponent");
  }

  // coefficients[t] multiplies x^t
  std::vector<FieldElement> coefficients{field.one()};
  for (auto r : reduced) {
    const FieldElement root = field.exp(r);
    std::vector<FieldElement> next(coefficients.size() + 1, field.zero());
    for (std::size_t t = 0; t < coefficients.size(); ++t) {
      next[t + 1] = field.add(next[t + 1], coefficients[t]);
      next[t] = field.sub(next[t], field.mul(root, coefficients[t]));
    }
    coefficients = std::move(next);
  }

  BinaryPolynomial out;
  for (std::size_t t = 0; t < coefficients.size(); ++t) {
    const auto c = coefficients[t].value;
    if (c > 1) throw std::domain_error("root set is not closed under conjugation");
    if (c == 1) out.set_coefficient(static_cast<int>(t), true);
  }
  return out;
}

FieldElement evaluate(const ExtensionField& field, const BinaryPolynomial& poly,
                      FieldElement at) {
  FieldElement acc = field.zero();
  for (int t = poly.degree(); t >= 0; --t) {
    acc = field.mul(acc, at);
    if (poly.coefficient(t)) acc = field.add(acc, field.one());
  }
  return acc;
}

}  // namespace dcsm
