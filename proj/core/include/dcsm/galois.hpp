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

#ifndef DCSM_GALOIS_HPP
#define DCSM_GALOIS_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dcsm {

/// Polynomial over GF(2). Bit t of the packed words is the coefficient of
/// x^t. Storage is always trimmed so the highest stored word is nonzero.
class BinaryPolynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -2147483647 - 1;

  BinaryPolynomial() = default;

  /// Packs the low 64 coefficients from an integer bit pattern.
  static BinaryPolynomial from_bits(std::uint64_t bits);
  static BinaryPolynomial from_words(std::vector<std::uint64_t> words);
  static BinaryPolynomial from_exponents(std::initializer_list<int> exponents);
  static BinaryPolynomial monomial(int exponent);
  static BinaryPolynomial one() { return from_bits(1); }

  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coefficient(int t) const;
  void set_coefficient(int t, bool value);
  std::size_t weight() const;

  /// Integer value of the coefficient pattern. Requires degree < 64.
  std::uint64_t to_bits() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// Human-readable form such as "x^5 + x^4 + x^2 + 1"; "0" for zero.
  std::string to_string() const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  BinaryPolynomial shifted(int places) const;

  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) {
    a += b;
    return a;
  }
  friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

  /// Orders by integer value of the coefficient pattern.
  friend bool operator<(const BinaryPolynomial& a, const BinaryPolynomial& b);

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

struct PolynomialDivision {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
};

/// Carry-less product over GF(2).
BinaryPolynomial poly_mul(const BinaryPolynomial& a, const BinaryPolynomial& b);

/// Long division over GF(2): a = quotient * b + remainder, deg remainder < deg b.
/// Throws std::domain_error when b is zero.
PolynomialDivision poly_divmod(const BinaryPolynomial& a, const BinaryPolynomial& b);

/// Primitive polynomial of degree e (1 <= e <= 24) with the smallest integer
/// encoding. Throws std::invalid_argument outside that range.
BinaryPolynomial find_primitive_polynomial(int e);

/// True when x generates the multiplicative group modulo `modulus`, i.e. the
/// polynomial is primitive. Limited to degree <= 24.
bool is_primitive_polynomial(const BinaryPolynomial& modulus);

struct FieldElement {
  std::uint32_t value = 0;
  friend bool operator==(FieldElement, FieldElement) = default;
};

/// GF(p) for prime p, or GF(2^e) in polynomial basis. Immutable after
/// construction; exp/log tables cover every nonzero element.
class ExtensionField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 24;

  std::uint32_t characteristic() const { return characteristic_; }
  int extension_degree() const { return extension_degree_; }
  std::uint32_t order() const { return order_; }
  /// Primitive modulus for characteristic 2; zero polynomial for prime fields.
  const BinaryPolynomial& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement primitive_element() const { return {exp_[order_ > 2 ? 1 : 0]}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;

  /// alpha^j, with j reduced modulo q - 1 (negative exponents allowed).
  FieldElement exp(std::int64_t j) const;
  /// Discrete log base alpha in [0, q - 2]. Throws std::domain_error on zero.
  std::uint32_t log(FieldElement v) const;

  std::span<const std::uint32_t> exp_table() const { return exp_; }

  friend ExtensionField field_build(std::uint32_t p, int e);

 private:
  ExtensionField() = default;

  std::uint32_t characteristic_ = 0;
  int extension_degree_ = 0;
  std::uint32_t order_ = 0;
  BinaryPolynomial modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Builds GF(p^e). Characteristic 2 uses find_primitive_polynomial(e) with
/// alpha = x; odd primes require e == 1 and use the smallest primitive root.
ExtensionField field_build(std::uint32_t p, int e);

bool is_prime(std::uint64_t v);

/// Distinct prime factors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

/// Discrete log of v. Throws std::domain_error when v is zero.
std::uint32_t discrete_log(const ExtensionField& field, FieldElement v);

/// prod_{r in exponents} (x - alpha^r) computed in F[x]. The exponent set must
/// be closed under doubling modulo q - 1; otherwise some coefficient leaves
/// GF(2) and std::domain_error is thrown. Requires characteristic 2.
BinaryPolynomial product_of_roots(const ExtensionField& field,
                                  std::span<const std::uint32_t> exponents);

/// Evaluates a binary polynomial at a field element (characteristic 2).
FieldElement evaluate(const ExtensionField& field, const BinaryPolynomial& poly,
                      FieldElement at);

}  // namespace dcsm

#endif  // DCSM_GALOIS_HPP
