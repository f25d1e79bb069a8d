// Copyright 2026 The upoly Authors.
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
#ifndef UPOLY_POLY_H_
#define UPOLY_POLY_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "upoly/bigint.h"

namespace upoly {

using Exponent = std::uint64_t;

struct Term {
  BigInt coeff;
  Exponent exp = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse integer polynomial c_1 x^e_1 + ... + c_t x^e_t.
//
// Always canonical: nonzero coefficients, strictly increasing exponents.
// The empty term list is the zero polynomial. Every constructor sorts and
// merges its input, so no code path can observe a non-canonical value.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<Term> terms);
  SparsePoly(std::initializer_list<Term> terms);

  static SparsePoly monomial(BigInt coeff, Exponent exp);
  static SparsePoly constant(BigInt coeff) { return monomial(std::move(coeff), 0); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  // 0 for the zero polynomial.
  Exponent degree() const { return terms_.empty() ? 0 : terms_.back().exp; }
  // max |c_i|; 0 for the zero polynomial.
  BigInt height() const;
  // Coefficient of x^e (0 when absent).
  BigInt coeff(Exponent e) const;
  bool contains(Exponent e) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

// Bounds on total bit-length, degree and height of an unknown polynomial.
struct SizeBounds {
  std::uint64_t s = 0;
  std::uint64_t degree = 0;
  BigInt height = 1;
};

// ceil(log2(a + 1)) for a >= 0.
std::uint64_t bitlen_nat(const BigInt& a);
std::uint64_t bitlen_nat(std::uint64_t a);
// 1 + bitlen_nat(|a|).
std::uint64_t bitlen_int(const BigInt& a);
// Sum over terms of bitlen_int(c) + bitlen_nat(e).
std::uint64_t bitlen_poly(const SparsePoly& f);

// ceil(2 s / log2 s); every f with bitlen_poly(f) <= s has fewer terms.
// Throws InvalidBound for s < 2.
std::uint64_t sparsity_bound(std::uint64_t s);

// f mod <x^p - 1, m> as a dense vector: v[j] = sum of c_i with e_i = j mod p,
// reduced into [0, m). Throws InvalidModulus for p = 0 or m <= 0.
ResidueVec reduce_mod(const SparsePoly& f, std::uint64_t p, const BigInt& m);

// x * f'(x).
SparsePoly shifted_derivative(const SparsePoly& f);

SparsePoly add(const SparsePoly& f, const SparsePoly& g);
SparsePoly negate(const SparsePoly& f);
SparsePoly sub(const SparsePoly& f, const SparsePoly& g);

inline SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) { return add(f, g); }
inline SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) { return sub(f, g); }
inline SparsePoly operator-(const SparsePoly& f) { return negate(f); }

// Representative of r (0 <= r < m) in (-m/2, m/2].
BigInt signed_lift(const BigInt& r, const BigInt& m);

// Pairwise term products, merged. The reference product.
SparsePoly schoolbook_mul(const SparsePoly& f, const SparsePoly& g);

// Product through a single big-integer multiplication per sign combination.
// Throws CapacityExceeded when the packed operands would not fit in memory.
SparsePoly kronecker_mul(const SparsePoly& f, const SparsePoly& g);

}  // namespace upoly

#endif  // UPOLY_POLY_H_
