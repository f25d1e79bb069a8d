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
#ifndef UPOLY_BIGINT_H_
#define UPOLY_BIGINT_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace upoly {

using BigInt = mpz_class;

// Dense vector of residues modulo some m, each in [0, m).
using ResidueVec = std::vector<BigInt>;

BigInt big_from_u64(std::uint64_t v);
std::uint64_t big_to_u64(const BigInt& v);  // requires 0 <= v < 2^64
BigInt pow2(std::uint64_t e);

// Number of bits of |a| (0 for a = 0), i.e. floor(log2|a|) + 1.
std::uint64_t bit_size(const BigInt& a);

// Sign of |a| - |b|.
inline int cmpabs(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// r = a mod m in [0, m) for any sign of a; m > 0.
void mod_into(BigInt& r, const BigInt& a, const BigInt& m);
BigInt mod_nonneg(const BigInt& a, const BigInt& m);

// r = a * b mod m for a, b in [0, m). r may alias a or b.
inline void mul_mod_into(BigInt& r, const BigInt& a, const BigInt& b,
                         const BigInt& m) {
  mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_tdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
}

// r = a + b mod m for a, b in [0, m).
inline void add_mod_into(BigInt& r, const BigInt& a, const BigInt& b,
                         const BigInt& m) {
  mpz_add(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (mpz_cmp(r.get_mpz_t(), m.get_mpz_t()) >= 0) {
    mpz_sub(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
}

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m);
BigInt pow_mod(const BigInt& base, std::uint64_t exp, const BigInt& m);
// Throws InvalidInput when a is not invertible modulo m.
BigInt inv_mod(const BigInt& a, const BigInt& m);

// Nearest-integer quotient b / a, ties away from zero. a != 0.
BigInt round_div(const BigInt& b, const BigInt& a);

// Packs nonnegative values into one integer, value i occupying bits
// [slot_i * width, (slot_i + 1) * width). Each value must fit in width bits.
BigInt pack_fields(std::span<const BigInt> values,
                   std::span<const std::uint64_t> slots, std::uint64_t width);
// Dense variant: value i goes to slot i.
BigInt pack_fields(std::span<const BigInt> values, std::uint64_t width);
// Inverse of pack_fields: the first count fields of width bits.
std::vector<BigInt> unpack_fields(const BigInt& packed, std::uint64_t width,
                                  std::size_t count);

}  // namespace upoly

#endif  // UPOLY_BIGINT_H_
