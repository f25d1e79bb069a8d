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
#include "upoly/bigint.h"

#include <algorithm>
#include <cstring>

#include "upoly/error.h"

static_assert(GMP_LIMB_BITS == 64, "field packing assumes 64-bit limbs");

namespace upoly {

BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

std::uint64_t big_to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw InvalidInput("integer does not fit in 64 bits");
  }
  return sgn(v) == 0 ? 0 : static_cast<std::uint64_t>(mpz_getlimbn(v.get_mpz_t(), 0));
}

BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

std::uint64_t bit_size(const BigInt& a) {
  if (sgn(a) == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

void mod_into(BigInt& r, const BigInt& a, const BigInt& m) {
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r;
  mod_into(r, a, m);
  return r;
}

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt pow_mod(const BigInt& base, std::uint64_t exp, const BigInt& m) {
  return pow_mod(base, big_from_u64(exp), m);
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InvalidInput("element is not invertible");
  }
  return r;
}

BigInt round_div(const BigInt& b, const BigInt& a) {
  // floor((2|b| + |a|) / (2|a|)) with the sign of b/a.
  BigInt num = 2 * abs(b) + abs(a);
  BigInt den = 2 * abs(a);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if ((sgn(a) < 0) != (sgn(b) < 0)) q = -q;
  return q;
}

namespace {

std::size_t limbs_for_bits(std::uint64_t bits) { return (bits + 63) / 64; }

// ORs the limbs of v into out starting at bit offset.
void or_at(std::vector<mp_limb_t>& out, const BigInt& v, std::uint64_t offset) {
  const std::size_t n = mpz_size(v.get_mpz_t());
  const mp_limb_t* src = mpz_limbs_read(v.get_mpz_t());
  const std::size_t base = offset / 64;
  const unsigned shift = offset % 64;
  for (std::size_t j = 0; j < n; ++j) {
    out[base + j] |= src[j] << shift;
    if (shift != 0 && base + j + 1 < out.size()) {
      out[base + j + 1] |= src[j] >> (64 - shift);
    }
  }
}

BigInt from_limbs(const std::vector<mp_limb_t>& limbs) {
  BigInt r;
  std::size_t n = limbs.size();
  while (n > 0 && limbs[n - 1] == 0) --n;
  if (n == 0) return r;
  mp_limb_t* dst = mpz_limbs_write(r.get_mpz_t(), static_cast<mp_size_t>(n));
  std::memcpy(dst, limbs.data(), n * sizeof(mp_limb_t));
  mpz_limbs_finish(r.get_mpz_t(), static_cast<mp_size_t>(n));
  return r;
}

}  // namespace

BigInt pack_fields(std::span<const BigInt> values,
                   std::span<const std::uint64_t> slots, std::uint64_t width) {
  std::uint64_t max_slot = 0;
  for (std::uint64_t s : slots) max_slot = std::max(max_slot, s);
  std::vector<mp_limb_t> limbs(limbs_for_bits((max_slot + 1) * width) + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) == 0) continue;
    or_at(limbs, values[i], slots[i] * width);
  }
  return from_limbs(limbs);
}

BigInt pack_fields(std::span<const BigInt> values, std::uint64_t width) {
  std::vector<mp_limb_t> limbs(limbs_for_bits(values.size() * width) + 1, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) == 0) continue;
    or_at(limbs, values[i], i * width);
  }
  return from_limbs(limbs);
}

std::vector<BigInt> unpack_fields(const BigInt& packed, std::uint64_t width,
                                  std::size_t count) {
  std::vector<BigInt> out(count);
  const std::size_t n = mpz_size(packed.get_mpz_t());
  const mp_limb_t* src = mpz_limbs_read(packed.get_mpz_t());
  const std::size_t field_limbs = limbs_for_bits(width);
  const unsigned top_bits = width % 64;
  std::vector<mp_limb_t> tmp(field_limbs);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t offset = i * width;
    const std::size_t base = offset / 64;
    if (base >= n) break;
    const unsigned shift = offset % 64;
    for (std::size_t j = 0; j < field_limbs; ++j) {
      const std::size_t at = base + j;
      mp_limb_t lo = at < n ? src[at] : 0;
      mp_limb_t hi = at + 1 < n ? src[at + 1] : 0;
      tmp[j] = shift == 0 ? lo : (lo >> shift) | (hi << (64 - shift));
    }
    if (top_bits != 0) tmp[field_limbs - 1] &= (mp_limb_t{1} << top_bits) - 1;
    out[i] = from_limbs(tmp);
  }
  return out;
}

}  // namespace upoly
