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
#ifndef UPOLY_MODRING_H_
#define UPOLY_MODRING_H_

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "upoly/bigint.h"
#include "upoly/poly.h"
#include "upoly/rng.h"

namespace upoly {

// Miller-Rabin with the first 40 prime bases (deterministic for 64-bit n).
bool is_prime_u64(std::uint64_t n);
// Miller-Rabin with 40 random bases drawn from rng; error < 2^-80.
bool is_probable_prime(const BigInt& n, Rng& rng);

// Uniform random prime in the open interval (lambda, 2 lambda), by rejection
// sampling. Throws InvalidBound for lambda < 2 or lambda >= 2^62.
std::uint64_t random_prime(std::uint64_t lambda, Rng& rng);
BigInt random_prime(const BigInt& lambda, Rng& rng);

// Evaluation domain Z/mZ, m = q^k, holding an element omega of exact
// multiplicative order p.
struct PruContext {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned k = 0;
  BigInt m;
  BigInt omega;
};

// Checks q = 1 mod p, q > p, m = q^k, omega^p = 1 mod m, and
// omega^(p/r) != 1 mod q for every prime r | p.
bool is_valid_pru(const PruContext& ctx);

// Samples q = 1 + 2ip prime, a p-th root of unity mod q, and lifts it to the
// smallest q^k >= m_min by Newton iteration on X^p - 1.
PruContext build_pru(std::uint64_t p, const BigInt& m_min, Rng& rng);

// Hensel-lifts a root of X^p - 1 modulo q to one modulo q^k.
BigInt lift_root_of_unity(const BigInt& omega_q, std::uint64_t p,
                          std::uint64_t q, unsigned k);

// Transforms shorter than this run as the naive O(p^2) sum; longer odd ones
// run as Bluestein's chirp-z transform. Defaults to 64.
std::size_t dft_naive_threshold();
void set_dft_naive_threshold(std::size_t n);

// (sum_j v_j omega^(ij))_i for i in [0, p). Throws InvalidInput when
// values.size() != ctx.p.
ResidueVec dft(std::span<const BigInt> values, const PruContext& ctx);
// Exact inverse of dft.
ResidueVec idft(std::span<const BigInt> values, const PruContext& ctx);
// The quadratic reference transform, used as an oracle.
ResidueVec naive_dft(std::span<const BigInt> values, const PruContext& ctx);

struct ResidueTerm {
  std::uint64_t exp = 0;  // already reduced mod p
  BigInt coeff;           // in [0, m)
};

// (f(omega^i) mod m) for i in [0, k). Costs #f * k multiplications after one
// exponentiation per term. Throws InvalidInput when k > ctx.p.
ResidueVec geometric_eval(std::span<const ResidueTerm> f, const PruContext& ctx,
                          std::size_t k);
ResidueVec geometric_eval(std::span<const BigInt> dense, const PruContext& ctx,
                          std::size_t k);

// floor(n^(1/r)) by Newton iteration. r >= 1, n >= 0.
BigInt integer_root_floor(const BigInt& n, std::uint64_t r);

}  // namespace upoly

#endif  // UPOLY_MODRING_H_
