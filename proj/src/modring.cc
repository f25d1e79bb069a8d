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
#include "upoly/modring.h"

#include <array>
#include <bit>
#include <cmath>

#include "upoly/error.h"

namespace upoly {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 40> kPrimeBases = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

u64 mul_mod_u64(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

u64 pow_mod_u64(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e != 0) {
    if (e & 1) r = mul_mod_u64(r, a, n);
    a = mul_mod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

// One Miller-Rabin round; true when a does not witness compositeness.
bool mr_round_u64(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = pow_mod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 b : kPrimeBases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kPrimeBases) {
    if (!mr_round_u64(n, a, d, r)) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n, Rng& rng) {
  if (sgn(n) <= 0) return false;
  if (bit_size(n) <= 64) return is_prime_u64(big_to_u64(n));
  for (u64 b : kPrimeBases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  const BigInt n1 = n - 1;
  BigInt d = n1;
  const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  const BigInt span = n - 3;  // bases in [2, n-2]
  for (int round = 0; round < 40; ++round) {
    BigInt a = 2 + rng.uniform_below(span);
    BigInt x = pow_mod(a, d, n);
    if (x == 1 || x == n1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < r; ++i) {
      mul_mod_into(x, x, x, n);
      if (x == n1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 random_prime(u64 lambda, Rng& rng) {
  if (lambda < 2 || lambda >= (u64{1} << 62)) {
    throw InvalidBound("random_prime needs 2 <= lambda < 2^62");
  }
  const u64 lo = lambda + 1;
  const u64 hi = 2 * lambda - 1;
  for (int attempt = 0; attempt < (1 << 24); ++attempt) {
    const u64 x = rng.uniform(lo, hi);
    if (is_prime_u64(x)) return x;
  }
  // Unreachable for lambda >= 2 (Bertrand); scan so the contract still holds.
  for (u64 x = lo; x <= hi; ++x) {
    if (is_prime_u64(x)) return x;
  }
  throw InvalidBound("no prime in (lambda, 2 lambda)");
}

BigInt random_prime(const BigInt& lambda, Rng& rng) {
  if (lambda < 2) throw InvalidBound("random_prime needs lambda >= 2");
  if (lambda < pow2(62)) return big_from_u64(random_prime(big_to_u64(lambda), rng));
  const BigInt lo = lambda + 1;
  const BigInt width = lambda - 1;  // |[lambda+1, 2 lambda - 1]|
  for (;;) {
    BigInt x = lo + rng.uniform_below(width);
    if (is_probable_prime(x, rng)) return x;
  }
}

bool is_valid_pru(const PruContext& ctx) {
  if (ctx.p == 0 || ctx.q <= ctx.p || ctx.q % ctx.p != 1 || ctx.k == 0) return false;
  if (!is_prime_u64(ctx.q)) return false;
  BigInt qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), ctx.q, ctx.k);
  if (qk != ctx.m) return false;
  if (pow_mod(ctx.omega, ctx.p, ctx.m) != 1) return false;
  const BigInt q = big_from_u64(ctx.q);
  for (u64 r : prime_factors(ctx.p)) {
    if (pow_mod(ctx.omega, ctx.p / r, q) == 1) return false;
  }
  return true;
}

BigInt lift_root_of_unity(const BigInt& omega_q, u64 p, u64 q, unsigned k) {
  BigInt omega = omega_q;
  const BigInt pp = big_from_u64(p);
  unsigned prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    BigInt mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), q, prec);
    // omega <- omega - (omega^p - 1) / (p omega^(p-1))
    const BigInt w_pm1 = pow_mod(omega, p - 1, mod);
    BigInt f = w_pm1 * omega - 1;
    BigInt df = mod_nonneg(pp * w_pm1, mod);
    omega = mod_nonneg(omega - f * inv_mod(df, mod), mod);
  }
  return omega;
}

PruContext build_pru(u64 p, const BigInt& m_min, Rng& rng) {
  if (!is_prime_u64(p)) throw InvalidInput("build_pru needs a prime p");
  if (m_min < 2) throw InvalidInput("build_pru needs m_min >= 2");
  const u64 logp = std::max<u64>(1, std::bit_width(p));
  const u64 cap = 64 * logp;
  u64 i_max = std::max<u64>(8, 4 * logp * logp);
  u64 q = 0;
  for (;;) {
    if (i_max > ((u64{1} << 62) / p)) throw CapacityExceeded("build_pru: q exceeds 64 bits");
    bool found = false;
    for (u64 attempt = 0; attempt < cap; ++attempt) {
      const u64 candidate = 1 + 2 * rng.uniform(1, i_max) * p;
      if (is_prime_u64(candidate)) {
        q = candidate;
        found = true;
        break;
      }
    }
    if (found) break;
    i_max *= 2;
  }

  const BigInt qq = big_from_u64(q);
  BigInt omega_q;
  do {
    const BigInt g = big_from_u64(rng.uniform(2, q - 1));
    omega_q = pow_mod(g, (q - 1) / p, qq);
  } while (omega_q == 1);

  PruContext ctx;
  ctx.p = p;
  ctx.q = q;
  ctx.k = 1;
  ctx.m = qq;
  while (ctx.m < m_min) {
    ctx.m *= qq;
    ++ctx.k;
  }
  ctx.omega = lift_root_of_unity(omega_q, p, q, ctx.k);
  return ctx;
}

ResidueVec geometric_eval(std::span<const ResidueTerm> f, const PruContext& ctx,
                          std::size_t k) {
  if (k > ctx.p) throw InvalidInput("geometric_eval needs k <= p");
  ResidueVec acc(k);
  BigInt step, cur;
  for (const auto& t : f) {
    if (sgn(t.coeff) == 0) continue;
    step = pow_mod(ctx.omega, t.exp, ctx.m);
    cur = t.coeff;
    for (std::size_t i = 0; i < k; ++i) {
      add_mod_into(acc[i], acc[i], cur, ctx.m);
      mul_mod_into(cur, cur, step, ctx.m);
    }
  }
  return acc;
}

ResidueVec geometric_eval(std::span<const BigInt> dense, const PruContext& ctx,
                          std::size_t k) {
  std::vector<ResidueTerm> terms;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (sgn(dense[j]) != 0) terms.push_back({j % ctx.p, dense[j]});
  }
  return geometric_eval(terms, ctx, k);
}

BigInt integer_root_floor(const BigInt& n, u64 r) {
  if (r == 0) throw InvalidInput("integer_root_floor needs r >= 1");
  if (sgn(n) < 0) throw InvalidInput("integer_root_floor needs n >= 0");
  if (r == 1 || n < 2) return n;
  const BigInt rr = big_from_u64(r);
  // Start above the root; Newton then decreases monotonically to the floor.
  BigInt x = pow2((bit_size(n) + r - 1) / r);
  for (;;) {
    BigInt xr1;
    mpz_pow_ui(xr1.get_mpz_t(), x.get_mpz_t(), r - 1);
    BigInt y = ((rr - 1) * x + n / xr1) / rr;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

}  // namespace upoly
