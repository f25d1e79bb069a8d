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
#include <atomic>
#include <bit>
#include <memory>

#include "upoly/error.h"
#include "upoly/modring.h"

namespace upoly {

namespace {

std::atomic<std::size_t> g_naive_threshold{64};

std::uint64_t sq_mod(std::uint64_t j, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * j % p);
}

// Chirp-z transform for odd p. With w = omega^((p+1)/2) we have
// omega^(ij) = w^(i^2) w^(j^2) w^(-(i-j)^2), so the transform is one linear
// convolution against the fixed chirp b_d = w^(-d^2), d in (-p, p). The
// convolution runs as a single packed big-integer product.
class BluesteinPlan {
 public:
  explicit BluesteinPlan(const PruContext& ctx)
      : p_(ctx.p), m_(ctx.m), omega_(ctx.omega) {
    const BigInt w = pow_mod(ctx.omega, (p_ + 1) / 2, m_);
    powers_.resize(p_);
    powers_[0] = 1;
    for (std::uint64_t e = 1; e < p_; ++e) mul_mod_into(powers_[e], powers_[e - 1], w, m_);
    width_ = 2 * bit_size(m_) + static_cast<std::uint64_t>(std::bit_width(p_)) + 1;
    ResidueVec chirp(2 * p_ - 1);
    for (std::uint64_t t = 0; t < 2 * p_ - 1; ++t) {
      const std::uint64_t d = t >= p_ - 1 ? t - (p_ - 1) : (p_ - 1) - t;
      const std::uint64_t e = (p_ - sq_mod(d, p_)) % p_;
      chirp[t] = powers_[e];
    }
    chirp_ = pack_fields(chirp, width_);
  }

  bool matches(const PruContext& ctx) const {
    return ctx.p == p_ && ctx.m == m_ && ctx.omega == omega_;
  }

  ResidueVec forward(std::span<const BigInt> v) const {
    ResidueVec a(p_);
    for (std::uint64_t j = 0; j < p_; ++j) {
      if (sgn(v[j]) != 0) mul_mod_into(a[j], v[j], powers_[sq_mod(j, p_)], m_);
    }
    BigInt c = pack_fields(a, width_) * chirp_;
    mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), (p_ - 1) * width_);
    ResidueVec out = unpack_fields(c, width_, p_);
    for (std::uint64_t i = 0; i < p_; ++i) {
      mpz_tdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), m_.get_mpz_t());
      mul_mod_into(out[i], out[i], powers_[sq_mod(i, p_)], m_);
    }
    return out;
  }

 private:
  std::uint64_t p_;
  BigInt m_;
  BigInt omega_;
  ResidueVec powers_;  // w^e, e in [0, p)
  std::uint64_t width_ = 0;
  BigInt chirp_;
};

// Images reuse one context for several transforms in a row.
std::shared_ptr<const BluesteinPlan> plan_for(const PruContext& ctx) {
  thread_local std::shared_ptr<const BluesteinPlan> cached;
  if (!cached || !cached->matches(ctx)) cached = std::make_shared<BluesteinPlan>(ctx);
  return cached;
}

void check_length(std::span<const BigInt> values, const PruContext& ctx) {
  if (values.size() != ctx.p) throw InvalidInput("transform length must equal p");
}

}  // namespace

std::size_t dft_naive_threshold() { return g_naive_threshold.load(); }

void set_dft_naive_threshold(std::size_t n) { g_naive_threshold.store(n); }

ResidueVec naive_dft(std::span<const BigInt> values, const PruContext& ctx) {
  check_length(values, ctx);
  const std::uint64_t p = ctx.p;
  ResidueVec powers(p);
  powers[0] = 1 % ctx.m;
  for (std::uint64_t e = 1; e < p; ++e) mul_mod_into(powers[e], powers[e - 1], ctx.omega, ctx.m);
  ResidueVec out(p);
  BigInt t;
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      if (sgn(values[j]) == 0) continue;
      const auto e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(i) * j % p);
      mul_mod_into(t, values[j], powers[e], ctx.m);
      add_mod_into(out[i], out[i], t, ctx.m);
    }
  }
  return out;
}

ResidueVec dft(std::span<const BigInt> values, const PruContext& ctx) {
  check_length(values, ctx);
  if (ctx.p < dft_naive_threshold() || ctx.p % 2 == 0) return naive_dft(values, ctx);
  return plan_for(ctx)->forward(values);
}

ResidueVec idft(std::span<const BigInt> values, const PruContext& ctx) {
  const ResidueVec y = dft(values, ctx);
  const BigInt p_inv = inv_mod(big_from_u64(ctx.p), ctx.m);
  const std::uint64_t p = ctx.p;
  ResidueVec out(p);
  for (std::uint64_t i = 0; i < p; ++i) mul_mod_into(out[i], y[(p - i) % p], p_inv, ctx.m);
  return out;
}

}  // namespace upoly
