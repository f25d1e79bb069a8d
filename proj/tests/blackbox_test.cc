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
#include "upoly/blackbox.h"

#include <gtest/gtest.h>

#include "upoly/error.h"
#include "upoly/modring.h"
#include "upoly/poly.h"
#include "upoly/rng.h"

namespace upoly {
namespace {

// Direct evaluation of f at omega^i mod m, term by term.
ResidueVec oracle_evals(const SparsePoly& f, const PruContext& ctx, std::size_t k) {
  ResidueVec out(k);
  for (std::size_t i = 0; i < k; ++i) {
    BigInt acc = 0;
    for (const auto& t : f.terms()) {
      BigInt w;
      const BigInt e = big_from_u64(t.exp) * i;
      mpz_powm(w.get_mpz_t(), ctx.omega.get_mpz_t(), e.get_mpz_t(), ctx.m.get_mpz_t());
      acc += t.coeff * w;
    }
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), ctx.m.get_mpz_t());
    out[i] = acc;
  }
  return out;
}

SparsePoly random_poly(Rng& rng, std::size_t max_terms, Exponent max_exp, std::uint64_t max_bits) {
  std::vector<Term> terms;
  const std::size_t n = rng.uniform(0, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt c = rng.uniform_below(pow2(rng.uniform(1, max_bits)));
    if (rng.uniform(0, 1)) c = -c;
    terms.push_back({c, rng.uniform(0, max_exp)});
  }
  return SparsePoly(std::move(terms));
}

PruContext random_ctx(Rng& rng, std::uint64_t max_lambda, std::uint64_t max_bits) {
  const std::uint64_t p = random_prime(rng.uniform(2, max_lambda), rng);
  return build_pru(p, pow2(rng.uniform(2, max_bits)), rng);
}

TEST(ExplicitMdbbTest, HandExample) {
  const PruContext ctx{3, 7, 1, BigInt(7), BigInt(2)};
  const MdbbPtr pi = explicit_mdbb(SparsePoly{{2, 4}, {1, 1}});
  const MdbbValues v = pi->eval(ctx, 3);
  EXPECT_EQ(v.alphas, (ResidueVec{3, 6, 5}));
  EXPECT_EQ(v.gammas, (ResidueVec{2, 4, 1}));
  const ImagePair img = mdbb_image(*pi, ctx);
  EXPECT_EQ(img.value, (ResidueVec{0, 3, 0}));
  EXPECT_EQ(img.derivative, (ResidueVec{0, 2, 0}));
}

TEST(ExplicitMdbbTest, ZeroAndSinglePoint) {
  Rng rng(1);
  const PruContext ctx = build_pru(13, pow2(90), rng);
  const MdbbValues z = explicit_mdbb(SparsePoly())->eval(ctx, 5);
  EXPECT_EQ(z.alphas, ResidueVec(5, BigInt(0)));
  EXPECT_EQ(z.gammas, ResidueVec(5, BigInt(0)));
  const SparsePoly f{{-4, 0}, {9, 30}, {2, 100}};
  const MdbbValues one = explicit_mdbb(f)->eval(ctx, 1);
  EXPECT_EQ(one.alphas[0], 7);
  EXPECT_EQ(one.gammas[0], 9 * 30 + 200);
  EXPECT_THROW(explicit_mdbb(f)->eval(ctx, 14), InvalidInput);
}

TEST(ExplicitMdbbTest, BothPathsMatchOracle) {
  Rng rng(2);
  const std::size_t saved = explicit_dense_factor();
  for (std::size_t factor : {std::size_t{0}, std::size_t{1} << 40}) {
    set_explicit_dense_factor(factor);  // 0 forces the DFT path, huge forces geometric
    for (int t = 0; t < 40; ++t) {
      const SparsePoly f = random_poly(rng, 25, 1 << 30, 200);
      const PruContext ctx = random_ctx(rng, 150, 300);
      const std::size_t k = rng.uniform(1, ctx.p);
      const MdbbValues v = explicit_mdbb(f)->eval(ctx, k);
      EXPECT_EQ(v.alphas, oracle_evals(f, ctx, k));
      EXPECT_EQ(v.gammas, oracle_evals(shifted_derivative(f), ctx, k));
    }
  }
  set_explicit_dense_factor(saved);
}

TEST(MbbToMdbbTest, HandExample) {
  // p = 2, q = 5, omega = 4 = -1; i = 0 queries f(1) and f(6) mod 25.
  const PruContext ctx{2, 5, 1, BigInt(5), BigInt(4)};
  ASSERT_TRUE(is_valid_pru(ctx));
  const MbbPtr mbb = explicit_mbb(SparsePoly{{3, 2}});
  EXPECT_EQ(mbb->eval(BigInt(6), BigInt(25)), 8);
  const MdbbValues v = mbb_to_mdbb(mbb)->eval(ctx, 1);
  EXPECT_EQ(v.alphas[0], 3);
  EXPECT_EQ(v.gammas[0], 1);
}

TEST(MbbToMdbbTest, ConstantHasZeroGammas) {
  Rng rng(3);
  const PruContext ctx = build_pru(11, pow2(64), rng);
  const MdbbValues v = mbb_to_mdbb(explicit_mbb(SparsePoly{{12345, 0}}))->eval(ctx, 11);
  EXPECT_EQ(v.gammas, ResidueVec(11, BigInt(0)));
}

TEST(MbbToMdbbTest, MatchesExplicitMdbb) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const SparsePoly f = random_poly(rng, 15, 1 << 20, 150);
    const PruContext ctx = random_ctx(rng, 100, 250);
    const std::size_t k = rng.uniform(1, ctx.p);
    const MdbbValues a = mbb_to_mdbb(explicit_mbb(f))->eval(ctx, k);
    const MdbbValues b = explicit_mdbb(f)->eval(ctx, k);
    EXPECT_EQ(a.alphas, b.alphas);
    EXPECT_EQ(a.gammas, b.gammas);
  }
}

class AffineMbb final : public Mbb {
 protected:
  BigInt do_eval(const BigInt& a, const BigInt& m) const override {
    return BigInt(a + 1) % m;
  }
};

class Drifting final : public Mbb {
 protected:
  BigInt do_eval(const BigInt& a, const BigInt& m) const override {
    return BigInt(a * a + (a > 3 ? 1 : 0)) % m;  // not a polynomial in a
  }
};

TEST(MbbToMdbbTest, DetectsContractViolation) {
  const PruContext ctx{2, 5, 1, BigInt(5), BigInt(4)};
  // Honest: a + 1 is a polynomial, so the difference is divisible by m.
  EXPECT_NO_THROW(mbb_to_mdbb(std::make_shared<AffineMbb>())->eval(ctx, 2));
  EXPECT_THROW(mbb_to_mdbb(std::make_shared<Drifting>())->eval(ctx, 1), ContractViolation);
}

TEST(CombinatorTest, SumWithNegationVanishes) {
  Rng rng(5);
  const SparsePoly f = random_poly(rng, 20, 5000, 100);
  const PruContext ctx = random_ctx(rng, 80, 200);
  const MdbbValues v = sum_mdbb(explicit_mdbb(f), explicit_mdbb(-f))->eval(ctx, ctx.p);
  EXPECT_EQ(v.alphas, ResidueVec(ctx.p, BigInt(0)));
  EXPECT_EQ(v.gammas, ResidueVec(ctx.p, BigInt(0)));
}

TEST(CombinatorTest, ProductIdentityFactor) {
  Rng rng(6);
  const SparsePoly f = random_poly(rng, 20, 5000, 100);
  const PruContext ctx = random_ctx(rng, 80, 200);
  const MdbbValues a = prod_mdbb(explicit_mdbb(f), explicit_mdbb(SparsePoly::constant(1)))->eval(ctx, 7 % ctx.p + 1);
  const MdbbValues b = explicit_mdbb(f)->eval(ctx, 7 % ctx.p + 1);
  EXPECT_EQ(a.alphas, b.alphas);
  EXPECT_EQ(a.gammas, b.gammas);
}

TEST(CombinatorTest, HomomorphismAgainstSchoolbook) {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const SparsePoly f = random_poly(rng, 12, 1 << 16, 120);
    const SparsePoly g = random_poly(rng, 12, 1 << 16, 120);
    const PruContext ctx = random_ctx(rng, 120, 300);
    const std::size_t k = rng.uniform(1, ctx.p);
    const MdbbValues prod = prod_mdbb(explicit_mdbb(f), explicit_mdbb(g))->eval(ctx, k);
    const MdbbValues want = explicit_mdbb(schoolbook_mul(f, g))->eval(ctx, k);
    EXPECT_EQ(prod.alphas, want.alphas);
    EXPECT_EQ(prod.gammas, want.gammas);
    const MdbbValues sum = sum_mdbb(explicit_mdbb(f), explicit_mdbb(g))->eval(ctx, k);
    const MdbbValues want_sum = explicit_mdbb(f + g)->eval(ctx, k);
    EXPECT_EQ(sum.alphas, want_sum.alphas);
    EXPECT_EQ(sum.gammas, want_sum.gammas);
  }
}

TEST(ImageTest, MatchesReduceMod) {
  Rng rng(8);
  for (int t = 0; t < 40; ++t) {
    const SparsePoly f = random_poly(rng, 30, 1 << 24, 200);
    const PruContext ctx = random_ctx(rng, 300, 300);
    const ImagePair img = mdbb_image(*explicit_mdbb(f), ctx);
    EXPECT_EQ(img.value, reduce_mod(f, ctx.p, ctx.m));
    EXPECT_EQ(img.derivative, reduce_mod(shifted_derivative(f), ctx.p, ctx.m));
  }
}

TEST(ImageTest, CompositeImagesMatchTransformPath) {
  // The overridden images of sums and products agree with p evaluations
  // followed by inverse transforms, and with the reduced schoolbook product.
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    const SparsePoly f = random_poly(rng, t < 15 ? 6 : 60, 1 << 20, 100);
    const SparsePoly g = random_poly(rng, t < 15 ? 6 : 60, 1 << 20, 100);
    const PruContext ctx = random_ctx(rng, 200, 200);
    const MdbbPtr prod = prod_mdbb(sum_mdbb(explicit_mdbb(f), explicit_mdbb(g)), explicit_mdbb(g));
    const ImagePair img = mdbb_image(*prod, ctx);
    const MdbbValues v = prod->eval(ctx, ctx.p);
    EXPECT_EQ(img.value, idft(v.alphas, ctx));
    EXPECT_EQ(img.derivative, idft(v.gammas, ctx));
    const SparsePoly h = schoolbook_mul(f + g, g);
    EXPECT_EQ(img.value, reduce_mod(h, ctx.p, ctx.m));
    EXPECT_EQ(img.derivative, reduce_mod(shifted_derivative(h), ctx.p, ctx.m));
  }
}

TEST(ImageTest, ZeroPolynomial) {
  Rng rng(10);
  const PruContext ctx = build_pru(17, pow2(50), rng);
  const ImagePair img = mdbb_image(*explicit_mdbb(SparsePoly()), ctx);
  EXPECT_EQ(img.value, ResidueVec(17, BigInt(0)));
  EXPECT_EQ(img.derivative, ResidueVec(17, BigInt(0)));
}

TEST(EvalStatsTest, CountsCallsAndK) {
  Rng rng(11);
  const PruContext ctx = build_pru(31, pow2(100), rng);
  const MdbbPtr pi = explicit_mdbb(SparsePoly{{1, 3}});
  pi->eval(ctx, 4);
  pi->eval(ctx, 10);
  mdbb_image(*pi, ctx);
  const EvalCounts c = pi->stats().snapshot();
  EXPECT_EQ(c.calls, 3u);
  EXPECT_EQ(c.sum_k, 4u + 10u + 31u);
  EXPECT_EQ(c.max_p, 31u);
  EXPECT_EQ(c.max_logm, bit_size(ctx.m - 1));
  const_cast<EvalStats&>(pi->stats()).reset();
  EXPECT_EQ(pi->stats().snapshot(), EvalCounts{});
}

TEST(EvalStatsTest, CompositesCallEachChildOnce) {
  Rng rng(12);
  const PruContext ctx = build_pru(19, pow2(60), rng);
  const MdbbPtr a = explicit_mdbb(SparsePoly{{2, 1}});
  const MdbbPtr b = explicit_mdbb(SparsePoly{{3, 2}});
  const MdbbPtr s = sum_mdbb(a, b);
  const MdbbPtr p = prod_mdbb(s, b);
  p->eval(ctx, 5);
  mdbb_image(*p, ctx);
  EXPECT_EQ(p->stats().snapshot().calls, 2u);
  EXPECT_EQ(s->stats().snapshot().calls, 2u);
  EXPECT_EQ(a->stats().snapshot().calls, 2u);
  EXPECT_EQ(b->stats().snapshot().calls, 4u);
  EXPECT_EQ(b->stats().snapshot().sum_k, 2u * (5 + 19));
}

}  // namespace
}  // namespace upoly
