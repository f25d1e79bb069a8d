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
#include "upoly/poly.h"

#include <gtest/gtest.h>

#include <map>
#include <string>

#include "upoly/error.h"
#include "upoly/rng.h"

namespace upoly {
namespace {

// Bit count from the binary string, independent of the library routine.
std::uint64_t oracle_bits(const BigInt& a) {
  if (a == 0) return 0;
  return BigInt(abs(a)).get_str(2).size();
}

std::uint64_t oracle_bitlen_poly(const SparsePoly& f) {
  std::uint64_t s = 0;
  for (const auto& t : f.terms()) s += 1 + oracle_bits(t.coeff) + oracle_bits(big_from_u64(t.exp));
  return s;
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

bool canonical(const SparsePoly& f) {
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    if (f.terms()[i].coeff == 0) return false;
    if (i > 0 && f.terms()[i - 1].exp >= f.terms()[i].exp) return false;
  }
  return true;
}

TEST(BitlenTest, Naturals) {
  EXPECT_EQ(bitlen_nat(std::uint64_t{0}), 0u);
  EXPECT_EQ(bitlen_nat(std::uint64_t{7}), 3u);
  EXPECT_EQ(bitlen_nat(std::uint64_t{8}), 4u);
  EXPECT_EQ(bitlen_nat(BigInt(8)), 4u);
  EXPECT_EQ(bitlen_nat(pow2(200)), 201u);
}

TEST(BitlenTest, SignedIntegers) {
  EXPECT_EQ(bitlen_int(BigInt(0)), 1u);
  EXPECT_EQ(bitlen_int(BigInt(-5)), 4u);
  EXPECT_EQ(bitlen_int(BigInt(1)), 2u);
}

TEST(BitlenTest, Polynomials) {
  EXPECT_EQ(bitlen_poly(SparsePoly()), 0u);
  EXPECT_EQ(bitlen_poly(SparsePoly{{3, 5}, {1, 1}}), 9u);
  const SparsePoly f{{1, 0}, {1, 1}, {1, 2}};
  EXPECT_EQ(bitlen_poly(f), oracle_bitlen_poly(f));
  EXPECT_EQ(bitlen_poly(f), 9u);
}

TEST(BitlenTest, MatchesOracleAndLowerBound) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly f = random_poly(rng, 12, 1 << 30, 300);
    EXPECT_EQ(bitlen_poly(f), oracle_bitlen_poly(f));
    EXPECT_GE(bitlen_poly(f), 2 * f.num_terms());
  }
}

TEST(SparsityBoundTest, Values) {
  EXPECT_EQ(sparsity_bound(16), 8u);
  EXPECT_EQ(sparsity_bound(2), 4u);
  EXPECT_THROW(sparsity_bound(1), InvalidBound);
  EXPECT_THROW(sparsity_bound(0), InvalidBound);
}

TEST(SparsityBoundTest, MinimalPolynomials) {
  std::vector<Term> terms;
  for (Exponent t = 1; t <= 64; ++t) {
    terms.push_back({1, t - 1});
    const SparsePoly f(terms);
    const std::uint64_t s = oracle_bitlen_poly(f);
    if (s < 2) continue;
    EXPECT_LT(t, sparsity_bound(s)) << "t=" << t;
  }
}

TEST(SparsityBoundTest, RandomFamilies) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const SparsePoly f = random_poly(rng, 40, rng.uniform(1, 1 << 20), rng.uniform(1, 64));
    const std::uint64_t s = bitlen_poly(f);
    if (s < 2) continue;
    EXPECT_LT(static_cast<double>(f.num_terms()), 2.0 * s / std::log2(static_cast<double>(s)));
  }
}

TEST(SparsePolyTest, ConstructorCanonicalizes) {
  const SparsePoly f{{2, 5}, {3, 1}, {-2, 5}, {4, 1}, {0, 9}};
  ASSERT_EQ(f.num_terms(), 1u);
  EXPECT_EQ(f.terms()[0], (Term{7, 1}));
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.coeff(1), 7);
  EXPECT_EQ(f.coeff(5), 0);
  EXPECT_TRUE(f.contains(1));
  EXPECT_FALSE(f.contains(5));
  EXPECT_TRUE((SparsePoly{{0, 3}}).is_zero());
}

TEST(SparsePolyTest, Height) {
  EXPECT_EQ((SparsePoly{{-9, 0}, {4, 3}}).height(), 9);
  EXPECT_EQ(SparsePoly().height(), 0);
}

TEST(ReduceModTest, Examples) {
  const SparsePoly f{{5, 7}, {-3, 2}, {9, 0}};
  EXPECT_EQ(reduce_mod(f, 3, BigInt(7)), (ResidueVec{2, 5, 4}));
  EXPECT_EQ(reduce_mod(SparsePoly(), 4, BigInt(11)), (ResidueVec{0, 0, 0, 0}));
  EXPECT_EQ(reduce_mod(SparsePoly{{1, 1}, {1, 4}}, 3, BigInt(100)), (ResidueVec{0, 2, 0}));
}

TEST(ReduceModTest, BadModulus) {
  EXPECT_THROW(reduce_mod(SparsePoly{{1, 1}}, 0, BigInt(5)), InvalidModulus);
  EXPECT_THROW(reduce_mod(SparsePoly{{1, 1}}, 3, BigInt(0)), InvalidModulus);
}

TEST(ReduceModTest, MatchesTermwiseFolding) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly f = random_poly(rng, 20, 5000, 80);
    const std::uint64_t p = rng.uniform(1, 64);
    const BigInt m = big_from_u64(rng.uniform(p, 1 << 20));
    std::vector<BigInt> want(p, BigInt(0));
    for (const auto& t : f.terms()) want[t.exp % p] += t.coeff;
    for (auto& w : want) {
      w %= m;
      if (w < 0) w += m;
    }
    EXPECT_EQ(reduce_mod(f, p, m), want);
  }
}

TEST(ArithmeticTest, ShiftedDerivative) {
  EXPECT_EQ(shifted_derivative(SparsePoly{{3, 2}}), (SparsePoly{{6, 2}}));
  EXPECT_TRUE(shifted_derivative(SparsePoly{{7, 0}}).is_zero());
  EXPECT_EQ(shifted_derivative(SparsePoly{{2, 4}, {1, 1}}), (SparsePoly{{8, 4}, {1, 1}}));
}

TEST(ArithmeticTest, AddNegateLift) {
  EXPECT_TRUE(add(SparsePoly{{1, 1}, {1, 0}}, SparsePoly{{-1, 1}, {-1, 0}}).is_zero());
  EXPECT_EQ(signed_lift(BigInt(6), BigInt(7)), -1);
  EXPECT_EQ(signed_lift(BigInt(3), BigInt(7)), 3);
  EXPECT_EQ(signed_lift(BigInt(2), BigInt(4)), 2);  // (-m/2, m/2]
}

TEST(ArithmeticTest, SignedLiftRoundTrip) {
  Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    const BigInt m = rng.uniform_below(pow2(100)) + 3;
    BigInt x = rng.uniform_below(m / 2);
    if (2 * x >= m) continue;
    if (rng.uniform(0, 1)) x = -x;
    BigInt r = x % m;
    if (r < 0) r += m;
    EXPECT_EQ(signed_lift(r, m), x);
  }
}

TEST(ArithmeticTest, PreservesInvariants) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly f = random_poly(rng, 10, 50, 8);
    const SparsePoly g = random_poly(rng, 10, 50, 8);
    EXPECT_TRUE(canonical(f + g));
    EXPECT_TRUE(canonical(f - g));
    EXPECT_TRUE(canonical(-f));
    EXPECT_TRUE(canonical(shifted_derivative(f)));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f + g - g, f);
  }
}

TEST(MultiplyTest, SchoolbookExamples) {
  EXPECT_EQ(schoolbook_mul(SparsePoly{{1, 1}, {1, 0}}, SparsePoly{{1, 1}, {-1, 0}}),
            (SparsePoly{{1, 2}, {-1, 0}}));
  EXPECT_TRUE(schoolbook_mul(SparsePoly{{4, 3}}, SparsePoly()).is_zero());
  const BigInt big = pow2(100);
  EXPECT_EQ(schoolbook_mul(SparsePoly{{big, 3}, {1, 1}}, SparsePoly{{1, 1}, {3, 0}}),
            (SparsePoly{{big, 4}, {3 * big, 3}, {1, 2}, {3, 1}}));
}

TEST(MultiplyTest, KroneckerExamples) {
  EXPECT_EQ(kronecker_mul(SparsePoly{{1, 1}, {1, 0}}, SparsePoly{{1, 1}, {1, 0}}),
            (SparsePoly{{1, 2}, {2, 1}, {1, 0}}));
  EXPECT_EQ(kronecker_mul(SparsePoly{{3, 2}}, SparsePoly{{-2, 1}}), (SparsePoly{{-6, 3}}));
  EXPECT_TRUE(kronecker_mul(SparsePoly(), SparsePoly{{1, 1}}).is_zero());
}

TEST(MultiplyTest, KroneckerMatchesSchoolbook) {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const SparsePoly f = random_poly(rng, 30, 512, rng.uniform(1, 150));
    const SparsePoly g = random_poly(rng, 30, 512, rng.uniform(1, 150));
    ASSERT_EQ(kronecker_mul(f, g), schoolbook_mul(f, g)) << f << " * " << g;
  }
}

TEST(MultiplyTest, KroneckerShiftsHighExponents) {
  const SparsePoly f{{5, 1000000}, {-1, 1000003}};
  const SparsePoly g{{2, 77}, {7, 80}};
  EXPECT_EQ(kronecker_mul(f, g), schoolbook_mul(f, g));
}

TEST(MultiplyTest, KroneckerCapacity) {
  const SparsePoly f{{1, 0}, {1, Exponent{1} << 40}};
  EXPECT_THROW(kronecker_mul(f, f), CapacityExceeded);
}

TEST(MultiplyTest, SchoolbookAgainstCoefficientMap) {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const SparsePoly f = random_poly(rng, 15, 100, 40);
    const SparsePoly g = random_poly(rng, 15, 100, 40);
    std::map<Exponent, BigInt> acc;
    for (const auto& a : f.terms()) {
      for (const auto& b : g.terms()) acc[a.exp + b.exp] += a.coeff * b.coeff;
    }
    std::vector<Term> terms;
    for (const auto& [e, c] : acc) {
      if (c != 0) terms.push_back({c, e});
    }
    EXPECT_EQ(schoolbook_mul(f, g).terms(), terms);
  }
}

}  // namespace
}  // namespace upoly
