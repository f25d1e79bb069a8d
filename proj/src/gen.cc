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
#include "upoly/gen.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "upoly/error.h"

namespace upoly {

namespace {

std::uint64_t ceil_log2(std::uint64_t s) {
  return static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(std::max<std::uint64_t>(s, 2)))));
}

std::uint64_t term_cost(const Term& t) { return bitlen_int(t.coeff) + bitlen_nat(t.exp); }

Exponent fresh_exponent(std::set<Exponent>& used, std::uint64_t d_max, Rng& rng) {
  if (used.size() > d_max) throw InvalidInput("generate: exponent range exhausted");
  for (;;) {
    const Exponent e = rng.uniform(0, d_max);
    if (used.insert(e).second) return e;
  }
}

// Adds terms with coefficient sizes from `bits` until the budget runs out.
template <typename BitsFn>
SparsePoly fill(const GenProfile& pr, Rng& rng, BitsFn bits) {
  std::set<Exponent> used;
  std::vector<Term> terms;
  std::uint64_t total = 0;
  const std::uint64_t cap = pr.d_max + 1;
  for (int misses = 0; misses < 8 && used.size() < cap;) {
    const std::uint64_t b = bits();
    const Exponent e = rng.uniform(0, pr.d_max);
    if (used.count(e)) continue;
    Term t{random_coeff(b, rng), e};
    const std::uint64_t c = term_cost(t);
    if (total + c > pr.s_target) {
      ++misses;
      continue;
    }
    used.insert(e);
    total += c;
    terms.push_back(std::move(t));
  }
  return SparsePoly(std::move(terms));
}

}  // namespace

GenKind parse_gen_kind(std::string_view name) {
  if (name == "uniform") return GenKind::kUniform;
  if (name == "geometric") return GenKind::kGeometric;
  if (name == "extreme") return GenKind::kExtreme;
  throw InvalidInput("unknown profile: " + std::string(name));
}

std::string_view gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::kUniform: return "uniform";
    case GenKind::kGeometric: return "geometric";
    case GenKind::kExtreme: return "extreme";
  }
  return "?";
}

BigInt random_coeff(std::uint64_t bits, Rng& rng) {
  if (bits == 0) throw InvalidInput("random_coeff needs bits >= 1");
  BigInt c = rng.uniform_below(pow2(bits - 1)) + pow2(bits - 1);
  return rng.uniform(0, 1) ? BigInt(-c) : c;
}

SparsePoly generate(const GenProfile& pr, Rng& rng) {
  if (pr.s_target < 2) throw InvalidInput("generate needs s_target >= 2");
  const std::uint64_t s = pr.s_target;
  switch (pr.kind) {
    case GenKind::kUniform: {
      const std::uint64_t hi = std::max<std::uint64_t>(2, s / 16);
      return fill(pr, rng, [&] { return rng.uniform(1, hi); });
    }
    case GenKind::kGeometric: {
      const double top = std::log2(static_cast<double>(std::max<std::uint64_t>(s / 4, 1)));
      return fill(pr, rng, [&] {
        return static_cast<std::uint64_t>(std::exp2(rng.uniform_real() * top));
      });
    }
    case GenKind::kExtreme: {
      const std::uint64_t lg = ceil_log2(s);
      const std::uint64_t n_small = (s + 2 * lg - 1) / (2 * lg);
      const std::uint64_t big_bits = (s + 3) / 4 + 1;
      std::set<Exponent> used;
      std::vector<Term> big, small;
      for (int i = 0; i < 2 && used.size() <= pr.d_max; ++i) {
        big.push_back({random_coeff(big_bits, rng), fresh_exponent(used, pr.d_max, rng)});
      }
      for (std::uint64_t i = 0; i < n_small && used.size() <= pr.d_max; ++i) {
        small.push_back({random_coeff(rng.uniform(1, lg), rng), fresh_exponent(used, pr.d_max, rng)});
      }
      std::uint64_t total = 0;
      for (const auto& t : big) total += term_cost(t);
      for (const auto& t : small) total += term_cost(t);
      while (total > s && !small.empty()) {
        total -= term_cost(small.back());
        small.pop_back();
      }
      while (total > s && !big.empty()) {
        total -= term_cost(big.back());
        big.pop_back();
      }
      big.insert(big.end(), small.begin(), small.end());
      return SparsePoly(std::move(big));
    }
  }
  return {};
}

}  // namespace upoly
