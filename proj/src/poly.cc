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

#include <algorithm>
#include <bit>
#include <cmath>

#include "upoly/error.h"

namespace upoly {

namespace {

// Sort by exponent, merge equal exponents, drop zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

// Largest packed operand we are willing to build, in bits.
constexpr std::uint64_t kMaxPackedBits = std::uint64_t{1} << 34;

}  // namespace

SparsePoly::SparsePoly(std::vector<Term> terms)
    : terms_(canonicalize(std::move(terms))) {}

SparsePoly::SparsePoly(std::initializer_list<Term> terms)
    : SparsePoly(std::vector<Term>(terms)) {}

SparsePoly SparsePoly::monomial(BigInt coeff, Exponent exp) {
  return SparsePoly({Term{std::move(coeff), exp}});
}

BigInt SparsePoly::height() const {
  BigInt h = 0;
  for (const auto& t : terms_) {
    if (cmpabs(t.coeff, h) > 0) h = abs(t.coeff);
  }
  return h;
}

BigInt SparsePoly::coeff(Exponent e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, Exponent v) { return t.exp < v; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

bool SparsePoly::contains(Exponent e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, Exponent v) { return t.exp < v; });
  return it != terms_.end() && it->exp == e;
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << (sgn(t.coeff) < 0 ? " - " : " + ");
    else if (sgn(t.coeff) < 0) os << "-";
    first = false;
    os << abs(t.coeff);
    if (t.exp > 0) os << "*x^" << t.exp;
  }
  return os;
}

std::uint64_t bitlen_nat(const BigInt& a) {
  // ceil(log2(a+1)) is the number of binary digits of a.
  return bit_size(a);
}

std::uint64_t bitlen_nat(std::uint64_t a) {
  return static_cast<std::uint64_t>(std::bit_width(a));
}

std::uint64_t bitlen_int(const BigInt& a) { return 1 + bit_size(a); }

std::uint64_t bitlen_poly(const SparsePoly& f) {
  std::uint64_t s = 0;
  for (const auto& t : f.terms()) s += bitlen_int(t.coeff) + bitlen_nat(t.exp);
  return s;
}

std::uint64_t sparsity_bound(std::uint64_t s) {
  if (s < 2) throw InvalidBound("sparsity_bound needs s >= 2");
  const double v = 2.0 * static_cast<double>(s) / std::log2(static_cast<double>(s));
  return static_cast<std::uint64_t>(std::ceil(v));
}

ResidueVec reduce_mod(const SparsePoly& f, std::uint64_t p, const BigInt& m) {
  if (p == 0 || sgn(m) <= 0) throw InvalidModulus("reduce_mod needs p >= 1 and m >= 1");
  ResidueVec v(p);
  for (const auto& t : f.terms()) v[t.exp % p] += t.coeff;
  for (auto& x : v) mod_into(x, x, m);
  return v;
}

SparsePoly shifted_derivative(const SparsePoly& f) {
  std::vector<Term> out;
  out.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    if (t.exp == 0) continue;
    out.push_back({t.coeff * big_from_u64(t.exp), t.exp});
  }
  return SparsePoly(std::move(out));
}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
  std::vector<Term> out;
  out.reserve(f.num_terms() + g.num_terms());
  out.insert(out.end(), f.terms().begin(), f.terms().end());
  out.insert(out.end(), g.terms().begin(), g.terms().end());
  return SparsePoly(std::move(out));
}

SparsePoly negate(const SparsePoly& f) {
  std::vector<Term> out(f.terms());
  for (auto& t : out) t.coeff = -t.coeff;
  return SparsePoly(std::move(out));
}

SparsePoly sub(const SparsePoly& f, const SparsePoly& g) { return add(f, negate(g)); }

BigInt signed_lift(const BigInt& r, const BigInt& m) {
  // r > m/2  <=>  2r > m
  if (2 * r > m) return r - m;
  return r;
}

SparsePoly schoolbook_mul(const SparsePoly& f, const SparsePoly& g) {
  std::vector<Term> out;
  out.reserve(f.num_terms() * g.num_terms());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) out.push_back({a.coeff * b.coeff, a.exp + b.exp});
  }
  return SparsePoly(std::move(out));
}

namespace {

struct SignSplit {
  std::vector<BigInt> pos_vals, neg_vals;
  std::vector<std::uint64_t> pos_slots, neg_slots;
};

SignSplit split_signs(const SparsePoly& f, Exponent shift) {
  SignSplit s;
  for (const auto& t : f.terms()) {
    if (sgn(t.coeff) > 0) {
      s.pos_vals.push_back(t.coeff);
      s.pos_slots.push_back(t.exp - shift);
    } else {
      s.neg_vals.push_back(-t.coeff);
      s.neg_slots.push_back(t.exp - shift);
    }
  }
  return s;
}

BigInt pack_part(const std::vector<BigInt>& vals,
                 const std::vector<std::uint64_t>& slots, std::uint64_t width) {
  if (vals.empty()) return 0;
  return pack_fields(vals, slots, width);
}

}  // namespace

SparsePoly kronecker_mul(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const Exponent f_lo = f.terms().front().exp;
  const Exponent g_lo = g.terms().front().exp;
  const std::uint64_t span = (f.degree() - f_lo) + (g.degree() - g_lo) + 1;
  // Every product coefficient is bounded by H_f * H_g * min(#f, #g).
  const std::uint64_t width =
      bit_size(f.height()) + bit_size(g.height()) +
      bitlen_nat(static_cast<std::uint64_t>(std::min(f.num_terms(), g.num_terms()))) + 1;
  if (span > kMaxPackedBits / width) {
    throw CapacityExceeded("kronecker_mul: packed product exceeds capacity");
  }

  const SignSplit fs = split_signs(f, f_lo);
  const SignSplit gs = split_signs(g, g_lo);
  const BigInt fp = pack_part(fs.pos_vals, fs.pos_slots, width);
  const BigInt fn = pack_part(fs.neg_vals, fs.neg_slots, width);
  const BigInt gp = pack_part(gs.pos_vals, gs.pos_slots, width);
  const BigInt gn = pack_part(gs.neg_vals, gs.neg_slots, width);

  // Each of the four products is a nonnegative packed polynomial.
  const BigInt plus = fp * gp + fn * gn;
  const BigInt minus = fp * gn + fn * gp;
  const auto pos = unpack_fields(plus, width, span);
  const auto neg = unpack_fields(minus, width, span);

  std::vector<Term> out;
  for (std::uint64_t i = 0; i < span; ++i) {
    BigInt c = pos[i] - neg[i];
    if (sgn(c) != 0) out.push_back({std::move(c), i + f_lo + g_lo});
  }
  return SparsePoly(std::move(out));
}

}  // namespace upoly
