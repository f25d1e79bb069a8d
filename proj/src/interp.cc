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
#include "upoly/interp.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "upoly/error.h"
#include "upoly/modring.h"

namespace upoly {

namespace {

std::uint64_t ceil_u64(double v) { return static_cast<std::uint64_t>(std::ceil(v)); }

double log2_u64(std::uint64_t v) { return v == 0 ? 0.0 : std::log2(static_cast<double>(v)); }

EvalCounts diff(const EvalCounts& after, const EvalCounts& before) {
  return {after.calls - before.calls, after.sum_k - before.sum_k, after.max_p, after.max_logm};
}

std::uint64_t logm_of(const PruContext& ctx) { return bit_size(ctx.m - 1); }

// (2|c|)^30 >= H^13
bool is_large(const BigInt& c, const BigInt& height) {
  return compare_powers(2 * abs(c), 30, height, 13) >= 0;
}

// (2|c|)^2 >= H, i.e. |c| >= sqrt(H)/2
bool above_half_sqrt(const BigInt& c, const BigInt& height) {
  BigInt t = 2 * abs(c);
  return t * t >= height;
}

MdbbPtr residual(const MdbbPtr& pi, const SparsePoly& f_star) {
  if (f_star.is_zero()) return pi;
  return sum_mdbb(pi, explicit_mdbb(negate(f_star)));
}

}  // namespace

int compare_powers(const BigInt& a, std::uint64_t r, const BigInt& b, std::uint64_t t) {
  if (sgn(a) == 0 || sgn(b) == 0 || r == 0 || t == 0) {
    BigInt x, y;
    mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), r);
    mpz_pow_ui(y.get_mpz_t(), b.get_mpz_t(), t);
    return cmp(x, y) < 0 ? -1 : (x == y ? 0 : 1);
  }
  // a^r lies in [2^(r(ba-1)), 2^(r ba)); same for b^t.
  const std::uint64_t ba = bit_size(a), bb = bit_size(b);
  if (r * ba <= t * (bb - 1)) return -1;
  if (r * (ba - 1) >= t * bb) return 1;
  BigInt x, y;
  mpz_pow_ui(x.get_mpz_t(), a.get_mpz_t(), r);
  mpz_pow_ui(y.get_mpz_t(), b.get_mpz_t(), t);
  const int c = cmp(x, y);
  return c < 0 ? -1 : (c == 0 ? 0 : 1);
}

double log2_big(const BigInt& v) {
  if (sgn(v) <= 0) throw InvalidInput("log2 of a nonpositive integer");
  long exp = 0;
  const double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return static_cast<double>(exp) + std::log2(d);
}

CoeffClass coeff_class(const BigInt& c, const BigInt& height) {
  if (sgn(c) == 0) throw InvalidInput("coeff_class needs a nonzero coefficient");
  if (height < 2) throw InvalidInput("coeff_class needs H >= 2");
  const BigInt a = abs(c);
  CoeffClass out;
  out.medium = compare_powers(a, 6, height, 1) >= 0;
  out.small = !out.medium;
  out.large = is_large(a, height);
  out.huge = compare_powers(a, 2, height, 1) >= 0;
  return out;
}

bool carry_regime(std::uint64_t s, std::uint64_t degree, const BigInt& height) {
  if (s < 1 || height < 2) return false;
  const double lh = log2_big(height);
  return lh >= 61.0 && lh >= 15.0 * log2_u64(s) && lh >= 6.0 * log2_u64(degree);
}

std::uint64_t slice_iterations(std::uint64_t s) {
  return ceil_u64(2.0 * log2_u64(s)) + 3;
}

SliceParams slice_params(std::uint64_t s, std::uint64_t degree, const BigInt& height) {
  const double lh = log2_big(height);
  const double ls = log2_u64(s);
  SliceParams sp;
  sp.lambda = std::max<std::uint64_t>(
      21, ceil_u64(18.0 * static_cast<double>(s) * log2_u64(degree) / lh));
  sp.iters = slice_iterations(s);
  BigInt h7;
  mpz_pow_ui(h7.get_mpz_t(), height.get_mpz_t(), 7);
  sp.m_min = 4 * (integer_root_floor(h7, 6) + 1);
  sp.t_cap = static_cast<std::uint64_t>(
      std::floor(60.0 * static_cast<double>(s) * (ls + 2.0) / (13.0 * lh)));
  return sp;
}

std::vector<Exponent> support_superset(const Mdbb& pi, std::uint64_t s,
                                       std::uint64_t degree, const BigInt& height,
                                       Rng& rng, SupersetTrace* trace) {
  if (!carry_regime(s, degree, height)) {
    throw InvalidBound("support_superset: bounds outside the carry regime");
  }
  const SliceParams sp = slice_params(s, degree, height);
  const BigInt d_big = big_from_u64(degree);
  std::vector<Exponent> found;  // kept sorted
  for (std::uint64_t it = 0; it < sp.iters; ++it) {
    const std::uint64_t p = random_prime(sp.lambda, rng);
    const PruContext ctx = build_pru(p, sp.m_min, rng);
    if (trace) {
      trace->primes.push_back(p);
      trace->max_logm = std::max(trace->max_logm, logm_of(ctx));
    }
    const ImagePair img = mdbb_image(pi, ctx);
    for (std::uint64_t i = 0; i < p; ++i) {
      if (sgn(img.value[i]) == 0) continue;
      const BigInt a = signed_lift(img.value[i], ctx.m);
      if (!is_large(a, height)) continue;
      const BigInt b = signed_lift(img.derivative[i], ctx.m);
      const BigInt e = round_div(b, a);
      if (sgn(e) < 0 || e > d_big) continue;
      const Exponent ex = big_to_u64(e);
      auto pos = std::lower_bound(found.begin(), found.end(), ex);
      if (pos != found.end() && *pos == ex) continue;
      if (found.size() >= sp.t_cap) {
        if (trace) trace->capped = true;
        return {};
      }
      found.insert(pos, ex);
    }
  }
  return found;
}

SparsePoly uinterpolate_slice(const MdbbPtr& pi, std::uint64_t s, std::uint64_t degree,
                              const BigInt& height, Rng& rng, SliceTrace* trace) {
  SupersetTrace st;
  const std::vector<Exponent> superset = support_superset(*pi, s, degree, height, rng, &st);
  if (trace) {
    trace->superset_trace = st;
    trace->superset = superset;
    trace->max_logm = st.max_logm;
  }
  const std::uint64_t lambda = std::max<std::uint64_t>(
      21, ceil_u64(3.0 * static_cast<double>(superset.size()) * log2_u64(degree)));
  const std::uint64_t iters = slice_iterations(s);
  const BigInt m_min = 4 * height;

  std::vector<Term> found;        // f*, kept sorted by exponent
  std::uint64_t found_bits = 0;
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::uint64_t p = random_prime(lambda, rng);
    const PruContext ctx = build_pru(p, m_min, rng);
    if (trace) {
      trace->primes.push_back(p);
      trace->max_logm = std::max(trace->max_logm, logm_of(ctx));
    }
    const SparsePoly f_star(found);
    const ImagePair img = mdbb_image(*residual(pi, f_star), ctx);

    // Residue classes of the superset; only singletons are usable.
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Exponent>> buckets;
    for (Exponent a : superset) {
      auto& slot = buckets[a % p];
      ++slot.first;
      slot.second = a;
    }
    for (const auto& [residue, slot] : buckets) {
      if (slot.first != 1) continue;
      if (sgn(img.value[residue]) == 0) continue;
      const BigInt c = signed_lift(img.value[residue], ctx.m);
      if (!above_half_sqrt(c, height)) continue;
      const Exponent e = slot.second;
      auto pos = std::lower_bound(found.begin(), found.end(), e,
                                  [](const Term& t, Exponent v) { return t.exp < v; });
      if (pos != found.end() && pos->exp == e) continue;
      found_bits += bitlen_int(c) + bitlen_nat(e);
      found.insert(pos, Term{c, e});
      if (trace) ++trace->terms_added;
      if (found_bits > s) {
        if (trace) trace->overflowed = true;
        return {};
      }
    }
  }
  return SparsePoly(std::move(found));
}

std::uint64_t zero_test_reps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");
  return std::max<std::uint64_t>(1, ceil_u64(std::log2(1.0 / eps)));
}

bool zero_test(const MdbbPtr& pi, const SparsePoly& f_star, const ZeroTestBounds& bounds,
               double eps, Rng& rng) {
  const std::uint64_t reps = zero_test_reps(eps);
  // If f != f_star, the difference has at most n terms; a prime from
  // (lambda, 2 lambda) with lambda >= 3 n log2 D leaves a given term
  // uncollided with probability >= 1/2, and that term survives mod m.
  const std::uint64_t n = bounds.terms + f_star.num_terms();
  const std::uint64_t d = std::max(bounds.degree, f_star.degree());
  const BigInt h = bounds.height + f_star.height();
  const std::uint64_t lambda = std::max<std::uint64_t>(
      21, ceil_u64(3.0 * static_cast<double>(n) * log2_u64(d + 2)));
  const BigInt m_min = 2 * h + 1;
  const MdbbPtr diff_box = residual(pi, f_star);
  for (std::uint64_t r = 0; r < reps; ++r) {
    const std::uint64_t p = random_prime(lambda, rng);
    const PruContext ctx = build_pru(p, m_min, rng);
    // The image of f - f_star has at most n terms, and a nonzero n-sparse
    // polynomial cannot vanish at n consecutive powers of a p-PRU: the
    // Vandermonde matrix on distinct powers of omega is invertible mod m.
    const std::uint64_t k = std::min(p, n);
    const MdbbValues v = diff_box->eval(ctx, k);
    for (std::uint64_t i = 0; i < k; ++i) {
      if (sgn(v.alphas[i]) != 0 || sgn(v.gammas[i]) != 0) return false;
    }
  }
  return true;
}

std::optional<SparsePoly> balanced_interpolate(const MdbbPtr& pi, std::uint64_t terms,
                                               std::uint64_t degree, const BigInt& height,
                                               double eps, Rng& rng, BalancedTrace* trace) {
  if (terms < 1) throw InvalidBound("balanced_interpolate needs T >= 1");
  if (height < 1) throw InvalidBound("balanced_interpolate needs H >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in (0, 1)");

  const std::uint64_t rounds =
      ceil_u64(log2_u64(terms + 1)) * ceil_u64(std::log2(3.0 / eps)) + 4;
  const std::uint64_t lambda = std::max<std::uint64_t>(
      21, ceil_u64(6.0 * static_cast<double>(terms) * log2_u64(degree + 2)));
  // m >= 2 D H + 1 lets c e be lifted exactly; the extra factor covers a
  // residual whose wrong guesses doubled a coefficient.
  const BigInt m_min = 4 * big_from_u64(degree + 1) * height + 1;
  const ZeroTestBounds zb{terms, degree, height};
  const double zero_eps = eps / (3.0 * static_cast<double>(rounds));
  const BigInt d_big = big_from_u64(degree);

  SparsePoly f_star;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    if (trace) ++trace->rounds;
    const std::uint64_t p = random_prime(lambda, rng);
    const PruContext ctx = build_pru(p, m_min, rng);
    const ImagePair img = mdbb_image(*residual(pi, f_star), ctx);

    std::vector<Term> guesses;
    bool residual_known_nonzero = false;
    for (std::uint64_t i = 0; i < p; ++i) {
      const bool a_zero = sgn(img.value[i]) == 0;
      const bool b_zero = sgn(img.derivative[i]) == 0;
      if (a_zero && b_zero) continue;
      if (a_zero) {
        residual_known_nonzero = true;
        continue;
      }
      const BigInt a = signed_lift(img.value[i], ctx.m);
      const BigInt b = signed_lift(img.derivative[i], ctx.m);
      const BigInt e = round_div(b, a);
      if (sgn(e) < 0 || e > d_big || b != a * e) {
        residual_known_nonzero = true;
        continue;
      }
      const Exponent ex = big_to_u64(e);
      if (ex % p != i) {
        residual_known_nonzero = true;
        continue;
      }
      guesses.push_back({a, ex});
    }

    SparsePoly next = add(f_star, SparsePoly(std::move(guesses)));
    std::vector<Term> kept;
    for (const auto& t : next.terms()) {
      if (cmpabs(t.coeff, height) <= 0) kept.push_back(t);
    }
    bool pruned = kept.size() != next.num_terms();
    f_star = SparsePoly(std::move(kept));
    if (f_star.num_terms() > 2 * terms) {
      f_star = SparsePoly();
      pruned = true;
    }

    // When this image already shows f - f* != 0, a zero test can only say no.
    if (residual_known_nonzero && !pruned) continue;
    if (trace) ++trace->zero_tests;
    if (zero_test(pi, f_star, zb, zero_eps, rng)) return f_star;
  }
  return std::nullopt;
}

std::uint64_t default_majority_reps(std::uint64_t s) {
  return ceil_u64(48.0 * std::log(2.0 * static_cast<double>(s)));
}

SparsePoly uinterpolate(const MdbbPtr& pi, std::uint64_t s, std::uint64_t degree, Rng& rng,
                        const InterpOptions& options, InterpTrace* trace) {
  if (s < 2) throw InvalidBound("uinterpolate needs s >= 2");
  const std::uint64_t threshold = std::max<std::uint64_t>(
      {61, ceil_u64(15.0 * log2_u64(s)), ceil_u64(6.0 * log2_u64(degree + 2))});

  std::uint64_t height_bits = s;
  SparsePoly f_star;
  MdbbPtr current = pi;
  const bool degenerate = s < 4 || degree == 0;
  while (!degenerate && height_bits >= threshold) {
    const EvalCounts before = pi->stats().snapshot();
    SliceTrace st;
    const SparsePoly slice = uinterpolate_slice(current, s, degree, pow2(height_bits), rng, &st);
    f_star = add(f_star, slice);
    if (trace) {
      SliceRow row;
      row.height_bits = height_bits;
      row.superset_size = st.superset.size();
      for (auto p : st.superset_trace.primes) row.max_p = std::max(row.max_p, p);
      for (auto p : st.primes) row.max_p = std::max(row.max_p, p);
      row.max_logm = st.max_logm;
      row.terms_recovered = slice.num_terms();
      row.calls = diff(pi->stats().snapshot(), before);
      trace->slices.push_back(row);
    }
    if (bitlen_poly(f_star) > s) {
      if (trace) trace->size_guard_fired = true;
      return {};
    }
    current = residual(pi, f_star);
    height_bits = (height_bits + 1) / 2;
  }

  const EvalCounts before = pi->stats().snapshot();
  const std::uint64_t reps = options.majority_reps.value_or(default_majority_reps(s));
  const std::uint64_t terms = sparsity_bound(s);
  const BigInt height = pow2(height_bits);
  std::vector<std::pair<SparsePoly, std::uint64_t>> votes;
  std::uint64_t failures = 0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    auto got = balanced_interpolate(current, terms, degree, height, options.base_eps, rng);
    if (!got) {
      ++failures;
      continue;
    }
    auto it = std::find_if(votes.begin(), votes.end(),
                           [&](const auto& v) { return v.first == *got; });
    if (it == votes.end()) votes.emplace_back(std::move(*got), 1);
    else ++it->second;
  }
  if (trace) {
    trace->base_height_bits = height_bits;
    trace->base_runs = reps;
    trace->base_failures = failures;
    trace->base_calls = diff(pi->stats().snapshot(), before);
  }

  const auto best = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  if (best == votes.end() || 2 * best->second <= reps) return {};
  if (trace) trace->majority_found = true;
  SparsePoly result = add(f_star, best->first);
  if (bitlen_poly(result) > s || result.degree() > degree) {
    if (trace) trace->size_guard_fired = true;
    return {};
  }
  return result;
}

}  // namespace upoly
