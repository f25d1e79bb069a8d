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
#ifndef UPOLY_INTERP_H_
#define UPOLY_INTERP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "upoly/bigint.h"
#include "upoly/blackbox.h"
#include "upoly/poly.h"
#include "upoly/rng.h"

namespace upoly {

// Size classes of a nonzero coefficient c relative to a height bound H:
//   small  |c| < H^(1/6)       medium |c| >= H^(1/6)
//   large  |c| >= H^(13/30)/2  huge   |c| >= H^(1/2)
// All tests are exact integer cross-power comparisons.
struct CoeffClass {
  bool small = false;
  bool medium = false;
  bool large = false;
  bool huge = false;
};

// Throws InvalidInput for c = 0 or H < 2.
CoeffClass coeff_class(const BigInt& c, const BigInt& height);

// Sign of a^r - b^t for a, b >= 0.
int compare_powers(const BigInt& a, std::uint64_t r, const BigInt& b, std::uint64_t t);

// log2 of a positive integer, as a double.
double log2_big(const BigInt& v);

// True when log2 H >= max(61, 15 log2 s, 6 log2 D): the regime where a
// large term's exponent survives collisions with small terms.
bool carry_regime(std::uint64_t s, std::uint64_t degree, const BigInt& height);

// Parameters of the support-superset pass for bounds (s, D, H).
struct SliceParams {
  std::uint64_t lambda = 0;  // max(21, ceil(18 s log2 D / log2 H))
  std::uint64_t iters = 0;   // ceil(2 log2 s) + 3
  BigInt m_min;              // 4 (floor(H^(7/6)) + 1)
  std::uint64_t t_cap = 0;   // floor(60 s (log2 s + 2) / (13 log2 H))
};

SliceParams slice_params(std::uint64_t s, std::uint64_t degree, const BigInt& height);

// ceil(2 log2 s) + 3 random primes per pass.
std::uint64_t slice_iterations(std::uint64_t s);

struct SupersetTrace {
  std::vector<std::uint64_t> primes;
  std::uint64_t max_logm = 0;
  bool capped = false;  // the size cap fired and the empty set was returned
};

// Exponent set containing, w.h.p., the exponent of every large term of the
// polynomial behind pi. Always a subset of [0, D] with at most t_cap
// elements (empty when the cap would be exceeded). Throws InvalidBound when
// (s, D, H) are outside the carry regime.
std::vector<Exponent> support_superset(const Mdbb& pi, std::uint64_t s,
                                       std::uint64_t degree, const BigInt& height,
                                       Rng& rng, SupersetTrace* trace = nullptr);

struct SliceTrace {
  SupersetTrace superset_trace;
  std::vector<Exponent> superset;
  std::vector<std::uint64_t> primes;  // second pass
  std::uint64_t max_logm = 0;
  std::uint64_t terms_added = 0;
  bool overflowed = false;  // bit-length guard fired, zero returned
};

// Partial interpolant f* of the polynomial f behind pi with, w.h.p.,
// height(f - f*) < sqrt(H). bitlen_poly(f*) <= s always.
SparsePoly uinterpolate_slice(const MdbbPtr& pi, std::uint64_t s,
                              std::uint64_t degree, const BigInt& height, Rng& rng,
                              SliceTrace* trace = nullptr);

struct ZeroTestBounds {
  std::uint64_t terms = 1;   // bound on #f
  std::uint64_t degree = 0;  // bound on deg f
  BigInt height = 1;         // bound on height(f)
};

// ceil(log2(1/eps)), at least 1.
std::uint64_t zero_test_reps(double eps);

// Tests f == f_star for the f behind pi. Never rejects a true identity; accepts
// a false one with probability <= eps. Each repetition compares the full
// image of f - f_star modulo <x^p - 1, m> with zero for a fresh random p.
bool zero_test(const MdbbPtr& pi, const SparsePoly& f_star,
               const ZeroTestBounds& bounds, double eps, Rng& rng);

struct BalancedTrace {
  std::uint64_t rounds = 0;
  std::uint64_t zero_tests = 0;
};

// Guess-and-verify sparse interpolation for #f <= T, deg f <= D,
// height(f) <= H. Returns nullopt after exhausting its rounds.
std::optional<SparsePoly> balanced_interpolate(const MdbbPtr& pi, std::uint64_t terms,
                                               std::uint64_t degree,
                                               const BigInt& height, double eps,
                                               Rng& rng, BalancedTrace* trace = nullptr);

struct InterpOptions {
  // Base-case repetitions; unset means ceil(48 ln(2s)).
  std::optional<std::uint64_t> majority_reps;
  // Failure probability handed to each base-case run.
  double base_eps = 1.0 / 3.0;
};

struct SliceRow {
  std::uint64_t height_bits = 0;  // e_H, H = 2^e_H
  std::uint64_t superset_size = 0;
  std::uint64_t max_p = 0;
  std::uint64_t max_logm = 0;
  std::uint64_t terms_recovered = 0;
  EvalCounts calls;  // calls on the input black box during this slice
};

struct InterpTrace {
  std::vector<SliceRow> slices;
  std::uint64_t base_height_bits = 0;
  std::uint64_t base_runs = 0;
  std::uint64_t base_failures = 0;
  bool majority_found = false;
  bool size_guard_fired = false;
  EvalCounts base_calls;
};

// ceil(48 ln(2s)).
std::uint64_t default_majority_reps(std::uint64_t s);

// Recovers f from an MDBB given bit-length and degree bounds. Returns f with
// probability >= 1 - 1/s when the bounds hold; always returns a polynomial
// with bitlen <= s and degree <= D. Throws InvalidBound for s < 2.
SparsePoly uinterpolate(const MdbbPtr& pi, std::uint64_t s, std::uint64_t degree,
                        Rng& rng, const InterpOptions& options = {},
                        InterpTrace* trace = nullptr);

}  // namespace upoly

#endif  // UPOLY_INTERP_H_
