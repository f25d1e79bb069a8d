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
// Product verification and output-sensitive multiplication of unbalanced
// sparse polynomials.

#ifndef UPOLY_MUL_H_
#define UPOLY_MUL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "upoly/bigint.h"
#include "upoly/blackbox.h"
#include "upoly/interp.h"
#include "upoly/poly.h"
#include "upoly/rng.h"

namespace upoly {

// 2 ell + ceil(4 ell^2 / log2 ell): a bit-length bound for f g when both
// factors have bit-length at most ell.
std::uint64_t prod_bitlen_bound(std::uint64_t ell);

struct VerifParams {
  double eps = 0.0;
  std::uint64_t lambda_p = 0;
  BigInt lambda_q;
};

VerifParams verif_params(std::uint64_t s, std::uint64_t degree, double eps);

struct VerifOutcome {
  bool accept = false;
  std::uint64_t p = 0;
  BigInt q;
  BigInt alpha;
};

// Tests h == f g. A true identity is always accepted; a false one is
// accepted with probability at most eps.
VerifOutcome verif_prod_detailed(const SparsePoly& f, const SparsePoly& g,
                                 const SparsePoly& h, double eps, Rng& rng);
bool verif_prod(const SparsePoly& f, const SparsePoly& g, const SparsePoly& h,
                double eps, Rng& rng);

struct MulOptions {
  bool fallback = true;
  std::optional<std::uint64_t> majority_reps;
};

struct LadderStep {
  std::uint64_t s = 0;
  std::uint64_t output_bitlen = 0;
  bool output_zero = false;
  InterpTrace interp;
};

struct MulTrace {
  std::uint64_t ell = 0;
  std::uint64_t s_max = 0;
  double eps = 0.0;
  std::vector<LadderStep> ladder;
  bool verified = false;    // final h passed verification
  bool fell_back = false;   // schoolbook product returned
  EvalCounts calls;         // calls on the product black box
};

SparsePoly unbalanced_prod(const SparsePoly& f, const SparsePoly& g, Rng& rng,
                           const MulOptions& options = {}, MulTrace* trace = nullptr);

}  // namespace upoly

#endif  // UPOLY_MUL_H_
