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
// Seeded random instance families.

#ifndef UPOLY_GEN_H_
#define UPOLY_GEN_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "upoly/poly.h"
#include "upoly/rng.h"

namespace upoly {

enum class GenKind { kUniform, kGeometric, kExtreme };

GenKind parse_gen_kind(std::string_view name);  // throws InvalidInput
std::string_view gen_kind_name(GenKind kind);

struct GenProfile {
  GenKind kind = GenKind::kUniform;
  std::uint64_t s_target = 64;
  std::uint64_t d_max = 1024;
};

// uniform:   coefficient bit-lengths uniform in [1, max(2, s/16)].
// geometric: coefficient bit-lengths log-uniform in [1, s/4].
// extreme:   ceil(s / (2 log2 s)) coefficients of at most ceil(log2 s) bits
//            and two coefficients with at least 2^(s/4) magnitude.
// The result always has bitlen_poly <= s_target and degree <= d_max.
SparsePoly generate(const GenProfile& profile, Rng& rng);

// A random coefficient of exactly `bits` bits with a random sign.
BigInt random_coeff(std::uint64_t bits, Rng& rng);

}  // namespace upoly

#endif  // UPOLY_GEN_H_
