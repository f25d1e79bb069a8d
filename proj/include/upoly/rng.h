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
#ifndef UPOLY_RNG_H_
#define UPOLY_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

#include "upoly/bigint.h"

namespace upoly {

// Seeded random stream. A stream is derived from a master seed and a
// call-site label, so adding a new consumer never shifts the values seen by
// existing ones:
//
//   child_seed = splitmix64(seed ^ fnv1a64(label) ^ splitmix64(index))
//
// Every randomized routine takes an Rng& and draws from it sequentially.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Independent child stream; same (seed, label, index) => same stream.
  Rng fork(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [lo, hi], lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  // Uniform in [0, n), n > 0.
  BigInt uniform_below(const BigInt& n);
  // Uniform in [0, 1).
  double uniform_real();

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

}  // namespace upoly

#endif  // UPOLY_RNG_H_
