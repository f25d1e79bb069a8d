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
#include "upoly/rng.h"

#include <vector>

#include "upoly/error.h"

namespace upoly {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::fork(std::string_view label, std::uint64_t index) const {
  return Rng(splitmix64(seed_ ^ fnv1a64(label) ^ splitmix64(index)));
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InvalidInput("empty range");
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

BigInt Rng::uniform_below(const BigInt& n) {
  if (sgn(n) <= 0) throw InvalidInput("uniform_below needs n > 0");
  const std::uint64_t bits = bit_size(n);
  const std::size_t limbs = (bits + 63) / 64;
  const unsigned top = bits % 64;
  std::vector<std::uint64_t> words(limbs);
  BigInt r;
  do {
    for (auto& w : words) w = engine_();
    if (top != 0) words.back() &= (std::uint64_t{1} << top) - 1;
    mpz_import(r.get_mpz_t(), limbs, -1, sizeof(std::uint64_t), 0, 0,
               words.data());
  } while (r >= n);
  return r;
}

double Rng::uniform_real() {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

}  // namespace upoly
