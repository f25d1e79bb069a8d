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
// Benchmark ladder over instance families.

#ifndef UPOLY_BENCH_H_
#define UPOLY_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "upoly/gen.h"

namespace upoly {

struct BenchConfig {
  GenKind family = GenKind::kUniform;
  std::vector<std::uint64_t> ladder;  // strictly increasing
  std::uint64_t degree = 1 << 20;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> majority_reps;
  // Any of "interp", "unbalanced", "kronecker", "schoolbook".
  std::vector<std::string> algos = {"interp", "unbalanced", "kronecker", "schoolbook"};
  unsigned jobs = 1;
};

struct BenchRow {
  std::uint64_t s = 0;
  std::string algo;
  std::uint64_t degree = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t mdbb_calls = 0;
  std::uint64_t sum_k = 0;
  std::uint64_t max_p = 0;
  std::uint64_t max_logm = 0;
  std::uint64_t output_bitlen = 0;
};

// Interpolation rows recover one instance of bit-length s; product rows
// multiply two instances of bit-length s/2 each.
BenchRow run_bench_row(const BenchConfig& cfg, std::uint64_t s, const std::string& algo);
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

void write_bench_header(std::ostream& os);
void write_bench_row(std::ostream& os, const BenchRow& row);

}  // namespace upoly

#endif  // UPOLY_BENCH_H_
