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
#ifndef UPOLY_SLP_H_
#define UPOLY_SLP_H_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "upoly/bigint.h"
#include "upoly/blackbox.h"

namespace upoly {

// Straight-line program over one input. slp v1 text format:
//
//   slp 1
//   const <int> | input | add <i> <j> | sub <i> <j> | mul <i> <j> | pow <i> <n>
//   ...
//
// Register r is the value of instruction r (0-based, header excluded); operands
// must name earlier registers. The last register is the output.
class Slp {
 public:
  enum class Op { kConst, kInput, kAdd, kSub, kMul, kPow };

  struct Instr {
    Op op = Op::kInput;
    BigInt value;            // kConst
    std::size_t lhs = 0;     // kAdd/kSub/kMul/kPow
    std::size_t rhs = 0;     // kAdd/kSub/kMul
    std::uint64_t power = 0; // kPow
  };

  // Throws InvalidInput when an operand is not an earlier register or the
  // program is empty.
  explicit Slp(std::vector<Instr> program);

  // Throws ParseError with the offending line.
  static Slp parse(std::string_view text);
  static Slp load(const std::filesystem::path& path);

  const std::vector<Instr>& program() const { return program_; }

  // Output value at a, modulo m.
  BigInt eval(const BigInt& a, const BigInt& m) const;

 private:
  std::vector<Instr> program_;
};

MbbPtr slp_mbb(Slp program);

}  // namespace upoly

#endif  // UPOLY_SLP_H_
