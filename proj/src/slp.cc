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
#include "upoly/slp.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "upoly/error.h"

namespace upoly {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

BigInt parse_big(std::string_view s, std::size_t line_no) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ParseError(line_no, "bad constant");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError(line_no, "bad constant");
  }
  return BigInt(std::string(s), 10);
}

class SlpMbb final : public Mbb {
 public:
  explicit SlpMbb(Slp program) : program_(std::move(program)) {}

 protected:
  BigInt do_eval(const BigInt& a, const BigInt& m) const override {
    return program_.eval(a, m);
  }

 private:
  Slp program_;
};

}  // namespace

Slp::Slp(std::vector<Instr> program) : program_(std::move(program)) {
  if (program_.empty()) throw InvalidInput("empty straight-line program");
  for (std::size_t r = 0; r < program_.size(); ++r) {
    const Instr& in = program_[r];
    switch (in.op) {
      case Op::kConst:
      case Op::kInput:
        break;
      case Op::kPow:
        if (in.lhs >= r) throw InvalidInput("operand must name an earlier register");
        break;
      default:
        if (in.lhs >= r || in.rhs >= r) {
          throw InvalidInput("operand must name an earlier register");
        }
    }
  }
}

Slp Slp::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string raw;
  if (!std::getline(is, raw) || split_words(raw) != std::vector<std::string_view>{"slp", "1"}) {
    throw ParseError(1, "bad header");
  }
  std::vector<Instr> program;
  std::size_t line_no = 1;
  while (std::getline(is, raw)) {
    ++line_no;
    const auto w = split_words(raw);
    if (w.empty()) continue;
    const std::size_t reg = program.size();
    auto operand = [&](std::string_view s) {
      const std::uint64_t v = parse_u64(s, line_no);
      if (v >= reg) throw ParseError(line_no, "operand must name an earlier register");
      return static_cast<std::size_t>(v);
    };
    Instr in;
    if (w[0] == "const" && w.size() == 2) {
      in.op = Op::kConst;
      in.value = parse_big(w[1], line_no);
    } else if (w[0] == "input" && w.size() == 1) {
      in.op = Op::kInput;
    } else if ((w[0] == "add" || w[0] == "sub" || w[0] == "mul") && w.size() == 3) {
      in.op = w[0] == "add" ? Op::kAdd : (w[0] == "sub" ? Op::kSub : Op::kMul);
      in.lhs = operand(w[1]);
      in.rhs = operand(w[2]);
    } else if (w[0] == "pow" && w.size() == 3) {
      in.op = Op::kPow;
      in.lhs = operand(w[1]);
      in.power = parse_u64(w[2], line_no);
    } else {
      throw ParseError(line_no, "unknown instruction '" + std::string(raw) + "'");
    }
    program.push_back(std::move(in));
  }
  if (program.empty()) throw ParseError(line_no, "empty program");
  return Slp(std::move(program));
}

Slp Slp::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

BigInt Slp::eval(const BigInt& a, const BigInt& m) const {
  if (sgn(m) <= 0) throw InvalidModulus("SLP modulus must be positive");
  std::vector<BigInt> regs(program_.size());
  for (std::size_t r = 0; r < program_.size(); ++r) {
    const Instr& in = program_[r];
    BigInt& out = regs[r];
    switch (in.op) {
      case Op::kConst:
        mod_into(out, in.value, m);
        break;
      case Op::kInput:
        mod_into(out, a, m);
        break;
      case Op::kAdd:
        add_mod_into(out, regs[in.lhs], regs[in.rhs], m);
        break;
      case Op::kSub:
        mod_into(out, regs[in.lhs] - regs[in.rhs], m);
        break;
      case Op::kMul:
        mul_mod_into(out, regs[in.lhs], regs[in.rhs], m);
        break;
      case Op::kPow:
        out = pow_mod(regs[in.lhs], in.power, m);
        break;
    }
  }
  return regs.back();
}

MbbPtr slp_mbb(Slp program) { return std::make_shared<SlpMbb>(std::move(program)); }

}  // namespace upoly
