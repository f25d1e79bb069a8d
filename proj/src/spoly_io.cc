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
#include "upoly/spoly_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "upoly/error.h"

namespace upoly {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

void write_spoly(std::ostream& os, const SparsePoly& f) {
  os << "spoly 1\n";
  for (const auto& t : f.terms()) os << t.coeff.get_str() << ' ' << t.exp << '\n';
}

std::string to_spoly_string(const SparsePoly& f) {
  std::ostringstream os;
  write_spoly(os, f);
  return os.str();
}

SparsePoly read_spoly(std::istream& is) {
  std::string raw;
  if (!std::getline(is, raw) || strip_cr(raw) != "spoly 1") {
    throw ParseError(1, "bad header");
  }
  std::vector<Term> terms;
  std::size_t line_no = 1;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = strip_cr(raw);
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) throw ParseError(line_no, "expected '<coeff> <exp>'");
    std::string_view cs = line.substr(0, sp);
    std::string_view es = line.substr(sp + 1);
    if (!is_decimal(cs, true)) throw ParseError(line_no, "bad coefficient");
    if (!is_decimal(es, false)) throw ParseError(line_no, "bad exponent");
    Exponent e = 0;
    auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
    if (ec != std::errc() || ptr != es.data() + es.size()) {
      throw ParseError(line_no, "exponent out of range");
    }
    BigInt c(std::string(cs), 10);
    if (sgn(c) == 0) throw ParseError(line_no, "zero coefficient");
    if (!terms.empty() && terms.back().exp >= e) {
      throw ParseError(line_no, "exponents must be strictly increasing");
    }
    terms.push_back({std::move(c), e});
  }
  return SparsePoly(std::move(terms));
}

SparsePoly parse_spoly(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_spoly(is);
}

SparsePoly load_spoly(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_spoly(in);
}

void save_spoly(const std::filesystem::path& path, const SparsePoly& f) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  write_spoly(out, f);
}

}  // namespace upoly
