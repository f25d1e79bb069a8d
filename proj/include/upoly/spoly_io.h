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
#ifndef UPOLY_SPOLY_IO_H_
#define UPOLY_SPOLY_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "upoly/poly.h"

namespace upoly {

// spoly v1 text format:
//
//   spoly 1
//   <coeff> <exp>
//   ...
//
// Decimal coefficients (optional leading '-'), decimal exponents, strictly
// increasing. The zero polynomial is the header line alone. Readers reject
// zero coefficients and duplicate or decreasing exponents with a ParseError
// carrying the 1-based line number.
void write_spoly(std::ostream& os, const SparsePoly& f);
std::string to_spoly_string(const SparsePoly& f);
SparsePoly read_spoly(std::istream& is);
SparsePoly parse_spoly(std::string_view text);

SparsePoly load_spoly(const std::filesystem::path& path);
void save_spoly(const std::filesystem::path& path, const SparsePoly& f);

}  // namespace upoly

#endif  // UPOLY_SPOLY_IO_H_
