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
#ifndef UPOLY_ERROR_H_
#define UPOLY_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace upoly {

// Root of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size bound (s, D, H, ell, lambda) is outside the domain of the operation.
class InvalidBound : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

// A black box returned values that no polynomial evaluator could produce.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Malformed spoly/slp text. line() is 1-based; 0 means "not line specific".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace upoly

#endif  // UPOLY_ERROR_H_
