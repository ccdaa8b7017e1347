// Copyright 2026 The argproj Authors.
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

#ifndef ARGPROJ_ERROR_H_
#define ARGPROJ_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argproj {

// Base class for every error the toolkit reports. Anything derived from it
// is a validation failure (CLI exit code 1), never a programming bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line,
             std::size_t column = 0)
      : Error(Format(message, line, column)),
        detail_(message),
        line_(line),
        column_(column) {}

  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out = message + " at line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Strict-mode IOB violation. `index` is the 0-based tag position.
class IobError : public Error {
 public:
  IobError(const std::string& message, std::size_t index)
      : Error(message + " at tag " + std::to_string(index)),
        detail_(message),
        index_(index) {}

  const std::string& detail() const { return detail_; }
  std::size_t index() const { return index_; }

 private:
  std::string detail_;
  std::size_t index_;
};

// A data structure whose invariants do not hold.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inputs that should correspond (line counts, sentence counts, lengths) do
// not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace argproj

#endif  // ARGPROJ_ERROR_H_
