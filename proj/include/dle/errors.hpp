// Copyright 2026 The digraph-le Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dle {

/// Base for every error raised by the library on bad caller input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A loop arc (u,u) was requested.
class LoopError : public Error {
 public:
  using Error::Error;
};

/// An index or parameter lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Vertex count is zero or exceeds the 64-vertex word capacity.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed family parameters (block sizes, residual placement, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace dle
