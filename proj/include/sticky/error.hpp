//
// Copyright 2026 The stickynoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef STICKY_ERROR_HPP_
#define STICKY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sticky {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (CSV files, generator parameters).
class LoadError : public Error {
 public:
  using Error::Error;
};

// Query text outside the supported SQL subset. `position` is a 0-based byte
// offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Query that parses but cannot be evaluated against a dataset (unknown
// attribute, comparison between text and numbers, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

// Invalid arguments to an attack, statistic or experiment.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace sticky

#endif  // STICKY_ERROR_HPP_
