// Copyright 2026 The Simile Authors.
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

#ifndef SIMILE_ERROR_HPP_
#define SIMILE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace simile {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command-line usage.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Unreadable, undecodable or malformed input data.
class InputError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant. Never caused by user input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace simile

#endif  // SIMILE_ERROR_HPP_
