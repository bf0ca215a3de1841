// Copyright 2026 The ordrange Authors
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

#ifndef ORDRANGE_ERRORS_HPP_
#define ORDRANGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ordrange {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on chains of different sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Data violates a value-type invariant (non-monotone images, point out of
// range, unsorted set, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A map's image is not contained in the range set it is checked against.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A brute-force search would exceed its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A constructive step produced something that fails its own post-check.
// This indicates a bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordrange

#endif  // ORDRANGE_ERRORS_HPP_
