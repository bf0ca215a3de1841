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

#include "ordrange/guards.hpp"

#include <cstdlib>
#include <string>

#include "ordrange/errors.hpp"

namespace ordrange {

namespace {

std::size_t from_environment(std::size_t fallback) {
  char const* raw = std::getenv("ORDRANGE_MAX_ELEMENTS");
  if (raw == nullptr || *raw == '\0') {
    return fallback;
  }
  try {
    std::size_t consumed = 0;
    unsigned long long const value = std::stoull(raw, &consumed);
    if (consumed != std::string(raw).size() || value == 0) {
      throw PreconditionError("");
    }
    return static_cast<std::size_t>(value);
  } catch (std::exception const&) {
    throw PreconditionError(
        std::string("ORDRANGE_MAX_ELEMENTS must be a positive integer, got '") +
        raw + "'");
  }
}

}  // namespace

std::size_t subset_search_limit() {
  return from_environment(kDefaultSubsetSearchLimit);
}

std::size_t closure_limit() { return from_environment(kDefaultClosureLimit); }

}  // namespace ordrange
