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

#include "ordrange/binomial.hpp"

#include <algorithm>
#include <limits>

namespace ordrange {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i the accumulator equals C(n - k + i, i), so each division is
  // exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::optional<std::uint64_t> to_u64(BigInt const& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    return std::nullopt;
  }
  return value.convert_to<std::uint64_t>();
}

std::string to_string(BigInt const& value) { return value.str(); }

}  // namespace ordrange
