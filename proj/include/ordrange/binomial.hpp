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

#ifndef ORDRANGE_BINOMIAL_HPP_
#define ORDRANGE_BINOMIAL_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordrange {

using BigInt = boost::multiprecision::cpp_int;

// Exact C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Value as uint64 when it fits.
std::optional<std::uint64_t> to_u64(BigInt const& value);

std::string to_string(BigInt const& value);

}  // namespace ordrange

#endif  // ORDRANGE_BINOMIAL_HPP_
