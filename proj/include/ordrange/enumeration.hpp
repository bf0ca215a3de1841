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

#ifndef ORDRANGE_ENUMERATION_HPP_
#define ORDRANGE_ENUMERATION_HPP_

#include <cstddef>
#include <vector>

#include "ordrange/binomial.hpp"
#include "ordrange/chain.hpp"
#include "ordrange/semigroup_table.hpp"

namespace ordrange {

// All maps of O_n(Y), the order-preserving transformations of {1..n} with
// image inside Y, in lexicographic order of their image sequences. n is
// Y.degree() and must not exceed kMaxEnumerationDegree.
std::vector<ChainMap> list_on_y(RangeSet const& y);

// The same elements as a semigroup table; element ids follow the
// lexicographic order.
SemigroupTable enumerate_on_y(RangeSet const& y);

// |O_n(Y)| = C(n + r - 1, r - 1) for r = |Y|, 1 <= r <= n.
BigInt count_on_y(std::size_t n, std::size_t r);

// Elements of O_n(Y) whose image has exactly k points, 1 <= k <= |Y|.
std::vector<ChainMap> enumerate_by_image_size(RangeSet const& y,
                                              std::size_t k);

// Every nonempty subset of {1..n}, ordered by size then lexicographically.
std::vector<RangeSet> all_range_sets(std::size_t n);

}  // namespace ordrange

#endif  // ORDRANGE_ENUMERATION_HPP_
