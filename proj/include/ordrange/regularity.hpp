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

#ifndef ORDRANGE_REGULARITY_HPP_
#define ORDRANGE_REGULARITY_HPP_

#include <vector>

#include "ordrange/chain.hpp"
#include "ordrange/semigroup_table.hpp"

namespace ordrange {

// alpha is regular in O_n(Y) iff Im(alpha) = Y alpha.
//
// On a finite chain this predicate also describes FO(X, Y), the right ideal
// {alpha : Im(alpha) = Y alpha}; the two sets coincide because O_n itself is
// regular, so one code path serves both. Throws RangeError if the image of
// alpha is not inside Y.
bool is_regular(ChainMap const& alpha, RangeSet const& y);

// Definition-based check: some beta in S has alpha beta alpha = alpha.
// Throws PreconditionError if alpha is not an element of S.
bool is_regular_oracle(ChainMap const& alpha, SemigroupTable const& s);

// Reg(O_n(Y)) in enumeration order.
std::vector<ChainMap> regular_part(RangeSet const& y);

// O_n(Y) is regular iff Y = {1..n}, |Y| = 1 or Y = {1, n}.
bool is_semigroup_regular(RangeSet const& y);

// The three conditions of the regularity criterion for O(X), evaluated
// literally on the finite image of alpha:
//  1. if Im(alpha) has an upper bound then it has a maximum;
//  2. if Im(alpha) has a lower bound then it has a minimum;
//  3. every x outside Im(alpha) that is neither an upper nor a lower bound
//     has a greatest image point below it or a least image point above it.
struct RegularityConditions {
  bool upper = false;
  bool lower = false;
  bool gaps = false;

  bool all() const noexcept { return upper && lower && gaps; }
  bool operator==(RegularityConditions const&) const = default;
};

RegularityConditions chain_regularity_conditions(ChainMap const& alpha);

}  // namespace ordrange

#endif  // ORDRANGE_REGULARITY_HPP_
