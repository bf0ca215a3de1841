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

#ifndef ORDRANGE_ISOMORPHISM_HPP_
#define ORDRANGE_ISOMORPHISM_HPP_

// When is O_n(Y) isomorphic to O_m(Z)? The characterization: either both
// ranges are singletons, or n = m and Z is Y or its reflection. A brute-force
// search over multiplication tables serves as the oracle.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordrange/chain.hpp"
#include "ordrange/semigroup_table.hpp"

namespace ordrange {

struct IsomorphismVerdict {
  bool isomorphic = false;
  // 1: |Y| = |Z| = 1; 2: same chain and Z = Y; 3: same chain and Z is the
  // reflection of Y. The first that applies is reported.
  std::optional<int> condition;
};

IsomorphismVerdict classify_isomorphism(RangeSet const& y, RangeSet const& z);

inline bool are_isomorphic(RangeSet const& y, RangeSet const& z) {
  return classify_isomorphism(y, z).isomorphic;
}

// phi[a] is the id in T of the image of element a of S.
using ElementMapping = std::vector<ElementId>;

// phi is a bijection and phi(ab) = phi(a) phi(b) for every pair.
bool is_isomorphism(ElementMapping const& phi, SemigroupTable const& s,
                    SemigroupTable const& t);

struct IsomorphismSearch {
  // Lexicographically least isomorphism, if any.
  std::optional<ElementMapping> mapping;
  std::size_t isomorphisms_found = 0;
  std::size_t branches = 0;
};

// Maps a generating set of S and extends multiplicatively, pruning candidate
// images by abstract invariants only: idempotence, regularity and the sizes
// of the principal left, right and two-sided ideals. Every complete mapping
// is checked against the full tables. Guarded by subset_search_limit().
IsomorphismSearch search_isomorphisms(SemigroupTable const& s,
                                      SemigroupTable const& t);

inline std::optional<ElementMapping> find_isomorphism(
    SemigroupTable const& s, SemigroupTable const& t) {
  return search_isomorphisms(s, t).mapping;
}

// The bijection Y -> Z read off the constant maps: phi sends the constant
// with value x to the constant with value theta(x). Pairs are ordered by x.
// It may reverse order, so it is not a PartialMap.
// Throws InternalError if a constant is not sent to a constant.
std::vector<std::pair<Point, Point>> induced_range_bijection(
    ElementMapping const& phi, SemigroupTable const& s,
    SemigroupTable const& t);

// Properties every isomorphism O_n(Y) -> O_m(Z) must have, with theta the
// induced bijection.
struct BasicInvariants {
  bool constants_to_constants = false;  // item 2: theta is well defined
  bool theta_bijective = false;         // item 2
  bool action = false;         // (x theta)(alpha phi) = (x alpha) theta
  bool fixed_points = false;   // Fix(alpha phi) = Fix(alpha) theta
  bool idempotent_images = false;  // Im(alpha phi) = Im(alpha) theta
  bool rank_two_images = false;    // same, for |Im alpha| = 2
  bool monotone_or_antitone = false;

  bool all() const {
    return constants_to_constants && theta_bijective && action &&
           fixed_points && idempotent_images && rank_two_images &&
           monotone_or_antitone;
  }
  // Name of the first failing property, empty if none.
  std::string first_failure() const;
};

BasicInvariants check_basic_invariants(ElementMapping const& phi,
                                       SemigroupTable const& s,
                                       SemigroupTable const& t);

}  // namespace ordrange

#endif  // ORDRANGE_ISOMORPHISM_HPP_
