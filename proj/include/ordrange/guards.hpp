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

#ifndef ORDRANGE_GUARDS_HPP_
#define ORDRANGE_GUARDS_HPP_

#include <cstddef>

namespace ordrange {

// Largest chain that exhaustive enumeration accepts.
inline constexpr std::size_t kMaxEnumerationDegree = 12;

inline constexpr std::size_t kDefaultSubsetSearchLimit = 60;
inline constexpr std::size_t kDefaultClosureLimit = 5000;

// Element-count guard for subset searches (minimum generating sets,
// isomorphism search). ORDRANGE_MAX_ELEMENTS overrides the default.
std::size_t subset_search_limit();

// Element-count guard for closure computations. ORDRANGE_MAX_ELEMENTS
// overrides the default.
std::size_t closure_limit();

}  // namespace ordrange

#endif  // ORDRANGE_GUARDS_HPP_
