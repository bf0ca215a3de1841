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

#ifndef ORDRANGE_KERNELS_HPP_
#define ORDRANGE_KERNELS_HPP_

// Data-parallel inner loops shared by the oracles. Every kernel comes as a
// serial reference and an OpenMP variant; both must return identical
// results. Without OpenMP the parallel variants run the same loops on one
// thread.

#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordrange/chain.hpp"
#include "ordrange/semigroup_table.hpp"

namespace ordrange::kernels {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Row-major table: entry a * size + b is the id of elements[a] * elements[b].
std::vector<ElementId> multiplication_table_serial(
    std::span<ChainMap const> elements, ElementIndex const& index);
std::vector<ElementId> multiplication_table_parallel(
    std::span<ChainMap const> elements, ElementIndex const& index);

// Principal ideals over S with an identity adjoined: left S^1 a, right a S^1
// and two-sided S^1 a S^1, as membership bitsets over element ids.
struct PrincipalIdeals {
  std::vector<Bitset> left;
  std::vector<Bitset> right;
  std::vector<Bitset> two_sided;

  bool operator==(PrincipalIdeals const&) const = default;
};

PrincipalIdeals principal_ideals_serial(SemigroupTable const& s);
PrincipalIdeals principal_ideals_parallel(SemigroupTable const& s);

// flags[a] is true iff some b in S satisfies a b a = a.
std::vector<char> regular_flags_serial(SemigroupTable const& s);
std::vector<char> regular_flags_parallel(SemigroupTable const& s);

// Subsemigroup generated by gens, sorted lexicographically by images.
// Throws GuardError once more than limit elements are produced.
std::vector<ChainMap> closure_serial(std::span<ChainMap const> gens,
                                     std::size_t limit);
std::vector<ChainMap> closure_parallel(std::span<ChainMap const> gens,
                                       std::size_t limit);

int max_threads() noexcept;

}  // namespace ordrange::kernels

#endif  // ORDRANGE_KERNELS_HPP_
