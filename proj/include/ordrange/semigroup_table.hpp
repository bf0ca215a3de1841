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

#ifndef ORDRANGE_SEMIGROUP_TABLE_HPP_
#define ORDRANGE_SEMIGROUP_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ordrange/chain.hpp"

namespace ordrange {

using ElementId = std::uint32_t;
using ElementIndex = std::unordered_map<ChainMap, ElementId>;

// A finite semigroup of chain maps with elements indexed 0..size-1.
//
// Products are looked up by id. Up to kFullTableLimit elements the whole
// multiplication table is computed at construction; above that products are
// memoized on demand behind a reader/writer lock, so concurrent calls to
// product() are safe either way and return the same ids.
class SemigroupTable {
 public:
  static constexpr std::size_t kFullTableLimit = 512;

  enum class Validation {
    // Elements must be pairwise distinct and closed under composition.
    kFull,
    // Only distinctness is checked; closure is the caller's guarantee.
    kDistinctOnly,
  };

  explicit SemigroupTable(std::vector<ChainMap> elements,
                          Validation validation = Validation::kFull);

  SemigroupTable(SemigroupTable&&) noexcept;
  SemigroupTable& operator=(SemigroupTable&&) noexcept;
  ~SemigroupTable();

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::span<ChainMap const> elements() const noexcept { return elements_; }
  ChainMap const& element(ElementId id) const { return elements_.at(id); }
  ElementIndex const& index() const noexcept { return index_; }

  std::optional<ElementId> find(ChainMap const& f) const;
  bool contains(ChainMap const& f) const { return find(f).has_value(); }
  // Id of f; throws PreconditionError if f is not an element.
  ElementId id_of(ChainMap const& f) const;

  ElementId product(ElementId a, ElementId b) const;

  bool has_full_table() const noexcept { return !table_.empty(); }

  // Two-sided identity element of the semigroup, if any.
  std::optional<ElementId> identity() const noexcept { return identity_; }
  // True when S has no identity, so ideal computations work in S with an
  // identity adjoined.
  bool has_adjoined_identity() const noexcept { return !identity_; }

 private:
  struct Memo;

  ElementId compute_product(ElementId a, ElementId b) const;
  std::optional<ElementId> find_identity() const;

  std::size_t degree_ = 0;
  std::vector<ChainMap> elements_;
  ElementIndex index_;
  std::vector<ElementId> table_;
  std::unique_ptr<Memo> memo_;
  std::optional<ElementId> identity_;
};

}  // namespace ordrange

#endif  // ORDRANGE_SEMIGROUP_TABLE_HPP_
