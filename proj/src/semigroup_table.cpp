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

#include "ordrange/semigroup_table.hpp"

#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "ordrange/errors.hpp"
#include "ordrange/kernels.hpp"

namespace ordrange {

struct SemigroupTable::Memo {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, ElementId> products;
};

SemigroupTable::SemigroupTable(std::vector<ChainMap> elements,
                               Validation validation)
    : elements_(std::move(elements)), memo_(std::make_unique<Memo>()) {
  if (elements_.empty()) {
    throw InvariantError("semigroup table: no elements");
  }
  if (elements_.size() >= std::numeric_limits<ElementId>::max()) {
    throw GuardError("semigroup table: too many elements");
  }
  degree_ = elements_.front().degree();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].degree() != degree_) {
      throw DimensionError("semigroup table: elements on different chains");
    }
    auto [it, inserted] =
        index_.emplace(elements_[i], static_cast<ElementId>(i));
    if (!inserted) {
      throw InvariantError("semigroup table: duplicate element " +
                           to_string(elements_[i]));
    }
  }
  if (elements_.size() <= kFullTableLimit) {
    // Throws if a product falls outside the set.
    table_ = kernels::multiplication_table_parallel(elements_, index_);
  } else if (validation == Validation::kFull) {
    for (std::size_t a = 0; a < elements_.size(); ++a) {
      for (std::size_t b = 0; b < elements_.size(); ++b) {
        (void)compute_product(static_cast<ElementId>(a),
                              static_cast<ElementId>(b));
      }
    }
  }
  identity_ = find_identity();
}

SemigroupTable::SemigroupTable(SemigroupTable&&) noexcept = default;
SemigroupTable& SemigroupTable::operator=(SemigroupTable&&) noexcept = default;
SemigroupTable::~SemigroupTable() = default;

std::optional<ElementId> SemigroupTable::find(ChainMap const& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

ElementId SemigroupTable::id_of(ChainMap const& f) const {
  auto id = find(f);
  if (!id) {
    throw PreconditionError("semigroup table: " + to_string(f) +
                            " is not an element");
  }
  return *id;
}

ElementId SemigroupTable::compute_product(ElementId a, ElementId b) const {
  ChainMap const ab = compose(elements_[a], elements_[b]);
  auto id = find(ab);
  if (!id) {
    throw InvariantError("semigroup table: not closed, " +
                         to_string(elements_[a]) + " * " +
                         to_string(elements_[b]) + " = " + to_string(ab));
  }
  return *id;
}

ElementId SemigroupTable::product(ElementId a, ElementId b) const {
  if (!table_.empty()) {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  std::uint64_t const key = (static_cast<std::uint64_t>(a) << 32) | b;
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->products.find(key);
    if (it != memo_->products.end()) {
      return it->second;
    }
  }
  ElementId const id = compute_product(a, b);
  std::unique_lock lock(memo_->mutex);
  memo_->products.emplace(key, id);
  return id;
}

std::optional<ElementId> SemigroupTable::find_identity() const {
  // A semigroup without the identity map can still have an identity element
  // (a singleton, for instance). Above the full-table limit only the identity
  // map is looked for.
  if (auto id = find(ChainMap::identity(degree_))) {
    return id;
  }
  if (elements_.size() > kFullTableLimit) {
    return std::nullopt;
  }
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    bool is_identity = true;
    for (std::size_t x = 0; x < elements_.size() && is_identity; ++x) {
      auto const ex = product(static_cast<ElementId>(e),
                              static_cast<ElementId>(x));
      auto const xe = product(static_cast<ElementId>(x),
                              static_cast<ElementId>(e));
      is_identity = ex == x && xe == x;
    }
    if (is_identity) {
      return static_cast<ElementId>(e);
    }
  }
  return std::nullopt;
}

}  // namespace ordrange
