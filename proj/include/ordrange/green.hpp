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

#ifndef ORDRANGE_GREEN_HPP_
#define ORDRANGE_GREEN_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordrange/chain.hpp"
#include "ordrange/semigroup_table.hpp"

namespace ordrange {

enum class GreenRelation { kL, kR, kH, kD, kJ };

std::string_view to_string(GreenRelation relation) noexcept;
// Parses "L", "R", "H", "D" or "J".
std::optional<GreenRelation> parse_green_relation(std::string_view name);

// Green's relations on O_n(Y), as characterized for finite chains. All five
// throw RangeError if either map has image outside Y.

// alpha L beta iff alpha = beta, or both are regular with equal images.
bool l_related(ChainMap const& alpha, ChainMap const& beta, RangeSet const& y);
// alpha R beta iff Ker(alpha) = Ker(beta).
bool r_related(ChainMap const& alpha, ChainMap const& beta, RangeSet const& y);
// O_n(Y) is H-trivial.
bool h_related(ChainMap const& alpha, ChainMap const& beta, RangeSet const& y);
// alpha D beta iff both are regular with images of equal size, or both are
// irregular with equal kernels.
bool d_related(ChainMap const& alpha, ChainMap const& beta, RangeSet const& y);
// D = J in a finite semigroup.
bool j_related(ChainMap const& alpha, ChainMap const& beta, RangeSet const& y);

struct ClassMeta {
  std::size_t rank = 0;
  bool regular = false;
  // Shared image or kernel of the class members, when there is one.
  std::optional<PointSet> image;
  std::optional<ConvexPartition> kernel;

  bool operator==(ClassMeta const&) const = default;
};

// A partition of a semigroup table by one of Green's relations. Member ids
// are ascending within a class; classes are ordered by image size
// (descending) and then by smallest member id.
struct EggBox {
  GreenRelation relation = GreenRelation::kD;
  std::vector<std::vector<ElementId>> classes;
  std::vector<ClassMeta> meta;

  // Class index of each element id.
  std::vector<std::size_t> class_of() const;
};

// Partition of O_n(Y) (as enumerated in s) by the characterized relation.
EggBox green_characterized(GreenRelation relation, SemigroupTable const& s,
                           RangeSet const& y);

// Definition-based partition: L by S^1 a, R by a S^1, J by S^1 a S^1,
// H = L meet R, D = join of L and R (transitive closure of their union).
EggBox green_oracle(GreenRelation relation, SemigroupTable const& s);

}  // namespace ordrange

#endif  // ORDRANGE_GREEN_HPP_
