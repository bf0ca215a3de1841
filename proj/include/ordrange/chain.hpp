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

#ifndef ORDRANGE_CHAIN_HPP_
#define ORDRANGE_CHAIN_HPP_

// Value types for order-preserving transformations of the chain {1 < ... < n}
// and the elementary operations on them. Points are 1-indexed everywhere in
// the public interface. Maps compose left to right: x(fg) = (xf)g.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordrange {

using Point = std::int32_t;

// A strictly increasing, possibly empty, list of points.
using PointSet = std::vector<Point>;

// A nonempty subset Y = {y_1 < ... < y_r} of {1..n}.
class RangeSet {
 public:
  RangeSet(std::size_t n, std::vector<Point> members);

  static RangeSet full(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::span<Point const> members() const noexcept { return members_; }
  PointSet const& points() const noexcept { return members_; }

  // y_i, 1-indexed.
  Point nth(std::size_t i) const;
  bool contains(Point y) const noexcept;
  // i such that y_i = y; throws if y is not a member.
  std::size_t index_of(Point y) const;

  bool operator==(RangeSet const&) const = default;
  auto operator<=>(RangeSet const&) const = default;

 private:
  std::size_t n_;
  std::vector<Point> members_;
};

// A partition of {1..n} into consecutive intervals, stored as the right
// endpoints of its blocks. The last boundary is always n.
class ConvexPartition {
 public:
  ConvexPartition(std::size_t n, std::vector<Point> boundaries);

  std::size_t degree() const noexcept { return n_; }
  std::size_t weight() const noexcept { return boundaries_.size(); }
  std::span<Point const> boundaries() const noexcept { return boundaries_; }

  // Blocks as closed intervals [lo, hi], left to right.
  std::vector<std::pair<Point, Point>> blocks() const;

  // All convex partitions of {1..n} with exactly k blocks, in lexicographic
  // order of their boundary lists. There are C(n-1, k-1) of them.
  static std::vector<ConvexPartition> all_with_weight(std::size_t n,
                                                      std::size_t k);

  bool operator==(ConvexPartition const&) const = default;
  auto operator<=>(ConvexPartition const&) const = default;

 private:
  std::size_t n_;
  std::vector<Point> boundaries_;
};

// A total order-preserving transformation of {1..n}: a weakly increasing
// sequence of images in {1..n}. Invalid data is rejected at construction.
class ChainMap {
 public:
  explicit ChainMap(std::vector<Point> images);

  static ChainMap identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<Point const> images() const noexcept { return images_; }

  // Image of x, 1 <= x <= n. Unchecked.
  Point operator()(Point x) const noexcept {
    return images_[static_cast<std::size_t>(x - 1)];
  }
  // Checked variant.
  Point at(Point x) const;

  bool operator==(ChainMap const&) const = default;
  auto operator<=>(ChainMap const&) const = default;

 private:
  std::vector<Point> images_;
};

// An order-preserving map from a nonempty subchain a_1 < ... < a_k of {1..n}
// into {1..n}, with images b_1 <= ... <= b_k.
class PartialMap {
 public:
  PartialMap(std::size_t n, std::vector<Point> domain,
             std::vector<Point> images);

  // The partial identity on a nonempty point set.
  static PartialMap partial_identity(std::size_t n, PointSet const& points);

  std::size_t degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return domain_.size(); }
  std::span<Point const> domain() const noexcept { return domain_; }
  std::span<Point const> images() const noexcept { return images_; }

  std::optional<Point> apply(Point x) const;
  bool is_injective() const noexcept;
  // Inverse of an injective map; throws PreconditionError otherwise.
  PartialMap inverse() const;
  // Sorted distinct images.
  PointSet image_set() const;

  bool operator==(PartialMap const&) const = default;
  auto operator<=>(PartialMap const&) const = default;

 private:
  std::size_t n_;
  std::vector<Point> domain_;
  std::vector<Point> images_;
};

ChainMap compose(ChainMap const& f, ChainMap const& g);
ChainMap constant(std::size_t n, Point y);

RangeSet image(ChainMap const& f);
std::size_t rank(ChainMap const& f);
ConvexPartition kernel(ChainMap const& f);
PointSet fixed_points(ChainMap const& f);
bool is_idempotent(ChainMap const& f);
bool is_constant(ChainMap const& f);

// Image of the subset {f(y) : y in Y}.
PointSet image_of_set(ChainMap const& f, std::span<Point const> points);
bool image_within(ChainMap const& f, RangeSet const& y);

PartialMap restrict(ChainMap const& f, std::span<Point const> points);

// The two canonical complete extensions of a partial map: the "hat"
// extension propagates each image to the right up to the next domain point,
// the "tilde" extension propagates each image to the left. A one-point map
// extends to the constant map.
ChainMap canonical_hat(PartialMap const& theta);
ChainMap canonical_tilde(PartialMap const& theta);

// Conjugation by the reflection i -> n - i + 1.
ChainMap reflect(ChainMap const& f);
RangeSet reflect_set(RangeSet const& y);
PartialMap reflect(PartialMap const& theta);

std::string to_string(ChainMap const& f);
std::string to_string(PartialMap const& theta);
std::string to_string(RangeSet const& y);
std::string to_string(ConvexPartition const& p);
std::string to_string(PointSet const& points);

std::ostream& operator<<(std::ostream& os, ChainMap const& f);
std::ostream& operator<<(std::ostream& os, PartialMap const& theta);
std::ostream& operator<<(std::ostream& os, RangeSet const& y);
std::ostream& operator<<(std::ostream& os, ConvexPartition const& p);

struct ChainMapHash {
  std::size_t operator()(ChainMap const& f) const noexcept;
  std::size_t operator()(std::span<Point const> images) const noexcept;
};

}  // namespace ordrange

template <>
struct std::hash<ordrange::ChainMap> : ordrange::ChainMapHash {};

#endif  // ORDRANGE_CHAIN_HPP_
