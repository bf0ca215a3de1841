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

#include "ordrange/chain.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ordrange/errors.hpp"

namespace ordrange {

namespace {

bool in_chain(Point x, std::size_t n) noexcept {
  return x >= 1 && static_cast<std::size_t>(x) <= n;
}

void require_strictly_increasing(std::span<Point const> xs, std::size_t n,
                                 char const* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!in_chain(xs[i], n)) {
      throw InvariantError(std::string(what) + ": point " +
                           std::to_string(xs[i]) + " outside {1.." +
                           std::to_string(n) + "}");
    }
    if (i > 0 && xs[i - 1] >= xs[i]) {
      throw InvariantError(std::string(what) +
                           ": points must be strictly increasing");
    }
  }
}

void require_weakly_increasing(std::span<Point const> xs, std::size_t n,
                               char const* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!in_chain(xs[i], n)) {
      throw InvariantError(std::string(what) + ": image " +
                           std::to_string(xs[i]) + " outside {1.." +
                           std::to_string(n) + "}");
    }
    if (i > 0 && xs[i - 1] > xs[i]) {
      throw InvariantError(std::string(what) +
                           ": images are not order-preserving");
    }
  }
}

template <typename Range>
std::string join(Range const& xs) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto x : xs) {
    if (!first) {
      os << ',';
    }
    os << x;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace

// RangeSet

RangeSet::RangeSet(std::size_t n, std::vector<Point> members)
    : n_(n), members_(std::move(members)) {
  if (n_ == 0) {
    throw InvariantError("range set: chain size must be positive");
  }
  if (members_.empty()) {
    throw InvariantError("range set: must be nonempty");
  }
  require_strictly_increasing(members_, n_, "range set");
}

RangeSet RangeSet::full(std::size_t n) {
  std::vector<Point> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = static_cast<Point>(i + 1);
  }
  return RangeSet(n, std::move(all));
}

Point RangeSet::nth(std::size_t i) const {
  if (i < 1 || i > members_.size()) {
    throw PreconditionError("range set: index " + std::to_string(i) +
                            " outside 1.." + std::to_string(members_.size()));
  }
  return members_[i - 1];
}

bool RangeSet::contains(Point y) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), y);
}

std::size_t RangeSet::index_of(Point y) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), y);
  if (it == members_.end() || *it != y) {
    throw PreconditionError("range set: " + std::to_string(y) +
                            " is not a member");
  }
  return static_cast<std::size_t>(it - members_.begin()) + 1;
}

// ConvexPartition

ConvexPartition::ConvexPartition(std::size_t n, std::vector<Point> boundaries)
    : n_(n), boundaries_(std::move(boundaries)) {
  if (n_ == 0 || boundaries_.empty()) {
    throw InvariantError("convex partition: empty");
  }
  require_strictly_increasing(boundaries_, n_, "convex partition");
  if (static_cast<std::size_t>(boundaries_.back()) != n_) {
    throw InvariantError("convex partition: last boundary must equal n");
  }
}

std::vector<std::pair<Point, Point>> ConvexPartition::blocks() const {
  std::vector<std::pair<Point, Point>> result;
  result.reserve(boundaries_.size());
  Point lo = 1;
  for (Point hi : boundaries_) {
    result.emplace_back(lo, hi);
    lo = hi + 1;
  }
  return result;
}

std::vector<ConvexPartition> ConvexPartition::all_with_weight(std::size_t n,
                                                              std::size_t k) {
  std::vector<ConvexPartition> result;
  if (n == 0 || k == 0 || k > n) {
    return result;
  }
  // Choose k - 1 interior cut points among 1..n-1.
  std::vector<Point> cuts(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    cuts[i] = static_cast<Point>(i + 1);
  }
  while (true) {
    std::vector<Point> boundaries(cuts);
    boundaries.push_back(static_cast<Point>(n));
    result.emplace_back(n, std::move(boundaries));
    // Advance to the next (k-1)-combination of {1..n-1}.
    std::size_t const m = cuts.size();
    std::size_t i = m;
    while (i > 0 &&
           cuts[i - 1] == static_cast<Point>(n - 1 - (m - i))) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++cuts[i - 1];
    for (std::size_t t = i; t < m; ++t) {
      cuts[t] = cuts[t - 1] + 1;
    }
  }
  return result;
}

// ChainMap

ChainMap::ChainMap(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw InvariantError("chain map: chain size must be positive");
  }
  require_weakly_increasing(images_, images_.size(), "chain map");
}

ChainMap ChainMap::identity(std::size_t n) {
  return ChainMap(RangeSet::full(n).points());
}

Point ChainMap::at(Point x) const {
  if (!in_chain(x, degree())) {
    throw PreconditionError("chain map: point " + std::to_string(x) +
                            " outside the chain");
  }
  return (*this)(x);
}

// PartialMap

PartialMap::PartialMap(std::size_t n, std::vector<Point> domain,
                       std::vector<Point> images)
    : n_(n), domain_(std::move(domain)), images_(std::move(images)) {
  if (n_ == 0) {
    throw InvariantError("partial map: chain size must be positive");
  }
  if (domain_.empty()) {
    throw InvariantError("partial map: domain must be nonempty");
  }
  if (domain_.size() != images_.size()) {
    throw InvariantError("partial map: domain and images differ in length");
  }
  require_strictly_increasing(domain_, n_, "partial map domain");
  require_weakly_increasing(images_, n_, "partial map");
}

PartialMap PartialMap::partial_identity(std::size_t n, PointSet const& points) {
  return PartialMap(n, points, points);
}

std::optional<Point> PartialMap::apply(Point x) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
  if (it == domain_.end() || *it != x) {
    return std::nullopt;
  }
  return images_[static_cast<std::size_t>(it - domain_.begin())];
}

bool PartialMap::is_injective() const noexcept {
  return std::adjacent_find(images_.begin(), images_.end()) == images_.end();
}

PartialMap PartialMap::inverse() const {
  if (!is_injective()) {
    throw PreconditionError("partial map: inverse requires an injective map");
  }
  return PartialMap(n_, images_, domain_);
}

PointSet PartialMap::image_set() const {
  PointSet result(images_);
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

// Operations

ChainMap compose(ChainMap const& f, ChainMap const& g) {
  if (f.degree() != g.degree()) {
    throw DimensionError("compose: chain sizes differ (" +
                         std::to_string(f.degree()) + " vs " +
                         std::to_string(g.degree()) + ")");
  }
  std::vector<Point> images(f.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = g(f.images()[x]);
  }
  return ChainMap(std::move(images));
}

ChainMap constant(std::size_t n, Point y) {
  if (n == 0 || !in_chain(y, n)) {
    throw PreconditionError("constant: point " + std::to_string(y) +
                            " outside {1.." + std::to_string(n) + "}");
  }
  return ChainMap(std::vector<Point>(n, y));
}

RangeSet image(ChainMap const& f) {
  std::vector<Point> values(f.images().begin(), f.images().end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return RangeSet(f.degree(), std::move(values));
}

std::size_t rank(ChainMap const& f) {
  std::size_t count = 1;
  auto images = f.images();
  for (std::size_t x = 1; x < images.size(); ++x) {
    count += images[x] != images[x - 1] ? 1 : 0;
  }
  return count;
}

ConvexPartition kernel(ChainMap const& f) {
  std::vector<Point> boundaries;
  auto images = f.images();
  for (std::size_t x = 1; x < images.size(); ++x) {
    if (images[x] != images[x - 1]) {
      boundaries.push_back(static_cast<Point>(x));
    }
  }
  boundaries.push_back(static_cast<Point>(images.size()));
  return ConvexPartition(f.degree(), std::move(boundaries));
}

PointSet fixed_points(ChainMap const& f) {
  PointSet result;
  for (std::size_t x = 1; x <= f.degree(); ++x) {
    if (f(static_cast<Point>(x)) == static_cast<Point>(x)) {
      result.push_back(static_cast<Point>(x));
    }
  }
  return result;
}

bool is_idempotent(ChainMap const& f) { return compose(f, f) == f; }

bool is_constant(ChainMap const& f) {
  return f.images().front() == f.images().back();
}

PointSet image_of_set(ChainMap const& f, std::span<Point const> points) {
  PointSet result;
  result.reserve(points.size());
  for (Point y : points) {
    result.push_back(f.at(y));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool image_within(ChainMap const& f, RangeSet const& y) {
  if (f.degree() != y.degree()) {
    return false;
  }
  return std::all_of(f.images().begin(), f.images().end(),
                     [&](Point v) { return y.contains(v); });
}

PartialMap restrict(ChainMap const& f, std::span<Point const> points) {
  if (points.empty()) {
    throw PreconditionError("restrict: the subset must be nonempty");
  }
  std::vector<Point> domain(points.begin(), points.end());
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  std::vector<Point> images;
  images.reserve(domain.size());
  for (Point a : domain) {
    images.push_back(f.at(a));
  }
  return PartialMap(f.degree(), std::move(domain), std::move(images));
}

ChainMap canonical_hat(PartialMap const& theta) {
  auto const a = theta.domain();
  auto const b = theta.images();
  std::size_t const n = theta.degree();
  std::size_t const k = a.size();
  if (k == 1) {
    return constant(n, b[0]);
  }
  std::vector<Point> images(n);
  for (std::size_t xi = 1; xi <= n; ++xi) {
    auto const x = static_cast<Point>(xi);
    Point value;
    if (x < a[1]) {
      value = b[0];
    } else if (x >= a[k - 1]) {
      value = b[k - 1];
    } else {
      // a_j <= x < a_{j+1} for some 2 <= j <= k-1.
      std::size_t j = 1;
      while (!(a[j] <= x && x < a[j + 1])) {
        ++j;
      }
      value = b[j];
    }
    images[xi - 1] = value;
  }
  return ChainMap(std::move(images));
}

ChainMap canonical_tilde(PartialMap const& theta) {
  auto const a = theta.domain();
  auto const b = theta.images();
  std::size_t const n = theta.degree();
  std::size_t const k = a.size();
  if (k == 1) {
    return constant(n, b[0]);
  }
  std::vector<Point> images(n);
  for (std::size_t xi = 1; xi <= n; ++xi) {
    auto const x = static_cast<Point>(xi);
    Point value;
    if (x <= a[0]) {
      value = b[0];
    } else if (x > a[k - 2]) {
      value = b[k - 1];
    } else {
      // a_{j-1} < x <= a_j for some 2 <= j <= k-1.
      std::size_t j = 1;
      while (!(a[j - 1] < x && x <= a[j])) {
        ++j;
      }
      value = b[j];
    }
    images[xi - 1] = value;
  }
  return ChainMap(std::move(images));
}

ChainMap reflect(ChainMap const& f) {
  auto const n = static_cast<Point>(f.degree());
  std::vector<Point> images(f.degree());
  for (Point x = 1; x <= n; ++x) {
    images[static_cast<std::size_t>(x - 1)] = n + 1 - f(n + 1 - x);
  }
  return ChainMap(std::move(images));
}

RangeSet reflect_set(RangeSet const& y) {
  auto const n = static_cast<Point>(y.degree());
  std::vector<Point> members;
  members.reserve(y.size());
  for (auto it = y.members().rbegin(); it != y.members().rend(); ++it) {
    members.push_back(n + 1 - *it);
  }
  return RangeSet(y.degree(), std::move(members));
}

PartialMap reflect(PartialMap const& theta) {
  auto const n = static_cast<Point>(theta.degree());
  std::vector<Point> domain;
  std::vector<Point> images;
  for (std::size_t i = theta.size(); i-- > 0;) {
    domain.push_back(n + 1 - theta.domain()[i]);
    images.push_back(n + 1 - theta.images()[i]);
  }
  return PartialMap(theta.degree(), std::move(domain), std::move(images));
}

std::string to_string(ChainMap const& f) { return join(f.images()); }

std::string to_string(PartialMap const& theta) {
  return "{\"domain\":" + join(theta.domain()) +
         ",\"images\":" + join(theta.images()) + "}";
}

std::string to_string(RangeSet const& y) { return join(y.members()); }

std::string to_string(ConvexPartition const& p) {
  std::ostringstream os;
  bool first = true;
  for (auto [lo, hi] : p.blocks()) {
    if (!first) {
      os << '|';
    }
    for (Point x = lo; x <= hi; ++x) {
      os << x << (x < hi ? "," : "");
    }
    first = false;
  }
  return os.str();
}

std::string to_string(PointSet const& points) { return join(points); }

std::ostream& operator<<(std::ostream& os, ChainMap const& f) {
  return os << to_string(f);
}
std::ostream& operator<<(std::ostream& os, PartialMap const& theta) {
  return os << to_string(theta);
}
std::ostream& operator<<(std::ostream& os, RangeSet const& y) {
  return os << to_string(y);
}
std::ostream& operator<<(std::ostream& os, ConvexPartition const& p) {
  return os << to_string(p);
}

std::size_t ChainMapHash::operator()(ChainMap const& f) const noexcept {
  return (*this)(f.images());
}

std::size_t ChainMapHash::operator()(
    std::span<Point const> images) const noexcept {
  // FNV-1a over the image bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : images) {
    h ^= static_cast<std::uint64_t>(p);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace ordrange
