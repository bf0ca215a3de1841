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

#ifndef ORDRANGE_SRC_GENERATORS_INTERNAL_HPP_
#define ORDRANGE_SRC_GENERATORS_INTERNAL_HPP_

// Helpers shared by the generator and factorization sources.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordrange/chain.hpp"
#include "ordrange/generators.hpp"

namespace ordrange::detail {

using Interval = std::pair<Point, Point>;

// Builds a total map block by block, left to right.
class MapBuilder {
 public:
  explicit MapBuilder(std::size_t n) : n_(n) { images_.reserve(n); }

  void block(Interval b, Point value);
  // The minimum of b only.
  void head(Interval b, Point value);
  // b without its minimum.
  void tail(Interval b, Point value);

  ChainMap build(char const* what) const;

 private:
  std::size_t n_;
  std::vector<Point> images_;
};

class PartialBuilder {
 public:
  explicit PartialBuilder(std::size_t n) : n_(n) {}

  void add(Point a, Point b);
  PartialMap partial(char const* what) const;
  ChainMap hat(char const* what) const;
  ChainMap tilde(char const* what) const;

 private:
  std::size_t n_;
  std::vector<Point> domain_;
  std::vector<Point> images_;
};

// Left-to-right product of a nonempty list.
ChainMap product(std::span<ChainMap const> factors);

// PreconditionError unless ok.
void require(bool ok, std::string const& message);
// InternalError unless ok.
void ensure(bool ok, std::string const& message);

Factor a_factor(ChainMap f);
Factor epsilon_factor(GeneratorKind kind, Extension ext, std::size_t index,
                      ChainMap f);

// min{k : k not in Y}, n + 1 when Y is everything.
std::size_t first_gap(RangeSet const& y);
// j with {n-r+j..n} in Y and n-r+j-1 not in Y.
std::size_t top_run(RangeSet const& y);

}  // namespace ordrange::detail

#endif  // ORDRANGE_SRC_GENERATORS_INTERNAL_HPP_
