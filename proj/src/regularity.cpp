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

#include "ordrange/regularity.hpp"

#include <algorithm>
#include <optional>

#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"

namespace ordrange {

namespace {

void require_in_range(ChainMap const& alpha, RangeSet const& y) {
  if (alpha.degree() != y.degree()) {
    throw DimensionError("regularity: map and range set live on different "
                         "chains");
  }
  if (!image_within(alpha, y)) {
    throw RangeError("regularity: image of " + to_string(alpha) +
                     " is not contained in " + to_string(y));
  }
}

}  // namespace

bool is_regular(ChainMap const& alpha, RangeSet const& y) {
  require_in_range(alpha, y);
  return image(alpha).points() == image_of_set(alpha, y.members());
}

bool is_regular_oracle(ChainMap const& alpha, SemigroupTable const& s) {
  ElementId const a = s.id_of(alpha);
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (s.product(s.product(a, static_cast<ElementId>(b)), a) == a) {
      return true;
    }
  }
  return false;
}

std::vector<ChainMap> regular_part(RangeSet const& y) {
  std::vector<ChainMap> result;
  for (auto& alpha : list_on_y(y)) {
    if (is_regular(alpha, y)) {
      result.push_back(std::move(alpha));
    }
  }
  return result;
}

bool is_semigroup_regular(RangeSet const& y) {
  std::size_t const n = y.degree();
  if (y.size() == n || y.size() == 1) {
    return true;
  }
  return y.size() == 2 && y.nth(1) == 1 &&
         y.nth(2) == static_cast<Point>(n);
}

RegularityConditions chain_regularity_conditions(ChainMap const& alpha) {
  auto const n = static_cast<Point>(alpha.degree());
  PointSet const im = image(alpha).points();
  auto in_image = [&](Point x) {
    return std::binary_search(im.begin(), im.end(), x);
  };
  auto is_upper_bound = [&](Point x) {
    return std::all_of(im.begin(), im.end(), [x](Point a) { return a <= x; });
  };
  auto is_lower_bound = [&](Point x) {
    return std::all_of(im.begin(), im.end(), [x](Point a) { return x <= a; });
  };
  auto maximum = [](std::vector<Point> const& xs) -> std::optional<Point> {
    if (xs.empty()) {
      return std::nullopt;
    }
    return *std::max_element(xs.begin(), xs.end());
  };
  auto minimum = [](std::vector<Point> const& xs) -> std::optional<Point> {
    if (xs.empty()) {
      return std::nullopt;
    }
    return *std::min_element(xs.begin(), xs.end());
  };

  bool has_upper_bound = false;
  bool has_lower_bound = false;
  for (Point x = 1; x <= n; ++x) {
    has_upper_bound = has_upper_bound || is_upper_bound(x);
    has_lower_bound = has_lower_bound || is_lower_bound(x);
  }

  RegularityConditions result;
  result.upper = !has_upper_bound || maximum(im).has_value();
  result.lower = !has_lower_bound || minimum(im).has_value();
  result.gaps = true;
  for (Point x = 1; x <= n; ++x) {
    if (in_image(x) || is_upper_bound(x) || is_lower_bound(x)) {
      continue;
    }
    std::vector<Point> below;
    std::vector<Point> above;
    for (Point a : im) {
      if (a < x) {
        below.push_back(a);
      } else if (x < a) {
        above.push_back(a);
      }
    }
    if (!maximum(below) && !minimum(above)) {
      result.gaps = false;
    }
  }
  return result;
}

}  // namespace ordrange
