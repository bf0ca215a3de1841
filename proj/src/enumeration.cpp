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

#include "ordrange/enumeration.hpp"

#include <algorithm>
#include <string>

#include "ordrange/errors.hpp"
#include "ordrange/guards.hpp"

namespace ordrange {

std::vector<ChainMap> list_on_y(RangeSet const& y) {
  std::size_t const n = y.degree();
  if (n > kMaxEnumerationDegree) {
    throw GuardError("enumeration: n = " + std::to_string(n) +
                     " exceeds the cap of " +
                     std::to_string(kMaxEnumerationDegree));
  }
  auto const members = y.members();
  std::size_t const r = members.size();
  std::vector<ChainMap> result;
  // Odometer over weakly increasing index sequences into Y.
  std::vector<std::size_t> pos(n, 0);
  std::vector<Point> images(n);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) {
      images[x] = members[pos[x]];
    }
    result.emplace_back(images);
    std::size_t x = n;
    while (x > 0 && pos[x - 1] == r - 1) {
      --x;
    }
    if (x == 0) {
      break;
    }
    ++pos[x - 1];
    std::fill(pos.begin() + static_cast<std::ptrdiff_t>(x), pos.end(),
              pos[x - 1]);
  }
  return result;
}

SemigroupTable enumerate_on_y(RangeSet const& y) {
  return SemigroupTable(list_on_y(y),
                        SemigroupTable::Validation::kDistinctOnly);
}

BigInt count_on_y(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) {
    throw PreconditionError("count: need 1 <= r <= n, got n = " +
                            std::to_string(n) + ", r = " + std::to_string(r));
  }
  return binomial(n + r - 1, r - 1);
}

std::vector<ChainMap> enumerate_by_image_size(RangeSet const& y,
                                              std::size_t k) {
  if (k < 1 || k > y.size()) {
    throw PreconditionError("enumerate by image size: need 1 <= k <= |Y|");
  }
  std::vector<ChainMap> result;
  for (auto& f : list_on_y(y)) {
    if (rank(f) == k) {
      result.push_back(std::move(f));
    }
  }
  return result;
}

std::vector<RangeSet> all_range_sets(std::size_t n) {
  std::vector<RangeSet> result;
  if (n == 0 || n > 30) {
    throw PreconditionError("all range sets: need 1 <= n <= 30");
  }
  std::vector<std::vector<Point>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Point> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        members.push_back(static_cast<Point>(i + 1));
      }
    }
    subsets.push_back(std::move(members));
  }
  std::sort(subsets.begin(), subsets.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  result.reserve(subsets.size());
  for (auto& s : subsets) {
    result.emplace_back(n, std::move(s));
  }
  return result;
}

}  // namespace ordrange
