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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"
#include "test_util.hpp"

namespace ordrange {
namespace {

using testutil::raw_all;
using testutil::range;

TEST(ListOnY, SmallExamples) {
  EXPECT_EQ(raw_all(list_on_y(range(3, {1, 3}))),
            (std::vector<oracle::Map>{{1, 1, 1}, {1, 1, 3}, {1, 3, 3}, {3, 3, 3}}));
  EXPECT_EQ(list_on_y(RangeSet::full(3)).size(), 10u);
  EXPECT_EQ(raw_all(list_on_y(range(2, {2}))),
            (std::vector<oracle::Map>{{2, 2}}));
}

TEST(ListOnY, MatchesFilteredFunctionSpace) {
  for (int n = 1; n <= 6; ++n) {
    for (auto const& y : oracle::subsets(n)) {
      EXPECT_EQ(raw_all(list_on_y(range(n, y))), oracle::order_preserving(n, y));
    }
  }
}

TEST(CountOnY, Formula) {
  EXPECT_EQ(count_on_y(3, 2), 4);
  EXPECT_EQ(count_on_y(3, 3), 10);
  EXPECT_EQ(count_on_y(17, 1), 1);
  for (int n = 1; n <= 12; ++n) {
    for (int r = 1; r <= n; ++r) {
      EXPECT_EQ(to_u64(count_on_y(n, r)), oracle::pascal(n + r - 1, r - 1));
    }
  }
}

TEST(EnumerateByImageSize, Examples) {
  EXPECT_EQ(raw_all(enumerate_by_image_size(range(3, {1, 3}), 2)),
            (std::vector<oracle::Map>{{1, 1, 3}, {1, 3, 3}}));
  EXPECT_EQ(raw_all(enumerate_by_image_size(range(3, {1, 3}), 1)),
            (std::vector<oracle::Map>{{1, 1, 1}, {3, 3, 3}}));
  EXPECT_EQ(enumerate_by_image_size(range(4, {1, 2, 3}), 3).size(), 3u);
}

TEST(EnumerateOnY, TableIdsFollowListOrder) {
  RangeSet const y = range(4, {1, 3, 4});
  auto const s = enumerate_on_y(y);
  auto const list = list_on_y(y);
  ASSERT_EQ(s.size(), list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    EXPECT_EQ(s.element(static_cast<ElementId>(i)), list[i]);
  }
}

TEST(AllRangeSets, SizeThenLex) {
  auto const sets = all_range_sets(3);
  ASSERT_EQ(sets.size(), 7u);
  EXPECT_EQ(sets.front(), range(3, {1}));
  EXPECT_EQ(sets[3], range(3, {1, 2}));
  EXPECT_EQ(sets.back(), RangeSet::full(3));
}

TEST(Guards, EnumerationDegreeLimit) {
  EXPECT_THROW(list_on_y(RangeSet::full(13)), GuardError);
}

}  // namespace
}  // namespace ordrange
