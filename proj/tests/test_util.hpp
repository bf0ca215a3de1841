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

#ifndef ORDRANGE_TESTS_TEST_UTIL_HPP_
#define ORDRANGE_TESTS_TEST_UTIL_HPP_

#include <set>
#include <vector>

#include "oracles.hpp"
#include "ordrange/chain.hpp"
#include "ordrange/green.hpp"
#include "ordrange/semigroup_table.hpp"

namespace testutil {

inline oracle::Map raw(ordrange::ChainMap const& f) {
  return {f.images().begin(), f.images().end()};
}

inline ordrange::ChainMap chain(oracle::Map const& f) {
  return ordrange::ChainMap(std::vector<ordrange::Point>(f.begin(), f.end()));
}

inline std::vector<oracle::Map> raw_all(auto const& maps) {
  std::vector<oracle::Map> out;
  for (auto const& f : maps) out.push_back(raw(f));
  return out;
}

inline ordrange::RangeSet range(int n, std::vector<int> const& y) {
  return ordrange::RangeSet(static_cast<std::size_t>(n),
                            std::vector<ordrange::Point>(y.begin(), y.end()));
}

inline oracle::Partition partition(ordrange::EggBox const& box,
                                   ordrange::SemigroupTable const& s) {
  oracle::Partition out;
  for (auto const& cls : box.classes) {
    std::set<oracle::Map> members;
    for (auto id : cls) members.insert(raw(s.element(id)));
    out.insert(members);
  }
  return out;
}

}  // namespace testutil

#endif  // ORDRANGE_TESTS_TEST_UTIL_HPP_
