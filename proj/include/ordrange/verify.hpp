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

#ifndef ORDRANGE_VERIFY_HPP_
#define ORDRANGE_VERIFY_HPP_

// Cross-checks of every characterization against its brute-force oracle,
// run over a chosen set of ranges. Checks whose oracle exceeds a guard are
// counted as skipped rather than failed.

#include <cstddef>
#include <string>
#include <vector>

#include "ordrange/chain.hpp"

namespace ordrange {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  // Description of the first failure, empty if none.
  std::string first_failure;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
};

// Runs all checks for each Y in ranges (all on the same chain).
VerifyReport verify_ranges(std::vector<RangeSet> const& ranges);

}  // namespace ordrange

#endif  // ORDRANGE_VERIFY_HPP_
