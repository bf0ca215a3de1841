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

#ifndef ORDRANGE_CLI_HPP_
#define ORDRANGE_CLI_HPP_

// Command-line front end. Subcommands: card, enumerate, regular, green,
// complete, rank, gens, iso, verify. Reports go to `out` as JSON (default),
// CSV or an aligned table; diagnostics go to `err`.
//
// Exit status: 0 success, 1 failed verification or internal error, 2 usage
// error (bad flags, malformed Y, inputs over a guard).

#include <iosfwd>
#include <string>
#include <vector>

namespace ordrange::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace ordrange::cli

#endif  // ORDRANGE_CLI_HPP_
