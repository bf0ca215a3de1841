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

#include "ordrange/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ordrange/completability.hpp"
#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/generators.hpp"
#include "ordrange/green.hpp"
#include "ordrange/guards.hpp"
#include "ordrange/isomorphism.hpp"
#include "ordrange/kernels.hpp"
#include "ordrange/regularity.hpp"

namespace ordrange {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](CheckResult const& c) { return c.failures == 0; });
}

namespace {

// The exhaustive extension search runs over O_n(Y) once per partial map.
constexpr std::size_t kMaxCompletabilityDegree = 6;

void require_full_table(SemigroupTable const& s) {
  if (!s.has_full_table()) {
    throw GuardError("table oracle needs the full multiplication table");
  }
}

class Recorder {
 public:
  CheckResult& check(std::string const& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      CheckResult fresh;
      fresh.name = name;
      checks_.push_back(std::move(fresh));
    }
    return checks_[it->second];
  }

  // Runs body as one case; false or an exception counts as a failure,
  // GuardError as skipped.
  void run(std::string const& name, std::string const& label,
           std::function<bool()> const& body) {
    CheckResult& c = check(name);
    ++c.cases;
    try {
      if (!body()) {
        fail(c, label);
      }
    } catch (GuardError const&) {
      ++c.skipped;
    } catch (std::exception const& e) {
      fail(c, label + ": " + e.what());
    }
  }

  VerifyReport take() { return VerifyReport{std::move(checks_)}; }

 private:
  static void fail(CheckResult& c, std::string const& what) {
    if (c.failures++ == 0) {
      c.first_failure = what;
    }
  }

  std::map<std::string, std::size_t> index_;
  std::vector<CheckResult> checks_;
};

}  // namespace

VerifyReport verify_ranges(std::vector<RangeSet> const& ranges) {
  Recorder rec;
  std::vector<SemigroupTable> tables;
  tables.reserve(ranges.size());
  for (auto const& y : ranges) {
    tables.push_back(enumerate_on_y(y));
  }

  for (std::size_t idx = 0; idx < ranges.size(); ++idx) {
    RangeSet const& y = ranges[idx];
    SemigroupTable const& s = tables[idx];
    std::size_t const n = y.degree();
    std::size_t const r = y.size();
    std::string const label = to_string(y);

    rec.run("cardinality", label, [&] {
      return BigInt(s.size()) == count_on_y(n, r);
    });

    rec.run("kernels_serial_parallel", label, [&] {
      require_full_table(s);
      return kernels::principal_ideals_serial(s) ==
                 kernels::principal_ideals_parallel(s) &&
             kernels::regular_flags_serial(s) ==
                 kernels::regular_flags_parallel(s);
    });

    rec.run("regularity", label, [&] {
      require_full_table(s);
      auto const flags = kernels::regular_flags_parallel(s);
      bool all_regular = true;
      for (std::size_t a = 0; a < s.size(); ++a) {
        bool const characterized =
            is_regular(s.element(static_cast<ElementId>(a)), y);
        if (characterized != (flags[a] != 0)) {
          return false;
        }
        all_regular = all_regular && characterized;
      }
      return all_regular == is_semigroup_regular(y);
    });

    rec.run("green", label, [&] {
      require_full_table(s);
      for (auto rel : {GreenRelation::kL, GreenRelation::kR, GreenRelation::kH,
                       GreenRelation::kD, GreenRelation::kJ}) {
        if (green_characterized(rel, s, y).classes !=
            green_oracle(rel, s).classes) {
          return false;
        }
      }
      return true;
    });

    rec.run("completability", label, [&] {
      if (n > kMaxCompletabilityDegree) {
        throw GuardError("completability sweep limited to small chains");
      }
      for (auto const& theta : all_partial_maps_into(y)) {
        bool const criterion = is_completable(theta, y);
        bool const exists = !complete_extensions(theta, y).empty();
        if (criterion != exists ||
            construct_extension(theta, y).has_value() != exists) {
          return false;
        }
      }
      return true;
    });

    if (r > 1 && r < n) {
      rec.run("generating_set", label, [&] {
        auto const gs = build_generating_set(y);
        if (BigInt(gs.members.size()) != rank_formula(y) ||
            !generates(gs.members, s)) {
          return false;
        }
        for (auto const& alpha : s.elements()) {
          (void)express_in_generators(alpha, y, gs);
        }
        return true;
      });
    }

    rec.run("rank_bruteforce", label, [&] {
      return BigInt(rank_bruteforce(y).rank) == rank_formula(y);
    });
  }

  for (std::size_t a = 0; a < ranges.size(); ++a) {
    for (std::size_t b = 0; b < ranges.size(); ++b) {
      std::string const label =
          to_string(ranges[a]) + " vs " + to_string(ranges[b]);
      rec.run("isomorphism", label, [&] {
        auto const search = search_isomorphisms(tables[a], tables[b]);
        if (search.mapping.has_value() !=
            are_isomorphic(ranges[a], ranges[b])) {
          return false;
        }
        return !search.mapping ||
               check_basic_invariants(*search.mapping, tables[a], tables[b])
                   .all();
      });
    }
  }
  return rec.take();
}

}  // namespace ordrange
