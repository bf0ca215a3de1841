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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/generators.hpp"
#include "ordrange/guards.hpp"

namespace ordrange {

namespace {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Subsemigroup generated by gens, as a membership set over ids. Products of
// length one are the generators; longer ones arise by right multiplication.
Bitset closure_ids(SemigroupTable const& s, std::vector<ElementId> const& gens) {
  Bitset in(s.size());
  std::vector<ElementId> queue;
  for (ElementId g : gens) {
    if (!in.test(g)) {
      in.set(g);
      queue.push_back(g);
    }
  }
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (ElementId g : gens) {
      ElementId const p = s.product(queue[next], g);
      if (!in.test(p)) {
        in.set(p);
        queue.push_back(p);
      }
    }
  }
  return in;
}

}  // namespace

bool generates(std::span<ChainMap const> gens, SemigroupTable const& s) {
  if (gens.empty()) {
    return false;
  }
  std::vector<ElementId> ids;
  ids.reserve(gens.size());
  for (auto const& g : gens) {
    ids.push_back(s.id_of(g));
  }
  return closure_ids(s, ids).all();
}

std::vector<ElementId> indecomposable_elements(SemigroupTable const& s) {
  std::vector<ElementId> result;
  std::vector<ElementId> rest;
  for (std::size_t a = 0; a < s.size(); ++a) {
    rest.clear();
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (b != a) {
        rest.push_back(static_cast<ElementId>(b));
      }
    }
    if (rest.empty() || !closure_ids(s, rest).test(a)) {
      result.push_back(static_cast<ElementId>(a));
    }
  }
  return result;
}

RankSearch rank_bruteforce(RangeSet const& y) {
  SemigroupTable const s = enumerate_on_y(y);
  std::size_t const limit = subset_search_limit();
  if (s.size() > limit) {
    throw GuardError("rank search: |O_n(Y)| = " + std::to_string(s.size()) +
                     " exceeds " + std::to_string(limit) +
                     " (raise ORDRANGE_MAX_ELEMENTS to allow)");
  }
  std::size_t const r = y.size();
  std::optional<ElementId> free_identity;
  if (r == y.degree() && r > 1) {
    free_identity = s.identity();
  }
  std::vector<ElementId> top;
  std::vector<ElementId> below;
  for (std::size_t a = 0; a < s.size(); ++a) {
    std::size_t const k = rank(s.element(static_cast<ElementId>(a)));
    if (k == r) {
      if (free_identity) {
        continue;
      }
      top.push_back(static_cast<ElementId>(a));
    } else if (k + 1 == r) {
      below.push_back(static_cast<ElementId>(a));
    }
  }

  RankSearch result;
  result.monoid = free_identity.has_value();
  auto spans_all = [&](std::vector<ElementId> const& gens) {
    if (gens.empty()) {
      return false;
    }
    Bitset in = closure_ids(s, gens);
    if (free_identity) {
      in.set(*free_identity);
    }
    return in.all();
  };
  std::vector<ElementId> gens;
  for (std::size_t size = 0; size <= below.size(); ++size) {
    // Lexicographic walk over size-subsets of `below`.
    std::vector<std::size_t> pick(size);
    for (std::size_t t = 0; t < size; ++t) {
      pick[t] = t;
    }
    while (true) {
      gens = top;
      for (std::size_t p : pick) {
        gens.push_back(below[p]);
      }
      ++result.subsets_tested;
      if (spans_all(gens)) {
        std::vector<ChainMap> set;
        for (ElementId g : gens) {
          set.push_back(s.element(g));
        }
        std::sort(set.begin(), set.end());
        result.minimum_sets.push_back(std::move(set));
      }
      std::size_t t = size;
      while (t > 0 && pick[t - 1] == below.size() - size + t - 1) {
        --t;
      }
      if (t == 0) {
        break;
      }
      ++pick[t - 1];
      for (std::size_t u = t; u < size; ++u) {
        pick[u] = pick[u - 1] + 1;
      }
    }
    if (!result.minimum_sets.empty()) {
      result.rank = top.size() + size;
      result.semigroup_rank = result.rank + (result.monoid ? 1 : 0);
      return result;
    }
  }
  throw InternalError("rank search: A with all rank |Y| - 1 maps does not "
                      "generate " + to_string(y));
}

}  // namespace ordrange
