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

// Acceptance run: one PASS/FAIL line per criterion. All checks are exact
// (integer or set equality); there are no floating-point tolerances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ordrange/completability.hpp"
#include "ordrange/enumeration.hpp"
#include "ordrange/generators.hpp"
#include "ordrange/green.hpp"
#include "ordrange/guards.hpp"
#include "ordrange/isomorphism.hpp"
#include "ordrange/regularity.hpp"
#include "test_util.hpp"

namespace {

using namespace ordrange;
using testutil::raw;
using testutil::raw_all;

// Bounds of each sweep.
constexpr std::size_t kCardinalityMaxN = 8;
constexpr std::size_t kRegularityMaxN = 6;
constexpr std::size_t kGreenMaxN = 5;
constexpr std::size_t kCompletabilityMaxN = 5;
constexpr std::size_t kRankExactMaxN = 5;
constexpr std::size_t kFactorMaxN = 5;
constexpr std::size_t kIsomorphismMaxN = 4;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t cases = 0;

  void expect(bool ok, std::string const& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<int> ints(RangeSet const& y) {
  return {y.points().begin(), y.points().end()};
}

std::vector<RangeSet> ranges_upto(std::size_t max_n) {
  std::vector<RangeSet> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto const& y : all_range_sets(n)) out.push_back(y);
  }
  return out;
}

bool proper(RangeSet const& y) { return y.size() > 1 && y.size() < y.degree(); }

Outcome cardinality() {
  Outcome o;
  for (auto const& y : ranges_upto(kCardinalityMaxN)) {
    int const n = static_cast<int>(y.degree());
    int const r = static_cast<int>(y.size());
    auto const list = list_on_y(y);
    o.expect(list.size() == oracle::pascal(n + r - 1, r - 1) &&
                 count_on_y(y.degree(), y.size()) == list.size(),
             to_string(y));
    if (n <= 6) {
      o.expect(raw_all(list) == oracle::order_preserving(n, ints(y)),
               "listing " + to_string(y));
    }
  }
  return o;
}

Outcome regularity() {
  Outcome o;
  for (auto const& y : ranges_upto(kRegularityMaxN)) {
    auto const elems = oracle::order_preserving(static_cast<int>(y.degree()), ints(y));
    std::vector<oracle::Map> reg;
    for (auto const& a : elems) {
      bool const characterized = is_regular(testutil::chain(a), y);
      o.expect(characterized == oracle::regular(a, elems), to_string(y));
      if (characterized) reg.push_back(a);
    }
    oracle::Set const reg_set(reg.begin(), reg.end());
    for (auto const& a : reg) {
      for (auto const& b : reg) {
        o.expect(reg_set.count(oracle::compose(a, b)) == 1,
                 "Reg not closed in " + to_string(y));
      }
    }
    o.expect(is_semigroup_regular(y) == (reg.size() == elems.size()),
             "trichotomy " + to_string(y));
  }
  return o;
}

Outcome green() {
  Outcome o;
  for (auto const& y : ranges_upto(kGreenMaxN)) {
    auto const s = enumerate_on_y(y);
    auto const want = oracle::green(raw_all(s.elements()));
    auto part = [&](GreenRelation rel) {
      return testutil::partition(green_characterized(rel, s, y), s);
    };
    std::string const label = to_string(y);
    o.expect(part(GreenRelation::kL) == want.l, "L " + label);
    o.expect(part(GreenRelation::kR) == want.r, "R " + label);
    o.expect(part(GreenRelation::kH) == want.h, "H " + label);
    o.expect(part(GreenRelation::kD) == want.d, "D " + label);
    o.expect(part(GreenRelation::kJ) == want.j, "J " + label);
    o.expect(want.h.size() == s.size(), "H not trivial " + label);
    o.expect(want.d == want.j, "D != J " + label);
  }
  return o;
}

Outcome completability() {
  Outcome o;
  for (auto const& y : ranges_upto(kCompletabilityMaxN)) {
    int const n = static_cast<int>(y.degree());
    for (auto const& theta : all_partial_maps_into(y)) {
      std::vector<int> dom(theta.domain().begin(), theta.domain().end());
      std::vector<int> img(theta.images().begin(), theta.images().end());
      bool const exists = !oracle::extensions(n, ints(y), dom, img).empty();
      bool const criterion = is_completable(theta, y);
      o.expect(criterion == exists && criterion, to_string(theta));
    }
  }
  return o;
}

Outcome rank_formula_example() {
  Outcome o;
  RangeSet const y(7, {1, 3, 4, 5});
  o.expect(rank_formula(y) == 22, "rank formula");
  struct Captive {
    std::vector<Point> y;
    PointSet sharp;
  };
  std::vector<Captive> const listed{{{1, 3, 4, 5}, {1, 4}}, {{2, 3, 4, 5}, {3, 4}},
                                    {{2, 4, 5, 7}, {7}},    {{1, 7}, {1, 7}},
                                    {{2, 4, 6}, {}},        {{2, 3, 5, 6}, {}}};
  for (auto const& c : listed) {
    RangeSet const z(7, c.y);
    o.expect(captive_set(z) == c.sharp, "captive " + to_string(z));
  }
  auto const gs = build_generating_set(y);
  o.expect(gs.members.size() == 22, "generating set size");
  auto const closure = oracle::closure(raw_all(gs.members));
  auto const all = oracle::order_preserving(7, ints(y));
  o.expect(closure.size() == 120 && all.size() == 120 &&
               closure == oracle::Set(all.begin(), all.end()),
           "closure");
  return o;
}

Outcome rank_exactness() {
  Outcome o;
  std::size_t searched = 0;
  for (auto const& y : ranges_upto(kRankExactMaxN)) {
    if (!proper(y)) continue;
    if (y.degree() == kRankExactMaxN &&
        count_on_y(y.degree(), y.size()) > subset_search_limit()) {
      continue;
    }
    ++searched;
    std::string const label = to_string(y);
    auto const search = rank_bruteforce(y);
    o.expect(BigInt(search.rank) == rank_formula(y), "rank " + label);
    auto const a = build_a(y);
    for (auto const& set : search.minimum_sets) {
      for (auto const& f : a) {
        o.expect(std::find(set.begin(), set.end(), f) != set.end(),
                 "missing A element " + label);
      }
      for (Point c : captive_set(y)) {
        std::size_t const j = y.index_of(c);
        bool meets = false;
        for (auto const& f : set) meets = meets || missing_index(f, y) == j;
        o.expect(meets, "misses C_j " + label);
      }
      auto const all = oracle::order_preserving(static_cast<int>(y.degree()), ints(y));
      o.expect(oracle::closure(raw_all(set)) == oracle::Set(all.begin(), all.end()),
               "minimum set does not generate " + label);
    }
  }
  o.detail = o.pass ? std::to_string(searched) + " ranges" : o.detail;
  return o;
}

Outcome factorization() {
  Outcome o;
  for (auto const& y : ranges_upto(kFactorMaxN)) {
    if (!proper(y)) continue;
    auto const gs = build_generating_set(y);
    std::size_t const r = y.size();
    for (auto const& alpha : list_on_y(y)) {
      std::size_t const k = rank(alpha);
      std::string const label = to_string(y) + " " + to_string(alpha);
      if (k == r - 1) {
        auto const f = factor_max1(alpha, y);
        o.expect(compose(f.left, f.right) == alpha && rank(f.left) == r &&
                     rank(f.right) == r - 1 && is_regular(f.right, y),
                 "max1 " + label);
        if (is_regular(alpha, y)) {
          auto const kk = missing_index(alpha, y);
          for (std::size_t i = 1; i <= r; ++i) {
            auto const dec = decompose_b(alpha, i, y);
            ChainMap acc = dec.base;
            for (auto const& letter : dec.word) acc = compose(acc, letter.map);
            o.expect(kk && acc == alpha && missing_index(dec.base, y) == i,
                     "decompose " + label);
          }
        }
      } else if (k < r - 1) {
        auto const f = factor_max2(alpha, y);
        o.expect(compose(f.left, f.right) == alpha && rank(f.left) == k + 1 &&
                     rank(f.right) == k + 1,
                 "max2 " + label);
      }
      if (k <= r - 1) {
        auto const word = express_in_generators(alpha, y, gs);
        bool ok = !word.empty();
        if (ok) {
          ChainMap acc = gs.members.at(word[0]);
          for (std::size_t t = 1; t < word.size(); ++t) {
            acc = compose(acc, gs.members.at(word[t]));
          }
          ok = acc == alpha;
        }
        o.expect(ok, "chain " + label);
      }
    }
  }
  return o;
}

Outcome isomorphism() {
  Outcome o;
  auto const ranges = ranges_upto(kIsomorphismMaxN);
  std::vector<SemigroupTable> tables;
  for (auto const& y : ranges) tables.push_back(enumerate_on_y(y));
  for (std::size_t a = 0; a < ranges.size(); ++a) {
    for (std::size_t b = 0; b < ranges.size(); ++b) {
      std::string const label = to_string(ranges[a]) + " " + to_string(ranges[b]);
      auto const phi = find_isomorphism(tables[a], tables[b]);
      o.expect(phi.has_value() == are_isomorphic(ranges[a], ranges[b]), label);
      if (phi) {
        auto const inv = check_basic_invariants(*phi, tables[a], tables[b]);
        o.expect(inv.all(), inv.first_failure() + " " + label);
      }
    }
  }
  return o;
}

Outcome worked_example() {
  Outcome o;
  PartialMap const theta(9, {2, 5, 6, 8}, {1, 3, 5, 7});
  o.expect(canonical_hat(theta) == ChainMap({1, 1, 1, 1, 3, 5, 5, 7, 7}), "hat");
  o.expect(canonical_tilde(theta) == ChainMap({1, 1, 3, 3, 3, 5, 7, 7, 7}), "tilde");
  return o;
}

Outcome no_captives() {
  Outcome o;
  for (auto const& members : {std::vector<Point>{2, 4, 6}, std::vector<Point>{2, 3, 5, 6}}) {
    RangeSet const y(7, members);
    std::string const label = to_string(y);
    auto const a = build_a(y);
    auto const all = oracle::order_preserving(7, ints(y));
    o.expect(oracle::closure(raw_all(a)) == oracle::Set(all.begin(), all.end()),
             "A does not generate " + label);
    // Every generating set contains the indecomposable elements, so rank = |A|
    // exactly when those are A and A generates.
    auto const s = enumerate_on_y(y);
    std::vector<ChainMap> indecomposable;
    for (auto id : indecomposable_elements(s)) indecomposable.push_back(s.element(id));
    std::sort(indecomposable.begin(), indecomposable.end());
    auto sorted_a = a;
    std::sort(sorted_a.begin(), sorted_a.end());
    o.expect(indecomposable == sorted_a, "indecomposables " + label);
    o.expect(a.size() == oracle::pascal(6, static_cast<int>(members.size()) - 1) &&
                 rank_formula(y) == a.size(),
             "rank " + label);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    char const* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "cardinality n<=8", cardinality},
      {2, "regularity n<=6", regularity},
      {3, "green relations n<=5", green},
      {4, "completability n<=5", completability},
      {5, "rank formula and n=7 generating set", rank_formula_example},
      {6, "rank exactness by exhaustive search", rank_exactness},
      {7, "factorization chains n<=5", factorization},
      {8, "isomorphism classification n<=4", isomorphism},
      {9, "canonical extensions worked example", worked_example},
      {10, "A generates when no element is captive", no_captives},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%zu checks, %.2fs)%s%s\n",
                o.pass ? "PASS" : "FAIL", c.id, c.name, o.cases, secs,
                o.detail.empty() ? "" : " ", o.detail.c_str());
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
