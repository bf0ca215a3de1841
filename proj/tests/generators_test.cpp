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

#include <algorithm>

#include "oracles.hpp"
#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/generators.hpp"
#include "ordrange/regularity.hpp"
#include "test_util.hpp"

namespace ordrange {
namespace {

using testutil::range;

ChainMap m(std::vector<Point> v) { return ChainMap(std::move(v)); }

ChainMap product(std::vector<Factor> const& word) {
  ChainMap acc = word.at(0).map;
  for (std::size_t i = 1; i < word.size(); ++i) acc = compose(acc, word[i].map);
  return acc;
}

ChainMap product(std::vector<ChainMap> const& word) {
  ChainMap acc = word.at(0);
  for (std::size_t i = 1; i < word.size(); ++i) acc = compose(acc, word[i]);
  return acc;
}

bool in_a(ChainMap const& f, RangeSet const& y) { return image(f) == y; }

// Every Y on chains 3..max_n with 1 < |Y| < n.
std::vector<RangeSet> proper_ranges(std::size_t max_n) {
  std::vector<RangeSet> out;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (auto const& y : all_range_sets(n)) {
      if (y.size() > 1 && y.size() < n) out.push_back(y);
    }
  }
  return out;
}

TEST(CaptiveSet, ChainOfSeven) {
  EXPECT_EQ(captive_set(range(7, {1, 3, 4, 5})), (PointSet{1, 4}));
  EXPECT_EQ(captive_set(range(7, {2, 3, 4, 5})), (PointSet{3, 4}));
  EXPECT_EQ(captive_set(range(7, {2, 4, 5, 7})), (PointSet{7}));
  EXPECT_EQ(captive_set(range(7, {1, 7})), (PointSet{1, 7}));
  EXPECT_EQ(captive_set(range(7, {2, 4, 6})), PointSet{});
  EXPECT_EQ(captive_set(range(7, {2, 3, 5, 6})), PointSet{});
}

TEST(RankFormula, Examples) {
  EXPECT_EQ(rank_formula(range(7, {1, 3, 4, 5})), 22);
  EXPECT_EQ(rank_formula(range(3, {1, 3})), 4);
  EXPECT_EQ(rank_formula(range(4, {1, 2})), 4);
  EXPECT_EQ(rank_formula(range(4, {2, 3})), 3);
  EXPECT_EQ(rank_formula(range(5, {4})), 1);
  EXPECT_EQ(rank_formula(RangeSet::full(5)), 5);
}

TEST(BuildA, Examples) {
  auto a = build_a(range(3, {1, 3}));
  std::sort(a.begin(), a.end());
  EXPECT_EQ(a, (std::vector<ChainMap>{m({1, 1, 3}), m({1, 3, 3})}));
  EXPECT_EQ(build_a(RangeSet::full(3)),
            (std::vector<ChainMap>{ChainMap::identity(3)}));
  EXPECT_EQ(build_a(range(4, {1, 3})).size(), 3u);
}

TEST(BuildA, ImageYAndDistinctKernels) {
  for (auto const& y : proper_ranges(7)) {
    auto const a = build_a(y);
    EXPECT_EQ(BigInt(a.size()), binomial(y.degree() - 1, y.size() - 1));
    std::vector<ConvexPartition> kernels;
    for (auto const& f : a) {
      EXPECT_TRUE(in_a(f, y));
      kernels.push_back(kernel(f));
    }
    std::sort(kernels.begin(), kernels.end());
    EXPECT_EQ(std::adjacent_find(kernels.begin(), kernels.end()), kernels.end());
  }
}

TEST(Epsilon, Examples) {
  RangeSet const y = range(4, {1, 2, 3});
  EXPECT_EQ(build_epsilon(2, Extension::kHat, y), m({1, 1, 3, 3}));
  EXPECT_EQ(build_epsilon(2, Extension::kTilde, y), m({1, 3, 3, 3}));
  EXPECT_THROW(build_epsilon(4, Extension::kHat, y), PreconditionError);
  EXPECT_THROW(build_epsilon_1i(2, Extension::kTilde, y), PreconditionError);
  EXPECT_THROW(build_epsilon_rj(3, Extension::kHat, y), PreconditionError);
}

TEST(Epsilon, MembershipInB) {
  for (auto const& y : proper_ranges(6)) {
    std::size_t const r = y.size();
    for (auto ext : {Extension::kHat, Extension::kTilde}) {
      for (std::size_t i = 1; i <= r; ++i) {
        auto const e = build_epsilon(i, ext, y);
        EXPECT_EQ(missing_index(e, y), i);
        EXPECT_TRUE(is_regular(e, y));
      }
      for (std::size_t i = 3; i <= r; ++i) {
        EXPECT_EQ(missing_index(build_epsilon_1i(i, ext, y), y), 1u);
      }
      for (std::size_t j = 2; j + 1 <= r; ++j) {
        EXPECT_EQ(missing_index(build_epsilon_rj(j, ext, y), y), r);
      }
    }
  }
}

TEST(FactorMax, Examples) {
  auto const f1 = factor_max1(m({1, 1, 3, 3}), range(4, {1, 2, 3}));
  EXPECT_EQ(compose(f1.left, f1.right), m({1, 1, 3, 3}));
  EXPECT_EQ(rank(f1.left), 3u);
  auto const f0 = factor_max1(m({1, 1, 1}), range(3, {1, 3}));
  EXPECT_EQ(compose(f0.left, f0.right), m({1, 1, 1}));
  auto const f2 = factor_max2(m({1, 1, 1, 1}), range(4, {1, 2, 3}));
  EXPECT_EQ(compose(f2.left, f2.right), m({1, 1, 1, 1}));
  EXPECT_EQ(rank(f2.left), 2u);
  EXPECT_EQ(rank(f2.right), 2u);
  auto const f3 = factor_max2(constant(5, 4), range(5, {1, 2, 4}));
  EXPECT_EQ(compose(f3.left, f3.right), constant(5, 4));
  EXPECT_THROW(factor_max2(m({1, 1, 3, 3}), range(4, {1, 2, 3})),
               PreconditionError);
}

TEST(FactorMax, ExhaustiveSweep) {
  for (auto const& y : proper_ranges(5)) {
    std::size_t const r = y.size();
    for (auto const& alpha : list_on_y(y)) {
      std::size_t const k = rank(alpha);
      if (k == r - 1) {
        auto const f = factor_max1(alpha, y);
        EXPECT_EQ(compose(f.left, f.right), alpha);
        EXPECT_EQ(rank(f.left), r);
        EXPECT_EQ(rank(f.right), r - 1);
        EXPECT_TRUE(is_regular(f.right, y));
        EXPECT_TRUE(image_within(f.left, y) && image_within(f.right, y));
      } else if (k < r - 1) {
        auto const f = factor_max2(alpha, y);
        EXPECT_EQ(compose(f.left, f.right), alpha);
        EXPECT_EQ(rank(f.left), k + 1);
        EXPECT_EQ(rank(f.right), k + 1);
        EXPECT_TRUE(image_within(f.left, y) && image_within(f.right, y));
      }
    }
  }
}

TEST(DecomposeB, ExhaustiveSweep) {
  for (auto const& y : proper_ranges(5)) {
    std::size_t const r = y.size();
    for (auto const& alpha : list_on_y(y)) {
      auto const k = missing_index(alpha, y);
      if (!k || !is_regular(alpha, y)) continue;
      for (std::size_t i = 1; i <= r; ++i) {
        auto const dec = decompose_b(alpha, i, y);
        EXPECT_EQ(missing_index(dec.base, y), i);
        EXPECT_TRUE(is_regular(dec.base, y));
        ChainMap acc = dec.base;
        for (auto const& f : dec.word) acc = compose(acc, f.map);
        EXPECT_EQ(acc, alpha);
        EXPECT_EQ(dec.word.size(), *k > i ? *k - i : i - *k);
        if (i == *k) EXPECT_EQ(dec.base, alpha);
      }
    }
  }
}

TEST(DecomposeB, SmallExample) {
  RangeSet const y = range(4, {1, 2, 3});
  ChainMap const alpha = m({2, 2, 3, 3});
  ASSERT_EQ(missing_index(alpha, y), 1u);
  auto const dec = decompose_b(alpha, 2, y);
  ASSERT_EQ(dec.word.size(), 1u);
  EXPECT_EQ(dec.word[0].map, build_epsilon(1, Extension::kTilde, y));
  EXPECT_EQ(compose(dec.base, dec.word[0].map), alpha);
}

TEST(Witnesses, WitnessesFactorThroughA) {
  for (auto const& y : proper_ranges(6)) {
    std::size_t const n = y.degree();
    std::size_t const r = y.size();
    std::size_t i = 1;
    while (i <= r && y.nth(i) == static_cast<Point>(i)) ++i;
    for (auto const& alpha : list_on_y(y)) {
      auto const k = missing_index(alpha, y);
      if (!k || !is_regular(alpha, y)) continue;
      if (*k == 1 && y.nth(1) > 1) {
        auto const w = b1_from_a(alpha, y);
        EXPECT_EQ(product(w), alpha);
        for (auto const& f : w) EXPECT_TRUE(in_a(f.map, y));
      }
      if (*k == r && y.nth(r) < static_cast<Point>(n)) {
        auto const w = br_from_a(alpha, y);
        EXPECT_EQ(product(w), alpha);
        for (auto const& f : w) EXPECT_TRUE(in_a(f.map, y));
      }
      if (i >= 2 && i <= r && *k == i) {
        EXPECT_EQ(product(bi_from_a_and_epsilon(alpha, y)), alpha);
      }
    }
    if (i >= 3 && i <= r) {
      ChainMap const t = tilde_pair_witness(i, y);
      ChainMap const e1i = build_epsilon_1i(i, Extension::kTilde, y);
      EXPECT_TRUE(in_a(t, y));
      EXPECT_EQ(compose(t, e1i), build_epsilon(1, Extension::kTilde, y));
      EXPECT_EQ(compose(e1i, t), build_epsilon(i - 1, Extension::kTilde, y));
    }
  }
}

TEST(Witnesses, HatEpsilonInClosureOfA) {
  std::size_t checked = 0;
  for (auto const& y : proper_ranges(6)) {
    std::size_t const n = y.degree();
    std::size_t const r = y.size();
    auto const closure_a = oracle::closure(testutil::raw_all(build_a(y)));
    for (std::size_t k = 2; k + 1 <= r; ++k) {
      bool const gap_above = y.nth(k) + 1 < y.nth(k + 1);
      bool const gap_below = y.nth(k - 1) < y.nth(k) - 1 &&
                             y.nth(k) < static_cast<Point>(n - r + k);
      if (!gap_above && !gap_below) continue;
      auto const word = epsilon_hat_from_a(k, y);
      ChainMap const eps = build_epsilon(k, Extension::kHat, y);
      EXPECT_EQ(product(word), eps);
      for (auto const& f : word) EXPECT_TRUE(in_a(f, y));
      EXPECT_TRUE(closure_a.count(testutil::raw(eps)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(GeneratingSet, Examples) {
  auto const small = build_generating_set(range(3, {1, 3}));
  EXPECT_EQ(small.members.size(), 4u);
  EXPECT_TRUE(generates(small.members, enumerate_on_y(range(3, {1, 3}))));

  RangeSet const y = range(4, {1, 2, 3});
  auto const gs = build_generating_set(y);
  std::vector<ChainMap> want = build_a(y);
  want.push_back(build_epsilon(1, Extension::kTilde, y));
  want.push_back(build_epsilon(2, Extension::kTilde, y));
  auto got = gs.members;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(gs.first_gap, 4u);
  EXPECT_TRUE(gs.find(GeneratorKind::kEpsilon, Extension::kTilde, 2).has_value());

  EXPECT_THROW(build_generating_set(RangeSet::full(4)), PreconditionError);
}

TEST(GeneratingSet, ProvenanceTags) {
  auto const gs = build_generating_set(range(7, {1, 3, 4, 5}));
  ASSERT_EQ(gs.members.size(), 22u);
  std::size_t a_count = 0;
  for (std::size_t g = 0; g < gs.members.size(); ++g) {
    if (gs.provenance[g].kind == GeneratorKind::kA) {
      ++a_count;
      EXPECT_EQ(gs.provenance[g].tag(), "A");
      EXPECT_EQ(gs.provenance[g].kernel, kernel(gs.members[g]));
    }
  }
  EXPECT_EQ(a_count, 20u);
  EXPECT_EQ(gs.case_label, "i=2,j=5");
}

TEST(GeneratingSet, SweepGeneratesWithFormulaSize) {
  for (auto const& y : proper_ranges(6)) {
    auto const gs = build_generating_set(y);
    EXPECT_EQ(BigInt(gs.members.size()), rank_formula(y)) << to_string(y);
    auto const closure = oracle::closure(testutil::raw_all(gs.members));
    auto const all = oracle::order_preserving(
        static_cast<int>(y.degree()),
        std::vector<int>(y.points().begin(), y.points().end()));
    EXPECT_EQ(closure, oracle::Set(all.begin(), all.end())) << to_string(y);
  }
}

TEST(Generates, AloneAndErrors) {
  auto const s = enumerate_on_y(range(3, {1, 3}));
  EXPECT_FALSE(generates(build_a(range(3, {1, 3})), s));
  auto const t = enumerate_on_y(range(7, {2, 4, 6}));
  EXPECT_TRUE(generates(build_a(range(7, {2, 4, 6})), t));
  std::vector<ChainMap> outside{ChainMap::identity(3)};
  EXPECT_THROW(generates(outside, s), PreconditionError);
}

TEST(RankBruteforce, Examples) {
  EXPECT_EQ(rank_bruteforce(range(3, {1, 3})).rank, 4u);
  EXPECT_EQ(rank_bruteforce(range(4, {1, 2})).rank, 4u);
  EXPECT_EQ(rank_bruteforce(range(4, {2, 3})).rank, 3u);
  auto const full = rank_bruteforce(RangeSet::full(3));
  EXPECT_TRUE(full.monoid);
  EXPECT_EQ(full.rank, 3u);
  EXPECT_EQ(full.semigroup_rank, 4u);
  EXPECT_THROW(rank_bruteforce(RangeSet::full(5)), GuardError);
}

TEST(RankBruteforce, MatchesUnrestrictedSearch) {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& yv : oracle::subsets(n)) {
      RangeSet const y = range(n, yv);
      auto const elems = oracle::order_preserving(n, yv);
      // The unrestricted search is exponential; O_4 itself is out of reach.
      if (elems.size() > 20) continue;
      auto const got = rank_bruteforce(y);
      EXPECT_EQ(got.semigroup_rank, oracle::rank(elems))
          << to_string(y);
      EXPECT_EQ(BigInt(got.rank), rank_formula(y)) << to_string(y);
    }
  }
}

TEST(Indecomposable, EqualsAWhenNoCaptives) {
  RangeSet const y = range(6, {2, 4});
  auto const s = enumerate_on_y(y);
  std::vector<ChainMap> got;
  for (auto id : indecomposable_elements(s)) got.push_back(s.element(id));
  std::sort(got.begin(), got.end());
  auto want = build_a(y);
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

}  // namespace
}  // namespace ordrange
