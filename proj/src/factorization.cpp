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
#include <string>
#include <vector>

#include "generators_internal.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/generators.hpp"
#include "ordrange/regularity.hpp"

namespace ordrange {

using detail::ensure;
using detail::Interval;
using detail::MapBuilder;
using detail::PartialBuilder;
using detail::require;

namespace {

// 1-indexed views of an element's kernel blocks and image points.
struct Shape {
  std::vector<Interval> blocks;
  PointSet points;

  Interval const& block(std::size_t t) const { return blocks.at(t - 1); }
  Point a(std::size_t t) const { return points.at(t - 1); }
  std::size_t size() const { return points.size(); }
};

Shape shape_of(ChainMap const& alpha) {
  return Shape{kernel(alpha).blocks(), image(alpha).points()};
}

void require_in(ChainMap const& alpha, RangeSet const& y, char const* what) {
  require(alpha.degree() == y.degree() && image_within(alpha, y),
          std::string(what) + ": " + to_string(alpha) + " is not in O_n" +
              to_string(y));
}

std::size_t first_splittable(Shape const& s) {
  for (std::size_t t = 1; t <= s.size(); ++t) {
    if (s.block(t).second > s.block(t).first) {
      return t;
    }
  }
  throw InternalError("no block with two points");
}

void check_factorization(ChainMap const& alpha, Factorization const& f,
                         char const* what) {
  ensure(compose(f.left, f.right) == alpha,
         std::string(what) + ": product differs from " + to_string(alpha));
}

}  // namespace

Factorization factor_max1(ChainMap const& alpha, RangeSet const& y) {
  require_in(alpha, y, "factor_max1");
  std::size_t const r = y.size();
  auto const missing = missing_index(alpha, y);
  require(missing.has_value(),
          "factor_max1: " + to_string(alpha) + " does not have rank |Y| - 1");
  std::size_t const j = *missing;
  Shape const s = shape_of(alpha);
  std::size_t const k = first_splittable(s);
  std::size_t const n = y.degree();

  MapBuilder b(n);
  for (std::size_t t = 1; t < k; ++t) {
    b.block(s.block(t), y.nth(t));
  }
  b.head(s.block(k), y.nth(k));
  b.tail(s.block(k), y.nth(k + 1));
  for (std::size_t t = k + 1; t <= r - 1; ++t) {
    b.block(s.block(t), y.nth(t + 1));
  }

  PartialBuilder th(n);
  if (j < k) {
    for (std::size_t t = 1; t <= r; ++t) {
      if (t == k + 1) continue;
      std::size_t const to = (t >= j && t <= k) ? t + 1 : t;
      th.add(y.nth(t), y.nth(to));
    }
  } else if (k < j) {
    for (std::size_t t = 1; t <= r; ++t) {
      if (t == k + 1) continue;
      std::size_t const to = (t >= k + 2 && t <= j) ? t - 1 : t;
      th.add(y.nth(t), y.nth(to));
    }
  } else {
    for (std::size_t t = 1; t <= r; ++t) {
      if (t == j + 1) continue;
      th.add(y.nth(t), y.nth(t == j ? j + 1 : t));
    }
  }

  Factorization f{b.build("factor_max1"), th.hat("factor_max1")};
  check_factorization(alpha, f, "factor_max1");
  ensure(rank(f.left) == r && rank(f.right) + 1 == r &&
             is_regular(f.right, y),
         "factor_max1: factor ranks");
  return f;
}

Factorization factor_max2(ChainMap const& alpha, RangeSet const& y) {
  require_in(alpha, y, "factor_max2");
  std::size_t const r = y.size();
  Shape const s = shape_of(alpha);
  std::size_t const k = s.size();
  require(k + 2 <= r, "factor_max2: " + to_string(alpha) +
                          " needs rank at most |Y| - 2");
  PointSet missing;
  for (Point p : y.members()) {
    if (!std::binary_search(s.points.begin(), s.points.end(), p)) {
      missing.push_back(p);
    }
  }
  Point const u = missing[0];
  Point const v = missing[1];
  auto count_below = [&s](Point p) {
    return static_cast<std::size_t>(
        std::lower_bound(s.points.begin(), s.points.end(), p) -
        s.points.begin());
  };
  std::size_t const l = count_below(u);
  std::size_t const m = count_below(v);
  std::size_t const j = first_splittable(s);
  std::size_t const n = y.degree();

  MapBuilder b(n);
  PartialBuilder th(n);
  auto same = [&](std::size_t from, std::size_t to) {
    for (std::size_t t = from; t <= to; ++t) {
      b.block(s.block(t), s.a(t));
    }
  };
  auto fix = [&](std::size_t from, std::size_t to) {
    for (std::size_t t = from; t <= to; ++t) {
      th.add(s.a(t), s.a(t));
    }
  };

  if (j <= l) {
    if (j == l) {
      same(1, l - 1);
      b.head(s.block(l), s.a(l));
      b.tail(s.block(l), u);
      same(l + 1, k);
      fix(1, m);
      th.add(v, v);
      fix(m + 1, k);
    } else {
      same(1, j - 1);
      b.head(s.block(j), s.a(j));
      b.tail(s.block(j), s.a(j + 1));
      for (std::size_t t = j + 1; t <= l - 1; ++t) {
        b.block(s.block(t), s.a(t + 1));
      }
      b.block(s.block(l), u);
      same(l + 1, k);
      fix(1, j);
      for (std::size_t t = j + 2; t <= l; ++t) {
        th.add(s.a(t), s.a(t - 1));
      }
      th.add(u, s.a(l));
      fix(l + 1, m);
      th.add(v, v);
      fix(m + 1, k);
    }
  } else if (j <= m) {
    if (j == l + 1) {
      same(1, l);
      b.head(s.block(l + 1), u);
      b.tail(s.block(l + 1), s.a(l + 1));
      same(l + 2, k);
      fix(1, l);
      th.add(u, s.a(l + 1));
      fix(l + 2, m);
      th.add(v, v);
      fix(m + 1, k);
    } else {
      same(1, l);
      b.block(s.block(l + 1), u);
      for (std::size_t t = l + 2; t <= j - 1; ++t) {
        b.block(s.block(t), s.a(t - 1));
      }
      b.head(s.block(j), s.a(j - 1));
      b.tail(s.block(j), s.a(j));
      same(j + 1, k);
      fix(1, l);
      th.add(u, s.a(l + 1));
      for (std::size_t t = l + 1; t <= j - 1; ++t) {
        th.add(s.a(t), s.a(t + 1));
      }
      fix(j + 1, m);
      th.add(v, v);
      fix(m + 1, k);
    }
  } else {
    if (j == m + 1) {
      same(1, m);
      b.head(s.block(m + 1), v);
      b.tail(s.block(m + 1), s.a(m + 1));
      same(m + 2, k);
      fix(1, l);
      th.add(u, u);
      fix(l + 1, m);
      th.add(v, s.a(m + 1));
      fix(m + 2, k);
    } else {
      same(1, m);
      b.block(s.block(m + 1), v);
      for (std::size_t t = m + 2; t <= j - 1; ++t) {
        b.block(s.block(t), s.a(t - 1));
      }
      b.head(s.block(j), s.a(j - 1));
      b.tail(s.block(j), s.a(j));
      same(j + 1, k);
      fix(1, l);
      th.add(u, u);
      fix(l + 1, m);
      th.add(v, s.a(m + 1));
      for (std::size_t t = m + 1; t <= j - 1; ++t) {
        th.add(s.a(t), s.a(t + 1));
      }
      fix(j + 1, k);
    }
  }

  Factorization f{b.build("factor_max2"), th.hat("factor_max2")};
  check_factorization(alpha, f, "factor_max2");
  ensure(rank(f.left) == k + 1 && rank(f.right) == k + 1,
         "factor_max2: factor ranks");
  return f;
}

BDecomposition decompose_b(ChainMap const& alpha, std::size_t i,
                           RangeSet const& y) {
  require_in(alpha, y, "decompose_b");
  std::size_t const r = y.size();
  require(i >= 1 && i <= r, "decompose_b: index out of range");
  auto const missing = missing_index(alpha, y);
  require(missing.has_value() && is_regular(alpha, y),
          "decompose_b: " + to_string(alpha) + " is not in any B_k");
  std::size_t k = *missing;
  std::size_t const n = y.degree();

  ChainMap current = alpha;
  std::vector<Factor> word;
  while (k != i) {
    auto const blocks = kernel(current).blocks();
    MapBuilder b(n);
    bool const up = k < i;
    Extension const ext = up ? Extension::kTilde : Extension::kHat;
    for (std::size_t t = 1; t <= r - 1; ++t) {
      bool const keep = up ? t <= k : t + 2 <= k;
      b.block(blocks[t - 1], y.nth(keep ? t : t + 1));
    }
    Factor letter = detail::epsilon_factor(GeneratorKind::kEpsilon, ext, k,
                                           build_epsilon(k, ext, y));
    k = up ? k + 1 : k - 1;
    ChainMap beta = b.build("decompose_b");
    ensure(compose(beta, letter.map) == current,
           "decompose_b: step does not reproduce " + to_string(current));
    ensure(missing_index(beta, y) == k && is_regular(beta, y),
           "decompose_b: intermediate map left B_k");
    word.insert(word.begin(), std::move(letter));
    current = std::move(beta);
  }
  return BDecomposition{std::move(current), std::move(word)};
}

std::vector<Factor> b1_from_a(ChainMap const& alpha, RangeSet const& y) {
  require_in(alpha, y, "b1_from_a");
  std::size_t const r = y.size();
  require(r >= 2 && y.nth(1) > 1, "b1_from_a: needs y_1 > 1");
  require(missing_index(alpha, y) == std::size_t{1} && is_regular(alpha, y),
          "b1_from_a: " + to_string(alpha) + " is not in B_1");
  auto const blocks = kernel(alpha).blocks();
  std::size_t const n = y.degree();

  MapBuilder b(n);
  b.head(blocks[0], y.nth(1));
  b.tail(blocks[0], y.nth(2));
  for (std::size_t t = 1; t < blocks.size(); ++t) {
    b.block(blocks[t], y.nth(t + 2));
  }
  PartialBuilder th(n);
  th.add(1, y.nth(1));
  th.add(y.nth(1), y.nth(2));
  for (std::size_t t = 3; t <= r; ++t) {
    th.add(y.nth(t), y.nth(t));
  }
  std::vector<Factor> f{detail::a_factor(b.build("b1_from_a")),
                        detail::a_factor(th.hat("b1_from_a"))};
  ensure(compose(f[0].map, f[1].map) == alpha,
         "b1_from_a: product differs");
  return f;
}

std::vector<Factor> br_from_a(ChainMap const& alpha, RangeSet const& y) {
  require_in(alpha, y, "br_from_a");
  require(y.nth(y.size()) < static_cast<Point>(y.degree()),
          "br_from_a: needs y_r < n");
  auto factors = b1_from_a(reflect(alpha), reflect_set(y));
  for (auto& f : factors) {
    f = detail::a_factor(reflect(f.map));
  }
  ensure(compose(factors[0].map, factors[1].map) == alpha,
         "br_from_a: product differs");
  return factors;
}

std::vector<Factor> bi_from_a_and_epsilon(ChainMap const& alpha,
                                                RangeSet const& y) {
  require_in(alpha, y, "bi_from_a_and_epsilon");
  std::size_t const r = y.size();
  std::size_t const i = detail::first_gap(y);
  require(i >= 2 && i <= r,
          "bi_from_a_and_epsilon: needs y_1..y_{i-1} = 1..i-1, y_i > i "
          "with 2 <= i <= r");
  require(missing_index(alpha, y) == i && is_regular(alpha, y),
          "bi_from_a_and_epsilon: " + to_string(alpha) +
              " is not in B_" + std::to_string(i));
  auto const blocks = kernel(alpha).blocks();
  // Blocks are A_1..A_{i-1}, A_{i+1}..A_r.
  auto block = [&blocks, i](std::size_t p) -> Interval const& {
    return blocks.at(p < i ? p - 1 : p - 2);
  };
  auto const pi = static_cast<Point>(i);
  auto holds_i = [&](std::size_t p) {
    return p >= 1 && p <= r && p != i && block(p).first <= pi &&
           pi <= block(p).second;
  };
  std::size_t const n = y.degree();
  MapBuilder b(n);
  std::vector<Factor> factors;

  if (holds_i(i + 1)) {
    for (std::size_t p = 1; p <= i - 1; ++p) {
      b.block(block(p), y.nth(p));
    }
    b.head(block(i + 1), y.nth(i));
    b.tail(block(i + 1), y.nth(i + 1));
    for (std::size_t p = i + 2; p <= r; ++p) {
      b.block(block(p), y.nth(p));
    }
    PartialBuilder th(n);
    for (std::size_t p = 1; p <= i - 1; ++p) {
      th.add(y.nth(p), y.nth(p));
    }
    th.add(pi, y.nth(i));
    th.add(y.nth(i), y.nth(i + 1));
    for (std::size_t p = i + 2; p <= r; ++p) {
      th.add(y.nth(p), y.nth(p));
    }
    factors.push_back(detail::a_factor(b.build("bi_from_a_and_epsilon")));
    factors.push_back(detail::a_factor(th.hat("bi_from_a_and_epsilon")));
  } else if (holds_i(i - 1)) {
    for (std::size_t p = 1; p <= i - 2; ++p) {
      b.block(block(p), y.nth(p));
    }
    b.head(block(i - 1), y.nth(i - 1));
    b.tail(block(i - 1), y.nth(i));
    for (std::size_t p = i + 1; p <= r; ++p) {
      b.block(block(p), y.nth(p));
    }
    factors.push_back(detail::a_factor(b.build("bi_from_a_and_epsilon")));
    factors.push_back(detail::epsilon_factor(
        GeneratorKind::kEpsilon, Extension::kHat, i,
        build_epsilon(i, Extension::kHat, y)));
  } else {
    ensure(i >= 3 && holds_i(i - 2), "bi_from_a_and_epsilon: point i in no expected block");
    for (std::size_t p = 1; p <= i - 3; ++p) {
      b.block(block(p), y.nth(p));
    }
    b.head(block(i - 2), y.nth(i - 2));
    b.tail(block(i - 2), y.nth(i - 1));
    b.block(block(i - 1), y.nth(i));
    for (std::size_t p = i + 1; p <= r; ++p) {
      b.block(block(p), y.nth(p));
    }
    PartialBuilder th(n);
    for (std::size_t p = 1; p <= i - 2; ++p) {
      th.add(y.nth(p), y.nth(p));
    }
    th.add(pi, y.nth(i - 1));
    for (std::size_t p = i; p <= r; ++p) {
      th.add(y.nth(p), y.nth(p));
    }
    factors.push_back(detail::a_factor(b.build("bi_from_a_and_epsilon")));
    factors.push_back(detail::a_factor(th.hat("bi_from_a_and_epsilon")));
    factors.push_back(detail::epsilon_factor(
        GeneratorKind::kEpsilon, Extension::kHat, i,
        build_epsilon(i, Extension::kHat, y)));
  }
  std::vector<ChainMap> maps;
  for (auto const& f : factors) {
    maps.push_back(f.map);
  }
  ensure(detail::product(maps) == alpha, "bi_from_a_and_epsilon: product differs");
  return factors;
}

ChainMap tilde_pair_witness(std::size_t i, RangeSet const& y) {
  std::size_t const r = y.size();
  require(i >= 3 && i <= r && detail::first_gap(y) == i,
          "tilde_pair_witness: needs y_1..y_{i-1} = 1..i-1, y_i > i "
          "with 3 <= i <= r");
  PartialBuilder th(y.degree());
  for (std::size_t t = 2; t <= i - 1; ++t) {
    th.add(y.nth(t), y.nth(t - 1));
  }
  th.add(y.nth(i - 1) + 1, y.nth(i - 1));
  for (std::size_t t = i; t <= r; ++t) {
    th.add(y.nth(t), y.nth(t));
  }
  ChainMap const t = th.tilde("tilde_pair_witness");
  ChainMap const e = build_epsilon_1i(i, Extension::kTilde, y);
  ensure(rank(t) == r && image_within(t, y),
         "tilde_pair_witness: witness not in A");
  ensure(compose(t, e) == build_epsilon(1, Extension::kTilde, y) &&
             compose(e, t) == build_epsilon(i - 1, Extension::kTilde, y),
         "tilde_pair_witness: identities fail");
  return t;
}

ChainMap hat_pair_witness(std::size_t j, RangeSet const& y) {
  std::size_t const r = y.size();
  require(j >= 2 && j + 1 <= r && detail::top_run(y) == j,
          "hat_pair_witness: needs y_j..y_r = n-r+j..n, "
          "y_{j-1} < n-r+j-1 with 2 <= j <= r-1");
  ChainMap const t = reflect(tilde_pair_witness(r + 2 - j, reflect_set(y)));
  ChainMap const e = build_epsilon_rj(j, Extension::kHat, y);
  ensure(compose(t, e) == build_epsilon(r, Extension::kHat, y) &&
             compose(e, t) == build_epsilon(j, Extension::kHat, y),
         "hat_pair_witness: identities fail");
  return t;
}

std::vector<ChainMap> epsilon_hat_from_a(std::size_t k, RangeSet const& y) {
  std::size_t const r = y.size();
  std::size_t const n = y.degree();
  require(k >= 2 && k + 1 <= r,
          "epsilon_hat_from_a: needs 2 <= k <= r-1, got k = " +
              std::to_string(k));
  std::vector<ChainMap> factors;
  Point const yk = y.nth(k);
  if (yk + 1 < y.nth(k + 1)) {
    PartialBuilder th(n);
    for (std::size_t t = 1; t <= r; ++t) {
      th.add(t == k ? yk + 1 : y.nth(t), y.nth(t));
    }
    ChainMap const t = th.hat("epsilon_hat_from_a");
    factors = {t, t};
  } else {
    require(y.nth(k - 1) < yk - 1 &&
                static_cast<std::size_t>(yk) + r < n + k,
            "epsilon_hat_from_a: y_" + std::to_string(k) +
                " satisfies neither sufficient condition");
    // Smallest point above y_k missing from Y, and l with y_l < gap < y_{l+1}.
    Point gap = yk + 1;
    while (y.contains(gap)) {
      ++gap;
    }
    std::size_t l = k;
    while (l < r && y.nth(l + 1) < gap) {
      ++l;
    }
    ensure(l > k, "epsilon_hat_from_a: gap adjacent to y_k");
    PartialBuilder t1(n);
    for (std::size_t t = 1; t <= k - 1; ++t) {
      t1.add(y.nth(t), y.nth(t));
    }
    for (std::size_t t = k + 1; t <= l; ++t) {
      t1.add(y.nth(t), y.nth(t - 1));
    }
    t1.add(gap, y.nth(l));
    for (std::size_t t = l + 1; t <= r; ++t) {
      t1.add(y.nth(t), y.nth(t));
    }
    PartialBuilder t2(n);
    for (std::size_t t = 1; t <= k - 1; ++t) {
      t2.add(y.nth(t), y.nth(t));
    }
    t2.add(yk - 1, yk);
    for (std::size_t t = k; t <= l - 1; ++t) {
      t2.add(y.nth(t), y.nth(t + 1));
    }
    for (std::size_t t = l + 1; t <= r; ++t) {
      t2.add(y.nth(t), y.nth(t));
    }
    factors = {t1.hat("epsilon_hat_from_a"), t2.hat("epsilon_hat_from_a")};
  }
  for (auto const& f : factors) {
    ensure(rank(f) == r && image_within(f, y),
           "epsilon_hat_from_a: factor not in A");
  }
  ensure(detail::product(factors) == build_epsilon(k, Extension::kHat, y),
         "epsilon_hat_from_a: product differs");
  return factors;
}

}  // namespace ordrange
