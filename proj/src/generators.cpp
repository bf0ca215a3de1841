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

#include "ordrange/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "generators_internal.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/regularity.hpp"

namespace ordrange {

namespace detail {

void MapBuilder::block(Interval b, Point value) {
  for (Point x = b.first; x <= b.second; ++x) {
    images_.push_back(value);
  }
}

void MapBuilder::head(Interval /*b*/, Point value) {
  images_.push_back(value);
}

void MapBuilder::tail(Interval b, Point value) {
  if (b.second == b.first) {
    throw InternalError("map builder: splitting a singleton block");
  }
  block({b.first + 1, b.second}, value);
}

ChainMap MapBuilder::build(char const* what) const {
  if (images_.size() != n_) {
    throw InternalError(std::string(what) + ": blocks do not cover the chain");
  }
  try {
    return ChainMap(images_);
  } catch (Error const& e) {
    throw InternalError(std::string(what) + ": " + e.what());
  }
}

void PartialBuilder::add(Point a, Point b) {
  domain_.push_back(a);
  images_.push_back(b);
}

PartialMap PartialBuilder::partial(char const* what) const {
  try {
    return PartialMap(n_, domain_, images_);
  } catch (Error const& e) {
    throw InternalError(std::string(what) + ": " + e.what());
  }
}

ChainMap PartialBuilder::hat(char const* what) const {
  return canonical_hat(partial(what));
}

ChainMap PartialBuilder::tilde(char const* what) const {
  return canonical_tilde(partial(what));
}

ChainMap product(std::span<ChainMap const> factors) {
  ChainMap result = factors.front();
  for (std::size_t t = 1; t < factors.size(); ++t) {
    result = compose(result, factors[t]);
  }
  return result;
}

void require(bool ok, std::string const& message) {
  if (!ok) {
    throw PreconditionError(message);
  }
}

void ensure(bool ok, std::string const& message) {
  if (!ok) {
    throw InternalError(message);
  }
}

Factor a_factor(ChainMap f) {
  Provenance p;
  p.kind = GeneratorKind::kA;
  p.kernel = kernel(f);
  return Factor{p, std::move(f)};
}

Factor epsilon_factor(GeneratorKind kind, Extension ext, std::size_t index,
                      ChainMap f) {
  Provenance p;
  p.kind = kind;
  p.extension = ext;
  p.index = index;
  return Factor{p, std::move(f)};
}

std::size_t first_gap(RangeSet const& y) {
  auto const n = static_cast<Point>(y.degree());
  for (Point k = 1; k <= n; ++k) {
    if (!y.contains(k)) {
      return static_cast<std::size_t>(k);
    }
  }
  return y.degree() + 1;
}

std::size_t top_run(RangeSet const& y) {
  auto const n = static_cast<Point>(y.degree());
  std::size_t run = 0;
  while (run < y.size() && y.contains(n - static_cast<Point>(run))) {
    ++run;
  }
  return y.size() + 1 - run;
}

}  // namespace detail

using detail::ensure;
using detail::MapBuilder;
using detail::PartialBuilder;
using detail::require;

std::string Provenance::tag() const {
  std::string const ext = extension == Extension::kHat ? "hat" : "tilde";
  switch (kind) {
    case GeneratorKind::kA:
      return "A";
    case GeneratorKind::kEpsilon:
      return "eps_" + ext + "_" + std::to_string(index);
    case GeneratorKind::kEpsilonOneI:
      return "eps_1_" + std::to_string(index) + "_" + ext;
    case GeneratorKind::kEpsilonRJ:
      return "eps_r_" + std::to_string(index) + "_" + ext;
  }
  return "?";
}

PointSet captive_set(RangeSet const& y) {
  auto const n = static_cast<Point>(y.degree());
  PointSet result;
  for (Point p : y.members()) {
    if (p == 1 || p == n || (y.contains(p - 1) && y.contains(p + 1))) {
      result.push_back(p);
    }
  }
  return result;
}

BigInt rank_formula(RangeSet const& y) {
  std::size_t const n = y.degree();
  std::size_t const r = y.size();
  if (r == 1) {
    return 1;
  }
  if (r == n) {
    return BigInt(n);
  }
  return binomial(n - 1, r - 1) + BigInt(captive_set(y).size());
}

std::vector<ChainMap> build_a(RangeSet const& y) {
  std::vector<ChainMap> result;
  for (auto const& p : ConvexPartition::all_with_weight(y.degree(), y.size())) {
    MapBuilder b(y.degree());
    auto const blocks = p.blocks();
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      b.block(blocks[t], y.nth(t + 1));
    }
    result.push_back(b.build("A"));
  }
  return result;
}

std::optional<std::size_t> missing_index(ChainMap const& alpha,
                                         RangeSet const& y) {
  if (alpha.degree() != y.degree() || !image_within(alpha, y) ||
      rank(alpha) + 1 != y.size()) {
    return std::nullopt;
  }
  RangeSet const im = image(alpha);
  for (std::size_t t = 1; t <= y.size(); ++t) {
    if (!im.contains(y.nth(t))) {
      return t;
    }
  }
  return std::nullopt;
}

namespace {

ChainMap extend(PartialBuilder const& pb, Extension ext, char const* what) {
  return ext == Extension::kHat ? pb.hat(what) : pb.tilde(what);
}

}  // namespace

ChainMap build_epsilon(std::size_t i, Extension ext, RangeSet const& y) {
  std::size_t const r = y.size();
  require(r >= 2 && i >= 1 && i <= r,
          "eps_i needs 1 <= i <= r and r >= 2, got i = " + std::to_string(i));
  PartialBuilder pb(y.degree());
  for (std::size_t t = 1; t <= r; ++t) {
    if (t != i) {
      pb.add(y.nth(t), y.nth(t));
    }
  }
  return extend(pb, ext, "eps_i");
}

ChainMap build_epsilon_1i(std::size_t i, Extension ext, RangeSet const& y) {
  std::size_t const r = y.size();
  require(i >= 3 && i <= r, "eps_{1,i} needs 3 <= i <= r, got i = " +
                                std::to_string(i));
  PartialBuilder pb(y.degree());
  for (std::size_t t = 1; t <= i - 2; ++t) {
    pb.add(y.nth(t), y.nth(t + 1));
  }
  for (std::size_t t = i; t <= r; ++t) {
    pb.add(y.nth(t), y.nth(t));
  }
  return extend(pb, ext, "eps_{1,i}");
}

ChainMap build_epsilon_rj(std::size_t j, Extension ext, RangeSet const& y) {
  std::size_t const r = y.size();
  require(j >= 2 && j + 1 <= r, "eps_{r,j} needs 2 <= j <= r-1, got j = " +
                                    std::to_string(j));
  PartialBuilder pb(y.degree());
  for (std::size_t t = 1; t <= j - 1; ++t) {
    pb.add(y.nth(t), y.nth(t));
  }
  for (std::size_t t = j + 1; t <= r; ++t) {
    pb.add(y.nth(t), y.nth(t - 1));
  }
  return extend(pb, ext, "eps_{r,j}");
}

std::optional<std::size_t> GeneratingSet::find(ChainMap const& f) const {
  auto it = std::find(members.begin(), members.end(), f);
  if (it == members.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - members.begin());
}

std::optional<std::size_t> GeneratingSet::find(GeneratorKind kind,
                                               Extension ext,
                                               std::size_t index) const {
  for (std::size_t t = 0; t < provenance.size(); ++t) {
    auto const& p = provenance[t];
    if (p.kind == kind && p.extension == ext && p.index == index) {
      return t;
    }
  }
  return std::nullopt;
}

GeneratingSet build_generating_set(RangeSet const& y) {
  std::size_t const n = y.degree();
  std::size_t const r = y.size();
  require(r > 1 && r < n, "generating set needs 1 < |Y| < n, got |Y| = " +
                              std::to_string(r) + ", n = " + std::to_string(n));
  GeneratingSet gs;
  gs.first_gap = detail::first_gap(y);
  gs.top_run = detail::top_run(y);
  std::size_t const i = gs.first_gap;
  std::size_t const j = gs.top_run;
  gs.case_label = "i=" + std::to_string(i) + ",j=" + std::to_string(j);

  for (auto& a : build_a(y)) {
    auto f = detail::a_factor(std::move(a));
    gs.members.push_back(std::move(f.map));
    gs.provenance.push_back(std::move(f.provenance));
  }

  struct Entry {
    GeneratorKind kind;
    Extension ext;
    std::size_t index;
  };
  std::vector<Entry> eps;
  auto const hat = Extension::kHat;
  auto const tilde = Extension::kTilde;
  if (i == r + 1) {
    for (std::size_t t = 1; t <= r - 1; ++t) {
      eps.push_back({GeneratorKind::kEpsilon, tilde, t});
    }
  } else {
    if (i == 2) {
      eps.push_back({GeneratorKind::kEpsilon, tilde, 1});
    } else if (i >= 3) {
      eps.push_back({GeneratorKind::kEpsilonOneI, tilde, i});
      for (std::size_t t = 2; t <= i - 2; ++t) {
        eps.push_back({GeneratorKind::kEpsilon, tilde, t});
      }
    }
    for (std::size_t t = std::max<std::size_t>(i, 2); t <= r; ++t) {
      eps.push_back({GeneratorKind::kEpsilon, hat, t});
    }
    auto drop_hat = [&eps](std::size_t k) {
      std::erase_if(eps, [k](Entry const& e) {
        return e.kind == GeneratorKind::kEpsilon && e.ext == Extension::kHat &&
               e.index == k;
      });
    };
    if (j == r + 1) {
      drop_hat(r);
    } else if (j >= 2 && j + 1 <= r) {
      drop_hat(j);
      drop_hat(r);
      eps.push_back({GeneratorKind::kEpsilonRJ, hat, j});
    }
    // Hat eps_k with y_k not captive already lies in <A>.
    PointSet const captive = captive_set(y);
    std::vector<std::size_t> removable;
    for (auto const& e : eps) {
      if (e.kind == GeneratorKind::kEpsilon && e.ext == hat &&
          !std::binary_search(captive.begin(), captive.end(),
                              y.nth(e.index))) {
        ensure(e.index >= 2 && e.index + 1 <= r,
               "generating set: non-captive hat eps at the boundary");
        removable.push_back(e.index);
      }
    }
    for (std::size_t k : removable) {
      (void)epsilon_hat_from_a(k, y);
      drop_hat(k);
    }
  }

  for (auto const& e : eps) {
    ChainMap f = e.kind == GeneratorKind::kEpsilon
                     ? build_epsilon(e.index, e.ext, y)
                 : e.kind == GeneratorKind::kEpsilonOneI
                     ? build_epsilon_1i(e.index, e.ext, y)
                     : build_epsilon_rj(e.index, e.ext, y);
    auto factor = detail::epsilon_factor(e.kind, e.ext, e.index, std::move(f));
    gs.members.push_back(std::move(factor.map));
    gs.provenance.push_back(std::move(factor.provenance));
  }

  ensure(BigInt(gs.members.size()) == rank_formula(y),
         "generating set for " + to_string(y) + " has " +
             std::to_string(gs.members.size()) + " members, expected " +
             to_string(rank_formula(y)));
  return gs;
}

namespace {

class WordBuilder {
 public:
  WordBuilder(RangeSet const& y, GeneratingSet const& gs)
      : y_(y), gs_(gs), r_(y.size()), i_(gs.first_gap), j_(gs.top_run) {}

  void any(ChainMap const& alpha) {
    std::size_t const k = rank(alpha);
    if (k == r_) {
      generator(alpha);
    } else if (k + 1 == r_) {
      if (is_regular(alpha, y_)) {
        b_element(alpha);
      } else {
        auto f = factor_max1(alpha, y_);
        generator(f.left);
        b_element(f.right);
      }
    } else {
      auto f = factor_max2(alpha, y_);
      any(f.left);
      any(f.right);
    }
  }

  std::vector<std::size_t> take() { return std::move(word_); }

 private:
  void generator(ChainMap const& f) {
    auto id = gs_.find(f);
    ensure(id.has_value(), "express: " + to_string(f) + " is not a generator");
    word_.push_back(*id);
  }

  void b_element(ChainMap const& alpha) {
    std::size_t const base = i_ == 1 ? 1 : (i_ == r_ + 1 ? r_ : i_);
    auto d = decompose_b(alpha, base, y_);
    if (i_ == 1) {
      factors(b1_from_a(d.base, y_));
    } else if (i_ == r_ + 1) {
      factors(br_from_a(d.base, y_));
    } else {
      factors(bi_from_a_and_epsilon(d.base, y_));
    }
    factors(d.word);
  }

  void factors(std::vector<Factor> const& fs) {
    for (auto const& f : fs) {
      if (f.provenance.kind == GeneratorKind::kA) {
        generator(f.map);
      } else {
        ensure(f.provenance.kind == GeneratorKind::kEpsilon,
               "express: unexpected factor " + f.provenance.tag());
        epsilon(f.provenance.extension, f.provenance.index);
      }
    }
  }

  void epsilon(Extension ext, std::size_t k) {
    if (auto id = gs_.find(GeneratorKind::kEpsilon, ext, k)) {
      word_.push_back(*id);
      return;
    }
    if (ext == Extension::kTilde) {
      ensure(i_ >= 3 && i_ <= r_ && (k == 1 || k == i_ - 1),
             "express: no route to tilde eps_" + std::to_string(k));
      ChainMap const t = tilde_pair_witness(i_, y_);
      ChainMap const e = build_epsilon_1i(i_, Extension::kTilde, y_);
      if (k == 1) {
        generator(t);
        generator(e);
      } else {
        generator(e);
        generator(t);
      }
      return;
    }
    if (k == r_ && j_ == r_ + 1) {
      factors(br_from_a(build_epsilon(r_, Extension::kHat, y_), y_));
      return;
    }
    if (j_ >= 2 && j_ + 1 <= r_ && (k == r_ || k == j_)) {
      ChainMap const t = hat_pair_witness(j_, y_);
      ChainMap const e = build_epsilon_rj(j_, Extension::kHat, y_);
      if (k == r_) {
        generator(t);
        generator(e);
      } else {
        generator(e);
        generator(t);
      }
      return;
    }
    for (auto const& f : epsilon_hat_from_a(k, y_)) {
      generator(f);
    }
  }

  RangeSet const& y_;
  GeneratingSet const& gs_;
  std::size_t r_;
  std::size_t i_;
  std::size_t j_;
  std::vector<std::size_t> word_;
};

}  // namespace

std::vector<std::size_t> express_in_generators(ChainMap const& alpha,
                                               RangeSet const& y,
                                               GeneratingSet const& gs) {
  require(alpha.degree() == y.degree() && image_within(alpha, y),
          "express: " + to_string(alpha) + " is not in O_n" + to_string(y));
  WordBuilder builder(y, gs);
  builder.any(alpha);
  auto word = builder.take();
  std::vector<ChainMap> letters;
  letters.reserve(word.size());
  for (std::size_t id : word) {
    letters.push_back(gs.members.at(id));
  }
  ensure(detail::product(letters) == alpha,
         "express: word does not evaluate to " + to_string(alpha));
  return word;
}

}  // namespace ordrange
