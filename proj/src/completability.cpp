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

#include "ordrange/completability.hpp"

#include <algorithm>
#include <string>

#include "ordrange/enumeration.hpp"
#include "ordrange/errors.hpp"
#include "ordrange/guards.hpp"

namespace ordrange {

namespace {

void require_into(PartialMap const& theta, RangeSet const& y) {
  if (theta.degree() != y.degree()) {
    throw DimensionError(
        "completability: map and range set live on different chains");
  }
  for (Point b : theta.images()) {
    if (!y.contains(b)) {
      throw RangeError("completability: " + to_string(theta) +
                       " maps outside " + to_string(y));
    }
  }
}

// Points strictly between the ideal (first t domain points) and the rest.
bool has_gap(PartialMap const& theta, std::size_t t) {
  auto const a = theta.domain();
  auto const n = static_cast<Point>(theta.degree());
  for (Point x = 1; x <= n; ++x) {
    bool above_ideal = std::all_of(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(t),
                                   [x](Point p) { return p < x; });
    bool below_rest = std::all_of(a.begin() + static_cast<std::ptrdiff_t>(t), a.end(),
                                  [x](Point p) { return x < p; });
    if (above_ideal && below_rest) {
      return true;
    }
  }
  return false;
}

// Members of Y between the images of the ideal and those of the rest.
PointSet witnesses(PartialMap const& theta, std::size_t t, RangeSet const& y) {
  auto const b = theta.images();
  PointSet result;
  for (Point v : y.members()) {
    bool above = std::all_of(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(t),
                             [v](Point p) { return p <= v; });
    bool below = std::all_of(b.begin() + static_cast<std::ptrdiff_t>(t), b.end(),
                             [v](Point p) { return v <= p; });
    if (above && below) {
      result.push_back(v);
    }
  }
  return result;
}

}  // namespace

std::vector<PointSet> order_ideals(std::span<Point const> points) {
  std::vector<PointSet> result;
  result.reserve(points.size() + 1);
  for (std::size_t t = 0; t <= points.size(); ++t) {
    result.emplace_back(points.begin(),
                        points.begin() + static_cast<std::ptrdiff_t>(t));
  }
  return result;
}

bool is_completable(PartialMap const& theta, RangeSet const& y) {
  require_into(theta, y);
  // Order ideals of the domain are exactly its prefixes.
  for (std::size_t t = 0; t <= theta.size(); ++t) {
    if (has_gap(theta, t) && witnesses(theta, t, y).empty()) {
      return false;
    }
  }
  return true;
}

std::vector<ChainMap> complete_extensions(PartialMap const& theta,
                                          RangeSet const& y) {
  require_into(theta, y);
  std::vector<ChainMap> result;
  for (auto& gamma : list_on_y(y)) {
    if (restrict(gamma, theta.domain()) == theta) {
      result.push_back(std::move(gamma));
    }
  }
  return result;
}

std::optional<ChainMap> construct_extension(PartialMap const& theta,
                                            RangeSet const& y) {
  require_into(theta, y);
  std::size_t const k = theta.size();
  std::vector<std::optional<Point>> choice(k + 1);
  for (std::size_t t = 0; t <= k; ++t) {
    if (!has_gap(theta, t)) {
      continue;
    }
    PointSet const w = witnesses(theta, t, y);
    if (w.empty()) {
      return std::nullopt;
    }
    choice[t] = w.front();
  }
  auto const a = theta.domain();
  std::vector<Point> images(theta.degree());
  for (std::size_t xi = 1; xi <= theta.degree(); ++xi) {
    auto const x = static_cast<Point>(xi);
    if (auto v = theta.apply(x)) {
      images[xi - 1] = *v;
      continue;
    }
    auto const t = static_cast<std::size_t>(
        std::lower_bound(a.begin(), a.end(), x) - a.begin());
    if (!choice[t]) {
      throw InternalError("construct extension: no value chosen for a gap");
    }
    images[xi - 1] = *choice[t];
  }
  try {
    return ChainMap(std::move(images));
  } catch (InvariantError const& e) {
    throw InternalError(std::string("construct extension: ") + e.what());
  }
}

std::vector<PartialMap> all_partial_maps_into(RangeSet const& y) {
  std::size_t const n = y.degree();
  if (n > kMaxEnumerationDegree) {
    throw GuardError("partial maps: n = " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxEnumerationDegree));
  }
  std::vector<PartialMap> result;
  for (auto const& domain : all_range_sets(n)) {
    // Weakly increasing index sequences into Y of length |domain|.
    std::size_t const k = domain.size();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Point> images(k);
      for (std::size_t t = 0; t < k; ++t) {
        images[t] = y.nth(idx[t] + 1);
      }
      result.emplace_back(n, domain.points(), std::move(images));
      std::size_t t = k;
      while (t > 0 && idx[t - 1] + 1 == y.size()) {
        --t;
      }
      if (t == 0) {
        break;
      }
      ++idx[t - 1];
      for (std::size_t u = t; u < k; ++u) {
        idx[u] = idx[t - 1];
      }
    }
  }
  return result;
}

PartialMap canonical_order_iso(ChainMap const& alpha, ChainMap const& beta) {
  if (alpha.degree() != beta.degree()) {
    throw DimensionError("canonical order-isomorphism: different chains");
  }
  if (kernel(alpha) != kernel(beta)) {
    throw PreconditionError(
        "canonical order-isomorphism: kernels differ for " + to_string(alpha) +
        " and " + to_string(beta));
  }
  std::vector<Point> domain;
  std::vector<Point> images;
  for (auto [lo, hi] : kernel(alpha).blocks()) {
    domain.push_back(alpha(lo));
    images.push_back(beta(lo));
  }
  return PartialMap(alpha.degree(), std::move(domain), std::move(images));
}

bool is_bicompletable(PartialMap const& theta, RangeSet const& y) {
  if (!theta.is_injective()) {
    throw PreconditionError("bicompletable: " + to_string(theta) +
                            " is not injective");
  }
  return is_completable(theta, y) && is_completable(theta.inverse(), y);
}

bool r_related_by_completion(ChainMap const& alpha, ChainMap const& beta,
                             RangeSet const& y) {
  if (alpha == beta) {
    return true;
  }
  if (kernel(alpha) != kernel(beta)) {
    return false;
  }
  return is_bicompletable(canonical_order_iso(alpha, beta), y);
}

}  // namespace ordrange
