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

#include "ordrange/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "ordrange/errors.hpp"
#include "ordrange/guards.hpp"
#include "ordrange/kernels.hpp"

namespace ordrange {

IsomorphismVerdict classify_isomorphism(RangeSet const& y,
                                        RangeSet const& z) {
  if (y.size() == 1 && z.size() == 1) {
    return {true, 1};
  }
  if (y.degree() == z.degree()) {
    if (y == z) {
      return {true, 2};
    }
    if (reflect_set(y) == z) {
      return {true, 3};
    }
  }
  return {false, std::nullopt};
}

bool is_isomorphism(ElementMapping const& phi, SemigroupTable const& s,
                    SemigroupTable const& t) {
  if (phi.size() != s.size() || s.size() != t.size()) {
    return false;
  }
  std::vector<char> hit(t.size(), 0);
  for (ElementId b : phi) {
    if (b >= t.size() || hit[b]) {
      return false;
    }
    hit[b] = 1;
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      auto const ab = s.product(static_cast<ElementId>(a),
                                static_cast<ElementId>(b));
      if (phi[ab] != t.product(phi[a], phi[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Profile = std::tuple<bool, bool, std::size_t, std::size_t, std::size_t>;

std::vector<Profile> profiles(SemigroupTable const& s) {
  auto const ideals = kernels::principal_ideals_parallel(s);
  auto const regular = kernels::regular_flags_parallel(s);
  std::vector<Profile> result(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    auto const id = static_cast<ElementId>(a);
    result[a] = {s.product(id, id) == id, regular[a] != 0,
                 ideals.left[a].count(), ideals.right[a].count(),
                 ideals.two_sided[a].count()};
  }
  return result;
}

// Greedy generating set: scan elements from the largest two-sided ideal down
// and keep each one not yet generated.
std::vector<ElementId> greedy_generators(SemigroupTable const& s,
                                         std::vector<Profile> const& prof) {
  std::vector<ElementId> order(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    order[a] = static_cast<ElementId>(a);
  }
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return std::get<4>(prof[a]) > std::get<4>(prof[b]);
  });
  std::vector<char> in(s.size(), 0);
  std::vector<ElementId> gens;
  std::vector<ElementId> members;
  for (ElementId a : order) {
    if (in[a]) {
      continue;
    }
    gens.push_back(a);
    in[a] = 1;
    members.push_back(a);
    for (std::size_t next = 0; next < members.size(); ++next) {
      for (ElementId g : gens) {
        for (ElementId p : {s.product(members[next], g),
                            s.product(g, members[next])}) {
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
        }
      }
    }
  }
  return gens;
}

constexpr ElementId kUnset = static_cast<ElementId>(-1);

class Searcher {
 public:
  Searcher(SemigroupTable const& s, SemigroupTable const& t)
      : s_(s), t_(t), prof_s_(profiles(s)), prof_t_(profiles(t)),
        gens_(greedy_generators(s, prof_s_)) {}

  IsomorphismSearch run() {
    images_.clear();
    descend();
    return std::move(result_);
  }

 private:
  // Maps everything generated by gens_[0..k) given their images, or fails on
  // a clash with an earlier value or on a collision of two sources.
  bool extend(ElementMapping& phi, ElementMapping& inv) const {
    std::size_t const k = images_.size();
    std::fill(phi.begin(), phi.end(), kUnset);
    std::fill(inv.begin(), inv.end(), kUnset);
    std::vector<ElementId> queue;
    auto assign = [&](ElementId a, ElementId b) {
      if (phi[a] != kUnset) {
        return phi[a] == b;
      }
      if (inv[b] != kUnset) {
        return false;
      }
      phi[a] = b;
      inv[b] = a;
      queue.push_back(a);
      return true;
    };
    for (std::size_t g = 0; g < k; ++g) {
      if (!assign(gens_[g], images_[g])) {
        return false;
      }
    }
    for (std::size_t next = 0; next < queue.size(); ++next) {
      ElementId const x = queue[next];
      for (std::size_t g = 0; g < k; ++g) {
        if (!assign(s_.product(x, gens_[g]), t_.product(phi[x], images_[g]))) {
          return false;
        }
      }
    }
    return true;
  }

  void descend() {
    ++result_.branches;
    ElementMapping phi(s_.size());
    ElementMapping inv(t_.size());
    if (!extend(phi, inv)) {
      return;
    }
    std::size_t const k = images_.size();
    if (k == gens_.size()) {
      if (is_isomorphism(phi, s_, t_)) {
        ++result_.isomorphisms_found;
        if (!result_.mapping || phi < *result_.mapping) {
          result_.mapping = phi;
        }
      }
      return;
    }
    ElementId const g = gens_[k];
    for (std::size_t b = 0; b < t_.size(); ++b) {
      if (inv[b] != kUnset || prof_t_[b] != prof_s_[g]) {
        continue;
      }
      images_.push_back(static_cast<ElementId>(b));
      descend();
      images_.pop_back();
    }
  }

  SemigroupTable const& s_;
  SemigroupTable const& t_;
  std::vector<Profile> prof_s_;
  std::vector<Profile> prof_t_;
  std::vector<ElementId> gens_;
  std::vector<ElementId> images_;
  IsomorphismSearch result_;
};

}  // namespace

IsomorphismSearch search_isomorphisms(SemigroupTable const& s,
                                      SemigroupTable const& t) {
  if (s.size() != t.size()) {
    return {};
  }
  std::size_t const limit = subset_search_limit();
  if (s.size() > limit) {
    throw GuardError("isomorphism search: " + std::to_string(s.size()) +
                     " elements exceeds " + std::to_string(limit) +
                     " (raise ORDRANGE_MAX_ELEMENTS to allow)");
  }
  auto sorted_profiles = [](std::vector<Profile> p) {
    std::sort(p.begin(), p.end());
    return p;
  };
  if (sorted_profiles(profiles(s)) != sorted_profiles(profiles(t))) {
    return {};
  }
  return Searcher(s, t).run();
}

std::vector<std::pair<Point, Point>> induced_range_bijection(
    ElementMapping const& phi, SemigroupTable const& s,
    SemigroupTable const& t) {
  std::vector<std::pair<Point, Point>> theta;
  for (std::size_t a = 0; a < s.size(); ++a) {
    ChainMap const& f = s.element(static_cast<ElementId>(a));
    if (!is_constant(f)) {
      continue;
    }
    ChainMap const& g = t.element(phi.at(a));
    if (!is_constant(g)) {
      throw InternalError("induced bijection: constant " + to_string(f) +
                          " is sent to " + to_string(g));
    }
    theta.emplace_back(f(1), g(1));
  }
  std::sort(theta.begin(), theta.end());
  return theta;
}

std::string BasicInvariants::first_failure() const {
  if (!constants_to_constants) return "constants_to_constants";
  if (!theta_bijective) return "theta_bijective";
  if (!action) return "action";
  if (!fixed_points) return "fixed_points";
  if (!idempotent_images) return "idempotent_images";
  if (!rank_two_images) return "rank_two_images";
  if (!monotone_or_antitone) return "monotone_or_antitone";
  return "";
}

BasicInvariants check_basic_invariants(ElementMapping const& phi,
                                       SemigroupTable const& s,
                                       SemigroupTable const& t) {
  BasicInvariants out;
  std::map<Point, Point> theta;
  try {
    for (auto const& [x, xt] : induced_range_bijection(phi, s, t)) {
      theta[x] = xt;
    }
  } catch (InternalError const&) {
    return out;
  }
  out.constants_to_constants = true;

  PointSet y;
  for (auto const& [x, xt] : theta) {
    y.push_back(x);
  }
  PointSet targets;
  for (auto const& [x, xt] : theta) {
    targets.push_back(xt);
  }
  std::sort(targets.begin(), targets.end());
  std::size_t t_constants = 0;
  for (auto const& g : t.elements()) {
    t_constants += is_constant(g) ? 1 : 0;
  }
  out.theta_bijective =
      std::adjacent_find(targets.begin(), targets.end()) == targets.end() &&
      targets.size() == t_constants;

  auto map_set = [&theta](PointSet const& pts) {
    PointSet result;
    for (Point p : pts) {
      result.push_back(theta.at(p));
    }
    std::sort(result.begin(), result.end());
    return result;
  };

  out.action = true;
  out.fixed_points = true;
  out.idempotent_images = true;
  out.rank_two_images = true;
  for (std::size_t a = 0; a < s.size(); ++a) {
    ChainMap const& alpha = s.element(static_cast<ElementId>(a));
    ChainMap const& beta = t.element(phi[a]);
    for (Point x : y) {
      if (beta(theta.at(x)) != theta.at(alpha(x))) {
        out.action = false;
      }
    }
    if (fixed_points(beta) != map_set(fixed_points(alpha))) {
      out.fixed_points = false;
    }
    bool const image_matches =
        image(beta).points() == map_set(image(alpha).points());
    if (is_idempotent(alpha) && !image_matches) {
      out.idempotent_images = false;
    }
    if (rank(alpha) == 2 && !image_matches) {
      out.rank_two_images = false;
    }
  }

  bool increasing = true;
  bool decreasing = true;
  Point previous = 0;
  bool first = true;
  for (auto const& [x, xt] : theta) {
    if (!first) {
      increasing = increasing && xt > previous;
      decreasing = decreasing && xt < previous;
    }
    previous = xt;
    first = false;
  }
  out.monotone_or_antitone = increasing || decreasing;
  return out;
}

}  // namespace ordrange
