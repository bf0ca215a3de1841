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

#include "ordrange/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ordrange/errors.hpp"
#include "ordrange/kernels.hpp"
#include "ordrange/regularity.hpp"

namespace ordrange {

namespace {

void require_in_range(ChainMap const& f, RangeSet const& y) {
  if (f.degree() != y.degree()) {
    throw DimensionError("green: map and range set live on different chains");
  }
  if (!image_within(f, y)) {
    throw RangeError("green: image of " + to_string(f) +
                     " is not contained in " + to_string(y));
  }
}

template <typename Regular>
EggBox finish(GreenRelation relation, SemigroupTable const& s,
              std::vector<std::vector<ElementId>> classes,
              Regular&& regular) {
  for (auto& c : classes) {
    std::sort(c.begin(), c.end());
  }
  auto rank_of = [&](std::vector<ElementId> const& c) {
    return rank(s.element(c.front()));
  };
  std::sort(classes.begin(), classes.end(), [&](auto const& a, auto const& b) {
    auto const ra = rank_of(a);
    auto const rb = rank_of(b);
    return ra != rb ? ra > rb : a.front() < b.front();
  });
  EggBox box;
  box.relation = relation;
  box.meta.reserve(classes.size());
  for (auto const& c : classes) {
    ChainMap const& rep = s.element(c.front());
    ClassMeta meta;
    meta.rank = rank(rep);
    meta.regular = regular(c.front());
    PointSet const im = image(rep).points();
    ConvexPartition const ker = kernel(rep);
    bool same_image = true;
    bool same_kernel = true;
    for (ElementId id : c) {
      same_image = same_image && image(s.element(id)).points() == im;
      same_kernel = same_kernel && kernel(s.element(id)) == ker;
    }
    if (same_image) {
      meta.image = im;
    }
    if (same_kernel) {
      meta.kernel = ker;
    }
    box.meta.push_back(std::move(meta));
  }
  box.classes = std::move(classes);
  return box;
}

template <typename Key>
std::vector<std::vector<ElementId>> group_by(std::size_t size, Key&& key) {
  using K = std::decay_t<decltype(key(ElementId{}))>;
  std::map<K, std::vector<ElementId>> groups;
  for (std::size_t i = 0; i < size; ++i) {
    auto const id = static_cast<ElementId>(i);
    groups[key(id)].push_back(id);
  }
  std::vector<std::vector<ElementId>> result;
  result.reserve(groups.size());
  for (auto& [k, members] : groups) {
    result.push_back(std::move(members));
  }
  return result;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::string_view to_string(GreenRelation relation) noexcept {
  switch (relation) {
    case GreenRelation::kL:
      return "L";
    case GreenRelation::kR:
      return "R";
    case GreenRelation::kH:
      return "H";
    case GreenRelation::kD:
      return "D";
    case GreenRelation::kJ:
      return "J";
  }
  return "?";
}

std::optional<GreenRelation> parse_green_relation(std::string_view name) {
  if (name == "L") return GreenRelation::kL;
  if (name == "R") return GreenRelation::kR;
  if (name == "H") return GreenRelation::kH;
  if (name == "D") return GreenRelation::kD;
  if (name == "J") return GreenRelation::kJ;
  return std::nullopt;
}

bool l_related(ChainMap const& alpha, ChainMap const& beta,
               RangeSet const& y) {
  require_in_range(alpha, y);
  require_in_range(beta, y);
  if (alpha == beta) {
    return true;
  }
  return is_regular(alpha, y) && is_regular(beta, y) &&
         image(alpha) == image(beta);
}

bool r_related(ChainMap const& alpha, ChainMap const& beta,
               RangeSet const& y) {
  require_in_range(alpha, y);
  require_in_range(beta, y);
  return kernel(alpha) == kernel(beta);
}

bool h_related(ChainMap const& alpha, ChainMap const& beta,
               RangeSet const& y) {
  require_in_range(alpha, y);
  require_in_range(beta, y);
  return alpha == beta;
}

bool d_related(ChainMap const& alpha, ChainMap const& beta,
               RangeSet const& y) {
  require_in_range(alpha, y);
  require_in_range(beta, y);
  bool const ra = is_regular(alpha, y);
  bool const rb = is_regular(beta, y);
  if (ra && rb) {
    return rank(alpha) == rank(beta);
  }
  if (!ra && !rb) {
    return kernel(alpha) == kernel(beta);
  }
  return false;
}

bool j_related(ChainMap const& alpha, ChainMap const& beta,
               RangeSet const& y) {
  return d_related(alpha, beta, y);
}

std::vector<std::size_t> EggBox::class_of() const {
  std::size_t size = 0;
  for (auto const& c : classes) {
    size += c.size();
  }
  std::vector<std::size_t> result(size);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (ElementId id : classes[k]) {
      result.at(id) = k;
    }
  }
  return result;
}

EggBox green_characterized(GreenRelation relation, SemigroupTable const& s,
                           RangeSet const& y) {
  auto related = [&](ChainMap const& a, ChainMap const& b) {
    switch (relation) {
      case GreenRelation::kL:
        return l_related(a, b, y);
      case GreenRelation::kR:
        return r_related(a, b, y);
      case GreenRelation::kH:
        return h_related(a, b, y);
      case GreenRelation::kD:
        return d_related(a, b, y);
      case GreenRelation::kJ:
        return j_related(a, b, y);
    }
    return false;
  };
  // The characterized relations are equivalences, so comparing against one
  // representative per class is enough.
  std::vector<std::vector<ElementId>> classes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto const id = static_cast<ElementId>(i);
    ChainMap const& f = s.element(id);
    auto it = std::find_if(classes.begin(), classes.end(), [&](auto const& c) {
      return related(s.element(c.front()), f);
    });
    if (it == classes.end()) {
      classes.push_back({id});
    } else {
      it->push_back(id);
    }
  }
  return finish(relation, s, std::move(classes), [&](ElementId id) {
    return is_regular(s.element(id), y);
  });
}

EggBox green_oracle(GreenRelation relation, SemigroupTable const& s) {
  kernels::PrincipalIdeals const ideals = kernels::principal_ideals_parallel(s);
  std::vector<char> const regular = kernels::regular_flags_parallel(s);
  auto bits_key = [](kernels::Bitset const& b) {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    return blocks;
  };
  std::vector<std::vector<ElementId>> classes;
  switch (relation) {
    case GreenRelation::kL:
      classes = group_by(s.size(),
                         [&](ElementId a) { return bits_key(ideals.left[a]); });
      break;
    case GreenRelation::kR:
      classes = group_by(
          s.size(), [&](ElementId a) { return bits_key(ideals.right[a]); });
      break;
    case GreenRelation::kJ:
      classes = group_by(s.size(), [&](ElementId a) {
        return bits_key(ideals.two_sided[a]);
      });
      break;
    case GreenRelation::kH:
      classes = group_by(s.size(), [&](ElementId a) {
        return std::make_pair(bits_key(ideals.left[a]),
                              bits_key(ideals.right[a]));
      });
      break;
    case GreenRelation::kD: {
      auto const l_classes = group_by(
          s.size(), [&](ElementId a) { return bits_key(ideals.left[a]); });
      auto const r_classes = group_by(
          s.size(), [&](ElementId a) { return bits_key(ideals.right[a]); });
      std::vector<std::size_t> parent(s.size());
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      for (auto const* partition : {&l_classes, &r_classes}) {
        for (auto const& c : *partition) {
          for (ElementId id : c) {
            parent[find_root(parent, id)] = find_root(parent, c.front());
          }
        }
      }
      classes = group_by(s.size(),
                         [&](ElementId a) { return find_root(parent, a); });
      break;
    }
  }
  return finish(relation, s, std::move(classes),
                [&](ElementId id) { return regular[id] != 0; });
}

}  // namespace ordrange
