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

#ifndef ORDRANGE_TESTS_ORACLES_HPP_
#define ORDRANGE_TESTS_ORACLES_HPP_

// Slow, definition-level reimplementations used to check the library. They
// work on plain int vectors and share no code with src/.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Map = std::vector<int>;
using Set = std::set<Map>;
using Partition = std::set<std::set<Map>>;

inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

// Every function {1..n} -> y (|y|^n of them), keeping the weakly increasing
// ones.
inline std::vector<Map> order_preserving(int n, std::vector<int> const& y) {
  std::vector<Map> out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    Map f(n);
    for (int x = 0; x < n; ++x) f[x] = y[digit[x]];
    if (std::is_sorted(f.begin(), f.end())) out.push_back(f);
    int pos = n - 1;
    while (pos >= 0 && ++digit[pos] == y.size()) digit[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// x(fg) = (xf)g.
inline Map compose(Map const& f, Map const& g) {
  Map h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[x] = g[f[x] - 1];
  return h;
}

inline std::set<int> image(Map const& f) { return {f.begin(), f.end()}; }

inline bool regular(Map const& a, std::vector<Map> const& s) {
  return std::any_of(s.begin(), s.end(), [&](Map const& b) {
    return compose(compose(a, b), a) == a;
  });
}

inline Set closure(std::vector<Map> const& gens) {
  Set all(gens.begin(), gens.end());
  std::vector<Map> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Map> next;
    for (auto const& f : frontier) {
      for (auto const& g : gens) {
        Map h = compose(f, g);
        if (all.insert(h).second) next.push_back(h);
      }
    }
    frontier.swap(next);
  }
  return all;
}

inline bool contains_identity(std::vector<Map> const& s) {
  for (auto const& e : s) {
    bool ok = true;
    for (auto const& f : s) ok = ok && compose(e, f) == f && compose(f, e) == f;
    if (ok) return true;
  }
  return false;
}

enum class Side { kLeft, kRight, kTwo };

// S^1 a, a S^1 or S^1 a S^1.
inline Set ideal(Map const& a, std::vector<Map> const& s, Side side) {
  std::vector<Map> one(s);
  Map id(a.size());
  std::iota(id.begin(), id.end(), 1);
  one.push_back(id);
  Set out;
  for (auto const& p : one) {
    for (auto const& q : one) {
      if (side == Side::kLeft && q != id) continue;
      if (side == Side::kRight && p != id) continue;
      out.insert(compose(compose(p, a), q));
    }
  }
  return out;
}

inline Partition group_by(std::vector<Map> const& s,
                          std::vector<Set> const& key) {
  std::map<Set, std::set<Map>> groups;
  for (std::size_t i = 0; i < s.size(); ++i) groups[key[i]].insert(s[i]);
  Partition out;
  for (auto& [k, members] : groups) out.insert(members);
  return out;
}

struct Green {
  Partition l, r, h, d, j;
};

inline Green green(std::vector<Map> const& s) {
  std::vector<Set> left, right, two;
  for (auto const& a : s) {
    left.push_back(ideal(a, s, Side::kLeft));
    right.push_back(ideal(a, s, Side::kRight));
    two.push_back(ideal(a, s, Side::kTwo));
  }
  Green g;
  g.l = group_by(s, left);
  g.r = group_by(s, right);
  g.j = group_by(s, two);
  std::map<std::pair<Set, Set>, std::set<Map>> hm;
  for (std::size_t i = 0; i < s.size(); ++i) hm[{left[i], right[i]}].insert(s[i]);
  for (auto& [k, members] : hm) g.h.insert(members);
  // D: connected components of L union R.
  std::vector<std::size_t> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (left[a] == left[b] || right[a] == right[b]) parent[find(a)] = find(b);
    }
  }
  std::map<std::size_t, std::set<Map>> dm;
  for (std::size_t a = 0; a < s.size(); ++a) dm[find(a)].insert(s[a]);
  for (auto& [k, members] : dm) g.d.insert(members);
  return g;
}

// Total maps in O_n(Y) agreeing with theta (domain[i] -> images[i]).
inline std::vector<Map> extensions(int n, std::vector<int> const& y,
                                   std::vector<int> const& domain,
                                   std::vector<int> const& images) {
  std::vector<Map> out;
  for (auto const& f : order_preserving(n, y)) {
    bool ok = true;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      ok = ok && f[domain[i] - 1] == images[i];
    }
    if (ok) out.push_back(f);
  }
  return out;
}

// Minimum size of a subset of s whose closure is s (no identity for free).
inline std::size_t rank(std::vector<Map> const& s) {
  Set const target(s.begin(), s.end());
  for (std::size_t k = 1; k <= s.size(); ++k) {
    std::vector<char> pick(s.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), 1);
    do {
      std::vector<Map> gens;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (pick[i]) gens.push_back(s[i]);
      }
      if (closure(gens) == target) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return s.size();
}

inline std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> y;
    for (int p = 1; p <= n; ++p) {
      if (mask & (1u << (p - 1))) y.push_back(p);
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace oracle

#endif  // ORDRANGE_TESTS_ORACLES_HPP_
