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

#ifndef ORDRANGE_GENERATORS_HPP_
#define ORDRANGE_GENERATORS_HPP_

// Rank of O_n(Y) and a generating set of minimum size.
//
// Notation, for Y = {y_1 < ... < y_r} with 1 < r < n:
//   A    maps with image exactly Y (one per convex partition of weight r);
//   B_i  regular maps with image Y \ {y_i};
//   C_j  all maps with image Y \ {y_j};
//   eps_i       the partial identity on Y \ {y_i};
//   eps_{1,i}   y_t -> y_{t+1} for t <= i-2, identity on y_i..y_r (3 <= i <= r);
//   eps_{r,j}   identity on y_1..y_{j-1}, y_t -> y_{t-1} for t > j
//               (2 <= j <= r-1).
// Each eps is turned into a total map with canonical_hat or canonical_tilde.
// An element y of Y is captive when y is 1 or n, or both y - 1 and y + 1 are
// in Y. The rank is C(n-1, r-1) + (number of captive elements).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordrange/binomial.hpp"
#include "ordrange/chain.hpp"
#include "ordrange/semigroup_table.hpp"

namespace ordrange {

enum class Extension { kHat, kTilde };

enum class GeneratorKind {
  kA,            // element of A
  kEpsilon,      // eps_i (hat or tilde)
  kEpsilonOneI,  // eps_{1,i}
  kEpsilonRJ,    // eps_{r,j}
};

// Where a generator comes from. index is i for eps_i and eps_{1,i}, j for
// eps_{r,j}, unused for A.
struct Provenance {
  GeneratorKind kind = GeneratorKind::kA;
  Extension extension = Extension::kHat;
  std::size_t index = 0;
  // Kernel of an A element.
  std::optional<ConvexPartition> kernel;

  // "A", "eps_hat_3", "eps_tilde_1", "eps_1_4_tilde", "eps_r_2_hat".
  std::string tag() const;
  bool operator==(Provenance const&) const = default;
};

// Elements of Y that are 1, n, or have both neighbours in Y.
PointSet captive_set(RangeSet const& y);

// C(n-1, r-1) + |captive| for 1 < r < n; 1 for r = 1; n for r = n (the rank
// of O_n as a monoid).
BigInt rank_formula(RangeSet const& y);

// A: one map per convex partition of weight r, block t sent to y_t, ordered
// by the kernel's boundary list. Requires r <= n.
std::vector<ChainMap> build_a(RangeSet const& y);

// Index i with Im(alpha) = Y \ {y_i}, when alpha has that image.
std::optional<std::size_t> missing_index(ChainMap const& alpha,
                                         RangeSet const& y);

// Hat/tilde extension of eps_i (1 <= i <= r, r >= 2).
ChainMap build_epsilon(std::size_t i, Extension ext, RangeSet const& y);
// Extension of eps_{1,i} (3 <= i <= r).
ChainMap build_epsilon_1i(std::size_t i, Extension ext, RangeSet const& y);
// Extension of eps_{r,j} (2 <= j <= r-1).
ChainMap build_epsilon_rj(std::size_t j, Extension ext, RangeSet const& y);

struct Factorization {
  ChainMap left;
  ChainMap right;
};

// alpha with |Im| = r-1 as left * right with |Im(left)| = r and right a
// regular map with |Im| = r-1 (right is the hat extension of the proof's
// partial map).
Factorization factor_max1(ChainMap const& alpha, RangeSet const& y);

// alpha with |Im| = k < r-1 as left * right, both with |Im| = k+1. The two
// missing points u < v are the smallest available.
Factorization factor_max2(ChainMap const& alpha, RangeSet const& y);

// A generator-shaped factor: an element of A or an eps map.
struct Factor {
  Provenance provenance;
  ChainMap map;
};

// alpha in B_k rewritten as base * word[0] * word[1] * ... with base in B_i
// and the word made of tilde eps_{i-1} ... eps_k (k < i) or hat
// eps_{i+1} ... eps_k (k > i).
struct BDecomposition {
  ChainMap base;
  std::vector<Factor> word;
};

BDecomposition decompose_b(ChainMap const& alpha, std::size_t i,
                           RangeSet const& y);

// Witnesses used to shrink the generating set. Each returns factors whose
// product (left to right) equals the stated map; the ChainMap ones are
// elements of A.

// y_1 > 1, alpha in B_1: alpha = f[0] f[1], both in A.
std::vector<Factor> b1_from_a(ChainMap const& alpha, RangeSet const& y);
// y_r < n, alpha in B_r: alpha = f[0] f[1], both in A.
std::vector<Factor> br_from_a(ChainMap const& alpha, RangeSet const& y);
// y_1..y_{i-1} = 1..i-1 and y_i > i (2 <= i <= r), alpha in B_i: factors in
// A and hat eps_i.
std::vector<Factor> bi_from_a_and_epsilon(ChainMap const& alpha,
                                                RangeSet const& y);
// Same prefix condition with 3 <= i <= r: the A element t with
// tilde eps_1 = t * tilde eps_{1,i} and tilde eps_{i-1} = tilde eps_{1,i} * t.
ChainMap tilde_pair_witness(std::size_t i, RangeSet const& y);
// y_j..y_r = n-r+j..n and y_{j-1} < n-r+j-1 (2 <= j <= r-1): the A element t
// with hat eps_r = t * hat eps_{r,j} and hat eps_j = hat eps_{r,j} * t.
ChainMap hat_pair_witness(std::size_t j, RangeSet const& y);
// For 2 <= k <= r-1 with y_k + 1 < y_{k+1}, or with y_{k-1} < y_k - 1 and
// y_k < n-r+k: elements of A whose product is hat eps_k.
std::vector<ChainMap> epsilon_hat_from_a(std::size_t k, RangeSet const& y);

// A generating set of O_n(Y) of size rank_formula(Y), built from the
// case analysis on i = min{k : k not in Y} and on the top run of Y, followed
// by removal of every hat eps_k whose y_k is not captive.
struct GeneratingSet {
  std::vector<ChainMap> members;
  std::vector<Provenance> provenance;
  std::size_t first_gap = 0;  // i
  std::size_t top_run = 0;    // j: {n-r+j..n} in Y, n-r+j-1 not in Y
  std::string case_label;

  std::optional<std::size_t> find(ChainMap const& f) const;
  std::optional<std::size_t> find(GeneratorKind kind, Extension ext,
                                  std::size_t index) const;
};

GeneratingSet build_generating_set(RangeSet const& y);

// A word over gs.members (indices) whose product is alpha, obtained by
// running the constructive factorizations down to generators.
std::vector<std::size_t> express_in_generators(ChainMap const& alpha,
                                               RangeSet const& y,
                                               GeneratingSet const& gs);

// Closure of gens equals S. Throws PreconditionError if a generator is not
// in S.
bool generates(std::span<ChainMap const> gens, SemigroupTable const& s);

// Elements of S that do not lie in the subsemigroup generated by the rest.
std::vector<ElementId> indecomposable_elements(SemigroupTable const& s);

// Exhaustive minimum generating set search. Every generating set contains
// A (each element of A only factors through A and agrees with its factors in
// kernel and image) and the elements of rank r-1 together with A generate
// all lower ranks, so the search runs over A plus subsets of rank r-1
// elements, by increasing size starting from zero. Guarded by
// subset_search_limit() on |O_n(Y)|.
//
// For Y = {1..n} the identity is given for free (monoid rank), matching
// rank_formula; semigroup_rank adds the identity back.
struct RankSearch {
  std::size_t rank = 0;
  std::size_t semigroup_rank = 0;
  bool monoid = false;
  // Every minimum generating set within the search space, each sorted.
  std::vector<std::vector<ChainMap>> minimum_sets;
  std::size_t subsets_tested = 0;
};

RankSearch rank_bruteforce(RangeSet const& y);

}  // namespace ordrange

#endif  // ORDRANGE_GENERATORS_HPP_
