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

#ifndef ORDRANGE_COMPLETABILITY_HPP_
#define ORDRANGE_COMPLETABILITY_HPP_

#include <optional>
#include <span>
#include <vector>

#include "ordrange/chain.hpp"

namespace ordrange {

// Order ideals (downward-closed subsets, including the empty set) of the
// chain formed by the given strictly increasing points: the |A| + 1 prefixes.
std::vector<PointSet> order_ideals(std::span<Point const> points);

// Order-ideal criterion for a partial order-preserving map theta: A -> Y to
// admit a complete extension in O_n(Y). For every order ideal I of A, if some
// point of the chain lies strictly between I and A \ I, then some y in Y lies
// between the images of I and those of A \ I. An empty side imposes no bound.
// Throws RangeError if theta maps outside Y.
bool is_completable(PartialMap const& theta, RangeSet const& y);

// Every gamma in O_n(Y) that agrees with theta on its domain, in
// lexicographic order. Exhaustive filter over O_n(Y).
std::vector<ChainMap> complete_extensions(PartialMap const& theta,
                                          RangeSet const& y);

// One complete extension built directly: points outside the domain take the
// least admissible value for the order ideal of domain points below them.
// Empty exactly when the criterion fails.
std::optional<ChainMap> construct_extension(PartialMap const& theta,
                                            RangeSet const& y);

// Every order-preserving partial map from a nonempty subset of {1..n} into
// Y, ordered by domain (size, then lexicographic) and then images. Throws
// GuardError above the enumeration degree limit.
std::vector<PartialMap> all_partial_maps_into(RangeSet const& y);

// For maps with equal kernels, the bijection Im(alpha) -> Im(beta) that
// matches fibres: a -> b iff a alpha^-1 = b beta^-1. Throws
// PreconditionError if the kernels differ.
PartialMap canonical_order_iso(ChainMap const& alpha, ChainMap const& beta);

// theta and its inverse are both completable in O_n(Y). Defined for
// order-isomorphisms between subchains of Y: throws PreconditionError if
// theta is not injective and RangeError if its domain or image leaves Y.
bool is_bicompletable(PartialMap const& theta, RangeSet const& y);

// The general (any chain) description of R on O(X, Y): alpha = beta, or the
// kernels agree and the canonical order-isomorphism is bicompletable.
bool r_related_by_completion(ChainMap const& alpha, ChainMap const& beta,
                             RangeSet const& y);

}  // namespace ordrange

#endif  // ORDRANGE_COMPLETABILITY_HPP_
