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

#include "ordrange/kernels.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "ordrange/errors.hpp"

namespace ordrange::kernels {

namespace {

ElementId lookup(ElementIndex const& index, ChainMap const& f) {
  auto it = index.find(f);
  if (it == index.end()) {
    throw InvariantError("multiplication table: product " + to_string(f) +
                         " is not an element");
  }
  return it->second;
}

// Ideals for a single element, shared by both variants.
void ideals_of(SemigroupTable const& s, std::size_t a, Bitset& left,
               Bitset& right) {
  std::size_t const size = s.size();
  left.resize(size);
  right.resize(size);
  left.set(a);
  right.set(a);
  auto const ida = static_cast<ElementId>(a);
  for (std::size_t x = 0; x < size; ++x) {
    auto const idx = static_cast<ElementId>(x);
    left.set(s.product(idx, ida));
    right.set(s.product(ida, idx));
  }
}

Bitset two_sided_of(PrincipalIdeals const& ideals, std::size_t a) {
  // S^1 a S^1 is the union of the left ideals of the members of a S^1.
  Bitset result = ideals.right[a];
  Bitset const& right = ideals.right[a];
  for (auto x = right.find_first(); x != Bitset::npos;
       x = right.find_next(x)) {
    result |= ideals.left[x];
  }
  return result;
}

bool is_regular_at(SemigroupTable const& s, std::size_t a) {
  auto const ida = static_cast<ElementId>(a);
  for (std::size_t b = 0; b < s.size(); ++b) {
    if (s.product(s.product(ida, static_cast<ElementId>(b)), ida) == ida) {
      return true;
    }
  }
  return false;
}

// Collects the first exception thrown inside a parallel region so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#if defined(_OPENMP)
#pragma omp critical(ordrange_exception_slot)
#endif
      {
        if (!error_) {
          error_ = std::current_exception();
        }
      }
    }
  }
  void rethrow() const {
    if (error_) {
      std::rethrow_exception(error_);
    }
  }

 private:
  std::exception_ptr error_;
};

void check_closure_limit(std::size_t size, std::size_t limit) {
  if (size > limit) {
    throw GuardError("closure: more than " + std::to_string(limit) +
                     " elements (raise ORDRANGE_MAX_ELEMENTS to allow)");
  }
}

std::vector<ChainMap> distinct_generators(std::span<ChainMap const> gens) {
  std::vector<ChainMap> result;
  std::unordered_set<ChainMap> seen;
  for (auto const& g : gens) {
    if (!result.empty() && g.degree() != result.front().degree()) {
      throw DimensionError("closure: generators on different chains");
    }
    if (seen.insert(g).second) {
      result.push_back(g);
    }
  }
  return result;
}

}  // namespace

int max_threads() noexcept {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<ElementId> multiplication_table_serial(
    std::span<ChainMap const> elements, ElementIndex const& index) {
  std::size_t const size = elements.size();
  std::vector<ElementId> table(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      table[a * size + b] = lookup(index, compose(elements[a], elements[b]));
    }
  }
  return table;
}

std::vector<ElementId> multiplication_table_parallel(
    std::span<ChainMap const> elements, ElementIndex const& index) {
  auto const size = static_cast<std::ptrdiff_t>(elements.size());
  std::vector<ElementId> table(elements.size() * elements.size());
  ExceptionSlot slot;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    slot.run([&] {
      for (std::ptrdiff_t b = 0; b < size; ++b) {
        table[static_cast<std::size_t>(a * size + b)] =
            lookup(index, compose(elements[static_cast<std::size_t>(a)],
                                  elements[static_cast<std::size_t>(b)]));
      }
    });
  }
  slot.rethrow();
  return table;
}

PrincipalIdeals principal_ideals_serial(SemigroupTable const& s) {
  std::size_t const size = s.size();
  PrincipalIdeals ideals;
  ideals.left.resize(size);
  ideals.right.resize(size);
  ideals.two_sided.resize(size);
  for (std::size_t a = 0; a < size; ++a) {
    ideals_of(s, a, ideals.left[a], ideals.right[a]);
  }
  for (std::size_t a = 0; a < size; ++a) {
    ideals.two_sided[a] = two_sided_of(ideals, a);
  }
  return ideals;
}

PrincipalIdeals principal_ideals_parallel(SemigroupTable const& s) {
  auto const size = static_cast<std::ptrdiff_t>(s.size());
  PrincipalIdeals ideals;
  ideals.left.resize(s.size());
  ideals.right.resize(s.size());
  ideals.two_sided.resize(s.size());
  ExceptionSlot slot;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    slot.run([&] {
      auto const i = static_cast<std::size_t>(a);
      ideals_of(s, i, ideals.left[i], ideals.right[i]);
    });
  }
  slot.rethrow();
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    auto const i = static_cast<std::size_t>(a);
    ideals.two_sided[i] = two_sided_of(ideals, i);
  }
  return ideals;
}

std::vector<char> regular_flags_serial(SemigroupTable const& s) {
  std::vector<char> flags(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    flags[a] = is_regular_at(s, a) ? 1 : 0;
  }
  return flags;
}

std::vector<char> regular_flags_parallel(SemigroupTable const& s) {
  auto const size = static_cast<std::ptrdiff_t>(s.size());
  std::vector<char> flags(s.size());
  ExceptionSlot slot;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::ptrdiff_t a = 0; a < size; ++a) {
    slot.run([&] {
      auto const i = static_cast<std::size_t>(a);
      flags[i] = is_regular_at(s, i) ? 1 : 0;
    });
  }
  slot.rethrow();
  return flags;
}

std::vector<ChainMap> closure_serial(std::span<ChainMap const> gens,
                                     std::size_t limit) {
  std::vector<ChainMap> const letters = distinct_generators(gens);
  std::vector<ChainMap> elements(letters);
  std::unordered_set<ChainMap> seen(letters.begin(), letters.end());
  check_closure_limit(elements.size(), limit);
  // Right multiplication by generators reaches every finite product.
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (auto const& g : letters) {
      ChainMap product = compose(elements[next], g);
      if (seen.insert(product).second) {
        elements.push_back(std::move(product));
        check_closure_limit(elements.size(), limit);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<ChainMap> closure_parallel(std::span<ChainMap const> gens,
                                       std::size_t limit) {
  std::vector<ChainMap> const letters = distinct_generators(gens);
  std::vector<ChainMap> elements(letters);
  std::unordered_set<ChainMap> seen(letters.begin(), letters.end());
  check_closure_limit(elements.size(), limit);
  std::size_t frontier_begin = 0;
  while (frontier_begin < elements.size()) {
    std::size_t const frontier_end = elements.size();
    auto const width = static_cast<std::ptrdiff_t>(letters.size());
    auto const count =
        static_cast<std::ptrdiff_t>(frontier_end - frontier_begin) * width;
    std::vector<std::vector<Point>> products(static_cast<std::size_t>(count));
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      auto const& f = elements[frontier_begin + static_cast<std::size_t>(t / width)];
      auto const& g = letters[static_cast<std::size_t>(t % width)];
      std::vector<Point> images(f.degree());
      for (std::size_t x = 0; x < images.size(); ++x) {
        images[x] = g(f.images()[x]);
      }
      products[static_cast<std::size_t>(t)] = std::move(images);
    }
    // Merge in a fixed order so the result never depends on scheduling.
    for (auto& images : products) {
      ChainMap product(std::move(images));
      if (seen.insert(product).second) {
        elements.push_back(std::move(product));
        check_closure_limit(elements.size(), limit);
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

}  // namespace ordrange::kernels
