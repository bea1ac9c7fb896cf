// Copyright 2026 The krasnerlab Authors
//
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

// Enumeration of sorted multisets and plain tuples over element pools.
//
// All visitors receive a std::span over an internal buffer that is only valid
// for the duration of the call, and return true to continue or false to stop.
// The enumerators return false iff a visitor stopped them.

#ifndef KRASNER_MULTISET_HPP_
#define KRASNER_MULTISET_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "element_set.hpp"

namespace krasner {

  // Visits every sorted k-multiset over `pool` in lexicographic order.
  template <typename Visitor>
  bool for_each_multiset(ElementSet pool, std::size_t k, Visitor&& visit) {
    std::vector<Element> const values = pool.elements();
    std::vector<Element>       tuple(k);
    if (k == 0) {
      return visit(std::span<Element const>(tuple));
    }
    if (values.empty()) {
      return true;
    }
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      tuple[i] = values[0];
    }
    while (true) {
      if (!visit(std::span<Element const>(tuple))) {
        return false;
      }
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] + 1 == values.size()) {
        --pos;
      }
      if (pos == 0) {
        return true;
      }
      std::size_t const next = idx[pos - 1] + 1;
      for (std::size_t i = pos - 1; i < k; ++i) {
        idx[i]   = next;
        tuple[i] = values[next];
      }
    }
  }

  // Visits every k-tuple over {0, ..., n-1} in lexicographic order.
  template <typename Visitor>
  bool for_each_tuple(std::size_t n, std::size_t k, Visitor&& visit) {
    std::vector<Element> tuple(k, 0);
    if (k == 0) {
      return visit(std::span<Element const>(tuple));
    }
    if (n == 0) {
      return true;
    }
    while (true) {
      if (!visit(std::span<Element const>(tuple))) {
        return false;
      }
      std::size_t pos = k;
      while (pos > 0 && tuple[pos - 1] + 1 == n) {
        tuple[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) {
        return true;
      }
      ++tuple[pos - 1];
    }
  }

  // Visits every distinct sorted sub-multiset of size k of the sorted multiset
  // `whole`, together with its sorted complement, in lexicographic order of
  // the sub-multiset.
  template <typename Visitor>
  bool for_each_split(std::span<Element const> whole,
                      std::size_t              k,
                      Visitor&&                visit) {
    // Run-length encode the sorted input.
    std::vector<Element>     value;
    std::vector<std::size_t> count;
    for (Element e : whole) {
      if (value.empty() || value.back() != e) {
        value.push_back(e);
        count.push_back(0);
      }
      ++count.back();
    }
    std::vector<std::size_t> take(value.size(), 0);
    std::vector<Element>     inner;
    std::vector<Element>     outer;
    inner.reserve(k);
    outer.reserve(whole.size());

    auto emit = [&]() -> bool {
      inner.clear();
      outer.clear();
      for (std::size_t i = 0; i < value.size(); ++i) {
        inner.insert(inner.end(), take[i], value[i]);
        outer.insert(outer.end(), count[i] - take[i], value[i]);
      }
      return visit(std::span<Element const>(inner),
                   std::span<Element const>(outer));
    };

    // Depth-first over runs, taking as many copies as possible first so that
    // sub-multisets come out in lexicographic order.
    auto recurse = [&](auto&& self, std::size_t run, std::size_t left) -> bool {
      if (run == value.size()) {
        return left == 0 ? emit() : true;
      }
      std::size_t const most = left < count[run] ? left : count[run];
      for (std::size_t t = most + 1; t-- > 0;) {
        take[run] = t;
        if (!self(self, run + 1, left - t)) {
          return false;
        }
      }
      take[run] = 0;
      return true;
    };
    return recurse(recurse, 0, k);
  }

  // Number of k-multisets over a pool of size n, saturating at UINT64_MAX.
  std::uint64_t multiset_count(std::size_t n, std::size_t k) noexcept;

}  // namespace krasner

#endif  // KRASNER_MULTISET_HPP_
