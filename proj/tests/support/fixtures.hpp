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

#ifndef KRASNER_TESTS_FIXTURES_HPP_
#define KRASNER_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "krasner/corpus.hpp"
#include "krasner/structure.hpp"

namespace fixtures {

  using krasner::Element;
  using krasner::ElementSet;
  using krasner::KrasnerStructure;

  inline ElementSet set(KrasnerStructure const& s, std::string const& labels) {
    return krasner::parse_label_set(s, labels);
  }

  // The standard corpus restricted to carriers of at most `max_size`
  // elements, small enough for the full-tuple oracle.
  inline std::vector<KrasnerStructure> small_corpus(std::size_t max_size = 6) {
    std::vector<KrasnerStructure> out;
    for (auto& s : krasner::standard_corpus()) {
      if (s.size() <= max_size) {
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  // A copy of `s` whose f returns `value` on the multiset `key`.
  inline KrasnerStructure with_f(KrasnerStructure const& s,
                                 std::vector<Element>    key,
                                 ElementSet              value) {
    std::sort(key.begin(), key.end());
    auto f = krasner::HyperOperationTable::tabulate(
        s.size(), s.m(), [&](std::span<Element const> xs) {
          if (std::equal(xs.begin(), xs.end(), key.begin(), key.end())) {
            return value;
          }
          return s.f(xs);
        });
    return KrasnerStructure(s.name() + "'", s.labels(), std::move(f),
                            s.g_table(), s.zero(), s.one());
  }

  // A copy of `s` whose g returns `value` on the multiset `key`.
  inline KrasnerStructure with_g(KrasnerStructure const& s,
                                 std::vector<Element>    key,
                                 Element                 value) {
    std::sort(key.begin(), key.end());
    auto g = krasner::OperationTable::tabulate(
        s.size(), s.n(), [&](std::span<Element const> xs) {
          if (std::equal(xs.begin(), xs.end(), key.begin(), key.end())) {
            return value;
          }
          return s.g(xs);
        });
    return KrasnerStructure(s.name() + "'", s.labels(), s.f_table(),
                            std::move(g), s.zero(), s.one());
  }

}  // namespace fixtures

#endif  // KRASNER_TESTS_FIXTURES_HPP_
