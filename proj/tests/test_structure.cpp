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

#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"
#include "krasner/structure.hpp"

using namespace krasner;

namespace {
  KrasnerStructure tiny(std::vector<std::string> labels) {
    auto f = HyperOperationTable::tabulate(2, 2, [](std::span<Element const> xs) {
      return ElementSet::singleton(static_cast<Element>((xs[0] + xs[1]) % 2));
    });
    auto g = OperationTable::tabulate(2, 2, [](std::span<Element const> xs) {
      return static_cast<Element>(xs[0] * xs[1]);
    });
    return KrasnerStructure("tiny", std::move(labels), std::move(f), std::move(g), 0, 1);
  }
}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("element sets behave as bitmasks") {
    ElementSet a{0, 2, 5};
    CHECK(a.size() == 3);
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(1));
    CHECK(a.min() == 0);
    CHECK(a.elements() == std::vector<Element>{0, 2, 5});
    CHECK(ElementSet{2}.subset_of(a));
    CHECK((a & ElementSet{5, 6}) == ElementSet{5});
    CHECK((a - ElementSet{0}) == ElementSet{2, 5});
    CHECK(ElementSet::full(64).size() == 64);
    CHECK(ElementSet::full(0).empty());
  }

  TEST_CASE("multisets are enumerated once each in lexicographic order") {
    std::vector<std::vector<Element>> seen;
    for_each_multiset(ElementSet{0, 1, 2}, 2, [&](std::span<Element const> xs) {
      seen.emplace_back(xs.begin(), xs.end());
      return true;
    });
    CHECK(seen == std::vector<std::vector<Element>>{
                      {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
    CHECK(multiset_count(3, 2) == 6);
    CHECK(multiset_count(8, 7) == 3432);
    CHECK(multiset_count(64, 8) == 10639125640ULL);
    CHECK(multiset_count(0, 3) == 0);
    CHECK(multiset_count(5, 0) == 1);
  }

  TEST_CASE("multiset count matches enumeration") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t k = 1; k <= 5; ++k) {
        std::uint64_t visited = 0;
        for_each_multiset(ElementSet::full(n), k, [&](auto) {
          ++visited;
          return true;
        });
        CHECK(visited == multiset_count(n, k));
      }
    }
  }

  TEST_CASE("tables are symmetric by construction") {
    auto const s = k33();
    std::vector<Element> a{1, 2, 0};
    std::vector<Element> b{0, 1, 2};
    std::vector<Element> c{2, 0, 1};
    CHECK(s.f(a) == s.f(b));
    CHECK(s.f(b) == s.f(c));
    CHECK(s.f(b) == ElementSet{0, 1, 2});
    CHECK(s.g(std::vector<Element>{2, 1, 1}) == 2);
  }

  TEST_CASE("construction rejects malformed labels") {
    CHECK_THROWS_AS(tiny({"a", "a"}), Error);
    CHECK_THROWS_AS(tiny({"a", ""}), Error);
    CHECK_THROWS_AS(tiny({"a", "b,c"}), Error);
    CHECK_NOTHROW(tiny({"a", "b"}));
    try {
      tiny({"x", "x"});
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kDuplicateLabel);
    }
  }

  TEST_CASE("checked evaluation validates arity and range") {
    auto const s = k33();
    CHECK_THROWS_AS(eval_f(s, std::vector<Element>{0, 1}), Error);
    CHECK_THROWS_AS(eval_g(s, std::vector<Element>{0, 1, 7}), Error);
    CHECK(eval_g(s, std::vector<Element>{1, 1, 1}) == 1);
  }

  TEST_CASE("labels parse and format") {
    auto const s = k24();
    CHECK(parse_label_set(s, "0,2") == ElementSet{0, 2});
    CHECK(parse_label_set(s, "").empty());
    CHECK_THROWS_AS(parse_label_set(s, "0,9"), Error);
    CHECK(format_set(s, ElementSet{1, 3}) == "{1,3}");
    CHECK(format_tuple(s, std::vector<Element>{1, 2, 2, 3}) == "(1,2,2,3)");
  }

  TEST_CASE("power orbits are eventually periodic") {
    auto const z = build_zk_ring(4, 2, 2);
    auto const orbit = power_orbit(z, 2);
    REQUIRE(!orbit.values.empty());
    CHECK(orbit.values.front() == 0);
    auto const unit = power_orbit(z, 3);
    CHECK(unit.period() >= 1);
  }

  TEST_CASE("units and inverses of Z_6") {
    auto const z = build_zk_ring(6, 2, 2);
    CHECK(units(z) == ElementSet{1, 5});
    CHECK(inverse_of(z, 2) == 4);
    CHECK(binary_product(z, 2, 3) == 0);
  }
}
