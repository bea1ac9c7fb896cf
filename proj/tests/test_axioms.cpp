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

#include <algorithm>

#include "fixtures.hpp"
#include "krasner/axioms.hpp"
#include "krasner/corpus.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"
#include "oracle.hpp"

using namespace krasner;

namespace {
  void check_against_oracle(KrasnerStructure const& s, bool identity) {
    CAPTURE(s.name());
    AxiomReport const report   = verify_axioms(s, identity);
    auto const        expected = oracle::axioms(s, identity);
    bool              all      = true;
    for (auto const* v : report.verdicts()) {
      if (!v->checked) {
        continue;
      }
      CAPTURE(v->name);
      REQUIRE(expected.count(v->name) == 1);
      CHECK(v->holds == expected.at(v->name));
      CHECK(v->holds == (v->failures == 0));
      all = all && expected.at(v->name);
    }
    CHECK(report.overall == all);
  }
}  // namespace

TEST_SUITE("axioms") {
  TEST_CASE("the (2,4) example satisfies every axiom without the identity") {
    AxiomReport const r = verify_axioms(k24());
    CHECK(r.overall);
    CHECK_FALSE(r.scalar_identity.checked);
  }

  TEST_CASE("the (2,4) example's one is not a scalar identity") {
    AxiomReport const r = verify_axioms(k24(), true);
    CHECK_FALSE(r.overall);
    CHECK_FALSE(r.scalar_identity.holds);
    // Every element other than 0 is sent to 0 by g(x,1,1,1).
    CHECK(r.scalar_identity.failures == 3);
    auto const& all = r.scalar_identity.failing_instances;
    CHECK(std::find(all.begin(), all.end(), "g(2,1,1,1) = 0 != 2") != all.end());
  }

  TEST_CASE("the (3,3) example fails distributivity as printed") {
    // g(1,2,f(0,1,2)) = g(1,2,{0,1,2}) = {0,2} while f(0,2,2) = {2}.
    AxiomReport const r = verify_axioms(k33(), true);
    CHECK_FALSE(r.overall);
    CHECK_FALSE(r.distributive.holds);
    CHECK(r.distributive.failures == 6);
    CHECK(r.distributive.counterexample == std::vector<Element>{1, 2, 0, 1, 2});
    for (auto const* v : r.verdicts()) {
      if (v != &r.distributive) {
        CHECK_MESSAGE(v->holds, v->name);
      }
    }
  }

  TEST_CASE("Z_k under a ternary sum has a unique neutral only for odd k") {
    for (std::size_t k = 1; k <= 8; ++k) {
      CAPTURE(k);
      AxiomReport const r = verify_axioms(zk_ring_tables(k, 3, 3), true);
      CHECK(r.neutral_exists_unique.holds == (k % 2 == 1));
      CHECK(r.overall == (k % 2 == 1));
    }
  }

  TEST_CASE("binary and (2,4) modular rings verify with the identity") {
    for (std::size_t k = 1; k <= 8; ++k) {
      CHECK(verify_axioms(build_zk_ring(k, 2, 2), true).overall);
      CHECK(verify_axioms(build_zk_ring(k, 2, 4), true).overall);
    }
  }

  TEST_CASE("verdicts agree with the full-tuple oracle over the corpus") {
    for (auto const& s : fixtures::small_corpus(6)) {
      check_against_oracle(s, s.one().has_value());
    }
  }

  TEST_CASE("single-entry mutations are judged like the oracle judges them") {
    // Every f and g entry of a few small structures is replaced by another
    // value; each mutant must get the oracle's verdicts.
    std::vector<KrasnerStructure> const bases{
        build_zk_ring(3, 2, 2), build_krasner_quotient(5, {1, 4}),
        build_zk_ring(3, 3, 3), build_zk_ring(2, 2, 4)};
    for (auto const& base : bases) {
      for_each_multiset(base.carrier(), base.m(), [&](std::span<Element const> key) {
        std::vector<Element> const k(key.begin(), key.end());
        ElementSet const           old = base.f(key);
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << base.size()); ++bits) {
          if (ElementSet(bits) != old && (bits % 3 == 0 || bits == 1)) {
            check_against_oracle(fixtures::with_f(base, k, ElementSet(bits)), true);
          }
        }
        return true;
      });
      for_each_multiset(base.carrier(), base.n(), [&](std::span<Element const> key) {
        std::vector<Element> const k(key.begin(), key.end());
        Element const bumped = static_cast<Element>((base.g(key) + 1) % base.size());
        check_against_oracle(fixtures::with_g(base, k, bumped), true);
        return true;
      });
    }
  }

  TEST_CASE("the identity check needs a designated one") {
    auto const z = zk_ring_tables(3, 2, 2);
    auto const none = KrasnerStructure("none", z.labels(), z.f_table(),
                                       z.g_table(), 0, std::nullopt);
    CHECK(verify_axioms(none).overall);
    CHECK_FALSE(has_scalar_identity(none));
    try {
      verify_axioms(none, true);
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kMissingIdentity);
    }
  }

  TEST_CASE("the work bound is enforced") {
    try {
      verify_axioms(build_zk_ring(8, 2, 4), false, 10);
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kBoundExceeded);
    }
  }

  TEST_CASE("zero must be the neutral element") {
    // Relabel Z_3 so that the designated zero is 1, which is not neutral.
    auto const z   = build_zk_ring(3, 2, 2);
    auto const bad = KrasnerStructure("bad", z.labels(), z.f_table(),
                                      z.g_table(), 1, 1);
    AxiomReport const r = verify_axioms(bad);
    CHECK_FALSE(r.neutral_exists_unique.holds);
    CHECK_FALSE(r.overall);
  }
}
