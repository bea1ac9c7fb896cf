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

#include <numeric>

#include "fixtures.hpp"
#include "krasner/corpus.hpp"
#include "krasner/errors.hpp"
#include "krasner/ideals.hpp"
#include "oracle.hpp"

using namespace krasner;
using fixtures::set;

namespace {
  ElementSet multiples(std::size_t k, std::size_t d) {
    ElementSet out;
    for (std::size_t x = 0; x < k; x += d) {
      out.insert(static_cast<Element>(x));
    }
    return out;
  }

  constexpr HyperidealMode kModes[] = {HyperidealMode::kWeak, HyperidealMode::kStrict};
}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("modular hyperideals are the multiples of divisors") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 3}, {2, 4}}) {
      for (std::size_t k = 1; k <= 12; ++k) {
        CAPTURE(k);
        auto const       z = zk_ring_tables(k, m, n);
        std::vector<ElementSet> expected;
        for (std::size_t d = 1; d <= k; ++d) {
          if (k % d == 0) {
            expected.push_back(multiples(k, d));
          }
        }
        std::sort(expected.begin(), expected.end(),
                  [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
        for (auto mode : kModes) {
          auto got = enumerate_hyperideals(z, mode);
          std::sort(got.begin(), got.end(),
                    [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
          CHECK(got == expected);
        }
      }
    }
  }

  TEST_CASE("primes of Z_6 and the nilradical of Z_4") {
    auto const z6 = build_zk_ring(6, 2, 2);
    std::vector<ElementSet> primes;
    for (ElementSet i : enumerate_hyperideals(z6, HyperidealMode::kWeak, true)) {
      if (is_prime(z6, i, HyperidealMode::kWeak).holds()) {
        primes.push_back(i);
      }
    }
    CHECK(primes.size() == 2);
    CHECK(std::find(primes.begin(), primes.end(), ElementSet{0, 2, 4}) != primes.end());
    CHECK(std::find(primes.begin(), primes.end(), ElementSet{0, 3}) != primes.end());

    auto const z4 = build_zk_ring(4, 2, 2);
    CHECK(radical_powers(z4, ElementSet{0}) == ElementSet{0, 2});
    CHECK(radical_primes(z4, ElementSet{0}, HyperidealMode::kWeak) == ElementSet{0, 2});
  }

  TEST_CASE("{0,2} in the (3,3) example is a weak but not a strict hyperideal") {
    auto const s = k33();
    auto const p = set(s, "0,2");
    CHECK(is_hyperideal(s, p, HyperidealMode::kWeak).holds());
    auto const strict = is_hyperideal(s, p, HyperidealMode::kStrict);
    REQUIRE(strict.fails());
    REQUIRE(strict.counterexample() != nullptr);
    CHECK(strict.counterexample()->rule == "solvability");
    // The smallest is b = 0 with fixed arguments (0,2); b = 0 with (2,2) also
    // has no solution x in P.
    CHECK(strict.counterexample_count == 2);
    CHECK(strict.counterexample()->tuple == std::vector<Element>{0, 0, 2});
    CHECK(strict.counterexamples.at(1).tuple == std::vector<Element>{0, 2, 2});
    CHECK(!oracle::is_hyperideal(s, {0, 2}, true));
    CHECK(oracle::is_hyperideal(s, {0, 2}, false));
  }

  TEST_CASE("hyperideal recognition names the failing rule") {
    auto const z = build_zk_ring(6, 2, 2);
    CHECK(is_hyperideal(z, ElementSet{2, 4}, HyperidealMode::kWeak).counterexample()->rule
          == "zero");
    CHECK(is_hyperideal(z, ElementSet{0, 1}, HyperidealMode::kWeak).counterexample()->rule
          == "f_closure");
    // {0,1} is closed under f in the (3,3) example, but g(1,1,2) = 2.
    CHECK(is_hyperideal(k33(), ElementSet{0, 1}, HyperidealMode::kWeak)
              .counterexample()
              ->rule
          == "absorption");
  }

  TEST_CASE("enumeration agrees with the oracle") {
    for (auto const& s : fixtures::small_corpus(6)) {
      CAPTURE(s.name());
      for (auto mode : kModes) {
        bool const strict = mode == HyperidealMode::kStrict;
        std::vector<ElementSet> expected;
        for (auto const& x : oracle::hyperideals(s, strict)) {
          expected.push_back(oracle::to_mask(x));
        }
        std::sort(expected.begin(), expected.end(),
                  [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
        auto got = enumerate_hyperideals(s, mode);
        std::sort(got.begin(), got.end(),
                  [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("prime, ideal-wise prime and primary agree with the oracle") {
    for (auto const& s : fixtures::small_corpus(6)) {
      CAPTURE(s.name());
      for (auto mode : kModes) {
        bool const strict = mode == HyperidealMode::kStrict;
        for (auto const& x : oracle::all_subsets(s.size())) {
          if (x.empty()) {
            continue;
          }
          ElementSet const i = oracle::to_mask(x);
          CAPTURE(format_set(s, i));
          CHECK(is_prime(s, i, mode).holds() == oracle::is_prime(s, x, strict));
          CHECK(is_prime_idealwise(s, i, mode).holds()
                == oracle::is_prime_idealwise(s, x, strict));
          if (s.one()) {
            CHECK(is_primary(s, i, mode).holds() == oracle::is_primary(s, x, strict));
          }
        }
      }
    }
  }

  TEST_CASE("colons and radicals agree with the oracle") {
    for (auto const& s : fixtures::small_corpus(6)) {
      if (!s.one()) {
        continue;
      }
      CAPTURE(s.name());
      for (ElementSet i : enumerate_hyperideals(s, HyperidealMode::kWeak)) {
        auto const x = oracle::to_set(i);
        CHECK(radical_powers(s, i) == oracle::to_mask(oracle::radical_powers(s, x)));
        CHECK(radical_primes(s, i, HyperidealMode::kWeak)
              == oracle::to_mask(oracle::radical_primes(s, x, false)));
        for (Element a = 0; a < s.size(); ++a) {
          CHECK(colon(s, i, a) == oracle::to_mask(oracle::colon(s, x, a)));
        }
      }
    }
  }

  TEST_CASE("inapplicable outcomes carry their reason") {
    auto const z = build_zk_ring(6, 2, 2);
    auto const whole = is_prime(z, z.carrier(), HyperidealMode::kWeak);
    CHECK(whole.inapplicable());
    CHECK(whole.reason.rfind("proper", 0) == 0);
    auto const not_ideal = is_prime(z, ElementSet{0, 1}, HyperidealMode::kWeak);
    CHECK(not_ideal.inapplicable());
    CHECK(not_ideal.reason.rfind("hyperideal", 0) == 0);
    auto const none = KrasnerStructure("none", z.labels(), z.f_table(), z.g_table(),
                                       0, std::nullopt);
    auto const primary = is_primary(none, ElementSet{0}, HyperidealMode::kWeak);
    CHECK(primary.inapplicable());
    CHECK(primary.reason.rfind("identity", 0) == 0);
    CHECK_THROWS_AS(colon(none, ElementSet{0}, 1), Error);
  }

  TEST_CASE("the (2,4) example's prime counterexamples include (1,2,2,3)") {
    auto const s   = k24();
    auto const out = is_prime(s, ElementSet{0}, HyperidealMode::kWeak);
    REQUIRE(out.fails());
    Counterexample const expected{"prime", {1, 2, 2, 3}, {}, std::nullopt};
    CHECK(std::find(out.counterexamples.begin(), out.counterexamples.end(), expected)
          != out.counterexamples.end());
    CHECK(s.g(std::vector<Element>{1, 2, 2, 3}) == 0);
  }

  TEST_CASE("principal hyperideals in Z_12") {
    auto const z = build_zk_ring(12, 2, 2);
    for (Element x = 0; x < 12; ++x) {
      std::size_t const d = std::gcd<std::size_t>(x, 12);
      CHECK(generated_hyperideal(z, x) == multiples(12, d == 0 ? 12 : d));
    }
  }

  TEST_CASE("smallest hyperideal containing a subset") {
    auto const z = build_zk_ring(12, 2, 2);
    CHECK(smallest_hyperideal_containing(z, ElementSet{4, 6}, HyperidealMode::kWeak)
          == multiples(12, 2));
    CHECK(image_of_ideal_tuple(z, std::vector<ElementSet>{multiples(12, 2), multiples(12, 3)})
          == multiples(12, 6));
  }

  TEST_CASE("radical cross-validation flags only the (2,4) example") {
    for (auto const& s : standard_corpus()) {
      if (!s.one()) {
        continue;
      }
      auto const mismatches = cross_validate_radicals(s, HyperidealMode::kWeak);
      CAPTURE(s.name());
      CHECK(mismatches.empty() == (s.name() != "K24"));
    }
  }

  TEST_CASE("enumeration refuses carriers above the bound") {
    try {
      enumerate_hyperideals(build_zk_ring(20, 2, 2), HyperidealMode::kWeak);
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kBoundExceeded);
    }
    CHECK(enumerate_hyperideals(build_zk_ring(20, 2, 2), HyperidealMode::kWeak, false, 20)
              .size()
          == 6);
  }

  TEST_CASE("mode names round-trip") {
    for (auto mode : kModes) {
      CHECK(parse_mode(to_string(mode)) == mode);
    }
    CHECK_FALSE(parse_mode("medium").has_value());
  }
}
