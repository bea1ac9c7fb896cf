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

#include <json.hpp>

#include "fixtures.hpp"
#include "krasner/axioms.hpp"
#include "krasner/constructions.hpp"
#include "krasner/corpus.hpp"
#include "krasner/ideals.hpp"
#include "krasner/render.hpp"

using namespace krasner;
using fixtures::set;
using Json = nlohmann::json;

TEST_SUITE("render") {
  TEST_CASE("format names") {
    CHECK(parse_format("text") == Format::kText);
    CHECK(parse_format("json") == Format::kJson);
    CHECK_FALSE(parse_format("yaml").has_value());
  }

  TEST_CASE("axiom report") {
    auto const s    = k33();
    auto const r    = verify_axioms(s);
    auto const text = render(s, r, Format::kText);
    CHECK(text.starts_with("K33: (m,n) = (3,3), 3 elements\n"));
    CHECK(text.find("distributive") != std::string::npos);
    CHECK(text.ends_with("overall: fails\n"));

    auto const j = Json::parse(render(s, r, Format::kJson));
    CHECK(j["structure"]["name"] == "K33");
    CHECK(j["structure"]["size"] == 3);
    CHECK(j["overall"] == false);
    REQUIRE(j["axioms"].is_array());
    bool found = false;
    for (auto const& a : j["axioms"]) {
      if (a["name"] == "distributive") {
        found = true;
        CHECK(a["holds"] == false);
        CHECK(a["failures"] == 6);
      } else if (a["checked"] == true) {
        CHECK(a["holds"] == true);
      }
    }
    CHECK(found);
  }

  TEST_CASE("classification") {
    auto const s = k24();
    auto const c = classify(s, set(s, "0"), set(s, "2,3"), HyperidealMode::kWeak);
    CHECK(c.hyperideal.holds());
    CHECK(c.prime.fails());
    CHECK(c.s_prime.holds());
    CHECK(c.s_prime.witnesses == set(s, "2,3"));

    auto const j = Json::parse(render(s, c, Format::kJson));
    CHECK(j["ideal"] == Json::array({"0"}));
    CHECK(j["mult"] == Json::array({"2", "3"}));
    CHECK(j["mode"] == "weak");
    CHECK(j["reading"] == to_string(PrimaryReading::kPerCoordinate));
    CHECK(j["s_prime"]["verdict"] == "Holds");
    CHECK(j["s_prime"]["witnesses"] == Json::array({"2", "3"}));
    CHECK(j["prime"]["verdict"] == "Fails");
    CHECK(j["prime"]["counterexample_count"] == 10);
    auto const& first = j["prime"]["counterexamples"][0];
    CHECK(first["rule"] == "prime");
    CHECK(first["tuple"] == Json::array({"1", "1", "1", "1"}));
    CHECK(first["witness"].is_null());

    auto const text = render(s, c, Format::kText);
    CHECK(text.find("I = {0}, S = {2,3}, mode weak\n") != std::string::npos);
    CHECK(text.find("  s_prime: Holds, witnesses {2,3}\n") != std::string::npos);
    CHECK(text.find("  prime: Fails, prime (1,1,1,1) (10 counterexamples)\n")
          != std::string::npos);
  }

  TEST_CASE("classification without a multiplicative subset") {
    auto const s = build_zk_ring(6, 2, 2);
    auto const c = classify(s, set(s, "0,2,4"), std::nullopt, HyperidealMode::kStrict);
    CHECK(c.prime.holds());
    CHECK(c.s_prime.inapplicable());
    auto const j = Json::parse(render(s, c, Format::kJson));
    CHECK(j["mult"].is_null());
    CHECK(j["s_primary"]["verdict"] == "Inapplicable");
    CHECK(j["s_primary"]["reason"] == "multiplicative: no subset given");
  }

  TEST_CASE("hyperideal lists") {
    auto const s      = build_zk_ring(6, 2, 2);
    auto const ideals = enumerate_hyperideals(s, HyperidealMode::kStrict);
    auto const j      = Json::parse(render_ideals(s, ideals, HyperidealMode::kStrict, Format::kJson));
    CHECK(j["count"] == 4);
    CHECK(j["ideals"][0] == Json::array({"0"}));
    CHECK(render_ideals(s, ideals, HyperidealMode::kStrict, Format::kText)
          == "Z6(2,2): (m,n) = (2,2), 6 elements\n4 strict hyperideals\n"
             "  {0}\n  {0,3}\n  {0,2,4}\n  {0,1,2,3,4,5}\n");
  }

  TEST_CASE("radicals") {
    auto const s = build_zk_ring(4, 2, 2);
    auto const r = radical_report(s, set(s, "0"), HyperidealMode::kWeak);
    CHECK(render(s, r, Format::kText)
          == "Z4(2,2): (m,n) = (2,2), 4 elements\nrad {0} = {0,2} (powers)\n"
             "rad {0} = {0,2} (primes)\n");
    auto const j = Json::parse(render(s, r, Format::kJson));
    CHECK(j["agree"] == true);
    CHECK(j["radical_powers"] == Json::array({"0", "2"}));
  }

  TEST_CASE("quotients") {
    auto const s = build_zk_ring(8, 2, 2);
    auto const q = quotient(s, set(s, "0,4"));
    auto const j = Json::parse(render(q, Format::kJson));
    CHECK(j["cosets"].size() == 4);
    CHECK(j["quotient"]["size"] == 4);
    CHECK(render(q, Format::kText).find("4 cosets\n") != std::string::npos);
  }

  TEST_CASE("output is byte-stable") {
    auto const s = k24();
    auto const c = classify(s, set(s, "0,1"), set(s, "2,3"), HyperidealMode::kWeak);
    for (auto f : {Format::kText, Format::kJson}) {
      auto const a = render(s, c, f);
      CHECK(a == render(s, c, f));
      CHECK(a.ends_with("\n"));
    }
    auto const j = render(s, c, Format::kJson);
    CHECK(j.find("{\n  \"structure\"") == 0);
  }
}
