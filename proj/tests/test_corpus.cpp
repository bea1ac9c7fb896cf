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

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "krasner/axioms.hpp"
#include "krasner/corpus.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

using namespace krasner;

namespace {
  std::string read_file(std::string const& path) {
    std::ifstream      in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  ErrorCode parse_code(std::string const& text) {
    try {
      parse_structure(text);
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::kInvalidArgument;
  }

  std::string replace(std::string text, std::string const& from, std::string const& to) {
    auto const at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
  }

  bool same_tables(KrasnerStructure const& a, KrasnerStructure const& b) {
    if (a.size() != b.size() || a.m() != b.m() || a.n() != b.n()) {
      return false;
    }
    bool same = true;
    for_each_multiset(a.carrier(), a.m(), [&](std::span<Element const> xs) {
      same = same && a.f(xs) == b.f(xs);
      return same;
    });
    for_each_multiset(a.carrier(), a.n(), [&](std::span<Element const> xs) {
      same = same && a.g(xs) == b.g(xs);
      return same;
    });
    return same;
  }

  std::string const kTiny = R"({
  "name": "tiny",
  "m": 2,
  "n": 2,
  "carrier": ["0", "1"],
  "zero": "0",
  "one": "1",
  "f": {
    "0,0": [0],
    "0,1": [1],
    "1,1": [0]
  },
  "g": {
    "0,0": 0,
    "0,1": 0,
    "1,1": 1
  }
}
)";
}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("golden files match the builders byte for byte") {
    std::string const dir = KRASNER_DATA_DIR;
    CHECK(read_file(dir + "/k33.json") == serialize_structure(k33()));
    CHECK(read_file(dir + "/k24.json") == serialize_structure(k24()));
  }

  TEST_CASE("golden files carry the worked tables") {
    std::string const dir = KRASNER_DATA_DIR;
    auto const k33s = load_structure(dir + "/k33.json");
    CHECK(k33s.f(std::vector<Element>{1, 1, 2}) == ElementSet{0, 1, 2});
    CHECK(k33s.m() == 3);
    CHECK(k33s.n() == 3);
    auto const k24s = load_structure(dir + "/k24.json");
    CHECK(k24s.f(std::vector<Element>{1, 1}) == ElementSet{0, 1});
    CHECK(k24s.f(std::vector<Element>{1, 3}) == ElementSet{2, 3});
    CHECK(k24s.f(std::vector<Element>{3, 3}) == ElementSet{0, 1});
    CHECK(k24s.m() == 2);
    CHECK(k24s.n() == 4);
  }

  TEST_CASE("parse and serialize round-trip") {
    for (auto const& s : standard_corpus()) {
      CAPTURE(s.name());
      std::string const text = serialize_structure(s);
      auto const        back = parse_structure(text);
      CHECK(back.name() == s.name());
      CHECK(back.labels() == s.labels());
      CHECK(back.zero() == s.zero());
      CHECK(back.one() == s.one());
      CHECK(same_tables(back, s));
      CHECK(serialize_structure(back) == text);
    }
  }

  TEST_CASE("serialization canonicalizes key order and spacing") {
    std::string const shuffled = R"({"g": {"1,1": 1, "0,1": 0, "0,0": 0},
      "f": {"1,1": [0], "0,0": [0], "0,1": [1]},
      "one": "1", "zero": "0", "carrier": ["0","1"], "n": 2, "m": 2, "name": "tiny"})";
    CHECK(serialize_structure(parse_structure(shuffled)) == kTiny);
    CHECK(serialize_structure(parse_structure(kTiny)) == kTiny);
  }

  TEST_CASE("the one may be absent") {
    std::string text = replace(kTiny, "  \"one\": \"1\",\n", "");
    auto const  s    = parse_structure(text);
    CHECK_FALSE(s.one().has_value());
    CHECK(serialize_structure(s) == text);
  }

  TEST_CASE("malformed documents are rejected with the right code") {
    CHECK(parse_code(replace(kTiny, "    \"0,1\": [1],\n", "")) == ErrorCode::kMissingEntry);
    CHECK(parse_code(replace(kTiny, "\"0,1\": [1]", "\"0,1\": [1],\n    \"0,1\": [1]"))
          == ErrorCode::kDuplicateKey);
    CHECK(parse_code(replace(kTiny, "\"0,1\": [1]", "\"1,0\": [1]")) == ErrorCode::kUnsortedKey);
    CHECK(parse_code(replace(kTiny, "\"0,1\": [1]", "\"0,1\": [2]"))
          == ErrorCode::kIndexOutOfRange);
    CHECK(parse_code(replace(kTiny, "\"1,1\": 1", "\"1,1\": 5")) == ErrorCode::kIndexOutOfRange);
    CHECK(parse_code(replace(kTiny, "\"0,1\": [1]", "\"0,1\": []")) == ErrorCode::kParseError);
    CHECK(parse_code(replace(kTiny, "[\"0\", \"1\"]", "[\"0\", \"0\"]"))
          == ErrorCode::kDuplicateLabel);
    CHECK(parse_code(replace(kTiny, "\"one\": \"1\"", "\"one\": \"7\"")) == ErrorCode::kUnknownLabel);
    CHECK(parse_code(replace(kTiny, "\"name\"", "\"title\"")) == ErrorCode::kParseError);
    CHECK(parse_code(replace(kTiny, "\"m\": 2", "\"m\": 9")) == ErrorCode::kParseError);
    CHECK(parse_code(replace(kTiny, "\"0,1\": [1]", "\"0,x\": [1]")) == ErrorCode::kParseError);
    CHECK(parse_code("{") == ErrorCode::kParseError);
  }

  TEST_CASE("modular rings") {
    auto const z1 = build_zk_ring(1, 2, 2);
    CHECK(z1.size() == 1);
    CHECK(z1.one() == z1.zero());
    CHECK(build_zk_ring(6, 2, 4).name() == "Z6(2,4)");
    CHECK_THROWS_AS(build_zk_ring(4, 3, 3), Error);
    CHECK_NOTHROW(build_zk_ring(5, 3, 3));
    CHECK_THROWS_AS(build_zk_ring(0, 2, 2), Error);
  }

  TEST_CASE("Krasner quotients of modular rings") {
    auto const q5 = build_krasner_quotient(5, {1, 4});
    CHECK(q5.labels() == std::vector<std::string>{"0", "1", "2"});
    CHECK(q5.f(std::vector<Element>{1, 1}) == ElementSet{0, 2});
    CHECK(verify_axioms(q5, true).overall);
    auto const q7 = build_krasner_quotient(7, {1, 2, 4});
    CHECK(q7.size() == 3);
    CHECK(verify_axioms(q7, true).overall);
    CHECK(same_tables(build_krasner_quotient(6, {1}), build_zk_ring(6, 2, 2)));
    CHECK_THROWS_AS(build_krasner_quotient(6, {1, 2}), Error);
    CHECK_THROWS_AS(build_krasner_quotient(7, {2, 4}), Error);
  }

  TEST_CASE("the standard corpus") {
    auto const corpus = standard_corpus();
    CHECK(corpus.size() == 28);
    CHECK(corpus[0].name() == "K33");
    CHECK(corpus[1].name() == "K24");
    std::size_t verified = 0;
    for (auto const& s : corpus) {
      verified += verify_axioms(s).overall ? 1 : 0;
    }
    // K33 and the four even moduli under a ternary sum fail.
    CHECK(verified == 23);
  }

  TEST_CASE("files are written and read back") {
    auto const path = std::filesystem::temp_directory_path() / "krasner_corpus_test.json";
    save_structure(k24(), path);
    CHECK(read_file(path.string()) == serialize_structure(k24()));
    CHECK(same_tables(load_structure(path), k24()));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_structure(path), Error);
  }
}
