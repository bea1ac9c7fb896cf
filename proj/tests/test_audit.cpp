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

#include "krasner/audit.hpp"
#include "krasner/corpus.hpp"
#include "krasner/errors.hpp"
#include "krasner/render.hpp"

using namespace krasner;

namespace {
  std::vector<KrasnerStructure> mini_corpus() {
    std::vector<KrasnerStructure> out = paper_examples();
    for (std::size_t k = 2; k <= 6; ++k) {
      out.push_back(build_zk_ring(k, 2, 2));
    }
    out.push_back(build_zk_ring(3, 3, 3));
    out.push_back(build_zk_ring(4, 2, 4));
    return out;
  }

  AuditEntry const& entry(AuditReport const& r, std::string const& id) {
    auto it = std::find_if(r.entries.begin(), r.entries.end(),
                           [&](AuditEntry const& e) { return e.theorem == id; });
    REQUIRE(it != r.entries.end());
    return *it;
  }

  bool has_finding(AuditReport const& r, std::string const& kind, std::string const& name) {
    return std::any_of(r.findings.begin(), r.findings.end(), [&](AuditFinding const& f) {
      return f.kind == kind && f.structure == name;
    });
  }
}  // namespace

TEST_SUITE("audit") {
  TEST_CASE("theorem ids are listed in numeric order") {
    auto const& ids = audit_theorem_ids();
    CHECK(ids.size() == 16);
    CHECK(ids.front() == "3.4");
    CHECK(ids.back() == "4.7");
    CHECK(is_audit_theorem("3.14"));
    CHECK_FALSE(is_audit_theorem("3.13"));
    CHECK_FALSE(is_audit_theorem("banana"));
  }

  TEST_CASE("every theorem holds on a small corpus") {
    auto const corpus = mini_corpus();
    for (auto mode : {HyperidealMode::kWeak, HyperidealMode::kStrict}) {
      CAPTURE(to_string(mode));
      AuditOptions options;
      options.mode     = mode;
      auto const report = audit_theorems(corpus, options);
      CHECK_FALSE(report.violated());
      REQUIRE(report.entries.size() == 16);
      for (auto const& e : report.entries) {
        CAPTURE(e.theorem);
        CHECK(e.status == AuditStatus::kVerified);
        CHECK(e.instantiations > 0);
        CHECK(e.violations.empty());
      }
      CHECK(report.corpus.size() == corpus.size());
    }
  }

  TEST_CASE("structures failing the axioms are excluded with a finding") {
    auto const report = audit_theorems(paper_examples());
    CHECK(has_finding(report, "axioms", "K33"));
    CHECK_FALSE(has_finding(report, "axioms", "K24"));
    CHECK(has_finding(report, "identity", "K24"));
    CHECK(has_finding(report, "radical", "K24"));
  }

  TEST_CASE("theorem selection") {
    AuditOptions options;
    options.theorems = {"4.6", "3.4"};
    auto const report = audit_theorems(mini_corpus(), options);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].theorem == "3.4");
    CHECK(report.entries[1].theorem == "4.6");
    options.theorems = {"9.9"};
    try {
      audit_theorems(mini_corpus(), options);
      FAIL("expected an error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kInvalidArgument);
    }
  }

  TEST_CASE("an empty corpus meets no hypothesis") {
    auto const report = audit_theorems(std::vector<KrasnerStructure>{});
    CHECK_FALSE(report.violated());
    for (auto const& e : report.entries) {
      CHECK(e.status == AuditStatus::kHypothesisNotMet);
      CHECK(e.instantiations == 0);
    }
  }

  TEST_CASE("the any-coordinate reading of S-primary is refuted") {
    AuditOptions options;
    options.reading  = PrimaryReading::kAnyCoordinate;
    options.theorems = {"4.3", "4.4", "4.5"};
    auto const report = audit_theorems(standard_corpus(), options);
    CHECK(report.violated());
    for (auto const& id : options.theorems) {
      CAPTURE(id);
      auto const& e = entry(report, id);
      CHECK(e.status == AuditStatus::kViolated);
      CHECK(e.violation_count == e.violations.size());
      CHECK_FALSE(e.violations.front().structure.empty());
      CHECK_FALSE(e.violations.front().detail.empty());
    }
  }

  TEST_CASE("reports are deterministic") {
    AuditOptions options;
    options.theorems = {"3.6", "3.14", "4.7"};
    auto const a = render(audit_theorems(mini_corpus(), options), Format::kJson);
    auto const b = render(audit_theorems(mini_corpus(), options), Format::kJson);
    CHECK(a == b);
  }
}
