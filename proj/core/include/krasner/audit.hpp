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

// Exhaustive checking of the S-prime and S-primary theorems over a corpus of
// finite structures.
//
// Each theorem is identified by its number ("3.4", "4.7", ...). For every
// instantiation of its hypotheses found in the corpus the conclusion is
// evaluated; a theorem with no instantiation reports HypothesisNotMet.

#ifndef KRASNER_AUDIT_HPP_
#define KRASNER_AUDIT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "constructions.hpp"
#include "ideals.hpp"
#include "s_theory.hpp"
#include "structure.hpp"

namespace krasner {

  enum class AuditStatus { kVerified, kHypothesisNotMet, kViolated };

  std::string_view to_string(AuditStatus status) noexcept;

  struct AuditViolation {
    std::string structure;
    std::string instance;
    std::string detail;

    bool operator==(AuditViolation const&) const = default;
  };

  inline constexpr std::size_t kMaxRecordedViolations = 64;

  struct AuditEntry {
    std::string theorem;
    std::string statement;
    // Which hypotheses were checked and how many structures they excluded.
    std::vector<std::string>    hypotheses;
    std::size_t                 instantiations = 0;
    std::vector<AuditViolation> violations;
    std::size_t                 violation_count = 0;
    AuditStatus                 status = AuditStatus::kHypothesisNotMet;
  };

  // Observations about the corpus that are not theorem violations, such as a
  // designated one that is not a scalar identity or disagreeing radicals.
  struct AuditFinding {
    std::string kind;
    std::string structure;
    std::string detail;
  };

  struct AuditOptions {
    HyperidealMode           mode    = HyperidealMode::kWeak;
    PrimaryReading           reading = PrimaryReading::kPerCoordinate;
    std::vector<std::string> theorems;  // empty selects every theorem
    std::size_t enumeration_bound = kDefaultEnumerationBound;
    std::size_t map_search_bound  = kDefaultMapSearchBound;
    // Largest product used as an extra ambient structure for subhyperrings.
    std::size_t extension_bound = 9;
    // Largest three-fold product used for the cylinder corollary.
    std::size_t triple_product_bound = 32;
  };

  struct AuditReport {
    HyperidealMode            mode    = HyperidealMode::kWeak;
    PrimaryReading            reading = PrimaryReading::kPerCoordinate;
    std::vector<std::string>  corpus;
    std::vector<AuditEntry>   entries;  // sorted by theorem number
    std::vector<AuditFinding> findings;

    [[nodiscard]] bool violated() const noexcept;
  };

  // Every supported theorem id in numeric order.
  std::vector<std::string> const& audit_theorem_ids();

  bool is_audit_theorem(std::string_view id);

  // Throws kInvalidArgument for an unknown theorem id.
  AuditReport audit_theorems(std::span<KrasnerStructure const> corpus,
                             AuditOptions const&               options = {});

}  // namespace krasner

#endif  // KRASNER_AUDIT_HPP_
