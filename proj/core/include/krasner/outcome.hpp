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

#ifndef KRASNER_OUTCOME_HPP_
#define KRASNER_OUTCOME_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"

namespace krasner {

  enum class Verdict { kHolds, kFails, kInapplicable };

  std::string_view to_string(Verdict v) noexcept;

  // One concrete instance refuting a universally quantified condition.
  //
  // `rule` names the violated condition. `tuple` holds the offending elements
  // (for hyperideal solvability: b followed by the fixed arguments). `sets`
  // holds offending hyperideals when the quantifier ranges over those, and
  // `witness` is the candidate s being refuted for existential predicates.
  struct Counterexample {
    std::string            rule;
    std::vector<Element>   tuple;
    std::vector<ElementSet> sets;
    std::optional<Element> witness;

    bool operator==(Counterexample const&) const = default;
  };

  // Only the first few counterexamples are kept; the count covers all.
  inline constexpr std::size_t kMaxRecordedCounterexamples = 64;

  // Three-valued result of every predicate.
  //
  // Holds: for existential predicates `witnesses` lists every valid s.
  // Fails: `counterexamples` lists refuting instances in enumeration order;
  //        the first one is the lexicographically smallest.
  // Inapplicable: a precondition is not met; `reason` says which.
  struct PredicateOutcome {
    Verdict                     verdict = Verdict::kHolds;
    ElementSet                  witnesses;
    std::vector<Counterexample> counterexamples;
    std::size_t                 counterexample_count = 0;
    std::string                 reason;

    [[nodiscard]] bool holds() const noexcept {
      return verdict == Verdict::kHolds;
    }
    [[nodiscard]] bool fails() const noexcept {
      return verdict == Verdict::kFails;
    }
    [[nodiscard]] bool inapplicable() const noexcept {
      return verdict == Verdict::kInapplicable;
    }
    [[nodiscard]] Counterexample const* counterexample() const noexcept {
      return counterexamples.empty() ? nullptr : &counterexamples.front();
    }

    void record(Counterexample c) {
      verdict = Verdict::kFails;
      if (counterexamples.size() < kMaxRecordedCounterexamples) {
        counterexamples.push_back(std::move(c));
      }
      ++counterexample_count;
    }

    static PredicateOutcome inapplicable(std::string reason) {
      PredicateOutcome out;
      out.verdict = Verdict::kInapplicable;
      out.reason  = std::move(reason);
      return out;
    }
  };

}  // namespace krasner

#endif  // KRASNER_OUTCOME_HPP_
