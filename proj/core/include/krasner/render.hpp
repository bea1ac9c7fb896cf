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

// Text and JSON reports for the command-line tool. JSON output is
// byte-deterministic: keys keep insertion order and sets are listed by
// element index.

#ifndef KRASNER_RENDER_HPP_
#define KRASNER_RENDER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "audit.hpp"
#include "axioms.hpp"
#include "constructions.hpp"
#include "element_set.hpp"
#include "ideals.hpp"
#include "outcome.hpp"
#include "s_theory.hpp"
#include "structure.hpp"

namespace krasner {

  enum class Format { kText, kJson };

  std::optional<Format> parse_format(std::string_view text) noexcept;

  // The five predicates for one hyperideal candidate and an optional
  // multiplicative subset. Without a subset both S-predicates are
  // Inapplicable.
  struct Classification {
    ElementSet                ideal;
    std::optional<ElementSet> mult;
    HyperidealMode            mode    = HyperidealMode::kWeak;
    PrimaryReading            reading = PrimaryReading::kPerCoordinate;
    PredicateOutcome          hyperideal;
    PredicateOutcome          prime;
    PredicateOutcome          primary;
    PredicateOutcome          s_prime;
    PredicateOutcome          s_primary;
  };

  Classification classify(KrasnerStructure const&   s,
                          ElementSet                ideal,
                          std::optional<ElementSet> mult,
                          HyperidealMode            mode,
                          PrimaryReading reading = PrimaryReading::kPerCoordinate);

  struct RadicalReport {
    ElementSet                ideal;
    ElementSet                by_powers;
    ElementSet                by_primes;
  };

  RadicalReport radical_report(KrasnerStructure const& s,
                               ElementSet              ideal,
                               HyperidealMode          mode);

  // Every output ends with a newline.
  std::string render(KrasnerStructure const& s, AxiomReport const& r, Format f);
  std::string render(KrasnerStructure const& s,
                     Classification const&   c,
                     Format                  f);
  std::string render_ideals(KrasnerStructure const&        s,
                            std::vector<ElementSet> const& ideals,
                            HyperidealMode                 mode,
                            Format                         f);
  std::string render(KrasnerStructure const& s, RadicalReport const& r, Format f);
  std::string render(QuotientMap const& q, Format f);
  std::string render(AuditReport const& r, Format f);

  // A predicate outcome with elements shown by label.
  std::string render(KrasnerStructure const& s,
                     PredicateOutcome const& o,
                     Format                  f);

}  // namespace krasner

#endif  // KRASNER_RENDER_HPP_
