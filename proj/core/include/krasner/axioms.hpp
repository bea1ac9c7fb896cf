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

#ifndef KRASNER_AXIOMS_HPP_
#define KRASNER_AXIOMS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "structure.hpp"

namespace krasner {

  // Verdict for a single axiom. On failure `counterexample` is the first
  // offending tuple found (lexicographic in the enumeration described for each
  // axiom) and `detail` spells it out by label.
  struct AxiomVerdict {
    std::string          name;
    bool                 checked = true;
    bool                 holds   = true;
    std::vector<Element> counterexample;
    std::string          detail;
    std::size_t          failures = 0;
    // All failing instances, rendered, up to a small cap.
    std::vector<std::string> failing_instances;
  };

  struct AxiomReport {
    AxiomVerdict f_associative;
    AxiomVerdict f_solvable;
    AxiomVerdict neutral_exists_unique;
    AxiomVerdict inverses_unique;
    AxiomVerdict reversibility;
    AxiomVerdict g_associative;
    AxiomVerdict distributive;
    AxiomVerdict zero_absorbing;
    // Checked only on request; mandatory when checked.
    AxiomVerdict scalar_identity;
    bool         overall = false;

    [[nodiscard]] std::vector<AxiomVerdict const*> verdicts() const;
  };

  // Default ceiling on the number of elementary evaluations verify_axioms may
  // perform before refusing with kBoundExceeded.
  inline constexpr std::uint64_t kDefaultAxiomWorkBound = 400'000'000;

  // Exhaustively checks the Krasner (m,n)-hyperring axioms.
  //
  // Because both tables are symmetric by construction, every check quantifies
  // over sorted multisets; quantifying over all tuples and positions gives the
  // same verdicts. Throws kMissingIdentity if `check_identity` is set and the
  // structure designates no one, and kBoundExceeded if the estimated work
  // exceeds `work_bound`.
  AxiomReport verify_axioms(KrasnerStructure const& s,
                            bool                    check_identity = false,
                            std::uint64_t work_bound = kDefaultAxiomWorkBound);

  // True iff the designated one is a scalar identity of g. False when absent.
  bool has_scalar_identity(KrasnerStructure const& s);

}  // namespace krasner

#endif  // KRASNER_AXIOMS_HPP_
