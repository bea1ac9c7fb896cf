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

#ifndef KRASNER_S_THEORY_HPP_
#define KRASNER_S_THEORY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"
#include "ideals.hpp"
#include "outcome.hpp"
#include "structure.hpp"

namespace krasner {

  // Closure of `members` under g over all n-multisets.
  PredicateOutcome is_multiplicative(KrasnerStructure const& s,
                                     ElementSet              members);

  // All nonempty g-closed subsets in increasing mask order.
  std::vector<ElementSet> enumerate_multiplicative_subsets(
      KrasnerStructure const& s,
      bool                    exclude_zero,
      std::size_t             bound = kDefaultEnumerationBound);

  // How the two index quantifiers of the S-primary condition are read, for a
  // multiset x with g(x) in I and a candidate s:
  //   kPerCoordinate: every i has g(s, x_i, one^(n-2)) in I or
  //                   g(x with x_i replaced by s) in rad(I);
  //   kAnyCoordinate: some i has the first, or some i has the second.
  enum class PrimaryReading { kPerCoordinate, kAnyCoordinate };

  // "per-coordinate" and "any-coordinate".
  std::string_view              to_string(PrimaryReading reading) noexcept;
  std::optional<PrimaryReading> parse_reading(std::string_view text) noexcept;

  // Preconditions, checked in this order: designated one, I a hyperideal
  // under `mode`, S nonempty and multiplicative, I and S disjoint. Holds iff
  // some s in S works; `witnesses` lists every such s. On failure one
  // counterexample per s is recorded, with `witness` set to that s.
  PredicateOutcome is_s_prime(KrasnerStructure const& s,
                              ElementSet              ideal,
                              ElementSet              mult,
                              HyperidealMode          mode);

  // The witnesses of is_s_prime computed through binary products
  // a.b = g(a, b, one^(n-2)): for a structure whose axioms and scalar identity
  // are verified, g(x_1^n) equals the iterated binary product, so candidate s
  // fails iff some product of n elements outside (I : s) lands in I. Performs
  // no precondition checks.
  ElementSet s_prime_witnesses_by_products(KrasnerStructure const& s,
                                           ElementSet              ideal,
                                           ElementSet              mult);

  PredicateOutcome is_s_primary(
      KrasnerStructure const& s,
      ElementSet              ideal,
      ElementSet              mult,
      HyperidealMode          mode,
      PrimaryReading          reading = PrimaryReading::kPerCoordinate);

  // Both sides of a colon characterization, evaluated independently: the
  // direct predicate scan, and the set of s in S whose colon (I : s) is a
  // proper hyperideal satisfying the plain predicate.
  struct ColonEquivalence {
    PredicateOutcome direct;
    ElementSet       colon_witnesses;

    [[nodiscard]] bool applicable() const noexcept {
      return !direct.inapplicable();
    }
    [[nodiscard]] bool agree() const noexcept {
      return direct.holds() == !colon_witnesses.empty();
    }
  };

  ColonEquivalence s_prime_colon_equiv(KrasnerStructure const& s,
                                       ElementSet              ideal,
                                       ElementSet              mult,
                                       HyperidealMode          mode);

  ColonEquivalence s_primary_colon_equiv(
      KrasnerStructure const& s,
      ElementSet              ideal,
      ElementSet              mult,
      HyperidealMode          mode,
      PrimaryReading          reading = PrimaryReading::kPerCoordinate);

}  // namespace krasner

#endif  // KRASNER_S_THEORY_HPP_
