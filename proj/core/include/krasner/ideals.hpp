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

// Hyperideals of a finite Krasner (m,n)-hyperring: recognition, enumeration,
// generated and colon hyperideals, radicals, and the prime and primary
// predicates.

#ifndef KRASNER_IDEALS_HPP_
#define KRASNER_IDEALS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "element_set.hpp"
#include "outcome.hpp"
#include "structure.hpp"

namespace krasner {

  // Weak: zero, f-closure and g-absorption. Strict: weak plus solvability of
  // b in f(b_1, .., x, .., b_m) inside the subset (an m-ary subhypergroup).
  enum class HyperidealMode { kWeak, kStrict };

  std::string_view              to_string(HyperidealMode mode) noexcept;
  std::optional<HyperidealMode> parse_mode(std::string_view text) noexcept;

  // Largest carrier for which subsets are enumerated by default.
  inline constexpr std::size_t kDefaultEnumerationBound = 16;

  // Checks the conditions in the order zero, f_closure, absorption,
  // solvability. On failure every instance of the first violated condition is
  // recorded; a solvability counterexample is (b, fixed arguments...).
  PredicateOutcome is_hyperideal(KrasnerStructure const& s,
                                 ElementSet              members,
                                 HyperidealMode          mode);

  // Same decision as is_hyperideal without collecting counterexamples.
  bool qualifies_as_hyperideal(KrasnerStructure const& s,
                               ElementSet              members,
                               HyperidealMode          mode);

  // All hyperideals under `mode` in increasing mask order. Throws
  // kBoundExceeded if the carrier is larger than `bound`.
  std::vector<ElementSet> enumerate_hyperideals(
      KrasnerStructure const& s,
      HyperidealMode          mode,
      bool                    proper_only = false,
      std::size_t             bound       = kDefaultEnumerationBound);

  // { g(r, x, one^(n-2)) : r in R }. Throws kMissingIdentity.
  ElementSet generated_hyperideal(KrasnerStructure const& s, Element x);

  // (I : a) = { r : g(r, a, one^(n-2)) in I }. Throws kMissingIdentity.
  ElementSet colon(KrasnerStructure const& s, ElementSet ideal, Element a);

  // Elements with some power in I: g(x^(t), one^(n-t)) for t <= n, or any
  // all-equal iterated power g_(l)(x^(l(n-1)+1)), followed until the power
  // sequence repeats. Throws kMissingIdentity.
  ElementSet radical_powers(KrasnerStructure const& s, ElementSet ideal);

  // Intersection of the proper prime hyperideals under `mode` containing I,
  // or the whole carrier if there are none.
  ElementSet radical_primes(KrasnerStructure const& s,
                            ElementSet              ideal,
                            HyperidealMode          mode,
                            std::size_t bound = kDefaultEnumerationBound);

  // g(x_1^n) in I forces some x_i in I. Inapplicable if I is the carrier or
  // not a hyperideal under `mode`.
  PredicateOutcome is_prime(KrasnerStructure const& s,
                            ElementSet              ideal,
                            HyperidealMode          mode);

  // g(U_1^n) inside I forces some U_i inside I, for all hyperideals U_i under
  // `mode`. Counterexamples carry the hyperideal multiset in `sets`.
  PredicateOutcome is_prime_idealwise(
      KrasnerStructure const& s,
      ElementSet              ideal,
      HyperidealMode          mode,
      std::size_t             bound = kDefaultEnumerationBound);

  // g(x_1^n) in I forces g(x_1^(i-1), one, x_(i+1)^n) in radical_powers(I)
  // for every coordinate x_i outside I. Inapplicable without a designated
  // one, for the carrier, or for non-hyperideals.
  PredicateOutcome is_primary(KrasnerStructure const& s,
                              ElementSet              ideal,
                              HyperidealMode          mode);

  // { g(x_1, ..., x_n) : x_i in sets[i] }; `sets` has length n.
  ElementSet image_of_ideal_tuple(KrasnerStructure const&     s,
                                  std::span<ElementSet const> sets);

  // Intersection of all hyperideals under `mode` containing `subset`; nullopt
  // if no hyperideal contains it.
  std::optional<ElementSet> smallest_hyperideal_containing(
      KrasnerStructure const& s,
      ElementSet              subset,
      HyperidealMode          mode,
      std::size_t             bound = kDefaultEnumerationBound);

  struct RadicalMismatch {
    ElementSet ideal;
    ElementSet by_powers;
    ElementSet by_primes;
  };

  // Compares both radicals on every hyperideal under `mode`. Throws
  // kMissingIdentity.
  std::vector<RadicalMismatch> cross_validate_radicals(
      KrasnerStructure const& s,
      HyperidealMode          mode,
      std::size_t             bound = kDefaultEnumerationBound);

}  // namespace krasner

#endif  // KRASNER_IDEALS_HPP_
