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

// Structures derived from others: direct products, quotients by a
// hyperideal, subhyperrings, and homomorphisms.

#ifndef KRASNER_CONSTRUCTIONS_HPP_
#define KRASNER_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <vector>

#include "element_set.hpp"
#include "ideals.hpp"
#include "outcome.hpp"
#include "structure.hpp"

namespace krasner {

  // R1 x R2 with componentwise f and g. The pair (a, b) has index
  // a * |R2| + b and label "(a;b)". The product designates a one only if both
  // factors do. Throws kArityMismatch, or kBoundExceeded if the product
  // carrier or its tables would be too large.
  KrasnerStructure product(KrasnerStructure const& s1,
                           KrasnerStructure const& s2);

  Element product_element(KrasnerStructure const& s2, Element a, Element b);

  // X1 x X2 as a subset of the product carrier.
  ElementSet product_set(KrasnerStructure const& s1,
                         KrasnerStructure const& s2,
                         ElementSet              x1,
                         ElementSet              x2);

  // I1 x R2.
  ElementSet lift_ideal_product(KrasnerStructure const& s1,
                                KrasnerStructure const& s2,
                                ElementSet              ideal);

  struct Homomorphism {
    KrasnerStructure     source;
    KrasnerStructure     target;
    std::vector<Element> map;

    [[nodiscard]] Element operator()(Element x) const {
      return map.at(x);
    }
    [[nodiscard]] ElementSet image(ElementSet x) const;
    [[nodiscard]] ElementSet preimage(ElementSet y) const;
  };

  // Checks h(f1(x_1^m)) = f2(h(x_1), ..., h(x_m)) and the analogous equation
  // for g over all multisets. Counterexample rules are "f" and "g".
  PredicateOutcome verify_homomorphism(Homomorphism const& h);

  // { x : h(x) in I2 }.
  ElementSet preimage_ideal(Homomorphism const& h, ElementSet ideal);

  // Projections of `s1 x s2` onto its factors.
  Homomorphism projection_first(KrasnerStructure const& prod,
                                KrasnerStructure const& s1,
                                KrasnerStructure const& s2);
  Homomorphism projection_second(KrasnerStructure const& prod,
                                 KrasnerStructure const& s1,
                                 KrasnerStructure const& s2);

  // Default ceiling on |R2|^|R1| for exhaustive map search.
  inline constexpr std::size_t kDefaultMapSearchBound = 4096;

  // Every homomorphism R1 -> R2, found by exhaustive search over all maps;
  // throws kBoundExceeded when |R2|^|R1| exceeds `bound`.
  std::vector<Homomorphism> enumerate_homomorphisms(
      KrasnerStructure const& s1,
      KrasnerStructure const& s2,
      std::size_t             bound = kDefaultMapSearchBound);

  // R/J. Element x lies in the coset f(x, J, zero^(m-2)); a coset is
  // represented by its smallest member and labelled "[label]".
  struct QuotientMap {
    KrasnerStructure        source;
    ElementSet              kernel;
    std::vector<ElementSet> cosets;    // indexed by quotient element
    std::vector<Element>    class_of;  // source element -> quotient element
    KrasnerStructure        structure;

    // The canonical map x -> coset(x).
    [[nodiscard]] Homomorphism projection() const;
  };

  // Throws kNotAPartition if two cosets overlap without coinciding (or an
  // element misses its own coset), kWellDefinednessFailure if an induced
  // operation depends on representatives, and kAxiomFailure if the induced
  // structure fails verification.
  QuotientMap quotient(KrasnerStructure const& s, ElementSet kernel);

  // Quotient elements whose coset meets X.
  ElementSet lift_to_quotient(QuotientMap const& q, ElementSet x);

  // A subset containing zero closed under f and g, with its induced
  // structure. The induced one is the ambient one when it lies in the subset.
  struct SubstructureEmbedding {
    KrasnerStructure     ambient;
    ElementSet           members;
    std::vector<Element> to_ambient;  // induced index -> ambient index
    KrasnerStructure     induced;

    // Maps an ambient subset (intersected with members) into the induced
    // carrier, and back.
    [[nodiscard]] ElementSet to_induced(ElementSet ambient_set) const;
    [[nodiscard]] ElementSet from_induced(ElementSet induced_set) const;
  };

  bool is_closed_subset(KrasnerStructure const& s, ElementSet members);

  // Throws kInvalidArgument if `members` is not a closed subset with zero.
  SubstructureEmbedding embed(KrasnerStructure const& s, ElementSet members);

  // All closed subsets containing zero, in increasing mask order.
  std::vector<SubstructureEmbedding> enumerate_subhyperrings(
      KrasnerStructure const& s,
      std::size_t             bound = kDefaultEnumerationBound);

  struct RestrictedIdeal {
    ElementSet ambient_members;  // I intersected with the sub-carrier
    ElementSet induced_members;  // the same set in induced indices
    bool       is_hyperideal = false;
  };

  RestrictedIdeal restrict_ideal(SubstructureEmbedding const& e,
                                 ElementSet                   ideal,
                                 HyperidealMode               mode);

}  // namespace krasner

#endif  // KRASNER_CONSTRUCTIONS_HPP_
