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

// Reading and writing structure files, and the builders that produce the
// standard corpus.
//
// A structure file is a JSON object with exactly the fields name, m, n,
// carrier (list of labels), zero (label), one (optional label), f and g. The
// tables are objects keyed by comma-joined nondecreasing index tuples; f maps
// each key to a list of indices and g to a single index.

#ifndef KRASNER_CORPUS_HPP_
#define KRASNER_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"
#include "structure.hpp"

namespace krasner {

  // Enforces the structural invariants only; does not verify axioms. Throws
  // kParseError, kMissingEntry, kDuplicateKey, kUnsortedKey,
  // kIndexOutOfRange, kDuplicateLabel or kUnknownLabel.
  KrasnerStructure parse_structure(std::string_view text);

  // Canonical text: fixed field order, one table entry per line, keys in
  // lexicographic order of their index tuples.
  std::string serialize_structure(KrasnerStructure const& s);

  KrasnerStructure load_structure(std::filesystem::path const& path);
  void save_structure(KrasnerStructure const& s, std::filesystem::path const& path);

  // Z_k with f(x_1^m) = {sum mod k} and g(x_1^n) = product mod k, named
  // "Z<k>(<m>,<n>)". The scalar neutral is unique only when gcd(m-1, k) = 1:
  // every e with (m-1)e = 0 mod k is neutral. build_zk_ring verifies the
  // axioms (with the identity) and throws kAxiomFailure otherwise;
  // zk_ring_tables skips verification.
  KrasnerStructure build_zk_ring(std::size_t k, std::size_t m, std::size_t n);
  KrasnerStructure zk_ring_tables(std::size_t k, std::size_t m, std::size_t n);

  // The quotient of Z_k by a group G of units acting by multiplication: the
  // carrier is the set of orbits xG labelled by their smallest member,
  // f(X_1^m) collects the orbits of all sums, and g is the orbit of the
  // product. Throws kInvalidArgument if G is not a multiplicatively closed set
  // of units containing 1, and kAxiomFailure if the result fails verification.
  KrasnerStructure build_krasner_quotient(std::size_t                 k,
                                          std::vector<std::size_t> const& units,
                                          std::size_t                 m = 2,
                                          std::size_t                 n = 2);

  // The (3,3)-hyperring on {0,1,2} and the (2,4)-hyperring on {0,1,2,3},
  // both designating 1 as one.
  KrasnerStructure k33();
  KrasnerStructure k24();
  std::vector<KrasnerStructure> paper_examples();

  // K33, K24, Z_k for k = 1..8 under (m,n) in {(2,2),(3,3),(2,4)}, and the
  // quotients of Z_5 by {1,4} and of Z_7 by {1,2,4}. The Z_k entries are not
  // verified here; those failing the axioms stay in the list.
  std::vector<KrasnerStructure> standard_corpus();

}  // namespace krasner

#endif  // KRASNER_CORPUS_HPP_
