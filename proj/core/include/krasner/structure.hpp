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

// This file declares the finite commutative (m,n)-hyperstructure: a carrier,
// an m-ary hyperoperation f (multivalued), an n-ary operation g, a designated
// zero and an optional designated scalar identity.

#ifndef KRASNER_STRUCTURE_HPP_
#define KRASNER_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"

namespace krasner {

  inline constexpr std::size_t kMinArity = 2;
  inline constexpr std::size_t kMaxArity = 8;
  // Upper bound on N^arity for a dense operation table.
  inline constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 25;

  namespace detail {
    // Dense row-major table over all arity-tuples of a carrier. Values are
    // written per sorted multiset and replicated to every permutation, which
    // makes commutativity hold by construction.
    template <typename Value>
    class SymmetricTable {
     public:
      SymmetricTable(std::size_t carrier, std::size_t arity);

      [[nodiscard]] std::size_t carrier() const noexcept {
        return _carrier;
      }
      [[nodiscard]] std::size_t arity() const noexcept {
        return _arity;
      }
      [[nodiscard]] std::size_t offset(std::span<Element const> args) const
          noexcept {
        std::size_t idx = 0;
        for (Element a : args) {
          idx = idx * _carrier + a;
        }
        return idx;
      }
      [[nodiscard]] Value const& at(std::span<Element const> args) const
          noexcept {
        return _data[offset(args)];
      }
      // `sorted` must be a nondecreasing tuple of length arity().
      void assign(std::span<Element const> sorted, Value value);

     private:
      std::size_t        _carrier;
      std::size_t        _arity;
      std::vector<Value> _data;
    };
  }  // namespace detail

  // Total map from m-multisets of elements to nonempty element subsets.
  class HyperOperationTable {
   public:
    using Entry = std::function<ElementSet(std::span<Element const>)>;

    // Calls `entry` once per sorted multiset (lexicographic order); every
    // returned set must be a nonempty subset of the carrier.
    static HyperOperationTable tabulate(std::size_t  carrier,
                                        std::size_t  arity,
                                        Entry const& entry);

    [[nodiscard]] std::size_t carrier() const noexcept {
      return _table.carrier();
    }
    [[nodiscard]] std::size_t arity() const noexcept {
      return _table.arity();
    }
    [[nodiscard]] ElementSet at(std::span<Element const> args) const noexcept {
      return _table.at(args);
    }

   private:
    explicit HyperOperationTable(detail::SymmetricTable<ElementSet> table)
        : _table(std::move(table)) {}
    detail::SymmetricTable<ElementSet> _table;
  };

  // Total map from n-multisets of elements to single elements.
  class OperationTable {
   public:
    using Entry = std::function<Element(std::span<Element const>)>;

    static OperationTable tabulate(std::size_t  carrier,
                                   std::size_t  arity,
                                   Entry const& entry);

    [[nodiscard]] std::size_t carrier() const noexcept {
      return _table.carrier();
    }
    [[nodiscard]] std::size_t arity() const noexcept {
      return _table.arity();
    }
    [[nodiscard]] Element at(std::span<Element const> args) const noexcept {
      return _table.at(args);
    }

   private:
    explicit OperationTable(detail::SymmetricTable<std::uint8_t> table)
        : _table(std::move(table)) {}
    detail::SymmetricTable<std::uint8_t> _table;
  };

  // A finite commutative (m,n)-hyperstructure. Immutable once built; copies
  // share the operation tables.
  //
  // Construction enforces only the structural invariants (distinct, nonempty,
  // comma-free labels, matching carrier sizes, valid zero/one). Whether the
  // Krasner axioms hold is answered by verify_axioms().
  class KrasnerStructure {
   public:
    KrasnerStructure(std::string              name,
                     std::vector<std::string> labels,
                     HyperOperationTable      f,
                     OperationTable           g,
                     Element                  zero,
                     std::optional<Element>   one);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] std::size_t m() const noexcept {
      return _f->arity();
    }
    [[nodiscard]] std::size_t n() const noexcept {
      return _g->arity();
    }
    [[nodiscard]] Element zero() const noexcept {
      return _zero;
    }
    [[nodiscard]] std::optional<Element> one() const noexcept {
      return _one;
    }
    [[nodiscard]] ElementSet carrier() const noexcept {
      return ElementSet::full(size());
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::string const& label(Element e) const {
      return _labels.at(e);
    }
    [[nodiscard]] std::optional<Element> find_label(std::string_view) const;

    // Unchecked table lookups; `args` must have length m() (resp. n()) and
    // hold valid indices. Use eval_f / eval_g for checked access.
    [[nodiscard]] ElementSet f(std::span<Element const> args) const noexcept {
      return _f->at(args);
    }
    [[nodiscard]] Element g(std::span<Element const> args) const noexcept {
      return _g->at(args);
    }

    [[nodiscard]] HyperOperationTable const& f_table() const noexcept {
      return *_f;
    }
    [[nodiscard]] OperationTable const& g_table() const noexcept {
      return *_g;
    }

   private:
    std::string                                _name;
    std::vector<std::string>                   _labels;
    std::shared_ptr<HyperOperationTable const> _f;
    std::shared_ptr<OperationTable const>      _g;
    Element                                    _zero;
    std::optional<Element>                     _one;
  };

  // Checked evaluation of f on an m-tuple.
  ElementSet eval_f(KrasnerStructure const& s, std::span<Element const> args);

  // Checked evaluation of g on an n-tuple.
  Element eval_g(KrasnerStructure const& s, std::span<Element const> args);

  // f applied elementwise to subsets: the union of f over all choices.
  ElementSet eval_f_sets(KrasnerStructure const&        s,
                         std::span<ElementSet const> args);

  // The l-fold left-nested f on a tuple of length l(m-1)+1. Set-valued
  // intermediates are unioned over every choice of element.
  ElementSet eval_f_iter(KrasnerStructure const&   s,
                         std::size_t               l,
                         std::span<Element const> args);

  // The l-fold left-nested g on a tuple of length l(n-1)+1.
  Element eval_g_iter(KrasnerStructure const&   s,
                      std::size_t               l,
                      std::span<Element const> args);

  // The sequence p_1 = g(x^(n)), p_{l+1} = g(p_l, x^(n-1)) of all-equal
  // iterated powers g_(l)(x^(l(n-1)+1)), up to its first repetition. The
  // sequence is eventually periodic: values[cycle_start..] repeats forever.
  struct PowerOrbit {
    std::vector<Element> values;
    std::size_t          cycle_start = 0;

    [[nodiscard]] std::size_t preperiod() const noexcept {
      return cycle_start;
    }
    [[nodiscard]] std::size_t period() const noexcept {
      return values.size() - cycle_start;
    }
  };

  PowerOrbit power_orbit(KrasnerStructure const& s, Element x);

  // g(a, b, one^(n-2)): the binary product through the designated identity.
  // Throws kMissingIdentity if the structure designates no one.
  Element binary_product(KrasnerStructure const& s, Element a, Element b);

  // The unique y with zero in f(x, y, zero^(m-2)). Throws kNotCanonical if no
  // such y exists or it is not unique.
  Element inverse_of(KrasnerStructure const& s, Element x);

  // { x : g(x, y, one^(n-2)) = one for some y }. Throws kMissingIdentity.
  ElementSet units(KrasnerStructure const& s);

  // Rendering helpers, by label: "{0,2}" and "(1,2,2,3)".
  std::string format_set(KrasnerStructure const& s, ElementSet set);
  std::string format_tuple(KrasnerStructure const&   s,
                           std::span<Element const> tuple);

  // Parses comma-separated labels ("0,2") into a subset; throws
  // kUnknownLabel. An empty string yields the empty set.
  ElementSet parse_label_set(KrasnerStructure const& s, std::string_view text);

}  // namespace krasner

#endif  // KRASNER_STRUCTURE_HPP_
