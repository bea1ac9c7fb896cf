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

#ifndef KRASNER_ELEMENT_SET_HPP_
#define KRASNER_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace krasner {

  // Elements of a carrier are identified by their index 0..N-1.
  using Element = std::uint32_t;

  // Carriers are bounded so that every subset fits in one machine word.
  inline constexpr std::size_t kMaxCarrier = 64;

  // A subset of a carrier of at most kMaxCarrier elements.
  //
  // The canonical order of subsets is the order of their bit patterns read as
  // unsigned integers; enumerations in this library are reported in it.
  class ElementSet {
   public:
    class const_iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = Element;
      using difference_type   = std::ptrdiff_t;
      using pointer           = Element const*;
      using reference         = Element;

      constexpr const_iterator() = default;
      constexpr explicit const_iterator(std::uint64_t rest) : _rest(rest) {}

      constexpr Element operator*() const noexcept {
        return static_cast<Element>(std::countr_zero(_rest));
      }
      constexpr const_iterator& operator++() noexcept {
        _rest &= _rest - 1;
        return *this;
      }
      constexpr const_iterator operator++(int) noexcept {
        auto copy = *this;
        ++*this;
        return copy;
      }
      constexpr bool operator==(const_iterator const&) const = default;

     private:
      std::uint64_t _rest = 0;
    };

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : _bits(bits) {}
    constexpr ElementSet(std::initializer_list<Element> elements) {
      for (Element e : elements) {
        insert(e);
      }
    }

    static constexpr ElementSet full(std::size_t size) noexcept {
      return ElementSet(size >= 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << size) - 1);
    }
    static constexpr ElementSet singleton(Element e) noexcept {
      return ElementSet(std::uint64_t{1} << e);
    }
    template <typename Range>
    static ElementSet from_range(Range const& range) {
      ElementSet result;
      for (auto e : range) {
        result.insert(static_cast<Element>(e));
      }
      return result;
    }

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] constexpr bool contains(Element e) const noexcept {
      return e < 64 && ((_bits >> e) & 1U) != 0;
    }
    constexpr void insert(Element e) noexcept {
      _bits |= std::uint64_t{1} << e;
    }
    constexpr void erase(Element e) noexcept {
      _bits &= ~(std::uint64_t{1} << e);
    }
    [[nodiscard]] constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    [[nodiscard]] constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    // Smallest member; the set must be nonempty.
    [[nodiscard]] constexpr Element min() const noexcept {
      return static_cast<Element>(std::countr_zero(_bits));
    }
    [[nodiscard]] constexpr bool subset_of(ElementSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    [[nodiscard]] constexpr bool intersects(ElementSet other) const noexcept {
      return (_bits & other._bits) != 0;
    }
    [[nodiscard]] std::vector<Element> elements() const {
      return std::vector<Element>(begin(), end());
    }

    constexpr const_iterator begin() const noexcept {
      return const_iterator(_bits);
    }
    constexpr const_iterator end() const noexcept {
      return const_iterator(0);
    }

    constexpr ElementSet& operator|=(ElementSet other) noexcept {
      _bits |= other._bits;
      return *this;
    }
    constexpr ElementSet& operator&=(ElementSet other) noexcept {
      _bits &= other._bits;
      return *this;
    }
    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) noexcept {
      return ElementSet(a._bits | b._bits);
    }
    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) noexcept {
      return ElementSet(a._bits & b._bits);
    }
    // Set difference.
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) noexcept {
      return ElementSet(a._bits & ~b._bits);
    }
    friend constexpr bool operator==(ElementSet, ElementSet) = default;
    friend constexpr auto operator<=>(ElementSet a, ElementSet b) noexcept {
      return a._bits <=> b._bits;
    }

   private:
    std::uint64_t _bits = 0;
  };

}  // namespace krasner

#endif  // KRASNER_ELEMENT_SET_HPP_
