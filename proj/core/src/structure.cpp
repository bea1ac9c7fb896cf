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

#include "krasner/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::kInvalidArgument: return "InvalidArgument";
      case ErrorCode::kArityMismatch: return "ArityMismatch";
      case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::kBoundExceeded: return "BoundExceeded";
      case ErrorCode::kMissingIdentity: return "MissingIdentity";
      case ErrorCode::kNotCanonical: return "NotCanonical";
      case ErrorCode::kParseError: return "ParseError";
      case ErrorCode::kMissingEntry: return "MissingEntry";
      case ErrorCode::kDuplicateKey: return "DuplicateKey";
      case ErrorCode::kUnsortedKey: return "UnsortedKey";
      case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
      case ErrorCode::kUnknownLabel: return "UnknownLabel";
      case ErrorCode::kAxiomFailure: return "AxiomFailure";
      case ErrorCode::kNotAPartition: return "NotAPartition";
      case ErrorCode::kWellDefinednessFailure: return "WellDefinednessFailure";
    }
    return "Unknown";
  }

  std::uint64_t multiset_count(std::size_t n, std::size_t k) noexcept {
    // C(n + k - 1, k), computed incrementally; each partial product is an
    // exact binomial coefficient.
    if (k == 0) {
      return 1;
    }
    if (n == 0) {
      return 0;
    }
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      // result * (n - 1 + i) is divisible by i; cancel first to stay exact.
      std::uint64_t const g      = std::gcd(result, std::uint64_t{i});
      std::uint64_t const factor = (n - 1 + i) / (i / g);
      result /= g;
      if (result > UINT64_MAX / factor) {
        return UINT64_MAX;
      }
      result *= factor;
    }
    return result;
  }

  namespace detail {
    template <typename Value>
    SymmetricTable<Value>::SymmetricTable(std::size_t carrier,
                                          std::size_t arity)
        : _carrier(carrier), _arity(arity) {
      std::uint64_t entries = 1;
      for (std::size_t i = 0; i < arity; ++i) {
        entries *= carrier;
        if (entries > kMaxTableEntries) {
          throw Error(ErrorCode::kBoundExceeded,
                      "operation table of " + std::to_string(carrier) + "^"
                          + std::to_string(arity) + " entries is too large");
        }
      }
      _data.assign(static_cast<std::size_t>(entries), Value{});
    }

    template <typename Value>
    void SymmetricTable<Value>::assign(std::span<Element const> sorted,
                                       Value                    value) {
      std::array<Element, kMaxArity> perm{};
      std::copy(sorted.begin(), sorted.end(), perm.begin());
      auto first = perm.begin();
      auto last  = perm.begin() + static_cast<std::ptrdiff_t>(sorted.size());
      do {
        _data[offset(std::span<Element const>(first, last))] = value;
      } while (std::next_permutation(first, last));
    }

    template class SymmetricTable<ElementSet>;
    template class SymmetricTable<std::uint8_t>;
  }  // namespace detail

  namespace {
    void check_shape(std::size_t carrier, std::size_t arity) {
      if (carrier == 0 || carrier > kMaxCarrier) {
        throw Error(ErrorCode::kInvalidArgument,
                    "carrier size must be in 1.." + std::to_string(kMaxCarrier)
                        + ", got " + std::to_string(carrier));
      }
      if (arity < kMinArity || arity > kMaxArity) {
        throw Error(ErrorCode::kInvalidArgument,
                    "arity must be in 2.." + std::to_string(kMaxArity)
                        + ", got " + std::to_string(arity));
      }
    }

    std::string join(std::span<Element const> tuple) {
      std::string out;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(tuple[i]);
      }
      return out;
    }
  }  // namespace

  HyperOperationTable HyperOperationTable::tabulate(std::size_t  carrier,
                                                    std::size_t  arity,
                                                    Entry const& entry) {
    check_shape(carrier, arity);
    detail::SymmetricTable<ElementSet> table(carrier, arity);
    ElementSet const                   all = ElementSet::full(carrier);
    for_each_multiset(all, arity, [&](std::span<Element const> key) {
      ElementSet const value = entry(key);
      if (value.empty() || !value.subset_of(all)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "hyperoperation entry " + join(key)
                        + " must be a nonempty subset of the carrier");
      }
      table.assign(key, value);
      return true;
    });
    return HyperOperationTable(std::move(table));
  }

  OperationTable OperationTable::tabulate(std::size_t  carrier,
                                          std::size_t  arity,
                                          Entry const& entry) {
    check_shape(carrier, arity);
    detail::SymmetricTable<std::uint8_t> table(carrier, arity);
    for_each_multiset(
        ElementSet::full(carrier), arity, [&](std::span<Element const> key) {
          Element const value = entry(key);
          if (value >= carrier) {
            throw Error(ErrorCode::kIndexOutOfRange,
                        "operation entry " + join(key) + " maps to "
                            + std::to_string(value));
          }
          table.assign(key, static_cast<std::uint8_t>(value));
          return true;
        });
    return OperationTable(std::move(table));
  }

  KrasnerStructure::KrasnerStructure(std::string              name,
                                     std::vector<std::string> labels,
                                     HyperOperationTable      f,
                                     OperationTable           g,
                                     Element                  zero,
                                     std::optional<Element>   one)
      : _name(std::move(name)),
        _labels(std::move(labels)),
        _f(std::make_shared<HyperOperationTable const>(std::move(f))),
        _g(std::make_shared<OperationTable const>(std::move(g))),
        _zero(zero),
        _one(one) {
    if (_labels.empty() || _labels.size() > kMaxCarrier) {
      throw Error(ErrorCode::kInvalidArgument, "carrier must have 1..64 labels");
    }
    std::set<std::string_view> seen;
    for (auto const& l : _labels) {
      if (l.empty() || l.find(',') != std::string::npos) {
        throw Error(ErrorCode::kInvalidArgument,
                    "label '" + l + "' must be nonempty and free of commas");
      }
      if (!seen.insert(l).second) {
        throw Error(ErrorCode::kDuplicateLabel, "label '" + l + "' repeats");
      }
    }
    if (_f->carrier() != _labels.size() || _g->carrier() != _labels.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "operation tables do not match the carrier size");
    }
    if (_zero >= _labels.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "zero is not a carrier element");
    }
    if (_one && *_one >= _labels.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "one is not a carrier element");
    }
  }

  std::optional<Element> KrasnerStructure::find_label(
      std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _labels.begin());
  }

  namespace {
    void check_args(KrasnerStructure const&   s,
                    std::size_t               arity,
                    std::span<Element const> args,
                    char const*               op) {
      if (args.size() != arity) {
        throw Error(ErrorCode::kArityMismatch,
                    std::string(op) + " expects " + std::to_string(arity)
                        + " arguments, got " + std::to_string(args.size()));
      }
      for (Element a : args) {
        if (a >= s.size()) {
          throw Error(ErrorCode::kIndexOutOfRange,
                      "element index " + std::to_string(a)
                          + " is outside a carrier of size "
                          + std::to_string(s.size()));
        }
      }
    }
  }  // namespace

  ElementSet eval_f(KrasnerStructure const& s, std::span<Element const> args) {
    check_args(s, s.m(), args, "f");
    return s.f(args);
  }

  Element eval_g(KrasnerStructure const& s, std::span<Element const> args) {
    check_args(s, s.n(), args, "g");
    return s.g(args);
  }

  ElementSet eval_f_sets(KrasnerStructure const&        s,
                         std::span<ElementSet const> args) {
    if (args.size() != s.m()) {
      throw Error(ErrorCode::kArityMismatch, "f expects m argument sets");
    }
    std::array<Element, kMaxArity> tuple{};
    ElementSet                     result;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == args.size()) {
        result |= s.f(std::span<Element const>(tuple.data(), args.size()));
        return;
      }
      for (Element e : args[pos]) {
        tuple[pos] = e;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    return result;
  }

  ElementSet eval_f_iter(KrasnerStructure const&   s,
                         std::size_t               l,
                         std::span<Element const> args) {
    std::size_t const m = s.m();
    if (l == 0 || args.size() != l * (m - 1) + 1) {
      throw Error(ErrorCode::kArityMismatch,
                  "f_(l) expects l(m-1)+1 arguments with l >= 1");
    }
    ElementSet current = eval_f(s, args.first(m));
    std::array<Element, kMaxArity> tuple{};
    for (std::size_t block = 1; block < l; ++block) {
      auto const rest = args.subspan(m + (block - 1) * (m - 1), m - 1);
      check_args(s, m - 1, rest, "f_(l)");
      std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
      ElementSet next;
      for (Element c : current) {
        tuple[0] = c;
        next |= s.f(std::span<Element const>(tuple.data(), m));
      }
      current = next;
    }
    return current;
  }

  Element eval_g_iter(KrasnerStructure const&   s,
                      std::size_t               l,
                      std::span<Element const> args) {
    std::size_t const n = s.n();
    if (l == 0 || args.size() != l * (n - 1) + 1) {
      throw Error(ErrorCode::kArityMismatch,
                  "g_(l) expects l(n-1)+1 arguments with l >= 1");
    }
    Element current = eval_g(s, args.first(n));
    std::array<Element, kMaxArity> tuple{};
    for (std::size_t block = 1; block < l; ++block) {
      auto const rest = args.subspan(n + (block - 1) * (n - 1), n - 1);
      check_args(s, n - 1, rest, "g_(l)");
      tuple[0] = current;
      std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
      current = s.g(std::span<Element const>(tuple.data(), n));
    }
    return current;
  }

  PowerOrbit power_orbit(KrasnerStructure const& s, Element x) {
    if (x >= s.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "element out of range");
    }
    std::size_t const              n = s.n();
    std::array<Element, kMaxArity> tuple{};
    tuple.fill(x);
    PowerOrbit              orbit;
    std::vector<std::size_t> seen_at(s.size(), SIZE_MAX);
    Element current = s.g(std::span<Element const>(tuple.data(), n));
    while (seen_at[current] == SIZE_MAX) {
      seen_at[current] = orbit.values.size();
      orbit.values.push_back(current);
      tuple[0] = current;
      current  = s.g(std::span<Element const>(tuple.data(), n));
    }
    orbit.cycle_start = seen_at[current];
    return orbit;
  }

  Element binary_product(KrasnerStructure const& s, Element a, Element b) {
    auto const one = s.one();
    if (!one) {
      throw Error(ErrorCode::kMissingIdentity,
                  "structure '" + s.name() + "' designates no identity");
    }
    std::array<Element, kMaxArity> tuple{};
    tuple.fill(*one);
    tuple[0] = a;
    tuple[1] = b;
    return s.g(std::span<Element const>(tuple.data(), s.n()));
  }

  Element inverse_of(KrasnerStructure const& s, Element x) {
    if (x >= s.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "element out of range");
    }
    std::array<Element, kMaxArity> tuple{};
    tuple.fill(s.zero());
    tuple[0] = x;
    std::optional<Element> found;
    for (Element y = 0; y < s.size(); ++y) {
      tuple[1] = y;
      if (s.f(std::span<Element const>(tuple.data(), s.m()))
              .contains(s.zero())) {
        if (found) {
          throw Error(ErrorCode::kNotCanonical,
                      "element " + s.label(x) + " has several inverses");
        }
        found = y;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kNotCanonical,
                  "element " + s.label(x) + " has no inverse");
    }
    return *found;
  }

  ElementSet units(KrasnerStructure const& s) {
    auto const one = s.one();
    if (!one) {
      throw Error(ErrorCode::kMissingIdentity,
                  "structure '" + s.name() + "' designates no identity");
    }
    ElementSet result;
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        if (binary_product(s, x, y) == *one) {
          result.insert(x);
          break;
        }
      }
    }
    return result;
  }

  std::string format_set(KrasnerStructure const& s, ElementSet set) {
    std::string out = "{";
    bool        first = true;
    for (Element e : set) {
      out += (first ? "" : ",") + s.label(e);
      first = false;
    }
    return out + "}";
  }

  std::string format_tuple(KrasnerStructure const&   s,
                           std::span<Element const> tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      out += (i == 0 ? "" : ",") + s.label(tuple[i]);
    }
    return out + ")";
  }

  ElementSet parse_label_set(KrasnerStructure const& s, std::string_view text) {
    ElementSet result;
    while (!text.empty()) {
      auto const        comma = text.find(',');
      std::string_view  token = text.substr(0, comma);
      while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
      }
      while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
      }
      auto const e = s.find_label(token);
      if (!e) {
        throw Error(ErrorCode::kUnknownLabel,
                    "'" + std::string(token) + "' is not a label of '"
                        + s.name() + "'");
      }
      result.insert(*e);
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return result;
  }

}  // namespace krasner
