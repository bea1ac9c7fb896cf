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

#include "krasner/s_theory.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  namespace {
    using Buffer = std::array<Element, kMaxArity>;

    std::optional<PredicateOutcome> s_preconditions(KrasnerStructure const& s,
                                                    ElementSet     ideal,
                                                    ElementSet     mult,
                                                    HyperidealMode mode) {
      if (!s.one()) {
        return PredicateOutcome::inapplicable(
            "identity: the structure designates no one");
      }
      if (!qualifies_as_hyperideal(s, ideal, mode)) {
        return PredicateOutcome::inapplicable(
            "hyperideal: " + format_set(s, ideal) + " is not a hyperideal in "
            + std::string(to_string(mode)) + " mode");
      }
      if (mult.empty() || !is_multiplicative(s, mult).holds()) {
        return PredicateOutcome::inapplicable(
            "multiplicative: " + format_set(s, mult)
            + " is not an n-ary multiplicative subset");
      }
      if (ideal.intersects(mult)) {
        return PredicateOutcome::inapplicable(
            "disjointness: " + format_set(s, ideal & mult)
            + " lies in both the hyperideal and the multiplicative subset");
      }
      return std::nullopt;
    }

    // Shared witness search: `refute(s)` returns the first multiset that
    // defeats candidate s, if any.
    template <typename Refute>
    PredicateOutcome search_witnesses(ElementSet mult,
                                      char const* rule,
                                      Refute&&    refute) {
      PredicateOutcome            out;
      std::vector<Counterexample> refutations;
      for (Element s : mult) {
        if (auto bad = refute(s)) {
          Counterexample c;
          c.rule    = rule;
          c.tuple   = std::move(*bad);
          c.witness = s;
          refutations.push_back(std::move(c));
        } else {
          out.witnesses.insert(s);
        }
      }
      if (out.witnesses.empty()) {
        for (auto& c : refutations) {
          out.record(std::move(c));
        }
      }
      return out;
    }
  }  // namespace

  std::string_view to_string(PrimaryReading reading) noexcept {
    return reading == PrimaryReading::kPerCoordinate ? "per-coordinate"
                                                     : "any-coordinate";
  }

  std::optional<PrimaryReading> parse_reading(std::string_view text) noexcept {
    if (text == "per-coordinate") {
      return PrimaryReading::kPerCoordinate;
    }
    if (text == "any-coordinate") {
      return PrimaryReading::kAnyCoordinate;
    }
    return std::nullopt;
  }

  PredicateOutcome is_multiplicative(KrasnerStructure const& s,
                                     ElementSet              members) {
    if (!members.subset_of(s.carrier())) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "subset exceeds the carrier of '" + s.name() + "'");
    }
    PredicateOutcome out;
    for_each_multiset(members, s.n(), [&](std::span<Element const> xs) {
      if (!members.contains(s.g(xs))) {
        Counterexample c;
        c.rule = "multiplicative";
        c.tuple.assign(xs.begin(), xs.end());
        out.record(std::move(c));
      }
      return true;
    });
    return out;
  }

  std::vector<ElementSet> enumerate_multiplicative_subsets(
      KrasnerStructure const& s,
      bool                    exclude_zero,
      std::size_t             bound) {
    if (s.size() > bound) {
      throw Error(ErrorCode::kBoundExceeded,
                  "carrier of '" + s.name() + "' has "
                      + std::to_string(s.size())
                      + " elements, above the enumeration bound "
                      + std::to_string(bound));
    }
    std::uint64_t pool = s.carrier().bits();
    if (exclude_zero) {
      pool &= ~(std::uint64_t{1} << s.zero());
    }
    std::vector<ElementSet> out;
    std::uint64_t           sub = 0;
    while (true) {
      sub = (sub - pool) & pool;
      if (sub == 0) {
        break;
      }
      ElementSet const candidate(sub);
      bool             closed = true;
      for_each_multiset(candidate, s.n(), [&](std::span<Element const> xs) {
        closed = candidate.contains(s.g(xs));
        return closed;
      });
      if (closed) {
        out.push_back(candidate);
      }
    }
    return out;
  }

  PredicateOutcome is_s_prime(KrasnerStructure const& s,
                              ElementSet              ideal,
                              ElementSet              mult,
                              HyperidealMode          mode) {
    if (auto pre = s_preconditions(s, ideal, mult, mode)) {
      return *pre;
    }
    return search_witnesses(mult, "s_prime", [&](Element w) {
      // Coordinates x with g(w, x, one^(n-2)) in I rescue a multiset; the
      // candidate fails iff some multiset avoiding them lands in I.
      ElementSet const                    rescued = colon(s, ideal, w);
      std::optional<std::vector<Element>> bad;
      for_each_multiset(
          s.carrier() - rescued, s.n(), [&](std::span<Element const> xs) {
            if (ideal.contains(s.g(xs))) {
              bad.emplace(xs.begin(), xs.end());
              return false;
            }
            return true;
          });
      return bad;
    });
  }

  ElementSet s_prime_witnesses_by_products(KrasnerStructure const& s,
                                           ElementSet              ideal,
                                           ElementSet              mult) {
    // times[a][b] = a.b
    std::vector<std::vector<Element>> times(s.size(),
                                            std::vector<Element>(s.size()));
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        times[a][b] = binary_product(s, a, b);
      }
    }
    ElementSet witnesses;
    for (Element w : mult) {
      ElementSet const outside = s.carrier() - colon(s, ideal, w);
      ElementSet       reach   = outside;
      for (std::size_t k = 1; k < s.n() && !reach.empty(); ++k) {
        ElementSet next;
        for (Element a : outside) {
          for (Element p : reach) {
            next.insert(times[a][p]);
          }
        }
        reach = next;
      }
      if (!reach.intersects(ideal)) {
        witnesses.insert(w);
      }
    }
    return witnesses;
  }

  PredicateOutcome is_s_primary(KrasnerStructure const& s,
                                ElementSet              ideal,
                                ElementSet              mult,
                                HyperidealMode          mode,
                                PrimaryReading          reading) {
    if (auto pre = s_preconditions(s, ideal, mult, mode)) {
      return *pre;
    }
    ElementSet const  radical = radical_powers(s, ideal);
    std::size_t const n       = s.n();
    return search_witnesses(mult, "s_primary", [&](Element w) {
      ElementSet const                    rescued = colon(s, ideal, w);
      std::optional<std::vector<Element>> bad;
      Buffer                              buf{};
      auto substituted_in_radical = [&](std::span<Element const> xs,
                                        std::size_t              i) {
        std::copy(xs.begin(), xs.end(), buf.begin());
        buf[i] = w;
        return radical.contains(s.g(std::span<Element const>(buf.data(), n)));
      };
      for_each_multiset(s.carrier(), n, [&](std::span<Element const> xs) {
        if (!ideal.contains(s.g(xs))) {
          return true;
        }
        bool ok = false;
        if (reading == PrimaryReading::kPerCoordinate) {
          ok = true;
          for (std::size_t i = 0; i < n && ok; ++i) {
            ok = rescued.contains(xs[i]) || substituted_in_radical(xs, i);
          }
        } else {
          for (std::size_t i = 0; i < n && !ok; ++i) {
            ok = rescued.contains(xs[i]) || substituted_in_radical(xs, i);
          }
        }
        if (!ok) {
          bad.emplace(xs.begin(), xs.end());
          return false;
        }
        return true;
      });
      return bad;
    });
  }

  ColonEquivalence s_prime_colon_equiv(KrasnerStructure const& s,
                                       ElementSet              ideal,
                                       ElementSet              mult,
                                       HyperidealMode          mode) {
    ColonEquivalence out;
    out.direct = is_s_prime(s, ideal, mult, mode);
    if (out.direct.inapplicable()) {
      return out;
    }
    for (Element w : mult) {
      ElementSet const c = colon(s, ideal, w);
      if (is_prime(s, c, mode).holds()) {
        out.colon_witnesses.insert(w);
      }
    }
    return out;
  }

  ColonEquivalence s_primary_colon_equiv(KrasnerStructure const& s,
                                         ElementSet              ideal,
                                         ElementSet              mult,
                                         HyperidealMode          mode,
                                         PrimaryReading          reading) {
    ColonEquivalence out;
    out.direct = is_s_primary(s, ideal, mult, mode, reading);
    if (out.direct.inapplicable()) {
      return out;
    }
    for (Element w : mult) {
      ElementSet const c = colon(s, ideal, w);
      if (is_primary(s, c, mode).holds()) {
        out.colon_witnesses.insert(w);
      }
    }
    return out;
  }

}  // namespace krasner
