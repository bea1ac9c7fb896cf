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

#include "krasner/ideals.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  namespace {
    using Buffer = std::array<Element, kMaxArity>;

    void require_in_carrier(KrasnerStructure const& s, ElementSet set) {
      if (!set.subset_of(s.carrier())) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "subset exceeds the carrier of '" + s.name() + "'");
      }
    }

    Element require_one(KrasnerStructure const& s) {
      if (!s.one()) {
        throw Error(ErrorCode::kMissingIdentity,
                    "structure '" + s.name() + "' designates no identity");
      }
      return *s.one();
    }

    Counterexample make_counterexample(char const*              rule,
                                       std::span<Element const> tuple) {
      Counterexample c;
      c.rule = rule;
      c.tuple.assign(tuple.begin(), tuple.end());
      return c;
    }

    // Runs the hyperideal checks; `sink` receives violations and returns
    // false to stop early. Returns true iff all checks passed.
    template <typename Sink>
    bool scan_hyperideal(KrasnerStructure const& s,
                         ElementSet              members,
                         HyperidealMode          mode,
                         Sink&&                  sink) {
      require_in_carrier(s, members);
      Element const zero = s.zero();
      if (!members.contains(zero)) {
        sink(make_counterexample("zero", std::span<Element const>(&zero, 1)));
        return false;
      }
      bool ok = true;
      for_each_multiset(members, s.m(), [&](std::span<Element const> xs) {
        if (!s.f(xs).subset_of(members)) {
          ok = false;
          return sink(make_counterexample("f_closure", xs));
        }
        return true;
      });
      if (!ok) {
        return false;
      }
      for_each_multiset(s.carrier(), s.n(), [&](std::span<Element const> xs) {
        bool const touches = std::any_of(
            xs.begin(), xs.end(), [&](Element x) { return members.contains(x); });
        if (touches && !members.contains(s.g(xs))) {
          ok = false;
          return sink(make_counterexample("absorption", xs));
        }
        return true;
      });
      if (!ok || mode == HyperidealMode::kWeak) {
        return ok;
      }
      Buffer buf{};
      for (Element b : members) {
        for_each_multiset(
            members, s.m() - 1, [&](std::span<Element const> fixed) {
              std::copy(fixed.begin(), fixed.end(), buf.begin() + 1);
              for (Element x : members) {
                buf[0] = x;
                if (s.f(std::span<Element const>(buf.data(), s.m()))
                        .contains(b)) {
                  return true;
                }
              }
              ok = false;
              std::vector<Element> tuple{b};
              tuple.insert(tuple.end(), fixed.begin(), fixed.end());
              return sink(make_counterexample("solvability", tuple));
            });
        if (!ok) {
          break;
        }
      }
      return ok;
    }

    PredicateOutcome precondition_failure(KrasnerStructure const& s,
                                          ElementSet              ideal,
                                          HyperidealMode          mode) {
      if (ideal == s.carrier()) {
        return PredicateOutcome::inapplicable(
            "proper: the hyperideal is the whole carrier");
      }
      if (!qualifies_as_hyperideal(s, ideal, mode)) {
        return PredicateOutcome::inapplicable(
            std::string("hyperideal: ") + format_set(s, ideal)
            + " is not a hyperideal in " + std::string(to_string(mode))
            + " mode");
      }
      return {};
    }

    void image_rec(KrasnerStructure const&     s,
                   std::span<ElementSet const> sets,
                   std::size_t                 pos,
                   Buffer&                     buf,
                   ElementSet&                 out) {
      if (pos == sets.size()) {
        out.insert(s.g(std::span<Element const>(buf.data(), sets.size())));
        return;
      }
      for (Element x : sets[pos]) {
        buf[pos] = x;
        image_rec(s, sets, pos + 1, buf, out);
      }
    }
  }  // namespace

  std::string_view to_string(HyperidealMode mode) noexcept {
    return mode == HyperidealMode::kWeak ? "weak" : "strict";
  }

  std::optional<HyperidealMode> parse_mode(std::string_view text) noexcept {
    if (text == "weak") {
      return HyperidealMode::kWeak;
    }
    if (text == "strict") {
      return HyperidealMode::kStrict;
    }
    return std::nullopt;
  }

  PredicateOutcome is_hyperideal(KrasnerStructure const& s,
                                 ElementSet              members,
                                 HyperidealMode          mode) {
    PredicateOutcome out;
    scan_hyperideal(s, members, mode, [&](Counterexample c) {
      out.record(std::move(c));
      return true;
    });
    return out;
  }

  bool qualifies_as_hyperideal(KrasnerStructure const& s,
                               ElementSet              members,
                               HyperidealMode          mode) {
    return scan_hyperideal(s, members, mode, [](Counterexample const&) {
      return false;
    });
  }

  std::vector<ElementSet> enumerate_hyperideals(KrasnerStructure const& s,
                                                HyperidealMode          mode,
                                                bool        proper_only,
                                                std::size_t bound) {
    if (s.size() > bound) {
      throw Error(ErrorCode::kBoundExceeded,
                  "carrier of '" + s.name() + "' has "
                      + std::to_string(s.size())
                      + " elements, above the enumeration bound "
                      + std::to_string(bound));
    }
    std::vector<ElementSet> result;
    std::uint64_t const     full = s.carrier().bits();
    std::uint64_t const     zero = std::uint64_t{1} << s.zero();
    // Every subset of the carrier containing zero, in increasing mask order.
    std::uint64_t const rest = full & ~zero;
    std::uint64_t       sub  = 0;
    while (true) {
      ElementSet const candidate(sub | zero);
      if (!(proper_only && candidate == s.carrier())
          && qualifies_as_hyperideal(s, candidate, mode)) {
        result.push_back(candidate);
      }
      if (sub == rest) {
        break;
      }
      sub = (sub - rest) & rest;
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ElementSet generated_hyperideal(KrasnerStructure const& s, Element x) {
    require_one(s);
    if (x >= s.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "element out of range");
    }
    ElementSet out;
    for (Element r = 0; r < s.size(); ++r) {
      out.insert(binary_product(s, r, x));
    }
    return out;
  }

  ElementSet colon(KrasnerStructure const& s, ElementSet ideal, Element a) {
    require_one(s);
    require_in_carrier(s, ideal);
    if (a >= s.size()) {
      throw Error(ErrorCode::kIndexOutOfRange, "element out of range");
    }
    ElementSet out;
    for (Element r = 0; r < s.size(); ++r) {
      if (ideal.contains(binary_product(s, r, a))) {
        out.insert(r);
      }
    }
    return out;
  }

  ElementSet radical_powers(KrasnerStructure const& s, ElementSet ideal) {
    Element const one = require_one(s);
    require_in_carrier(s, ideal);
    std::size_t const n = s.n();
    ElementSet        out;
    Buffer            buf{};
    for (Element x = 0; x < s.size(); ++x) {
      bool found = false;
      for (std::size_t t = 1; t <= n && !found; ++t) {
        std::fill(buf.begin(), buf.begin() + n, one);
        std::fill(buf.begin(), buf.begin() + t, x);
        found = ideal.contains(s.g(std::span<Element const>(buf.data(), n)));
      }
      if (!found) {
        for (Element p : power_orbit(s, x).values) {
          if (ideal.contains(p)) {
            found = true;
            break;
          }
        }
      }
      if (found) {
        out.insert(x);
      }
    }
    return out;
  }

  ElementSet radical_primes(KrasnerStructure const& s,
                            ElementSet              ideal,
                            HyperidealMode          mode,
                            std::size_t             bound) {
    require_in_carrier(s, ideal);
    ElementSet out = s.carrier();
    for (ElementSet p : enumerate_hyperideals(s, mode, true, bound)) {
      if (ideal.subset_of(p) && is_prime(s, p, mode).holds()) {
        out &= p;
      }
    }
    return out;
  }

  PredicateOutcome is_prime(KrasnerStructure const& s,
                            ElementSet              ideal,
                            HyperidealMode          mode) {
    if (auto pre = precondition_failure(s, ideal, mode); pre.inapplicable()) {
      return pre;
    }
    PredicateOutcome out;
    for_each_multiset(
        s.carrier() - ideal, s.n(), [&](std::span<Element const> xs) {
          if (ideal.contains(s.g(xs))) {
            out.record(make_counterexample("prime", xs));
          }
          return true;
        });
    return out;
  }

  PredicateOutcome is_prime_idealwise(KrasnerStructure const& s,
                                      ElementSet              ideal,
                                      HyperidealMode          mode,
                                      std::size_t             bound) {
    if (auto pre = precondition_failure(s, ideal, mode); pre.inapplicable()) {
      return pre;
    }
    std::vector<ElementSet> outside;
    for (ElementSet u : enumerate_hyperideals(s, mode, false, bound)) {
      if (!u.subset_of(ideal)) {
        outside.push_back(u);
      }
    }
    PredicateOutcome        out;
    std::vector<ElementSet> chosen(s.n());
    for_each_multiset(ElementSet::full(outside.size()),
                      s.n(),
                      [&](std::span<Element const> idx) {
                        for (std::size_t i = 0; i < idx.size(); ++i) {
                          chosen[i] = outside[idx[i]];
                        }
                        if (image_of_ideal_tuple(s, chosen).subset_of(ideal)) {
                          Counterexample c;
                          c.rule = "prime_idealwise";
                          c.sets = chosen;
                          out.record(std::move(c));
                        }
                        return true;
                      });
    return out;
  }

  PredicateOutcome is_primary(KrasnerStructure const& s,
                              ElementSet              ideal,
                              HyperidealMode          mode) {
    if (!s.one()) {
      return PredicateOutcome::inapplicable(
          "identity: the structure designates no one");
    }
    if (auto pre = precondition_failure(s, ideal, mode); pre.inapplicable()) {
      return pre;
    }
    Element const     one     = *s.one();
    ElementSet const  radical = radical_powers(s, ideal);
    std::size_t const n       = s.n();
    PredicateOutcome  out;
    Buffer            buf{};
    for_each_multiset(s.carrier(), n, [&](std::span<Element const> xs) {
      if (!ideal.contains(s.g(xs))) {
        return true;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (ideal.contains(xs[i])) {
          continue;
        }
        std::copy(xs.begin(), xs.end(), buf.begin());
        buf[i] = one;
        if (!radical.contains(s.g(std::span<Element const>(buf.data(), n)))) {
          out.record(make_counterexample("primary", xs));
          break;
        }
      }
      return true;
    });
    return out;
  }

  ElementSet image_of_ideal_tuple(KrasnerStructure const&     s,
                                  std::span<ElementSet const> sets) {
    if (sets.size() != s.n()) {
      throw Error(ErrorCode::kArityMismatch,
                  "expected " + std::to_string(s.n()) + " sets");
    }
    ElementSet out;
    Buffer     buf{};
    image_rec(s, sets, 0, buf, out);
    return out;
  }

  std::optional<ElementSet> smallest_hyperideal_containing(
      KrasnerStructure const& s,
      ElementSet              subset,
      HyperidealMode          mode,
      std::size_t             bound) {
    std::optional<ElementSet> out;
    for (ElementSet h : enumerate_hyperideals(s, mode, false, bound)) {
      if (subset.subset_of(h)) {
        out = out ? (*out & h) : h;
      }
    }
    return out;
  }

  std::vector<RadicalMismatch> cross_validate_radicals(KrasnerStructure const& s,
                                                       HyperidealMode mode,
                                                       std::size_t    bound) {
    require_one(s);
    std::vector<RadicalMismatch> out;
    for (ElementSet ideal : enumerate_hyperideals(s, mode, false, bound)) {
      ElementSet const powers = radical_powers(s, ideal);
      ElementSet const primes = radical_primes(s, ideal, mode, bound);
      if (powers != primes) {
        out.push_back({ideal, powers, primes});
      }
    }
    return out;
  }

}  // namespace krasner
