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

#include "krasner/axioms.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  namespace {
    constexpr std::size_t kMaxFailingInstances = 16;

    using Buffer = std::array<Element, 2 * kMaxArity>;

    void fail(AxiomVerdict&             v,
              std::span<Element const> tuple,
              std::string               detail) {
      if (v.holds) {
        v.holds = false;
        v.counterexample.assign(tuple.begin(), tuple.end());
        v.detail = detail;
      }
      if (v.failing_instances.size() < kMaxFailingInstances) {
        v.failing_instances.push_back(std::move(detail));
      }
      ++v.failures;
    }

    AxiomVerdict named(char const* name) {
      AxiomVerdict v;
      v.name = name;
      return v;
    }

    std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > UINT64_MAX / a) {
        return UINT64_MAX;
      }
      return a * b;
    }

    std::uint64_t binomial(std::size_t n, std::size_t k) {
      std::uint64_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    // f(x_1..x_k) for a sorted multiset of length m, with one slot replaced by
    // every element of `inner`; returns the union.
    ElementSet f_with_set(KrasnerStructure const&   s,
                          ElementSet                inner,
                          std::span<Element const> rest) {
      Buffer buf{};
      std::copy(rest.begin(), rest.end(), buf.begin() + 1);
      ElementSet out;
      for (Element c : inner) {
        buf[0] = c;
        out |= s.f(std::span<Element const>(buf.data(), s.m()));
      }
      return out;
    }

    void check_f_associative(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const m = s.m();
      for_each_multiset(
          s.carrier(), 2 * m - 1, [&](std::span<Element const> whole) {
            std::optional<ElementSet> reference;
            std::string               reference_text;
            for_each_split(whole, m, [&](auto inner, auto outer) {
              ElementSet const value = f_with_set(s, s.f(inner), outer);
              std::string      text  = "f(f" + format_tuple(s, inner) + ","
                                 + format_tuple(s, outer)
                                 + ") = " + format_set(s, value);
              if (!reference) {
                reference      = value;
                reference_text = std::move(text);
                return true;
              }
              if (value != *reference) {
                fail(v, whole, reference_text + " but " + text);
                return false;
              }
              return true;
            });
            return true;
          });
    }

    void check_f_solvable(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const m = s.m();
      Buffer            buf{};
      for (Element b = 0; b < s.size(); ++b) {
        for_each_multiset(
            s.carrier(), m - 1, [&](std::span<Element const> fixed) {
              std::copy(fixed.begin(), fixed.end(), buf.begin() + 1);
              bool solvable = false;
              for (Element x = 0; x < s.size() && !solvable; ++x) {
                buf[0]   = x;
                solvable = s.f(std::span<Element const>(buf.data(), m))
                               .contains(b);
              }
              if (!solvable) {
                std::vector<Element> tuple{b};
                tuple.insert(tuple.end(), fixed.begin(), fixed.end());
                fail(v,
                     tuple,
                     s.label(b) + " in f(x," + format_tuple(s, fixed)
                         + ") has no solution x");
              }
              return true;
            });
      }
    }

    void check_neutral(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const m = s.m();
      ElementSet        neutrals;
      Buffer            buf{};
      for (Element e = 0; e < s.size(); ++e) {
        std::fill(buf.begin(), buf.begin() + m, e);
        bool ok = true;
        for (Element x = 0; x < s.size() && ok; ++x) {
          buf[0] = x;
          ok     = s.f(std::span<Element const>(buf.data(), m))
                   == ElementSet::singleton(x);
        }
        if (ok) {
          neutrals.insert(e);
        }
      }
      if (neutrals.empty()) {
        fail(v, {}, "no scalar neutral element");
      } else if (neutrals.size() > 1) {
        auto const list = neutrals.elements();
        fail(v, list, "several scalar neutral elements " + format_set(s, neutrals));
      } else if (neutrals.min() != s.zero()) {
        Element const e = neutrals.min();
        fail(v,
             std::span<Element const>(&e, 1),
             "scalar neutral is " + s.label(e) + ", not the designated zero "
                 + s.label(s.zero()));
      }
    }

    // Inverses relative to the designated zero; returns them if unique.
    std::optional<std::vector<Element>> check_inverses(KrasnerStructure const& s,
                                                       AxiomVerdict& v) {
      std::vector<Element> inverse(s.size(), 0);
      bool                 ok = true;
      for (Element x = 0; x < s.size(); ++x) {
        ElementSet candidates;
        Buffer     buf{};
        std::fill(buf.begin(), buf.begin() + s.m(), s.zero());
        buf[0] = x;
        for (Element y = 0; y < s.size(); ++y) {
          buf[1] = y;
          if (s.f(std::span<Element const>(buf.data(), s.m()))
                  .contains(s.zero())) {
            candidates.insert(y);
          }
        }
        if (candidates.size() != 1) {
          ok = false;
          fail(v,
               std::span<Element const>(&x, 1),
               s.label(x) + " has inverse candidates "
                   + format_set(s, candidates));
        } else {
          inverse[x] = candidates.min();
        }
      }
      if (!ok) {
        return std::nullopt;
      }
      return inverse;
    }

    void check_reversibility(KrasnerStructure const&             s,
                             std::optional<std::vector<Element>> inverse,
                             AxiomVerdict&                       v) {
      if (!inverse) {
        fail(v, {}, "inverses are not unique; reversibility is undefined");
        return;
      }
      std::size_t const m = s.m();
      Buffer            buf{};
      for_each_multiset(s.carrier(), m, [&](std::span<Element const> xs) {
        for (Element x : s.f(xs)) {
          for (std::size_t i = 0; i < m; ++i) {
            if (i > 0 && xs[i] == xs[i - 1]) {
              continue;
            }
            buf[0]      = x;
            std::size_t k = 1;
            for (std::size_t j = 0; j < m; ++j) {
              if (j != i) {
                buf[k++] = (*inverse)[xs[j]];
              }
            }
            if (!s.f(std::span<Element const>(buf.data(), m))
                     .contains(xs[i])) {
              fail(v,
                   xs,
                   s.label(x) + " in f" + format_tuple(s, xs) + " but "
                       + s.label(xs[i]) + " not in f"
                       + format_tuple(s, std::span<Element const>(buf.data(),
                                                                  m)));
              return false;
            }
          }
        }
        return true;
      });
    }

    void check_g_associative(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const n = s.n();
      Buffer            buf{};
      for_each_multiset(
          s.carrier(), 2 * n - 1, [&](std::span<Element const> whole) {
            std::optional<Element> reference;
            std::string            reference_text;
            for_each_split(whole, n, [&](auto inner, auto outer) {
              buf[0] = s.g(inner);
              std::copy(outer.begin(), outer.end(), buf.begin() + 1);
              Element const value = s.g(std::span<Element const>(buf.data(), n));
              std::string   text  = "g(g" + format_tuple(s, inner) + ","
                                 + format_tuple(s, outer)
                                 + ") = " + s.label(value);
              if (!reference) {
                reference      = value;
                reference_text = std::move(text);
                return true;
              }
              if (value != *reference) {
                fail(v, whole, reference_text + " but " + text);
                return false;
              }
              return true;
            });
            return true;
          });
    }

    void check_distributive(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const m = s.m();
      std::size_t const n = s.n();
      Buffer            gbuf{};
      Buffer            fbuf{};
      for_each_multiset(
          s.carrier(), n - 1, [&](std::span<Element const> context) {
            std::copy(context.begin(), context.end(), gbuf.begin() + 1);
            auto times = [&](Element y) {
              gbuf[0] = y;
              return s.g(std::span<Element const>(gbuf.data(), n));
            };
            for_each_multiset(
                s.carrier(), m, [&](std::span<Element const> xs) {
                  ElementSet lhs;
                  for (Element y : s.f(xs)) {
                    lhs.insert(times(y));
                  }
                  for (std::size_t i = 0; i < m; ++i) {
                    fbuf[i] = times(xs[i]);
                  }
                  ElementSet const rhs
                      = s.f(std::span<Element const>(fbuf.data(), m));
                  if (lhs != rhs) {
                    std::vector<Element> tuple(context.begin(), context.end());
                    tuple.insert(tuple.end(), xs.begin(), xs.end());
                    fail(v,
                         tuple,
                         "g(" + format_tuple(s, context) + ", f"
                             + format_tuple(s, xs) + ") = " + format_set(s, lhs)
                             + " but f of the products = " + format_set(s, rhs));
                  }
                  return true;
                });
            return true;
          });
    }

    void check_zero_absorbing(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const n = s.n();
      Buffer            buf{};
      buf[0] = s.zero();
      for_each_multiset(
          s.carrier(), n - 1, [&](std::span<Element const> rest) {
            std::copy(rest.begin(), rest.end(), buf.begin() + 1);
            auto const    args  = std::span<Element const>(buf.data(), n);
            Element const value = s.g(args);
            if (value != s.zero()) {
              fail(v,
                   args,
                   "g" + format_tuple(s, args) + " = " + s.label(value));
            }
            return true;
          });
    }

    void check_identity(KrasnerStructure const& s, AxiomVerdict& v) {
      std::size_t const n   = s.n();
      Element const     one = *s.one();
      Buffer            buf{};
      std::fill(buf.begin(), buf.begin() + n, one);
      for (Element x = 0; x < s.size(); ++x) {
        buf[0]              = x;
        auto const    args  = std::span<Element const>(buf.data(), n);
        Element const value = s.g(args);
        if (value != x) {
          fail(v,
               args,
               "g" + format_tuple(s, args) + " = " + s.label(value) + " != "
                   + s.label(x));
        }
      }
    }

    std::uint64_t estimate_work(KrasnerStructure const& s) {
      std::uint64_t const N = s.size();
      std::size_t const   m = s.m();
      std::size_t const   n = s.n();
      std::uint64_t       w = 0;
      w += saturating_mul(saturating_mul(multiset_count(N, 2 * m - 1),
                                         binomial(2 * m - 1, m)),
                          N);
      w += saturating_mul(multiset_count(N, 2 * n - 1), binomial(2 * n - 1, n));
      w += saturating_mul(
          saturating_mul(multiset_count(N, n - 1), multiset_count(N, m)), N);
      return w;
    }
  }  // namespace

  std::vector<AxiomVerdict const*> AxiomReport::verdicts() const {
    return {&f_associative,
            &f_solvable,
            &neutral_exists_unique,
            &inverses_unique,
            &reversibility,
            &g_associative,
            &distributive,
            &zero_absorbing,
            &scalar_identity};
  }

  AxiomReport verify_axioms(KrasnerStructure const& s,
                            bool                    check_identity_flag,
                            std::uint64_t           work_bound) {
    if (check_identity_flag && !s.one()) {
      throw Error(ErrorCode::kMissingIdentity,
                  "identity check requested but '" + s.name()
                      + "' designates no one");
    }
    if (estimate_work(s) > work_bound) {
      throw Error(ErrorCode::kBoundExceeded,
                  "exhaustive axiom check of '" + s.name()
                      + "' exceeds the configured work bound");
    }
    AxiomReport r;
    r.f_associative         = named("f_associative");
    r.f_solvable            = named("f_solvable");
    r.neutral_exists_unique = named("neutral_exists_unique");
    r.inverses_unique       = named("inverses_unique");
    r.reversibility         = named("reversibility");
    r.g_associative         = named("g_associative");
    r.distributive          = named("distributive");
    r.zero_absorbing        = named("zero_absorbing");
    r.scalar_identity       = named("scalar_identity");

    check_f_associative(s, r.f_associative);
    check_f_solvable(s, r.f_solvable);
    check_neutral(s, r.neutral_exists_unique);
    check_reversibility(s, check_inverses(s, r.inverses_unique), r.reversibility);
    check_g_associative(s, r.g_associative);
    check_distributive(s, r.distributive);
    check_zero_absorbing(s, r.zero_absorbing);
    if (check_identity_flag) {
      check_identity(s, r.scalar_identity);
    } else {
      r.scalar_identity.checked = false;
    }

    r.overall = true;
    for (auto const* v : r.verdicts()) {
      if (v->checked && !v->holds) {
        r.overall = false;
      }
    }
    return r;
  }

  bool has_scalar_identity(KrasnerStructure const& s) {
    if (!s.one()) {
      return false;
    }
    AxiomVerdict v = named("scalar_identity");
    check_identity(s, v);
    return v.holds;
  }

}  // namespace krasner
