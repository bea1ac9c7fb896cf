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

#include "krasner/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "krasner/axioms.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  namespace {
    using Buffer = std::array<Element, kMaxArity>;


    // Calls visit(tuple) for every choice of one element per set.
    template <typename Visitor>
    bool for_each_choice(std::span<ElementSet const> sets,
                         Buffer&                     buf,
                         std::size_t                 pos,
                         Visitor&&                   visit) {
      if (pos == sets.size()) {
        return visit(std::span<Element const>(buf.data(), sets.size()));
      }
      for (Element x : sets[pos]) {
        buf[pos] = x;
        if (!for_each_choice(sets, buf, pos + 1, visit)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Element product_element(KrasnerStructure const& s2, Element a, Element b) {
    return static_cast<Element>(a * s2.size() + b);
  }

  KrasnerStructure product(KrasnerStructure const& s1,
                           KrasnerStructure const& s2) {
    if (s1.m() != s2.m() || s1.n() != s2.n()) {
      throw Error(ErrorCode::kArityMismatch,
                  "product needs equal arities, got (" + std::to_string(s1.m())
                      + "," + std::to_string(s1.n()) + ") and ("
                      + std::to_string(s2.m()) + "," + std::to_string(s2.n())
                      + ")");
    }
    std::size_t const n1 = s1.size();
    std::size_t const n2 = s2.size();
    if (n1 * n2 > kMaxCarrier) {
      throw Error(ErrorCode::kBoundExceeded,
                  "product carrier would have " + std::to_string(n1 * n2)
                      + " elements");
    }
    std::vector<std::string> labels;
    labels.reserve(n1 * n2);
    for (Element a = 0; a < n1; ++a) {
      for (Element b = 0; b < n2; ++b) {
        labels.push_back("(" + s1.label(a) + ";" + s2.label(b) + ")");
      }
    }
    auto split = [&](std::span<Element const> key, Buffer& left, Buffer& right) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        left[i]  = static_cast<Element>(key[i] / n2);
        right[i] = static_cast<Element>(key[i] % n2);
      }
    };
    auto f = HyperOperationTable::tabulate(
        n1 * n2, s1.m(), [&](std::span<Element const> key) {
          Buffer left{};
          Buffer right{};
          split(key, left, right);
          ElementSet const a = s1.f(std::span<Element const>(left.data(), key.size()));
          ElementSet const b = s2.f(std::span<Element const>(right.data(), key.size()));
          return product_set(s1, s2, a, b);
        });
    auto g = OperationTable::tabulate(
        n1 * n2, s1.n(), [&](std::span<Element const> key) {
          Buffer left{};
          Buffer right{};
          split(key, left, right);
          return product_element(
              s2,
              s1.g(std::span<Element const>(left.data(), key.size())),
              s2.g(std::span<Element const>(right.data(), key.size())));
        });
    std::optional<Element> one;
    if (s1.one() && s2.one()) {
      one = product_element(s2, *s1.one(), *s2.one());
    }
    return KrasnerStructure(s1.name() + "x" + s2.name(),
                            std::move(labels),
                            std::move(f),
                            std::move(g),
                            product_element(s2, s1.zero(), s2.zero()),
                            one);
  }

  ElementSet product_set(KrasnerStructure const& s1,
                         KrasnerStructure const& s2,
                         ElementSet              x1,
                         ElementSet              x2) {
    (void) s1;
    ElementSet out;
    for (Element a : x1) {
      for (Element b : x2) {
        out.insert(product_element(s2, a, b));
      }
    }
    return out;
  }

  ElementSet lift_ideal_product(KrasnerStructure const& s1,
                                KrasnerStructure const& s2,
                                ElementSet              ideal) {
    return product_set(s1, s2, ideal, s2.carrier());
  }

  ElementSet Homomorphism::image(ElementSet x) const {
    ElementSet out;
    for (Element e : x) {
      out.insert(map.at(e));
    }
    return out;
  }

  ElementSet Homomorphism::preimage(ElementSet y) const {
    ElementSet out;
    for (Element e = 0; e < map.size(); ++e) {
      if (y.contains(map[e])) {
        out.insert(e);
      }
    }
    return out;
  }

  PredicateOutcome verify_homomorphism(Homomorphism const& h) {
    if (h.map.size() != h.source.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "map has " + std::to_string(h.map.size())
                      + " entries for a carrier of "
                      + std::to_string(h.source.size()));
    }
    if (h.source.m() != h.target.m() || h.source.n() != h.target.n()) {
      throw Error(ErrorCode::kArityMismatch,
                  "homomorphism needs equal arities");
    }
    for (Element y : h.map) {
      if (y >= h.target.size()) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "map value outside the target carrier");
      }
    }
    PredicateOutcome out;
    Buffer           buf{};
    for_each_multiset(
        h.source.carrier(), h.source.m(), [&](std::span<Element const> xs) {
          for (std::size_t i = 0; i < xs.size(); ++i) {
            buf[i] = h.map[xs[i]];
          }
          if (h.image(h.source.f(xs))
              != h.target.f(std::span<Element const>(buf.data(), xs.size()))) {
            Counterexample c;
            c.rule = "f";
            c.tuple.assign(xs.begin(), xs.end());
            out.record(std::move(c));
          }
          return true;
        });
    for_each_multiset(
        h.source.carrier(), h.source.n(), [&](std::span<Element const> xs) {
          for (std::size_t i = 0; i < xs.size(); ++i) {
            buf[i] = h.map[xs[i]];
          }
          if (h.map[h.source.g(xs)]
              != h.target.g(std::span<Element const>(buf.data(), xs.size()))) {
            Counterexample c;
            c.rule = "g";
            c.tuple.assign(xs.begin(), xs.end());
            out.record(std::move(c));
          }
          return true;
        });
    return out;
  }

  ElementSet preimage_ideal(Homomorphism const& h, ElementSet ideal) {
    return h.preimage(ideal);
  }

  Homomorphism projection_first(KrasnerStructure const& prod,
                                KrasnerStructure const& s1,
                                KrasnerStructure const& s2) {
    std::vector<Element> map(prod.size());
    for (Element p = 0; p < prod.size(); ++p) {
      map[p] = static_cast<Element>(p / s2.size());
    }
    return Homomorphism{prod, s1, std::move(map)};
  }

  Homomorphism projection_second(KrasnerStructure const& prod,
                                 KrasnerStructure const& s1,
                                 KrasnerStructure const& s2) {
    (void) s1;
    std::vector<Element> map(prod.size());
    for (Element p = 0; p < prod.size(); ++p) {
      map[p] = static_cast<Element>(p % s2.size());
    }
    return Homomorphism{prod, s2, std::move(map)};
  }

  std::vector<Homomorphism> enumerate_homomorphisms(KrasnerStructure const& s1,
                                                    KrasnerStructure const& s2,
                                                    std::size_t bound) {
    if (s1.m() != s2.m() || s1.n() != s2.n()) {
      return {};
    }
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < s1.size(); ++i) {
      count *= s2.size();
      if (count > bound) {
        throw Error(ErrorCode::kBoundExceeded,
                    "more than " + std::to_string(bound) + " maps from '"
                        + s1.name() + "' to '" + s2.name() + "'");
      }
    }
    std::vector<Homomorphism> out;
    for_each_tuple(s2.size(), s1.size(), [&](std::span<Element const> values) {
      Homomorphism h{s1, s2, std::vector<Element>(values.begin(), values.end())};
      if (verify_homomorphism(h).holds()) {
        out.push_back(std::move(h));
      }
      return true;
    });
    return out;
  }

  Homomorphism QuotientMap::projection() const {
    return Homomorphism{source, structure, class_of};
  }

  QuotientMap quotient(KrasnerStructure const& s, ElementSet kernel) {
    if (!kernel.subset_of(s.carrier()) || !kernel.contains(s.zero())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "kernel must be a subset of the carrier containing zero");
    }
    std::size_t const m = s.m();
    std::size_t const n = s.n();
    Buffer            buf{};

    std::vector<ElementSet> coset_of(s.size());
    for (Element x = 0; x < s.size(); ++x) {
      std::fill(buf.begin(), buf.begin() + m, s.zero());
      buf[0] = x;
      for (Element j : kernel) {
        buf[1] = j;
        coset_of[x] |= s.f(std::span<Element const>(buf.data(), m));
      }
    }
    for (Element x = 0; x < s.size(); ++x) {
      if (!coset_of[x].contains(x)) {
        throw Error(ErrorCode::kNotAPartition,
                    s.label(x) + " is not in its own coset "
                        + format_set(s, coset_of[x]));
      }
      for (Element y = x + 1; y < s.size(); ++y) {
        if (coset_of[x] != coset_of[y] && coset_of[x].intersects(coset_of[y])) {
          throw Error(ErrorCode::kNotAPartition,
                      "cosets " + format_set(s, coset_of[x]) + " of "
                          + s.label(x) + " and " + format_set(s, coset_of[y])
                          + " of " + s.label(y)
                          + " overlap without coinciding");
        }
      }
    }

    QuotientMap q{s, kernel, {}, std::vector<Element>(s.size()), s};
    for (Element x = 0; x < s.size(); ++x) {
      if (coset_of[x].min() == x) {
        q.cosets.push_back(coset_of[x]);
      }
    }
    for (Element c = 0; c < q.cosets.size(); ++c) {
      for (Element x : q.cosets[c]) {
        q.class_of[x] = c;
      }
    }
    auto classes = [&](ElementSet set) {
      ElementSet out;
      for (Element x : set) {
        out.insert(q.class_of[x]);
      }
      return out;
    };

    std::vector<ElementSet> chosen(std::max(m, n));
    auto f = HyperOperationTable::tabulate(
        q.cosets.size(), m, [&](std::span<Element const> key) {
          for (std::size_t i = 0; i < m; ++i) {
            chosen[i] = q.cosets[key[i]];
          }
          std::optional<ElementSet> value;
          Buffer                    choice{};
          for_each_choice(std::span<ElementSet const>(chosen.data(), m),
                          choice,
                          0,
                          [&](std::span<Element const> xs) {
                            ElementSet const v = classes(s.f(xs));
                            if (value && *value != v) {
                              throw Error(ErrorCode::kWellDefinednessFailure,
                                          "induced f on "
                                              + format_tuple(s, xs)
                                              + " depends on representatives");
                            }
                            value = v;
                            return true;
                          });
          return *value;
        });
    auto g = OperationTable::tabulate(
        q.cosets.size(), n, [&](std::span<Element const> key) {
          for (std::size_t i = 0; i < n; ++i) {
            chosen[i] = q.cosets[key[i]];
          }
          std::optional<Element> value;
          Buffer                 choice{};
          for_each_choice(std::span<ElementSet const>(chosen.data(), n),
                          choice,
                          0,
                          [&](std::span<Element const> xs) {
                            Element const v = q.class_of[s.g(xs)];
                            if (value && *value != v) {
                              throw Error(ErrorCode::kWellDefinednessFailure,
                                          "induced g on "
                                              + format_tuple(s, xs)
                                              + " depends on representatives");
                            }
                            value = v;
                            return true;
                          });
          return *value;
        });

    std::vector<std::string> labels;
    for (ElementSet c : q.cosets) {
      labels.push_back("[" + s.label(c.min()) + "]");
    }
    std::optional<Element> one;
    if (s.one()) {
      one = q.class_of[*s.one()];
    }
    std::string const name = s.name() + "/" + format_set(s, kernel);
    q.structure            = KrasnerStructure(name,
                                   std::move(labels),
                                   std::move(f),
                                   std::move(g),
                                   q.class_of[s.zero()],
                                   one);
    AxiomReport const report = verify_axioms(q.structure);
    if (!report.overall) {
      std::string detail;
      for (auto const* v : report.verdicts()) {
        if (v->checked && !v->holds) {
          detail = v->name + ": " + v->detail;
          break;
        }
      }
      throw Error(ErrorCode::kAxiomFailure,
                  "quotient '" + name + "' is not a Krasner hyperring ("
                      + detail + ")");
    }
    return q;
  }

  ElementSet lift_to_quotient(QuotientMap const& q, ElementSet x) {
    ElementSet out;
    for (Element c = 0; c < q.cosets.size(); ++c) {
      if (q.cosets[c].intersects(x)) {
        out.insert(c);
      }
    }
    return out;
  }

  ElementSet SubstructureEmbedding::to_induced(ElementSet ambient_set) const {
    ElementSet out;
    for (Element i = 0; i < to_ambient.size(); ++i) {
      if (ambient_set.contains(to_ambient[i])) {
        out.insert(i);
      }
    }
    return out;
  }

  ElementSet SubstructureEmbedding::from_induced(ElementSet induced_set) const {
    ElementSet out;
    for (Element i : induced_set) {
      out.insert(to_ambient.at(i));
    }
    return out;
  }

  bool is_closed_subset(KrasnerStructure const& s, ElementSet members) {
    if (!members.subset_of(s.carrier()) || !members.contains(s.zero())) {
      return false;
    }
    bool closed = true;
    for_each_multiset(members, s.m(), [&](std::span<Element const> xs) {
      closed = s.f(xs).subset_of(members);
      return closed;
    });
    if (!closed) {
      return false;
    }
    for_each_multiset(members, s.n(), [&](std::span<Element const> xs) {
      closed = members.contains(s.g(xs));
      return closed;
    });
    return closed;
  }

  SubstructureEmbedding embed(KrasnerStructure const& s, ElementSet members) {
    if (!is_closed_subset(s, members)) {
      throw Error(ErrorCode::kInvalidArgument,
                  format_set(s, members)
                      + " is not closed under f and g or misses zero");
    }
    std::vector<Element> to_ambient = members.elements();
    std::vector<Element> to_induced(s.size(), 0);
    std::vector<std::string> labels;
    for (Element i = 0; i < to_ambient.size(); ++i) {
      to_induced[to_ambient[i]] = i;
      labels.push_back(s.label(to_ambient[i]));
    }
    auto lift = [&](std::span<Element const> key, Buffer& buf) {
      for (std::size_t i = 0; i < key.size(); ++i) {
        buf[i] = to_ambient[key[i]];
      }
      return std::span<Element const>(buf.data(), key.size());
    };
    auto f = HyperOperationTable::tabulate(
        to_ambient.size(), s.m(), [&](std::span<Element const> key) {
          Buffer     buf{};
          ElementSet out;
          for (Element y : s.f(lift(key, buf))) {
            out.insert(to_induced[y]);
          }
          return out;
        });
    auto g = OperationTable::tabulate(
        to_ambient.size(), s.n(), [&](std::span<Element const> key) {
          Buffer buf{};
          return to_induced[s.g(lift(key, buf))];
        });
    std::optional<Element> one;
    if (s.one() && members.contains(*s.one())) {
      one = to_induced[*s.one()];
    }
    KrasnerStructure induced(s.name() + "|" + format_set(s, members),
                             std::move(labels),
                             std::move(f),
                             std::move(g),
                             to_induced[s.zero()],
                             one);
    return SubstructureEmbedding{s, members, std::move(to_ambient),
                                 std::move(induced)};
  }

  std::vector<SubstructureEmbedding> enumerate_subhyperrings(
      KrasnerStructure const& s,
      std::size_t             bound) {
    if (s.size() > bound) {
      throw Error(ErrorCode::kBoundExceeded,
                  "carrier of '" + s.name() + "' has "
                      + std::to_string(s.size())
                      + " elements, above the enumeration bound "
                      + std::to_string(bound));
    }
    std::vector<SubstructureEmbedding> out;
    std::uint64_t const zero = std::uint64_t{1} << s.zero();
    std::uint64_t const rest = s.carrier().bits() & ~zero;
    std::vector<ElementSet> found;
    std::uint64_t sub = 0;
    while (true) {
      ElementSet const candidate(sub | zero);
      if (is_closed_subset(s, candidate)) {
        found.push_back(candidate);
      }
      if (sub == rest) {
        break;
      }
      sub = (sub - rest) & rest;
    }
    std::sort(found.begin(), found.end());
    for (ElementSet members : found) {
      out.push_back(embed(s, members));
    }
    return out;
  }

  RestrictedIdeal restrict_ideal(SubstructureEmbedding const& e,
                                 ElementSet                   ideal,
                                 HyperidealMode               mode) {
    RestrictedIdeal r;
    r.ambient_members = ideal & e.members;
    r.induced_members = e.to_induced(r.ambient_members);
    r.is_hyperideal
        = qualifies_as_hyperideal(e.induced, r.induced_members, mode);
    return r;
  }

}  // namespace krasner
