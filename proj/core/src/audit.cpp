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

#include "krasner/audit.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "krasner/axioms.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  namespace {
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    // A corpus structure with everything the theorems quantify over.
    struct Prepared {
      KrasnerStructure        s;
      bool                    identity = false;
      std::vector<ElementSet> ideals;
      std::vector<ElementSet> mults;  // multiplicative subsets without zero
      std::map<Key, PredicateOutcome> s_prime_cache;
      std::map<Key, PredicateOutcome> s_primary_cache;
      std::map<std::uint64_t, ElementSet> radical_cache;
    };

    struct Context {
      AuditOptions const&       options;
      std::vector<Prepared>     corpus;  // usable structures, input order
      std::vector<AuditFinding> findings;

      PredicateOutcome const& s_prime(Prepared& p, ElementSet i, ElementSet m) {
        Key const key{i.bits(), m.bits()};
        auto      it = p.s_prime_cache.find(key);
        if (it == p.s_prime_cache.end()) {
          it = p.s_prime_cache
                   .emplace(key, is_s_prime(p.s, i, m, options.mode))
                   .first;
        }
        return it->second;
      }

      PredicateOutcome const& s_primary(Prepared& p, ElementSet i, ElementSet m) {
        Key const key{i.bits(), m.bits()};
        auto      it = p.s_primary_cache.find(key);
        if (it == p.s_primary_cache.end()) {
          it = p.s_primary_cache
                   .emplace(key,
                            is_s_primary(p.s, i, m, options.mode, options.reading))
                   .first;
        }
        return it->second;
      }

      ElementSet radical(Prepared& p, ElementSet i) {
        auto it = p.radical_cache.find(i.bits());
        if (it == p.radical_cache.end()) {
          it = p.radical_cache.emplace(i.bits(), radical_powers(p.s, i)).first;
        }
        return it->second;
      }

      std::vector<Prepared*> with_identity() {
        std::vector<Prepared*> out;
        for (auto& p : corpus) {
          if (p.identity) {
            out.push_back(&p);
          }
        }
        return out;
      }
    };

    std::string set_text(KrasnerStructure const& s, ElementSet x) {
      return format_set(s, x);
    }

    void violate(AuditEntry&  e,
                 std::string  structure,
                 std::string  instance,
                 std::string  detail) {
      ++e.violation_count;
      if (e.violations.size() < kMaxRecordedViolations) {
        e.violations.push_back(
            {std::move(structure), std::move(instance), std::move(detail)});
      }
    }

    std::string mode_note(Context const& ctx) {
      return "hyperideal mode: " + std::string(to_string(ctx.options.mode));
    }

    std::string identity_note(Context const& ctx) {
      std::size_t              ok = 0;
      std::vector<std::string> excluded;
      for (auto const& p : ctx.corpus) {
        if (p.identity) {
          ++ok;
        } else {
          excluded.push_back(p.s.name());
        }
      }
      std::string note = "scalar identity verified on " + std::to_string(ok)
                         + " of " + std::to_string(ctx.corpus.size())
                         + " structures";
      if (!excluded.empty()) {
        note += "; excluded:";
        for (auto const& n : excluded) {
          note += " " + n;
        }
      }
      return note;
    }

    std::string disjoint_note() {
      return "multiplicative subsets range over all nonempty g-closed subsets "
             "without zero; pairs meeting the hyperideal are skipped";
    }

    ElementSet intersect_all(std::vector<ElementSet> const& sets,
                             std::span<Element const>       idx,
                             ElementSet                     start) {
      for (Element i : idx) {
        start &= sets[i];
      }
      return start;
    }

    bool same_arity(KrasnerStructure const& a, KrasnerStructure const& b) {
      return a.m() == b.m() && a.n() == b.n();
    }

    std::string names(std::vector<ElementSet> const& sets,
                      std::span<Element const>       idx,
                      KrasnerStructure const&        s) {
      std::string out = "(";
      for (std::size_t i = 0; i < idx.size(); ++i) {
        out += (i > 0 ? "," : "") + set_text(s, sets[idx[i]]);
      }
      return out + ")";
    }

    // Holds when some s in `mult` maps `ideal` into `target` under
    // x -> g(s, x, one^(n-2)).
    bool some_s_sends(KrasnerStructure const& s,
                      ElementSet              mult,
                      ElementSet              ideal,
                      ElementSet              target) {
      for (Element w : mult) {
        if (ideal.subset_of(colon(s, target, w))) {
          return true;
        }
      }
      return false;
    }

    // -----------------------------------------------------------------------
    // Colon characterizations.

    void audit_colon(Context& ctx, AuditEntry& e, bool primary) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx), disjoint_note()};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet i : p->ideals) {
          for (ElementSet m : p->mults) {
            if (i.intersects(m)) {
              continue;
            }
            ColonEquivalence const eq
                = primary ? s_primary_colon_equiv(
                      p->s, i, m, ctx.options.mode, ctx.options.reading)
                          : s_prime_colon_equiv(p->s, i, m, ctx.options.mode);
            if (!eq.applicable()) {
              continue;
            }
            ++e.instantiations;
            if (!eq.agree()) {
              violate(e,
                      p->s.name(),
                      "I=" + set_text(p->s, i) + " S=" + set_text(p->s, m),
                      std::string("direct scan ")
                          + (eq.direct.holds() ? "holds" : "fails")
                          + " but colon witnesses are "
                          + set_text(p->s, eq.colon_witnesses));
            }
          }
        }
      }
    }

    // -----------------------------------------------------------------------
    // Restriction to subhyperrings.

    std::optional<Prepared> prepare(KrasnerStructure const& s,
                                    AuditOptions const&     options,
                                    std::vector<AuditFinding>* findings);

    void audit_restriction(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx),
                      identity_note(ctx),
                      "subhyperrings must contain one and satisfy the axioms "
                      "with a scalar identity",
                      "ambient structures: the corpus plus products of two "
                      "corpus structures with at most "
                          + std::to_string(ctx.options.extension_bound)
                          + " elements"};
      std::vector<Prepared*> ambients = ctx.with_identity();
      std::vector<Prepared>  extra;
      extra.reserve(ambients.size() * ambients.size());
      for (std::size_t a = 0; a < ambients.size(); ++a) {
        for (std::size_t b = a; b < ambients.size(); ++b) {
          auto const& sa = ambients[a]->s;
          auto const& sb = ambients[b]->s;
          if (!same_arity(sa, sb) || sa.size() < 2 || sb.size() < 2
              || sa.size() * sb.size() > ctx.options.extension_bound) {
            continue;
          }
          if (auto p = prepare(product(sa, sb), ctx.options, nullptr);
              p && p->identity) {
            extra.push_back(std::move(*p));
          }
        }
      }
      for (auto& p : extra) {
        ambients.push_back(&p);
      }

      for (Prepared* g : ambients) {
        for (auto const& sub : enumerate_subhyperrings(
                 g->s, ctx.options.enumeration_bound)) {
          if (!g->s.one() || !sub.members.contains(*g->s.one())
              || !verify_axioms(sub.induced, true).overall) {
            continue;
          }
          for (ElementSet i : g->ideals) {
            for (ElementSet m : g->mults) {
              if (!m.subset_of(sub.members) || i.intersects(m)
                  || !ctx.s_prime(*g, i, m).holds()) {
                continue;
              }
              ++e.instantiations;
              RestrictedIdeal const r = restrict_ideal(sub, i, ctx.options.mode);
              std::string const instance = "R=" + set_text(g->s, sub.members)
                                           + " I=" + set_text(g->s, i)
                                           + " S=" + set_text(g->s, m);
              if (!r.is_hyperideal) {
                violate(e, g->s.name(), instance,
                        "the intersection is not a hyperideal of R");
                continue;
              }
              auto const out = is_s_prime(sub.induced,
                                          r.induced_members,
                                          sub.to_induced(m),
                                          ctx.options.mode);
              if (!out.holds()) {
                violate(e, g->s.name(), instance,
                        "the intersection is not S-prime in R"
                            + (out.reason.empty() ? "" : " (" + out.reason + ")"));
              }
            }
          }
        }
      }
    }

    // -----------------------------------------------------------------------
    // Covering by S-prime hyperideals.

    std::vector<ElementSet> s_primes(Context& ctx, Prepared& p, ElementSet m) {
      std::vector<ElementSet> out;
      for (ElementSet i : p.ideals) {
        if (!i.intersects(m) && ctx.s_prime(p, i, m).holds()) {
          out.push_back(i);
        }
      }
      return out;
    }

    void audit_covering(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "covers: every multiset of n S-prime hyperideals and "
                      "every hyperideal inside their union"};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet m : p->mults) {
          auto const primes = s_primes(ctx, *p, m);
          for_each_multiset(
              ElementSet::full(primes.size()),
              p->s.n(),
              [&](std::span<Element const> idx) {
                ElementSet cover;
                for (Element k : idx) {
                  cover |= primes[k];
                }
                for (ElementSet i : p->ideals) {
                  if (!i.subset_of(cover)) {
                    continue;
                  }
                  ++e.instantiations;
                  bool ok = false;
                  for (Element k : idx) {
                    ok = ok || some_s_sends(p->s, m, i, primes[k]);
                  }
                  if (!ok) {
                    violate(e, p->s.name(),
                            "S=" + set_text(p->s, m)
                                + " P=" + names(primes, idx, p->s)
                                + " I=" + set_text(p->s, i),
                            "no s in S sends I into any P_i");
                  }
                }
                return true;
              });
        }
      }
    }

    // -----------------------------------------------------------------------
    // Ideal-wise characterizations.

    void audit_idealwise_s_prime(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx), disjoint_note(),
                      "the one in g(s, I_i, 1, ..) is taken n-2 times"};
      for (Prepared* p : ctx.with_identity()) {
        std::size_t const n = p->s.n();
        // Image of every n-multiset of hyperideals, computed once.
        std::vector<std::pair<std::vector<Element>, ElementSet>> images;
        for_each_multiset(
            ElementSet::full(p->ideals.size()), n,
            [&](std::span<Element const> idx) {
              std::vector<ElementSet> sets;
              for (Element k : idx) {
                sets.push_back(p->ideals[k]);
              }
              images.emplace_back(std::vector<Element>(idx.begin(), idx.end()),
                                  image_of_ideal_tuple(p->s, sets));
              return true;
            });
        for (ElementSet i : p->ideals) {
          for (ElementSet m : p->mults) {
            if (i.intersects(m)) {
              continue;
            }
            auto const& direct = ctx.s_prime(*p, i, m);
            if (direct.inapplicable()) {
              continue;
            }
            ++e.instantiations;
            ElementSet idealwise;
            for (Element w : m) {
              ElementSet const c  = colon(p->s, i, w);
              bool             ok = true;
              for (auto const& [idx, image] : images) {
                if (!image.subset_of(i)) {
                  continue;
                }
                bool const rescued
                    = std::any_of(idx.begin(), idx.end(), [&](Element k) {
                        return p->ideals[k].subset_of(c);
                      });
                if (!rescued) {
                  ok = false;
                  break;
                }
              }
              if (ok) {
                idealwise.insert(w);
              }
            }
            if (direct.holds() != !idealwise.empty()) {
              violate(e, p->s.name(),
                      "I=" + set_text(p->s, i) + " S=" + set_text(p->s, m),
                      std::string("elementwise ")
                          + (direct.holds() ? "holds" : "fails")
                          + " but ideal-wise witnesses are "
                          + set_text(p->s, idealwise));
            }
          }
        }
      }
    }

    void audit_idealwise_prime(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx),
                      "all structures satisfying the axioms; proper hyperideals"};
      for (auto& p : ctx.corpus) {
        for (ElementSet i : p.ideals) {
          if (i == p.s.carrier()) {
            continue;
          }
          ++e.instantiations;
          auto const a = is_prime(p.s, i, ctx.options.mode);
          auto const b = is_prime_idealwise(
              p.s, i, ctx.options.mode, ctx.options.enumeration_bound);
          if (a.holds() != b.holds()) {
            violate(e, p.s.name(), "I=" + set_text(p.s, i),
                    std::string("elementwise ") + std::string(to_string(a.verdict))
                        + ", ideal-wise " + std::string(to_string(b.verdict)));
          }
        }
      }
    }

    // -----------------------------------------------------------------------
    // Radical containments.

    void audit_radical_of_sub(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "I S-prime, J any hyperideal inside I"};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet m : p->mults) {
          for (ElementSet i : s_primes(ctx, *p, m)) {
            for (ElementSet j : p->ideals) {
              if (!j.subset_of(i)) {
                continue;
              }
              ++e.instantiations;
              ElementSet const rad = ctx.radical(*p, j);
              if (!some_s_sends(p->s, m, rad, i)) {
                violate(e, p->s.name(),
                        "I=" + set_text(p->s, i) + " S=" + set_text(p->s, m)
                            + " J=" + set_text(p->s, j),
                        "no s in S sends rad(J)=" + set_text(p->s, rad)
                            + " into I");
              }
            }
          }
        }
      }
    }

    void audit_radical_of_meet(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "every multiset of n S-prime hyperideals"};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet m : p->mults) {
          auto const primes = s_primes(ctx, *p, m);
          for_each_multiset(
              ElementSet::full(primes.size()), p->s.n(),
              [&](std::span<Element const> idx) {
                ++e.instantiations;
                ElementSet const meet = intersect_all(primes, idx, p->s.carrier());
                ElementSet const rad  = ctx.radical(*p, meet);
                if (!some_s_sends(p->s, m, rad, meet)) {
                  violate(e, p->s.name(),
                          "S=" + set_text(p->s, m)
                              + " I=" + names(primes, idx, p->s),
                          "no s in S sends rad(meet)=" + set_text(p->s, rad)
                              + " into the meet " + set_text(p->s, meet));
                }
                return true;
              });
        }
      }
    }

    // -----------------------------------------------------------------------
    // Preimages under homomorphisms.

    std::vector<Homomorphism> corpus_maps(Context const&          ctx,
                                          KrasnerStructure const& a,
                                          KrasnerStructure const& b) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < a.size() && count <= ctx.options.map_search_bound;
           ++i) {
        count *= b.size();
      }
      if (count <= ctx.options.map_search_bound) {
        return enumerate_homomorphisms(a, b, ctx.options.map_search_bound);
      }
      // Beyond the exhaustive bound only index reduction x -> x mod |b| is
      // tried; between the modular rings it is the canonical projection.
      std::vector<Element> map(a.size());
      for (Element x = 0; x < a.size(); ++x) {
        map[x] = static_cast<Element>(x % b.size());
      }
      Homomorphism h{a, b, std::move(map)};
      if (verify_homomorphism(h).holds()) {
        return {std::move(h)};
      }
      return {};
    }

    void audit_preimage(Context& ctx, AuditEntry& e) {
      e.hypotheses = {
          mode_note(ctx), identity_note(ctx),
          "homomorphisms: every map between same-arity structures when at most "
              + std::to_string(ctx.options.map_search_bound)
              + " maps exist, otherwise the index reduction x -> x mod |R2| "
                "when it is a homomorphism",
          "0 not in h(S) and I2 h(S)-prime"};
      auto const identity = ctx.with_identity();
      for (Prepared* p1 : identity) {
        for (Prepared* p2 : identity) {
          if (!same_arity(p1->s, p2->s)) {
            continue;
          }
          for (auto const& h : corpus_maps(ctx, p1->s, p2->s)) {
            for (ElementSet m : p1->mults) {
              ElementSet const hm = h.image(m);
              if (hm.contains(p2->s.zero())) {
                continue;
              }
              for (ElementSet i2 : p2->ideals) {
                if (i2.intersects(hm) || !ctx.s_prime(*p2, i2, hm).holds()) {
                  continue;
                }
                ++e.instantiations;
                ElementSet const pre = preimage_ideal(h, i2);
                auto const&      out = ctx.s_prime(*p1, pre, m);
                if (!out.holds()) {
                  std::string map_text;
                  for (Element y : h.map) {
                    map_text += (map_text.empty() ? "" : ",") + p2->s.label(y);
                  }
                  violate(e, p1->s.name() + " -> " + p2->s.name(),
                          "h=[" + map_text + "] S=" + set_text(p1->s, m)
                              + " I2=" + set_text(p2->s, i2),
                          "preimage " + set_text(p1->s, pre)
                              + " is not S-prime"
                              + (out.reason.empty() ? "" : " (" + out.reason + ")"));
                }
              }
            }
          }
        }
      }
    }

    // -----------------------------------------------------------------------
    // Quotients.

    void audit_quotient(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "J strict hyperideal with a successful quotient, J inside "
                      "I, J and S disjoint, I/J and S-bar disjoint, I S-prime"};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet j : enumerate_hyperideals(p->s, HyperidealMode::kStrict,
                                                  false,
                                                  ctx.options.enumeration_bound)) {
          std::optional<QuotientMap> q;
          try {
            q = quotient(p->s, j);
          } catch (Error const& err) {
            ctx.findings.push_back({"quotient", p->s.name(),
                                    "J=" + set_text(p->s, j) + ": " + err.what()});
            continue;
          }
          for (ElementSet m : p->mults) {
            if (j.intersects(m)) {
              continue;
            }
            ElementSet const mbar = lift_to_quotient(*q, m);
            for (ElementSet i : p->ideals) {
              if (!j.subset_of(i) || i.intersects(m)
                  || !ctx.s_prime(*p, i, m).holds()) {
                continue;
              }
              ElementSet const ibar = lift_to_quotient(*q, i);
              if (ibar.intersects(mbar)) {
                continue;
              }
              ++e.instantiations;
              auto const out = is_s_prime(q->structure, ibar, mbar, ctx.options.mode);
              if (!out.holds()) {
                violate(e, p->s.name(),
                        "J=" + set_text(p->s, j) + " I=" + set_text(p->s, i)
                            + " S=" + set_text(p->s, m),
                        "I/J=" + set_text(q->structure, ibar)
                            + " is not S-bar-prime in " + q->structure.name()
                            + (out.reason.empty() ? "" : " (" + out.reason + ")"));
              }
            }
          }
        }
      }
    }

    // -----------------------------------------------------------------------
    // Products.

    // S-primeness of a subset of a product built from verified factors with
    // scalar identities, which themselves make the binary-product shortcut
    // valid whenever the product's one is a scalar identity.
    bool product_s_prime(KrasnerStructure const& prod,
                         ElementSet              ideal,
                         ElementSet              mult,
                         HyperidealMode          mode,
                         std::map<std::uint64_t, bool>& ideal_cache,
                         std::map<std::uint64_t, bool>& mult_cache) {
      if (ideal.intersects(mult) || mult.empty()) {
        return false;
      }
      auto hi = ideal_cache.find(ideal.bits());
      if (hi == ideal_cache.end()) {
        hi = ideal_cache
                 .emplace(ideal.bits(), qualifies_as_hyperideal(prod, ideal, mode))
                 .first;
      }
      auto mi = mult_cache.find(mult.bits());
      if (mi == mult_cache.end()) {
        mi = mult_cache.emplace(mult.bits(), is_multiplicative(prod, mult).holds())
                 .first;
      }
      if (!hi->second || !mi->second) {
        return false;
      }
      if (has_scalar_identity(prod)) {
        return !s_prime_witnesses_by_products(prod, ideal, mult).empty();
      }
      return is_s_prime(prod, ideal, mult, mode).holds();
    }

    struct PairProduct {
      Prepared*        left;
      Prepared*        right;
      KrasnerStructure prod;
      std::map<std::uint64_t, bool> ideal_cache;
      std::map<std::uint64_t, bool> mult_cache;
    };

    template <typename Visit>
    void for_each_pair_product(Context& ctx, Visit&& visit) {
      auto const identity = ctx.with_identity();
      for (Prepared* a : identity) {
        for (Prepared* b : identity) {
          if (!same_arity(a->s, b->s)) {
            continue;
          }
          PairProduct pp{a, b, product(a->s, b->s), {}, {}};
          visit(pp);
        }
      }
    }

    std::string product_note() {
      return "pairs: every ordered pair of same-arity structures with a scalar "
             "identity; the second factor's subset is {1} or the whole carrier";
    }

    void audit_product(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx), product_note()};
      for_each_pair_product(ctx, [&](PairProduct& pp) {
        auto&            r1 = *pp.left;
        auto&            r2 = *pp.right;
        ElementSet const s2_options[2]
            = {ElementSet::singleton(*r2.s.one()), r2.s.carrier()};
        for (ElementSet i1 : r1.ideals) {
          ElementSet const lifted = lift_ideal_product(r1.s, r2.s, i1);
          for (ElementSet m1 : r1.mults) {
            if (i1.intersects(m1)) {
              continue;
            }
            bool const left = ctx.s_prime(r1, i1, m1).holds();
            for (ElementSet m2 : s2_options) {
              ++e.instantiations;
              ElementSet const m     = product_set(r1.s, r2.s, m1, m2);
              bool const       right = product_s_prime(
                  pp.prod, lifted, m, ctx.options.mode, pp.ideal_cache,
                  pp.mult_cache);
              if (left != right) {
                violate(e, pp.prod.name(),
                        "I1=" + set_text(r1.s, i1) + " S1=" + set_text(r1.s, m1)
                            + " S2=" + set_text(r2.s, m2),
                        std::string("factor ") + (left ? "holds" : "fails")
                            + " but product " + (right ? "holds" : "fails"));
              }
            }
          }
        }
      });
    }

    void audit_cylinder(Context& ctx, AuditEntry& e) {
      e.hypotheses = {
          mode_note(ctx), identity_note(ctx),
          "two factors: " + product_note() + "; both positions",
          "three factors: same-arity triples with at most "
              + std::to_string(ctx.options.triple_product_bound)
              + " elements, the other factors' subsets being {1}"};
      for_each_pair_product(ctx, [&](PairProduct& pp) {
        auto& r1 = *pp.left;
        auto& r2 = *pp.right;
        for (int position = 0; position < 2; ++position) {
          Prepared&        own   = position == 0 ? r1 : r2;
          Prepared&        other = position == 0 ? r2 : r1;
          ElementSet const other_options[2]
              = {ElementSet::singleton(*other.s.one()), other.s.carrier()};
          for (ElementSet i : own.ideals) {
            for (ElementSet m : own.mults) {
              if (i.intersects(m) || !ctx.s_prime(own, i, m).holds()) {
                continue;
              }
              for (ElementSet mo : other_options) {
                ++e.instantiations;
                ElementSet const cyl
                    = position == 0 ? product_set(r1.s, r2.s, i, r2.s.carrier())
                                    : product_set(r1.s, r2.s, r1.s.carrier(), i);
                ElementSet const mult = position == 0
                                            ? product_set(r1.s, r2.s, m, mo)
                                            : product_set(r1.s, r2.s, mo, m);
                if (!product_s_prime(pp.prod, cyl, mult, ctx.options.mode,
                                     pp.ideal_cache, pp.mult_cache)) {
                  violate(e, pp.prod.name(),
                          "position " + std::to_string(position + 1) + " I="
                              + set_text(own.s, i) + " S=" + set_text(own.s, m)
                              + " other S=" + set_text(other.s, mo),
                          "the cylinder is not S-prime");
                }
              }
            }
          }
        }
      });

      auto const identity = ctx.with_identity();
      for (Prepared* a : identity) {
        for (Prepared* b : identity) {
          for (Prepared* c : identity) {
            std::array<Prepared*, 3> const f{a, b, c};
            if (!same_arity(a->s, b->s) || !same_arity(a->s, c->s)
                || a->s.size() < 2 || b->s.size() < 2 || c->s.size() < 2
                || a->s.size() * b->s.size() * c->s.size()
                       > ctx.options.triple_product_bound) {
              continue;
            }
            KrasnerStructure const ab   = product(a->s, b->s);
            KrasnerStructure const prod = product(ab, c->s);
            std::map<std::uint64_t, bool> ideal_cache;
            std::map<std::uint64_t, bool> mult_cache;
            auto set_of = [&](std::array<ElementSet, 3> const& parts) {
              return product_set(ab, c->s,
                                 product_set(a->s, b->s, parts[0], parts[1]),
                                 parts[2]);
            };
            for (std::size_t pos = 0; pos < 3; ++pos) {
              for (ElementSet i : f[pos]->ideals) {
                for (ElementSet m : f[pos]->mults) {
                  if (i.intersects(m) || !ctx.s_prime(*f[pos], i, m).holds()) {
                    continue;
                  }
                  std::array<ElementSet, 3> cyl;
                  std::array<ElementSet, 3> mult;
                  for (std::size_t k = 0; k < 3; ++k) {
                    cyl[k]  = k == pos ? i : f[k]->s.carrier();
                    mult[k] = k == pos ? m : ElementSet::singleton(*f[k]->s.one());
                  }
                  ++e.instantiations;
                  if (!product_s_prime(prod, set_of(cyl), set_of(mult),
                                       ctx.options.mode, ideal_cache,
                                       mult_cache)) {
                    violate(e, prod.name(),
                            "position " + std::to_string(pos + 1) + " I="
                                + set_text(f[pos]->s, i)
                                + " S=" + set_text(f[pos]->s, m),
                            "the cylinder is not S-prime");
                  }
                }
              }
            }
          }
        }
      }
    }

    // -----------------------------------------------------------------------
    // S-primary theorems.

    void audit_units(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "S inside the units; proper hyperideals"};
      for (Prepared* p : ctx.with_identity()) {
        ElementSet const u = units(p->s);
        for (ElementSet m : p->mults) {
          if (!m.subset_of(u)) {
            continue;
          }
          for (ElementSet i : p->ideals) {
            if (i == p->s.carrier()) {
              continue;
            }
            ++e.instantiations;
            bool const a = ctx.s_primary(*p, i, m).holds();
            bool const b = is_primary(p->s, i, ctx.options.mode).holds();
            if (a != b) {
              violate(e, p->s.name(),
                      "I=" + set_text(p->s, i) + " S=" + set_text(p->s, m),
                      std::string("S-primary ") + (a ? "holds" : "fails")
                          + " but primary " + (b ? "holds" : "fails"));
            }
          }
        }
      }
    }

    void audit_radical_s_prime(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "I S-primary; the radical is taken by powers"};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet i : p->ideals) {
          for (ElementSet m : p->mults) {
            if (i.intersects(m) || !ctx.s_primary(*p, i, m).holds()) {
              continue;
            }
            ++e.instantiations;
            ElementSet const rad = ctx.radical(*p, i);
            auto const&      out = ctx.s_prime(*p, rad, m);
            if (!out.holds()) {
              violate(e, p->s.name(),
                      "I=" + set_text(p->s, i) + " S=" + set_text(p->s, m),
                      "rad(I)=" + set_text(p->s, rad) + " is not S-prime"
                          + (out.reason.empty() ? "" : " (" + out.reason + ")"));
            }
          }
        }
      }
    }

    void audit_meet_of_primary(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "every multiset of n S-primary hyperideals sharing the "
                      "S-prime radical P"};
      for (Prepared* p : ctx.with_identity()) {
        for (ElementSet m : p->mults) {
          for (ElementSet prime : s_primes(ctx, *p, m)) {
            std::vector<ElementSet> family;
            for (ElementSet i : p->ideals) {
              if (!i.intersects(m) && ctx.s_primary(*p, i, m).holds()
                  && ctx.radical(*p, i) == prime) {
                family.push_back(i);
              }
            }
            for_each_multiset(
                ElementSet::full(family.size()), p->s.n(),
                [&](std::span<Element const> idx) {
                  ++e.instantiations;
                  ElementSet const meet
                      = intersect_all(family, idx, p->s.carrier());
                  bool const primary = ctx.s_primary(*p, meet, m).holds();
                  ElementSet const rad = ctx.radical(*p, meet);
                  if (!primary || rad != prime) {
                    violate(e, p->s.name(),
                            "S=" + set_text(p->s, m) + " P="
                                + set_text(p->s, prime)
                                + " I=" + names(family, idx, p->s),
                            "meet " + set_text(p->s, meet)
                                + (primary ? " is S-primary" : " is not S-primary")
                                + " with radical " + set_text(p->s, rad));
                  }
                  return true;
                });
          }
        }
      }
    }

    void audit_product_of_primary(Context& ctx, AuditEntry& e) {
      e.hypotheses = {mode_note(ctx), identity_note(ctx),
                      "I S-primary; I_1..I_(n-1) hyperideals meeting S; the "
                      "product is the smallest hyperideal containing the image"};
      for (Prepared* p : ctx.with_identity()) {
        std::size_t const n = p->s.n();
        for (ElementSet m : p->mults) {
          std::vector<ElementSet> meeting;
          for (ElementSet u : p->ideals) {
            if (u.intersects(m)) {
              meeting.push_back(u);
            }
          }
          for (ElementSet i : p->ideals) {
            if (i.intersects(m) || !ctx.s_primary(*p, i, m).holds()) {
              continue;
            }
            for_each_multiset(
                ElementSet::full(meeting.size()), n - 1,
                [&](std::span<Element const> idx) {
                  std::vector<ElementSet> sets;
                  for (Element k : idx) {
                    sets.push_back(meeting[k]);
                  }
                  sets.push_back(i);
                  ElementSet const image = image_of_ideal_tuple(p->s, sets);
                  ElementSet       hull  = p->s.carrier();
                  for (ElementSet h : p->ideals) {
                    if (image.subset_of(h)) {
                      hull &= h;
                    }
                  }
                  ++e.instantiations;
                  auto const& out = ctx.s_primary(*p, hull, m);
                  if (!out.holds()) {
                    violate(e, p->s.name(),
                            "S=" + set_text(p->s, m)
                                + " I=" + set_text(p->s, i)
                                + " I_k=" + names(meeting, idx, p->s),
                            "g(I_1..I_(n-1), I) generates "
                                + set_text(p->s, hull)
                                + ", which is not S-primary"
                                + (out.reason.empty() ? ""
                                                      : " (" + out.reason + ")"));
                  }
                  return true;
                });
          }
        }
      }
    }

    // -----------------------------------------------------------------------

    struct Theorem {
      char const* id;
      char const* statement;
      std::function<void(Context&, AuditEntry&)> run;
    };

    std::vector<Theorem> const& theorems() {
      static std::vector<Theorem> const kTheorems{
          {"3.4", "I is S-prime iff (I:s) is prime for some s in S",
           [](Context& c, AuditEntry& e) { audit_colon(c, e, false); }},
          {"3.5", "an S-prime I of G restricts to an S-prime I cap R of a "
                  "subhyperring R containing S",
           audit_restriction},
          {"3.6", "a hyperideal covered by n S-prime hyperideals is sent into "
                  "one of them by some s in S",
           audit_covering},
          {"3.7", "I is S-prime iff some s in S satisfies the ideal-wise "
                  "condition",
           audit_idealwise_s_prime},
          {"3.8", "a proper hyperideal is prime iff it is prime ideal-wise",
           audit_idealwise_prime},
          {"3.9", "for S-prime I and J inside I, some s in S sends rad(J) "
                  "into I",
           audit_radical_of_sub},
          {"3.10", "for n S-prime hyperideals some s in S sends the radical of "
                   "their meet into the meet",
           audit_radical_of_meet},
          {"3.11", "the preimage of an h(S)-prime hyperideal is S-prime when 0 "
                   "is not in h(S)",
           audit_preimage},
          {"3.14", "I/J is S-bar-prime in R/J for S-prime I containing J",
           audit_quotient},
          {"3.16", "I1 is S1-prime iff I1 x R2 is (S1 x S2)-prime",
           audit_product},
          {"3.17", "a cylinder over an S_i-prime factor is S-prime in the "
                   "product",
           audit_cylinder},
          {"4.3", "for S inside the units, S-primary coincides with primary",
           audit_units},
          {"4.4", "I is S-primary iff (I:s) is primary for some s in S",
           [](Context& c, AuditEntry& e) { audit_colon(c, e, true); }},
          {"4.5", "the radical of an S-primary hyperideal is S-prime",
           audit_radical_s_prime},
          {"4.6", "the meet of n P-S-primary hyperideals is P-S-primary",
           audit_meet_of_primary},
          {"4.7", "g(I_1, .., I_(n-1), I) is S-primary when I is and every "
                  "I_k meets S",
           audit_product_of_primary},
      };
      return kTheorems;
    }

    std::optional<Prepared> prepare(KrasnerStructure const&    s,
                                    AuditOptions const&        options,
                                    std::vector<AuditFinding>* findings) {
      if (s.size() > options.enumeration_bound) {
        if (findings) {
          findings->push_back({"bound", s.name(),
                               "carrier exceeds the enumeration bound; skipped"});
        }
        return std::nullopt;
      }
      AxiomReport const axioms = verify_axioms(s, false);
      if (!axioms.overall) {
        if (findings) {
          for (auto const* v : axioms.verdicts()) {
            if (v->checked && !v->holds) {
              findings->push_back({"axioms", s.name(),
                                   v->name + " fails: " + v->detail + "; skipped"});
              break;
            }
          }
        }
        return std::nullopt;
      }
      Prepared p{s, false, {}, {}, {}, {}, {}};
      if (s.one()) {
        AxiomReport const with_one = verify_axioms(s, true);
        p.identity                 = with_one.scalar_identity.holds;
        if (!p.identity && findings) {
          findings->push_back({"identity", s.name(),
                               "designated one is not a scalar identity: "
                                   + with_one.scalar_identity.detail});
        }
      }
      p.ideals = enumerate_hyperideals(s, options.mode, false,
                                       options.enumeration_bound);
      p.mults  = enumerate_multiplicative_subsets(s, true,
                                                  options.enumeration_bound);
      return p;
    }
  }  // namespace

  std::string_view to_string(AuditStatus status) noexcept {
    switch (status) {
      case AuditStatus::kVerified:
        return "Verified";
      case AuditStatus::kHypothesisNotMet:
        return "HypothesisNotMet";
      case AuditStatus::kViolated:
        return "Violated";
    }
    return "unknown";
  }

  bool AuditReport::violated() const noexcept {
    return std::any_of(entries.begin(), entries.end(), [](auto const& e) {
      return e.status == AuditStatus::kViolated;
    });
  }

  std::vector<std::string> const& audit_theorem_ids() {
    static std::vector<std::string> const kIds = [] {
      std::vector<std::string> ids;
      for (auto const& t : theorems()) {
        ids.emplace_back(t.id);
      }
      return ids;
    }();
    return kIds;
  }

  bool is_audit_theorem(std::string_view id) {
    auto const& ids = audit_theorem_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  }

  AuditReport audit_theorems(std::span<KrasnerStructure const> corpus,
                             AuditOptions const&               options) {
    for (auto const& id : options.theorems) {
      if (!is_audit_theorem(id)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown theorem '" + id + "'");
      }
    }
    Context ctx{options, {}, {}};
    for (auto const& s : corpus) {
      if (auto p = prepare(s, options, &ctx.findings)) {
        ctx.corpus.push_back(std::move(*p));
      }
    }
    for (auto& p : ctx.corpus) {
      if (!p.s.one()) {
        continue;
      }
      for (auto const& mm : cross_validate_radicals(p.s, options.mode,
                                                    options.enumeration_bound)) {
        ctx.findings.push_back(
            {"radical", p.s.name(),
             "I=" + format_set(p.s, mm.ideal) + ": by powers "
                 + format_set(p.s, mm.by_powers) + ", by primes "
                 + format_set(p.s, mm.by_primes)});
      }
    }

    AuditReport report;
    report.mode    = options.mode;
    report.reading = options.reading;
    for (auto const& s : corpus) {
      report.corpus.push_back(s.name());
    }
    for (auto const& t : theorems()) {
      if (!options.theorems.empty()
          && std::find(options.theorems.begin(), options.theorems.end(), t.id)
                 == options.theorems.end()) {
        continue;
      }
      AuditEntry entry;
      entry.theorem   = t.id;
      entry.statement = t.statement;
      t.run(ctx, entry);
      if (entry.violation_count > 0) {
        entry.status = AuditStatus::kViolated;
      } else if (entry.instantiations > 0) {
        entry.status = AuditStatus::kVerified;
      } else {
        entry.status = AuditStatus::kHypothesisNotMet;
      }
      report.entries.push_back(std::move(entry));
    }
    report.findings = std::move(ctx.findings);
    return report;
  }

}  // namespace krasner
