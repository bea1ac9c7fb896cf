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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "krasner/audit.hpp"
#include "krasner/axioms.hpp"
#include "krasner/constructions.hpp"
#include "krasner/corpus.hpp"
#include "krasner/errors.hpp"
#include "krasner/ideals.hpp"
#include "krasner/render.hpp"
#include "krasner/s_theory.hpp"
#include "oracle.hpp"

using namespace krasner;

namespace {
  struct Result {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
      }
    }
  };

  ElementSet labels(KrasnerStructure const& s, char const* text) {
    return parse_label_set(s, text);
  }

  std::string failing_axioms(AxiomReport const& r) {
    std::string out;
    for (auto const* v : r.verdicts()) {
      if (v->checked && !v->holds) {
        out += (out.empty() ? "" : ", ") + v->name + ": " + v->detail;
      }
    }
    return out;
  }

  Result golden_axioms() {
    Result r;
    for (auto const& s : paper_examples()) {
      auto const report = verify_axioms(s);
      r.require(report.overall, s.name() + " fails " + failing_axioms(report));
    }
    return r;
  }

  Result example_s_prime() {
    Result     r;
    auto const s      = k24();
    auto const i      = labels(s, "0");
    auto const sprime = is_s_prime(s, i, labels(s, "2,3"), HyperidealMode::kWeak);
    r.require(sprime.holds(), "s_prime is " + std::string(to_string(sprime.verdict)));
    r.require(sprime.witnesses == labels(s, "2,3"),
              "witnesses " + format_set(s, sprime.witnesses));
    auto const prime = is_prime(s, i, HyperidealMode::kWeak);
    r.require(prime.fails(), "prime is " + std::string(to_string(prime.verdict)));
    std::vector<Element> const expected{1, 2, 2, 3};
    bool const listed = std::any_of(
        prime.counterexamples.begin(), prime.counterexamples.end(),
        [&](Counterexample const& c) { return c.rule == "prime" && c.tuple == expected; });
    r.require(listed, "(1,2,2,3) not among the prime counterexamples");
    r.require(s.g(expected) == 0, "g(1,2,2,3) != 0");
    return r;
  }

  Result example_s_primary() {
    Result     r;
    auto const s = k33();
    auto const o = is_s_primary(s, labels(s, "0"), labels(s, "1,2"), HyperidealMode::kWeak);
    r.require(o.holds(), "s_primary is " + std::string(to_string(o.verdict)) + " " + o.reason);
    return r;
  }

  // Criterion 4 facts, each also evaluated by direct quantifier scans.
  Result stated_data_finding() {
    Result         r;
    auto const     s = k33();
    oracle::Set const p{0, 2};
    oracle::Set const m{1, 2};

    auto const stated = is_s_prime(s, labels(s, "0,2"), labels(s, "1,2"), HyperidealMode::kWeak);
    r.require(stated.inapplicable() && stated.reason.starts_with("disjointness"),
              "stated data gives " + std::string(to_string(stated.verdict)) + " "
                  + stated.reason);
    bool const meets = std::any_of(p.begin(), p.end(), [&](Element x) { return m.contains(x); });
    r.require(meets, "oracle: P and S are disjoint");

    auto const strict = is_hyperideal(s, labels(s, "0,2"), HyperidealMode::kStrict);
    bool const  listed = std::any_of(
        strict.counterexamples.begin(), strict.counterexamples.end(), [](Counterexample const& c) {
          return c.rule == "solvability" && c.tuple == std::vector<Element>{0, 2, 2};
        });
    r.require(strict.fails() && listed,
              "strict hyperideal check gives " + render(s, strict, Format::kText));
    // No a in P has 0 in f(a,2,2).
    bool solvable = false;
    for (Element a : p) {
      solvable = solvable || oracle::f(s, {a, 2, 2}).contains(0);
    }
    r.require(!solvable, "oracle: 0 = f(a,2,2) is solvable in P");
    r.require(!oracle::is_hyperideal(s, p, true), "oracle: P is a strict hyperideal");

    auto const weak = is_hyperideal(s, labels(s, "0,2"), HyperidealMode::kWeak);
    r.require(weak.holds(), "weak hyperideal check fails");
    r.require(oracle::is_hyperideal(s, p, false), "oracle: P is not a weak hyperideal");

    auto const corrected = is_s_prime(s, labels(s, "0,2"), labels(s, "1"), HyperidealMode::kWeak);
    r.require(corrected.holds(), "S={1} gives " + std::string(to_string(corrected.verdict)));
    auto const expected = oracle::s_prime_witnesses(s, p, {1}, false);
    r.require(expected && !expected->empty(), "oracle: S={1} has no witness");
    r.require(expected && oracle::to_mask(*expected) == corrected.witnesses,
              "oracle witnesses differ");
    return r;
  }

  Result radicals() {
    Result     r;
    auto const corpus = standard_corpus();
    AuditOptions options;
    options.theorems  = {"3.9"};
    auto const report = audit_theorems(corpus, options);
    std::size_t mismatches = 0;
    std::size_t itemized   = 0;
    for (auto const& s : corpus) {
      if (!verify_axioms(s).overall || !s.one()) {
        continue;
      }
      for (ElementSet i : enumerate_hyperideals(s, HyperidealMode::kWeak)) {
        if (radical_powers(s, i) != radical_primes(s, i, HyperidealMode::kWeak)) {
          ++mismatches;
        }
      }
    }
    for (auto const& f : report.findings) {
      itemized += f.kind == "radical" ? 1 : 0;
    }
    r.require(mismatches == itemized, std::to_string(mismatches) + " mismatches but "
                                          + std::to_string(itemized) + " findings");
    r.detail = r.pass ? std::to_string(mismatches) + " mismatches, each itemized as a finding"
                      : r.detail;
    return r;
  }

  Result theorem_audit() {
    Result     r;
    auto const corpus = standard_corpus();
    for (auto mode : {HyperidealMode::kWeak, HyperidealMode::kStrict}) {
      AuditOptions options;
      options.mode      = mode;
      auto const report = audit_theorems(corpus, options);
      for (auto const& e : report.entries) {
        std::string const tag = std::string(to_string(mode)) + " " + e.theorem;
        r.require(e.violation_count == 0,
                  tag + ": " + std::to_string(e.violation_count) + " violations");
        r.require(e.instantiations > 0, tag + ": no instantiation");
      }
    }
    return r;
  }

  Result constructions() {
    Result r;
    for (auto [k, kernel] : {std::pair<std::size_t, char const*>{8, "0,4"}, {4, "0,2"}}) {
      auto const s = build_zk_ring(k, 2, 2);
      try {
        auto const q = quotient(s, labels(s, kernel));
        r.require(verify_axioms(q.structure, true).overall,
                  q.structure.name() + " fails verification");
      } catch (Error const& e) {
        r.require(false, s.name() + " quotient: " + e.what());
      }
    }
    auto const k = k33();
    try {
      quotient(k, labels(k, "0,2"));
      r.require(false, "K33/{0,2} succeeded");
    } catch (Error const& e) {
      r.require(e.code() == ErrorCode::kNotAPartition, std::string("K33/{0,2}: ") + e.what());
    }
    auto const p      = product(k, zk_ring_tables(2, 3, 3));
    auto const report = verify_axioms(p);
    r.require(report.overall, p.name() + " fails " + failing_axioms(report));
    return r;
  }

  Result determinism() {
    Result     r;
    auto const a = render(audit_theorems(standard_corpus()), Format::kJson);
    auto const b = render(audit_theorems(standard_corpus()), Format::kJson);
    r.require(a == b, "audit JSON differs between runs");
    return r;
  }
}  // namespace

int main() {
  std::vector<std::function<Result()>> const criteria{
      golden_axioms, example_s_prime, example_s_primary, stated_data_finding,
      radicals,      theorem_audit,   constructions,     determinism};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i]();
    } catch (std::exception const& e) {
      r.pass   = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.pass;
    std::printf("criterion %zu: %s%s%s\n", i + 1, r.pass ? "PASS" : "FAIL",
                r.detail.empty() ? "" : "  ", r.detail.c_str());
  }
  return all ? 0 : 1;
}
