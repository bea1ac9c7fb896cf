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

#include "krasner/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace krasner {

  namespace {
    using Json = nlohmann::ordered_json;

    Json labels(KrasnerStructure const& s, ElementSet set) {
      Json out = Json::array();
      for (Element x : set) {
        out.push_back(s.label(x));
      }
      return out;
    }

    Json labels(KrasnerStructure const& s, std::vector<Element> const& tuple) {
      Json out = Json::array();
      for (Element x : tuple) {
        out.push_back(s.label(x));
      }
      return out;
    }

    std::string dump(Json const& j) {
      return j.dump(2) + "\n";
    }

    Json to_json(KrasnerStructure const& s, Counterexample const& c) {
      Json sets = Json::array();
      for (ElementSet x : c.sets) {
        sets.push_back(labels(s, x));
      }
      return Json{{"rule", c.rule},
                  {"tuple", labels(s, c.tuple)},
                  {"sets", std::move(sets)},
                  {"witness", c.witness ? Json(s.label(*c.witness)) : Json()}};
    }

    Json to_json(KrasnerStructure const& s, PredicateOutcome const& o) {
      Json ces = Json::array();
      for (auto const& c : o.counterexamples) {
        ces.push_back(to_json(s, c));
      }
      return Json{{"verdict", to_string(o.verdict)},
                  {"reason", o.reason},
                  {"witnesses", labels(s, o.witnesses)},
                  {"counterexample_count", o.counterexample_count},
                  {"counterexamples", std::move(ces)}};
    }

    std::string counterexample_text(KrasnerStructure const& s,
                                    Counterexample const&   c) {
      std::string out = c.rule;
      if (!c.tuple.empty()) {
        out += " " + format_tuple(s, c.tuple);
      }
      for (ElementSet x : c.sets) {
        out += " " + format_set(s, x);
      }
      if (c.witness) {
        out += " for s=" + s.label(*c.witness);
      }
      return out;
    }

    std::string outcome_text(KrasnerStructure const& s, PredicateOutcome const& o) {
      std::string out(to_string(o.verdict));
      switch (o.verdict) {
        case Verdict::kHolds:
          if (!o.witnesses.empty()) {
            out += ", witnesses " + format_set(s, o.witnesses);
          }
          break;
        case Verdict::kFails:
          if (auto const* c = o.counterexample()) {
            out += ", " + counterexample_text(s, *c);
          }
          if (o.counterexample_count > 1) {
            out += " (" + std::to_string(o.counterexample_count)
                   + " counterexamples)";
          }
          break;
        case Verdict::kInapplicable:
          out += " (" + o.reason + ")";
          break;
      }
      return out;
    }

    std::string header(KrasnerStructure const& s) {
      return s.name() + ": (m,n) = (" + std::to_string(s.m()) + ","
             + std::to_string(s.n()) + "), " + std::to_string(s.size())
             + " elements";
    }

    Json structure_json(KrasnerStructure const& s) {
      return Json{{"name", s.name()},
                  {"m", s.m()},
                  {"n", s.n()},
                  {"size", s.size()}};
    }
  }  // namespace

  std::optional<Format> parse_format(std::string_view text) noexcept {
    if (text == "text") {
      return Format::kText;
    }
    if (text == "json") {
      return Format::kJson;
    }
    return std::nullopt;
  }

  Classification classify(KrasnerStructure const&   s,
                          ElementSet                ideal,
                          std::optional<ElementSet> mult,
                          HyperidealMode            mode,
                          PrimaryReading            reading) {
    Classification c;
    c.ideal      = ideal;
    c.mult       = mult;
    c.mode       = mode;
    c.reading    = reading;
    c.hyperideal = is_hyperideal(s, ideal, mode);
    c.prime      = is_prime(s, ideal, mode);
    c.primary    = is_primary(s, ideal, mode);
    if (mult) {
      c.s_prime   = is_s_prime(s, ideal, *mult, mode);
      c.s_primary = is_s_primary(s, ideal, *mult, mode, reading);
    } else {
      c.s_prime   = PredicateOutcome::inapplicable("multiplicative: no subset given");
      c.s_primary = c.s_prime;
    }
    return c;
  }

  RadicalReport radical_report(KrasnerStructure const& s,
                               ElementSet              ideal,
                               HyperidealMode          mode) {
    return {ideal, radical_powers(s, ideal), radical_primes(s, ideal, mode)};
  }

  std::string render(KrasnerStructure const& s, AxiomReport const& r, Format f) {
    auto const verdicts = r.verdicts();
    if (f == Format::kJson) {
      Json axioms = Json::array();
      for (auto const* v : verdicts) {
        axioms.push_back(Json{{"name", v->name},
                              {"checked", v->checked},
                              {"holds", v->holds},
                              {"failures", v->failures},
                              {"counterexample", labels(s, v->counterexample)},
                              {"detail", v->detail},
                              {"failing_instances", v->failing_instances}});
      }
      return dump(Json{{"structure", structure_json(s)},
                       {"overall", r.overall},
                       {"axioms", std::move(axioms)}});
    }
    std::ostringstream out;
    out << header(s) << "\n";
    for (auto const* v : verdicts) {
      out << "  " << std::left << std::setw(24) << v->name;
      if (!v->checked) {
        out << "not checked\n";
        continue;
      }
      out << (v->holds ? "holds" : "fails");
      if (!v->holds) {
        out << "  " << v->detail;
        if (v->failures > 1) {
          out << " (" << v->failures << " failures)";
        }
      }
      out << "\n";
    }
    out << "overall: " << (r.overall ? "holds" : "fails") << "\n";
    return out.str();
  }

  std::string render(KrasnerStructure const& s,
                     PredicateOutcome const& o,
                     Format                  f) {
    if (f == Format::kJson) {
      return dump(to_json(s, o));
    }
    return outcome_text(s, o) + "\n";
  }

  std::string render(KrasnerStructure const& s,
                     Classification const&   c,
                     Format                  f) {
    std::pair<char const*, PredicateOutcome const*> const rows[] = {
        {"is_hyperideal", &c.hyperideal},
        {"prime", &c.prime},
        {"primary", &c.primary},
        {"s_prime", &c.s_prime},
        {"s_primary", &c.s_primary},
    };
    if (f == Format::kJson) {
      Json j{{"structure", structure_json(s)},
             {"ideal", labels(s, c.ideal)},
             {"mult", c.mult ? labels(s, *c.mult) : Json()},
             {"mode", to_string(c.mode)},
             {"reading", to_string(c.reading)}};
      for (auto const& [name, o] : rows) {
        j[name] = to_json(s, *o);
      }
      return dump(j);
    }
    std::ostringstream out;
    out << header(s) << "\n";
    out << "I = " << format_set(s, c.ideal);
    if (c.mult) {
      out << ", S = " << format_set(s, *c.mult);
    }
    out << ", mode " << to_string(c.mode) << "\n";
    for (auto const& [name, o] : rows) {
      out << "  " << name << ": " << outcome_text(s, *o) << "\n";
    }
    return out.str();
  }

  std::string render_ideals(KrasnerStructure const&        s,
                            std::vector<ElementSet> const& ideals,
                            HyperidealMode                 mode,
                            Format                         f) {
    if (f == Format::kJson) {
      Json list = Json::array();
      for (ElementSet i : ideals) {
        list.push_back(labels(s, i));
      }
      return dump(Json{{"structure", structure_json(s)},
                       {"mode", to_string(mode)},
                       {"count", ideals.size()},
                       {"ideals", std::move(list)}});
    }
    std::ostringstream out;
    out << header(s) << "\n"
        << ideals.size() << " " << to_string(mode) << " hyperideals\n";
    for (ElementSet i : ideals) {
      out << "  " << format_set(s, i) << "\n";
    }
    return out.str();
  }

  std::string render(KrasnerStructure const& s, RadicalReport const& r, Format f) {
    if (f == Format::kJson) {
      return dump(Json{{"structure", structure_json(s)},
                       {"ideal", labels(s, r.ideal)},
                       {"radical_powers", labels(s, r.by_powers)},
                       {"radical_primes", labels(s, r.by_primes)},
                       {"agree", r.by_powers == r.by_primes}});
    }
    std::ostringstream out;
    out << header(s) << "\n"
        << "rad " << format_set(s, r.ideal) << " = "
        << format_set(s, r.by_powers) << " (powers)\n"
        << "rad " << format_set(s, r.ideal) << " = "
        << format_set(s, r.by_primes) << " (primes)\n";
    if (r.by_powers != r.by_primes) {
      out << "the two radicals differ\n";
    }
    return out.str();
  }

  std::string render(QuotientMap const& q, Format f) {
    auto const& s = q.source;
    if (f == Format::kJson) {
      Json cosets = Json::array();
      for (ElementSet c : q.cosets) {
        cosets.push_back(labels(s, c));
      }
      return dump(Json{{"source", structure_json(s)},
                       {"kernel", labels(s, q.kernel)},
                       {"cosets", std::move(cosets)},
                       {"quotient", structure_json(q.structure)}});
    }
    std::ostringstream out;
    out << header(s) << "\n"
        << "J = " << format_set(s, q.kernel) << ", " << q.cosets.size()
        << " cosets\n";
    for (std::size_t k = 0; k < q.cosets.size(); ++k) {
      out << "  " << q.structure.label(static_cast<Element>(k)) << " = "
          << format_set(s, q.cosets[k]) << "\n";
    }
    out << "quotient " << header(q.structure) << "\n";
    return out.str();
  }

  std::string render(AuditReport const& r, Format f) {
    if (f == Format::kJson) {
      Json entries = Json::array();
      for (auto const& e : r.entries) {
        Json violations = Json::array();
        for (auto const& v : e.violations) {
          violations.push_back(Json{{"structure", v.structure},
                                    {"instance", v.instance},
                                    {"detail", v.detail}});
        }
        entries.push_back(Json{{"theorem", e.theorem},
                               {"statement", e.statement},
                               {"status", to_string(e.status)},
                               {"instantiations", e.instantiations},
                               {"violation_count", e.violation_count},
                               {"hypotheses", e.hypotheses},
                               {"violations", std::move(violations)}});
      }
      Json findings = Json::array();
      for (auto const& x : r.findings) {
        findings.push_back(Json{{"kind", x.kind},
                                {"structure", x.structure},
                                {"detail", x.detail}});
      }
      return dump(Json{{"mode", to_string(r.mode)},
                       {"reading", to_string(r.reading)},
                       {"corpus", r.corpus},
                       {"violated", r.violated()},
                       {"entries", std::move(entries)},
                       {"findings", std::move(findings)}});
    }
    std::ostringstream out;
    out << "audit of " << r.corpus.size() << " structures, mode "
        << to_string(r.mode) << "\n";
    for (auto const& e : r.entries) {
      out << "  " << std::left << std::setw(6) << e.theorem << std::setw(18)
          << to_string(e.status) << e.instantiations << " instantiations";
      if (e.violation_count > 0) {
        out << ", " << e.violation_count << " violations";
      }
      out << "\n";
      for (auto const& v : e.violations) {
        out << "      " << v.structure << ": " << v.instance << ": " << v.detail
            << "\n";
      }
    }
    if (!r.findings.empty()) {
      out << "findings:\n";
      for (auto const& x : r.findings) {
        out << "  [" << x.kind << "] " << x.structure << ": " << x.detail << "\n";
      }
    }
    return out.str();
  }

}  // namespace krasner
