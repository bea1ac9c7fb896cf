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

#include "krasner/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "krasner/axioms.hpp"
#include "krasner/errors.hpp"
#include "krasner/multiset.hpp"

namespace krasner {

  namespace {
    using json = nlohmann::json;
    using Key  = std::vector<Element>;

    [[noreturn]] void parse_error(std::string const& msg) {
      throw Error(ErrorCode::kParseError, msg);
    }

    json const& field(json const& doc, char const* name) {
      auto it = doc.find(name);
      if (it == doc.end()) {
        parse_error(std::string("missing field '") + name + "'");
      }
      return *it;
    }

    std::size_t read_arity(json const& doc, char const* name) {
      json const& v = field(doc, name);
      if (!v.is_number_integer()) {
        parse_error(std::string("field '") + name + "' must be an integer");
      }
      auto const a = v.get<std::int64_t>();
      if (a < static_cast<std::int64_t>(kMinArity)
          || a > static_cast<std::int64_t>(kMaxArity)) {
        parse_error(std::string("field '") + name + "' must lie in 2..8");
      }
      return static_cast<std::size_t>(a);
    }

    Element read_index(json const& v, std::size_t size, std::string const& where) {
      if (!v.is_number_integer()) {
        parse_error(where + ": expected an element index");
      }
      auto const i = v.get<std::int64_t>();
      if (i < 0 || i >= static_cast<std::int64_t>(size)) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    where + ": index " + std::to_string(i) + " out of range");
      }
      return static_cast<Element>(i);
    }

    Key read_key(std::string const& text, std::size_t arity, std::size_t size) {
      Key               key;
      std::stringstream in(text);
      std::string       token;
      while (std::getline(in, token, ',')) {
        if (token.empty()
            || !std::all_of(token.begin(), token.end(), [](char c) {
                 return c >= '0' && c <= '9';
               })
            || (token.size() > 1 && token[0] == '0') || token.size() > 4) {
          parse_error("malformed table key '" + text + "'");
        }
        auto const i = std::stoul(token);
        if (i >= size) {
          throw Error(ErrorCode::kIndexOutOfRange,
                      "table key '" + text + "' names index "
                          + std::to_string(i));
        }
        key.push_back(static_cast<Element>(i));
      }
      if (text.empty() || text.back() == ',' || key.size() != arity) {
        parse_error("table key '" + text + "' must hold "
                    + std::to_string(arity) + " indices");
      }
      if (!std::is_sorted(key.begin(), key.end())) {
        throw Error(ErrorCode::kUnsortedKey,
                    "table key '" + text + "' is not nondecreasing");
      }
      return key;
    }

    template <typename Value, typename Read>
    std::map<Key, Value> read_table(json const& doc,
                                    char const* name,
                                    std::size_t arity,
                                    std::size_t size,
                                    Read&&      read) {
      json const& table = field(doc, name);
      if (!table.is_object()) {
        parse_error(std::string("field '") + name + "' must be an object");
      }
      std::map<Key, Value> out;
      for (auto const& [text, value] : table.items()) {
        Key key = read_key(text, arity, size);
        if (out.count(key) != 0) {
          throw Error(ErrorCode::kDuplicateKey,
                      std::string(name) + " key '" + text + "' repeats");
        }
        out.emplace(std::move(key),
                    read(value, std::string(name) + "[" + text + "]"));
      }
      return out;
    }

    std::string join(std::span<Element const> key) {
      std::string out;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(key[i]);
      }
      return out;
    }

    template <typename Value>
    Value const& lookup(std::map<Key, Value> const& table,
                        char const*                 name,
                        std::span<Element const>    key) {
      auto it = table.find(Key(key.begin(), key.end()));
      if (it == table.end()) {
        throw Error(ErrorCode::kMissingEntry,
                    std::string(name) + " has no entry for '" + join(key)
                        + "'");
      }
      return it->second;
    }

    Element label_index(std::vector<std::string> const& labels,
                        json const&                     v,
                        char const*                     name) {
      if (!v.is_string()) {
        parse_error(std::string("field '") + name + "' must be a label");
      }
      auto const text = v.get<std::string>();
      auto it = std::find(labels.begin(), labels.end(), text);
      if (it == labels.end()) {
        throw Error(ErrorCode::kUnknownLabel,
                    std::string(name) + " label '" + text
                        + "' is not in the carrier");
      }
      return static_cast<Element>(it - labels.begin());
    }

    void require_verified(KrasnerStructure const& s, bool identity) {
      AxiomReport const report = verify_axioms(s, identity);
      if (!report.overall) {
        for (auto const* v : report.verdicts()) {
          if (v->checked && !v->holds) {
            throw Error(ErrorCode::kAxiomFailure,
                        "'" + s.name() + "' fails " + v->name + ": "
                            + v->detail);
          }
        }
      }
    }

    std::string arity_suffix(std::size_t m, std::size_t n) {
      return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    }
  }  // namespace

  KrasnerStructure parse_structure(std::string_view text) {
    // Duplicate object keys are reported by the parser callback since the
    // resulting json object keeps only one of them.
    std::vector<std::set<std::string>> open_objects;
    std::optional<std::string>         duplicate;
    json::parser_callback_t            watch
        = [&](int, json::parse_event_t event, json& parsed) {
            switch (event) {
              case json::parse_event_t::object_start:
                open_objects.emplace_back();
                break;
              case json::parse_event_t::key:
                if (!open_objects.back().insert(parsed.get<std::string>()).second
                    && !duplicate) {
                  duplicate = parsed.get<std::string>();
                }
                break;
              case json::parse_event_t::object_end:
                open_objects.pop_back();
                break;
              default:
                break;
            }
            return true;
          };
    json doc;
    try {
      doc = json::parse(text.begin(), text.end(), watch);
    } catch (json::parse_error const& e) {
      parse_error(e.what());
    }
    if (duplicate) {
      throw Error(ErrorCode::kDuplicateKey, "key '" + *duplicate + "' repeats");
    }
    if (!doc.is_object()) {
      parse_error("a structure file must hold a JSON object");
    }
    static std::set<std::string> const known{
        "name", "m", "n", "carrier", "zero", "one", "f", "g"};
    for (auto const& [name, value] : doc.items()) {
      (void) value;
      if (known.count(name) == 0) {
        parse_error("unknown field '" + name + "'");
      }
    }

    json const& name = field(doc, "name");
    if (!name.is_string()) {
      parse_error("field 'name' must be a string");
    }
    std::size_t const m       = read_arity(doc, "m");
    std::size_t const n       = read_arity(doc, "n");
    json const&       carrier = field(doc, "carrier");
    if (!carrier.is_array() || carrier.empty() || carrier.size() > kMaxCarrier) {
      parse_error("field 'carrier' must list 1..64 labels");
    }
    std::vector<std::string> labels;
    for (auto const& l : carrier) {
      if (!l.is_string()) {
        parse_error("carrier labels must be strings");
      }
      labels.push_back(l.get<std::string>());
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        if (labels[i] == labels[j]) {
          throw Error(ErrorCode::kDuplicateLabel,
                      "label '" + labels[i] + "' repeats");
        }
      }
    }
    std::size_t const size = labels.size();

    auto f_entries = read_table<ElementSet>(
        doc, "f", m, size, [&](json const& v, std::string const& where) {
          if (!v.is_array() || v.empty()) {
            parse_error(where + ": expected a nonempty list of indices");
          }
          ElementSet set;
          for (auto const& e : v) {
            set.insert(read_index(e, size, where));
          }
          return set;
        });
    auto g_entries = read_table<Element>(
        doc, "g", n, size, [&](json const& v, std::string const& where) {
          return read_index(v, size, where);
        });

    auto f = HyperOperationTable::tabulate(
        size, m, [&](std::span<Element const> key) {
          return lookup(f_entries, "f", key);
        });
    auto g = OperationTable::tabulate(size, n, [&](std::span<Element const> key) {
      return lookup(g_entries, "g", key);
    });

    Element const zero = label_index(labels, field(doc, "zero"), "zero");
    std::optional<Element> one;
    if (doc.contains("one")) {
      one = label_index(labels, doc["one"], "one");
    }
    return KrasnerStructure(name.get<std::string>(),
                            std::move(labels),
                            std::move(f),
                            std::move(g),
                            zero,
                            one);
  }

  std::string serialize_structure(KrasnerStructure const& s) {
    std::string out = "{\n";
    out += "  \"name\": " + json(s.name()).dump() + ",\n";
    out += "  \"m\": " + std::to_string(s.m()) + ",\n";
    out += "  \"n\": " + std::to_string(s.n()) + ",\n";
    out += "  \"carrier\": [";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += (i > 0 ? ", " : "") + json(s.labels()[i]).dump();
    }
    out += "],\n";
    out += "  \"zero\": " + json(s.label(s.zero())).dump() + ",\n";
    if (s.one()) {
      out += "  \"one\": " + json(s.label(*s.one())).dump() + ",\n";
    }
    out += "  \"f\": {\n";
    bool first = true;
    for_each_multiset(s.carrier(), s.m(), [&](std::span<Element const> key) {
      out += first ? "" : ",\n";
      first = false;
      out += "    \"" + join(key) + "\": [" + join(s.f(key).elements()) + "]";
      return true;
    });
    out += "\n  },\n";
    out += "  \"g\": {\n";
    first = true;
    for_each_multiset(s.carrier(), s.n(), [&](std::span<Element const> key) {
      out += first ? "" : ",\n";
      first = false;
      out += "    \"" + join(key) + "\": " + std::to_string(s.g(key));
      return true;
    });
    out += "\n  }\n}\n";
    return out;
  }

  KrasnerStructure load_structure(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::kParseError, "cannot read '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_structure(buffer.str());
  }

  void save_structure(KrasnerStructure const&      s,
                      std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    out << serialize_structure(s);
    if (!out) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot write '" + path.string() + "'");
    }
  }

  KrasnerStructure zk_ring_tables(std::size_t k, std::size_t m, std::size_t n) {
    if (k < 1 || k > kMaxCarrier) {
      throw Error(ErrorCode::kInvalidArgument, "k must lie in 1..64");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back(std::to_string(i));
    }
    auto f = HyperOperationTable::tabulate(k, m, [&](std::span<Element const> xs) {
      std::size_t sum = 0;
      for (Element x : xs) {
        sum += x;
      }
      return ElementSet::singleton(static_cast<Element>(sum % k));
    });
    auto g = OperationTable::tabulate(k, n, [&](std::span<Element const> xs) {
      std::size_t prod = 1 % k;
      for (Element x : xs) {
        prod = prod * x % k;
      }
      return static_cast<Element>(prod);
    });
    return KrasnerStructure("Z" + std::to_string(k) + arity_suffix(m, n),
                       std::move(labels),
                       std::move(f),
                       std::move(g),
                       0,
                       static_cast<Element>(1 % k));
  }

  KrasnerStructure build_zk_ring(std::size_t k, std::size_t m, std::size_t n) {
    KrasnerStructure s = zk_ring_tables(k, m, n);
    require_verified(s, true);
    return s;
  }

  KrasnerStructure build_krasner_quotient(std::size_t                     k,
                                          std::vector<std::size_t> const& units,
                                          std::size_t                     m,
                                          std::size_t                     n) {
    if (k < 2 || k > kMaxCarrier) {
      throw Error(ErrorCode::kInvalidArgument, "k must lie in 2..64");
    }
    std::set<std::size_t> group;
    for (std::size_t u : units) {
      if (u == 0 || u >= k || std::gcd(u, k) != 1) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::to_string(u) + " is not a unit of Z"
                        + std::to_string(k));
      }
      group.insert(u);
    }
    if (group.count(1) == 0) {
      throw Error(ErrorCode::kInvalidArgument, "the unit group must contain 1");
    }
    for (std::size_t a : group) {
      for (std::size_t b : group) {
        if (group.count(a * b % k) == 0) {
          throw Error(ErrorCode::kInvalidArgument,
                      "the unit set is not closed under multiplication");
        }
      }
    }
    // Orbits in order of their smallest member.
    std::vector<Element>    orbit_of(k, 0);
    std::vector<ElementSet> orbits;
    std::vector<bool>       seen(k, false);
    for (std::size_t x = 0; x < k; ++x) {
      if (seen[x]) {
        continue;
      }
      ElementSet orbit;
      for (std::size_t u : group) {
        orbit.insert(static_cast<Element>(x * u % k));
      }
      for (Element y : orbit) {
        seen[y]     = true;
        orbit_of[y] = static_cast<Element>(orbits.size());
      }
      orbits.push_back(orbit);
    }
    std::vector<std::string> labels;
    for (ElementSet o : orbits) {
      labels.push_back(std::to_string(o.min()));
    }
    std::size_t const size = orbits.size();

    auto f = HyperOperationTable::tabulate(
        size, m, [&](std::span<Element const> key) {
          // Sums reachable by choosing one member from each orbit.
          ElementSet sums = ElementSet::singleton(0);
          for (Element o : key) {
            ElementSet next;
            for (Element partial : sums) {
              for (Element x : orbits[o]) {
                next.insert(static_cast<Element>((partial + x) % k));
              }
            }
            sums = next;
          }
          ElementSet out;
          for (Element z : sums) {
            out.insert(orbit_of[z]);
          }
          return out;
        });
    auto g = OperationTable::tabulate(size, n, [&](std::span<Element const> key) {
      std::size_t prod = 1;
      for (Element o : key) {
        prod = prod * orbits[o].min() % k;
      }
      return orbit_of[prod];
    });
    std::string unit_text;
    for (std::size_t u : group) {
      unit_text += (unit_text.empty() ? "" : ",") + std::to_string(u);
    }
    KrasnerStructure s("KQ" + std::to_string(k) + "{" + unit_text + "}"
                           + arity_suffix(m, n),
                       std::move(labels),
                       std::move(f),
                       std::move(g),
                       orbit_of[0],
                       orbit_of[1]);
    require_verified(s, true);
    return s;
  }

  KrasnerStructure k33() {
    auto f = HyperOperationTable::tabulate(3, 3, [](std::span<Element const> xs) {
      // A 1 together with a 2 yields the whole carrier; otherwise the largest
      // argument wins.
      bool const has1 = std::find(xs.begin(), xs.end(), 1) != xs.end();
      bool const has2 = std::find(xs.begin(), xs.end(), 2) != xs.end();
      if (has1 && has2) {
        return ElementSet{0, 1, 2};
      }
      return ElementSet::singleton(xs.back());
    });
    auto g = OperationTable::tabulate(3, 3, [](std::span<Element const> xs) {
      if (xs.front() == 0) {
        return Element{0};
      }
      return xs.back() == 1 ? Element{1} : Element{2};
    });
    return KrasnerStructure("K33", {"0", "1", "2"}, std::move(f), std::move(g), 0, 1);
  }

  KrasnerStructure k24() {
    // Addition table with A = {0,1} and B = {2,3}.
    static constexpr std::array<std::array<std::uint64_t, 4>, 4> kSum{{
        {0b0001, 0b0010, 0b0100, 0b1000},
        {0b0010, 0b0011, 0b1000, 0b1100},
        {0b0100, 0b1000, 0b0001, 0b0010},
        {0b1000, 0b1100, 0b0010, 0b0011},
    }};
    auto f = HyperOperationTable::tabulate(4, 2, [](std::span<Element const> xs) {
      return ElementSet(kSum[xs[0]][xs[1]]);
    });
    auto g = OperationTable::tabulate(4, 4, [](std::span<Element const> xs) {
      return xs.front() >= 2 ? Element{2} : Element{0};
    });
    return KrasnerStructure("K24", {"0", "1", "2", "3"}, std::move(f), std::move(g), 0, 1);
  }

  std::vector<KrasnerStructure> paper_examples() {
    return {k33(), k24()};
  }

  std::vector<KrasnerStructure> standard_corpus() {
    std::vector<KrasnerStructure> out = paper_examples();
    static constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kArities{
        {{2, 2}, {3, 3}, {2, 4}}};
    for (auto [m, n] : kArities) {
      for (std::size_t k = 1; k <= 8; ++k) {
        out.push_back(zk_ring_tables(k, m, n));
      }
    }
    out.push_back(build_krasner_quotient(5, {1, 4}));
    out.push_back(build_krasner_quotient(7, {1, 2, 4}));
    return out;
  }

}  // namespace krasner
