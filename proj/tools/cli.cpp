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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "krasner/audit.hpp"
#include "krasner/axioms.hpp"
#include "krasner/constructions.hpp"
#include "krasner/corpus.hpp"
#include "krasner/errors.hpp"
#include "krasner/ideals.hpp"
#include "krasner/render.hpp"
#include "krasner/s_theory.hpp"

namespace krasner::cli {

  namespace {
    namespace fs = std::filesystem;

    struct Flags {
      std::string              format  = "text";
      std::string              output;
      std::string              mode    = "weak";
      std::string              reading = "per-coordinate";
      std::vector<std::string> paths;
      std::string              ideal;
      std::optional<std::string> mult;
      std::string              kernel;
      std::vector<std::string> theorems;
      bool                     check_identity = false;
      bool                     proper         = false;
      std::string              which;
      std::size_t              k = 0;
      std::size_t              m = 2;
      std::size_t              n = 2;
      std::string              units;
    };

    void add_format(CLI::App* app, Flags& f) {
      app->add_option("--format", f.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
      app->add_option("-o,--output", f.output, "output file");
    }

    void add_mode(CLI::App* app, Flags& f) {
      app->add_option("--mode", f.mode, "hyperideal mode: weak or strict")
          ->check(CLI::IsMember({"weak", "strict"}));
    }

    void add_reading(CLI::App* app, Flags& f) {
      app->add_option("--reading", f.reading,
                      "S-primary reading: per-coordinate or any-coordinate")
          ->check(CLI::IsMember({"per-coordinate", "any-coordinate"}));
    }

    HyperidealMode mode_of(Flags const& f, std::ostream& err) {
      HyperidealMode const mode = *parse_mode(f.mode);
      if (mode == HyperidealMode::kWeak) {
        err << "note: weak hyperideal mode (solvability not required); "
               "pass --mode strict for the full definition\n";
      }
      return mode;
    }

    void emit(std::string const& text, std::string const& path, std::ostream& out) {
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream file(path, std::ios::binary);
      file << text;
      if (!file) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
      }
    }

    // Predicates are defined on any tables; say so when the axioms fail.
    void warn_if_unverified(KrasnerStructure const& s, std::ostream& err) {
      if (!verify_axioms(s).overall) {
        err << "warning: " << s.name()
            << " fails the hyperring axioms; results describe the tables as "
               "given\n";
      }
    }

    std::vector<KrasnerStructure> load_corpus(std::vector<std::string> const& paths) {
      std::vector<KrasnerStructure> out;
      for (auto const& p : paths) {
        if (fs::is_directory(p)) {
          std::vector<fs::path> files;
          for (auto const& entry : fs::directory_iterator(p)) {
            if (entry.is_regular_file() && entry.path().extension() == ".json") {
              files.push_back(entry.path());
            }
          }
          std::sort(files.begin(), files.end());
          for (auto const& file : files) {
            out.push_back(load_structure(file));
          }
        } else {
          out.push_back(load_structure(p));
        }
      }
      return out;
    }

    std::vector<std::size_t> parse_units(std::string const& text) {
      std::vector<std::size_t> out;
      std::size_t              start = 0;
      while (start <= text.size()) {
        std::size_t const end  = std::min(text.find(',', start), text.size());
        std::string const item = text.substr(start, end - start);
        if (item.empty()
            || item.find_first_not_of("0123456789") != std::string::npos) {
          throw Error(ErrorCode::kInvalidArgument,
                      "--units expects comma-separated integers");
        }
        out.push_back(std::stoul(item));
        start = end + 1;
      }
      return out;
    }

    int verify(Flags const& f, std::ostream& out) {
      KrasnerStructure const s      = load_structure(f.paths.at(0));
      AxiomReport const      report = verify_axioms(s, f.check_identity);
      emit(render(s, report, *parse_format(f.format)), f.output, out);
      return report.overall ? kExitOk : kExitFailure;
    }

    int ideals(Flags const& f, std::ostream& out, std::ostream& err) {
      KrasnerStructure const s    = load_structure(f.paths.at(0));
      HyperidealMode const   mode = mode_of(f, err);
      warn_if_unverified(s, err);
      emit(render_ideals(s, enumerate_hyperideals(s, mode, f.proper), mode,
                         *parse_format(f.format)),
           f.output, out);
      return kExitOk;
    }

    int classify_cmd(Flags const& f, std::ostream& out, std::ostream& err) {
      KrasnerStructure const s     = load_structure(f.paths.at(0));
      ElementSet const       ideal = parse_label_set(s, f.ideal);
      std::optional<ElementSet> mult;
      if (f.mult) {
        mult = parse_label_set(s, *f.mult);
      }
      HyperidealMode const mode = mode_of(f, err);
      warn_if_unverified(s, err);
      Classification const c
          = classify(s, ideal, mult, mode, *parse_reading(f.reading));
      emit(render(s, c, *parse_format(f.format)), f.output, out);
      return c.hyperideal.holds() ? kExitOk : kExitFailure;
    }

    int radical(Flags const& f, std::ostream& out, std::ostream& err) {
      KrasnerStructure const s     = load_structure(f.paths.at(0));
      ElementSet const       ideal = parse_label_set(s, f.ideal);
      HyperidealMode const   mode  = mode_of(f, err);
      warn_if_unverified(s, err);
      emit(render(s, radical_report(s, ideal, mode), *parse_format(f.format)),
           f.output, out);
      return kExitOk;
    }

    int quotient_cmd(Flags const& f, std::ostream& out) {
      KrasnerStructure const s = load_structure(f.paths.at(0));
      QuotientMap const      q = quotient(s, parse_label_set(s, f.kernel));
      out << render(q, *parse_format(f.format));
      if (!f.output.empty()) {
        save_structure(q.structure, f.output);
      }
      return kExitOk;
    }

    int product_cmd(Flags const& f, std::ostream& out) {
      KrasnerStructure const a    = load_structure(f.paths.at(0));
      KrasnerStructure const b    = load_structure(f.paths.at(1));
      KrasnerStructure const prod = product(a, b);
      AxiomReport const      report = verify_axioms(prod);
      out << render(prod, report, *parse_format(f.format));
      if (!f.output.empty()) {
        save_structure(prod, f.output);
      }
      return report.overall ? kExitOk : kExitFailure;
    }

    int audit(Flags const& f, std::ostream& out, std::ostream& err) {
      std::vector<KrasnerStructure> const corpus = load_corpus(f.paths);
      AuditOptions                        options;
      options.mode     = mode_of(f, err);
      options.reading  = *parse_reading(f.reading);
      options.theorems = f.theorems;
      if (corpus.empty()) {
        err << "warning: empty corpus; no theorem can be instantiated\n";
      }
      AuditReport const report = audit_theorems(corpus, options);
      emit(render(report, *parse_format(f.format)), f.output, out);
      return report.violated() ? kExitFailure : kExitOk;
    }

    int gen(std::string const& kind, Flags const& f, std::ostream& out) {
      std::optional<KrasnerStructure> s;
      if (kind == "paper") {
        s = f.which == "3.2" ? k33() : k24();
      } else if (kind == "zk") {
        s = build_zk_ring(f.k, f.m, f.n);
      } else {
        s = build_krasner_quotient(f.k, parse_units(f.units), f.m, f.n);
      }
      emit(serialize_structure(*s), f.output, out);
      return kExitOk;
    }

    int exit_code(ErrorCode code) {
      switch (code) {
        case ErrorCode::kAxiomFailure:
        case ErrorCode::kNotAPartition:
        case ErrorCode::kWellDefinednessFailure:
          return kExitFailure;
        default:
          return kExitUsage;
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Flags    f;
    CLI::App app{"Finite model lab for commutative Krasner (m,n)-hyperrings",
                 "krasner"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "check the hyperring axioms");
    verify_cmd->add_option("path", f.paths, "structure file")->required()->expected(1);
    verify_cmd->add_flag("--check-identity", f.check_identity,
                         "also require the designated one to be a scalar identity");
    add_format(verify_cmd, f);

    auto* ideals_cmd = app.add_subcommand("ideals", "list every hyperideal");
    ideals_cmd->add_option("path", f.paths, "structure file")->required()->expected(1);
    ideals_cmd->add_flag("--proper", f.proper, "omit the carrier");
    add_mode(ideals_cmd, f);
    add_format(ideals_cmd, f);

    auto* classify_sub = app.add_subcommand("classify", "evaluate the five predicates");
    classify_sub->add_option("path", f.paths, "structure file")->required()->expected(1);
    classify_sub->add_option("--ideal", f.ideal, "comma-separated labels")->required();
    classify_sub->add_option("--mult", f.mult, "comma-separated labels");
    add_mode(classify_sub, f);
    add_reading(classify_sub, f);
    add_format(classify_sub, f);

    auto* radical_cmd = app.add_subcommand("radical", "radical by powers and by primes");
    radical_cmd->add_option("path", f.paths, "structure file")->required()->expected(1);
    radical_cmd->add_option("--ideal", f.ideal, "comma-separated labels")->required();
    add_mode(radical_cmd, f);
    add_format(radical_cmd, f);

    auto* quotient_sub = app.add_subcommand("quotient", "quotient by a hyperideal");
    quotient_sub->add_option("path", f.paths, "structure file")->required()->expected(1);
    quotient_sub->add_option("--kernel", f.kernel, "comma-separated labels")->required();
    add_format(quotient_sub, f);

    auto* product_sub = app.add_subcommand("product", "direct product of two structures");
    product_sub->add_option("paths", f.paths, "two structure files")->required()->expected(2);
    add_format(product_sub, f);

    auto* audit_cmd = app.add_subcommand("audit", "check the theorems over a corpus");
    audit_cmd->add_option("paths", f.paths, "structure files or directories");
    audit_cmd->add_option("--theorems", f.theorems, "comma-separated theorem ids")
        ->delimiter(',')
        ->allow_extra_args(false);
    add_mode(audit_cmd, f);
    add_reading(audit_cmd, f);
    add_format(audit_cmd, f);

    auto* gen_cmd = app.add_subcommand("gen", "write a structure file");
    gen_cmd->require_subcommand(1);
    auto* paper = gen_cmd->add_subcommand("paper", "one of the two worked examples");
    paper->add_option("--which", f.which, "3.2 or 3.3")
        ->required()
        ->check(CLI::IsMember({"3.2", "3.3"}));
    auto* zk = gen_cmd->add_subcommand("zk", "integers modulo k");
    zk->add_option("--k", f.k, "modulus")->required();
    zk->add_option("--m", f.m, "arity of the sum");
    zk->add_option("--n", f.n, "arity of the product");
    auto* kq = gen_cmd->add_subcommand("kq", "integers modulo k over a unit group");
    kq->add_option("--k", f.k, "modulus")->required();
    kq->add_option("--units", f.units, "comma-separated unit group")->required();
    kq->add_option("--m", f.m, "arity of the sum");
    kq->add_option("--n", f.n, "arity of the product");
    for (auto* sub : {paper, zk, kq}) {
      sub->add_option("-o,--output", f.output, "output file");
    }

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
      if (verify_cmd->parsed()) {
        return verify(f, out);
      }
      if (ideals_cmd->parsed()) {
        return ideals(f, out, err);
      }
      if (classify_sub->parsed()) {
        return classify_cmd(f, out, err);
      }
      if (radical_cmd->parsed()) {
        return radical(f, out, err);
      }
      if (quotient_sub->parsed()) {
        return quotient_cmd(f, out);
      }
      if (product_sub->parsed()) {
        return product_cmd(f, out);
      }
      if (audit_cmd->parsed()) {
        return audit(f, out, err);
      }
      return gen(paper->parsed() ? "paper" : zk->parsed() ? "zk" : "kq", f, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_code(e.code());
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

}  // namespace krasner::cli
