// Copyright 2026 The kurdtk Authors.
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

#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "cli_io.h"
#include "commands.h"
#include "kurdtk/dataset.h"
#include "kurdtk/html_extract.h"
#include "kurdtk/normalize.h"
#include "kurdtk/stats.h"
#include "kurdtk/tokenize.h"
#include "kurdtk/translit.h"
#include "kurdtk/unicode.h"

namespace kurdtk::cli {
namespace {

using Json = nlohmann::ordered_json;

// Shared shape of the per-string commands: --text, or a corpus/dataset
// file rewritten record by record.
struct TextIo {
  std::string input;
  std::string text;
  std::string out;
  bool dataset = false;
  bool text_given = false;
};

void add_text_io(CLI::App* sub, TextIo& io) {
  sub->add_option("input", io.input, "corpus file (default stdin)");
  sub->add_option("--text", io.text, "process one string instead of a file");
  sub->add_option("-o,--out", io.out, "output path (default stdout)");
  sub->add_flag("--dataset", io.dataset, "input holds {text, label} records");
}

void rewrite(const TextIo& io, const std::function<std::string(const std::string&)>& fn,
             const std::optional<Label>& relabel = std::nullopt) {
  Output out(io.out);
  if (io.text_given) {
    out.stream() << fn(io.text) << '\n';
  } else {
    Input in(io.input);
    if (io.dataset) {
      for_each_sentence(in, [&](LabeledSentence& s) {
        s.text = fn(s.text);
        if (relabel) s.label = *relabel;
        write_dataset(std::span<const LabeledSentence>(&s, 1), out.stream());
      });
    } else {
      for_each_document(in, [&](Document& d) {
        d.text = fn(d.text);
        write_corpus(std::span<const Document>(&d, 1), out.stream());
      });
    }
  }
  out.commit();
}

void add_ingest(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("ingest", "extract articles from saved HTML pages");
  auto opts = std::make_shared<std::tuple<std::vector<std::string>, std::string,
                                          std::string, std::string, bool>>();
  auto& [files, source, out, language, skip_empty] = *opts;
  sub->add_option("pages", files, "HTML files")->required()->check(CLI::ExistingFile);
  sub->add_option("--source", source, "source recorded for every page (default: file path)");
  sub->add_option("--language", language, "label recorded for every page");
  sub->add_option("-o,--out", out, "corpus output path (default stdout)");
  sub->add_flag("--skip-empty", skip_empty, "skip pages without visible text");
  registry[sub] = [opts](const Context& ctx) {
    auto& [files, source, out_path, language, skip_empty] = *opts;
    std::optional<Label> label;
    if (!language.empty()) label = Label::parse(language);
    Output out(out_path);
    std::vector<Document> docs;
    std::size_t skipped = 0;
    for (const std::string& path : files) {
      std::ifstream in(path, std::ios::binary);
      const std::string html((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
      try {
        Document doc = extract_article(html, source.empty() ? path : source);
        doc.language = label;
        docs.push_back(std::move(doc));
      } catch (const EmptyExtraction& e) {
        if (!skip_empty) throw Error(path + ": " + e.what());
        ++skipped;
      }
    }
    write_corpus(docs, out.stream());
    out.commit();
    if (!ctx.quiet) {
      std::cerr << "ingested " << docs.size() << " page(s)";
      if (skipped) std::cerr << ", skipped " << skipped;
      std::cerr << '\n';
    }
  };
}

void add_normalize(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("normalize", "unify character encodings");
  auto io = std::make_shared<TextIo>();
  auto table = std::make_shared<std::string>("unification");
  auto no_nfc = std::make_shared<bool>(false);
  add_text_io(sub, *io);
  sub->add_option("--table", *table,
                  "unification, harmonization, both, or a table file path");
  sub->add_flag("--no-nfc", *no_nfc, "skip the NFC pre-step");
  registry[sub] = [io, table, no_nfc, sub](const Context& ctx) {
    io->text_given = sub->get_option("--text")->count() > 0;
    std::vector<NormalizationTable> tables;
    if (*table == "unification" || *table == "both") {
      tables.push_back(NormalizationTable::load(ctx.config.unification_table));
    }
    if (*table == "harmonization" || *table == "both") {
      tables.push_back(NormalizationTable::load(ctx.config.harmonization_table));
    }
    if (tables.empty()) tables.push_back(NormalizationTable::load(*table));
    const bool nfc = !*no_nfc;
    rewrite(*io, [&](const std::string& s) {
      std::string t = nfc ? unicode::nfc(s) : s;
      for (const NormalizationTable& tb : tables) t = unify_encoding(t, tb);
      return t;
    });
  };
}

void add_clean(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("clean", "remove e-mails, URLs and noise");
  auto io = std::make_shared<TextIo>();
  add_text_io(sub, *io);
  auto policy = std::make_shared<CleaningPolicy>();
  auto digits = std::make_shared<std::string>();
  auto* emails = sub->add_flag("--strip-emails,!--keep-emails", policy->strip_emails);
  auto* urls = sub->add_flag("--strip-urls,!--keep-urls", policy->strip_urls);
  auto* ws = sub->add_flag("--collapse-whitespace,!--keep-whitespace",
                           policy->collapse_whitespace);
  auto* zwnj = sub->add_flag("--zwnj-to-space,!--keep-zwnj", policy->zwnj_to_space);
  sub->add_option("--digits", *digits, "keep, fold-to-ascii or drop")
      ->check(CLI::IsMember({"keep", "fold-to-ascii", "drop"}));
  registry[sub] = [=](const Context& ctx) {
    io->text_given = sub->get_option("--text")->count() > 0;
    CleaningPolicy p = ctx.config.cleaning;
    if (emails->count()) p.strip_emails = policy->strip_emails;
    if (urls->count()) p.strip_urls = policy->strip_urls;
    if (ws->count()) p.collapse_whitespace = policy->collapse_whitespace;
    if (zwnj->count()) p.zwnj_to_space = policy->zwnj_to_space;
    if (!digits->empty()) p.digit_policy = parse_digit_policy(*digits);
    if (!p.any_active()) throw InvalidArgument("cleaning policy has no active option");
    std::size_t redactions = 0;
    rewrite(*io, [&](const std::string& s) {
      CleanResult r = clean(s, p);
      redactions += r.redactions;
      return std::move(r.text);
    });
    if (!ctx.quiet) std::cerr << "redactions: " << redactions << '\n';
  };
}

void add_tokenize(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("tokenize", "split documents into sentences and tokens");
  auto io = std::make_shared<TextIo>();
  auto split_zwnj = std::make_shared<bool>(false);
  sub->add_option("input", io->input, "corpus file (default stdin)");
  sub->add_option("--text", io->text, "tokenize one string");
  sub->add_option("-o,--out", io->out, "output path (default stdout)");
  sub->add_flag("--split-zwnj", *split_zwnj, "treat ZWNJ as a token boundary");
  registry[sub] = [=](const Context& ctx) {
    TokenizerOptions options;
    options.split_on_zwnj = *split_zwnj;
    Output out(io->out);
    if (sub->get_option("--text")->count() > 0) {
      for (const Token& t : tokenize(io->text, options)) {
        if (ctx.records) {
          Json j;
          j["surface"] = t.surface;
          j["kind"] = to_string(t.kind);
          out.stream() << j.dump() << '\n';
        } else {
          out.stream() << t.surface << '\t' << to_string(t.kind) << '\n';
        }
      }
    } else {
      Input in(io->input);
      for_each_document(in, [&](Document& d) {
        out.stream() << to_record(tokenize_document(d, options)) << '\n';
      });
    }
    out.commit();
  };
}

void add_translit(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("translit", "transliterate between Perso-Arabic and Latin");
  auto io = std::make_shared<TextIo>();
  add_text_io(sub, *io);
  auto to = std::make_shared<std::string>();
  auto label = std::make_shared<std::string>();
  auto rules = std::make_shared<std::string>();
  auto no_unify = std::make_shared<bool>(false);
  sub->add_option("--to", *to, "target script")
      ->required()
      ->check(CLI::IsMember({"latn", "arab"}));
  sub->add_option("--label", *label, "relabel dataset records");
  sub->add_option("--rules", *rules, "rule table overriding the configured one");
  sub->add_flag("--no-unify", *no_unify, "skip encoding unification before arab->latn");
  registry[sub] = [=](const Context& ctx) {
    io->text_given = sub->get_option("--text")->count() > 0;
    const bool to_latin = *to == "latn";
    const RuleTable table = RuleTable::load(
        !rules->empty() ? *rules
        : to_latin      ? ctx.config.arab_to_latin_rules
                        : ctx.config.latin_to_arab_rules);
    std::optional<NormalizationTable> unify;
    if (to_latin && !*no_unify) {
      unify = NormalizationTable::load(ctx.config.unification_table);
    }
    std::optional<Label> relabel;
    if (!label->empty()) {
      if (!io->dataset) throw InvalidArgument("--label needs --dataset");
      relabel = Label::parse(*label);
    }
    rewrite(*io, [&](const std::string& s) {
      if (!to_latin) return latin_to_arab(s, table);
      return arab_to_latin(unify ? unify_encoding(unicode::nfc(s), *unify) : s,
                           table);
    }, relabel);
  };
}

void add_detect_script(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("detect-script", "classify the script of text");
  auto io = std::make_shared<TextIo>();
  add_text_io(sub, *io);
  auto lines = std::make_shared<bool>(false);
  sub->add_flag("--lines", *lines, "input is plain text, one item per line");
  registry[sub] = [=](const Context& ctx) {
    Output out(io->out);
    auto emit = [&](const std::string& key, const std::string& text) {
      const auto [code, p] = detect_script(text);
      if (ctx.records) {
        Json j;
        if (!key.empty()) j["id"] = key;
        j["script"] = to_string(code);
        j["arabic_letters"] = p.arabic_letters;
        j["latin_letters"] = p.latin_letters;
        j["kurdish_distinctive"] = p.kurdish_distinctive;
        j["other"] = p.other;
        out.stream() << j.dump() << '\n';
      } else {
        if (!key.empty()) out.stream() << key << '\t';
        out.stream() << to_string(code) << '\n';
      }
    };
    if (sub->get_option("--text")->count() > 0) {
      emit("", io->text);
    } else {
      Input in(io->input);
      if (*lines) {
        for_each_line(in, [&](std::string& l, std::size_t n) {
          emit(std::to_string(n), l);
        });
      } else if (io->dataset) {
        std::size_t n = 0;
        for_each_sentence(in, [&](LabeledSentence& s) {
          emit(std::to_string(++n), s.text);
        });
      } else {
        for_each_document(in, [&](Document& d) { emit(d.id, d.text); });
      }
    }
    out.commit();
  };
}

void add_split(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("split", "sample and split an LID dataset");
  struct Opts {
    std::vector<std::string> inputs;
    std::size_t n = 3000;
    double test_fraction = 0.2;
    std::vector<std::string> per_label;
    std::string train_out, test_out;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("inputs", o->inputs, "dataset files")->required()->check(CLI::ExistingFile);
  sub->add_option("-n,--per-label-count", o->n, "sentences per label");
  sub->add_option("--test-fraction", o->test_fraction, "test share in (0, 1)");
  sub->add_option("--count", o->per_label, "LABEL=N override, repeatable");
  sub->add_option("--train-out", o->train_out, "train split path")->required();
  sub->add_option("--test-out", o->test_out, "test split path")->required();
  registry[sub] = [o](const Context& ctx) {
    std::map<Label, std::vector<std::string>> corpora;
    for (const std::string& path : o->inputs) {
      for (LabeledSentence& s : read_dataset_file(path)) {
        corpora[s.label].push_back(std::move(s.text));
      }
    }
    DatasetOptions options;
    options.n_per_label = o->n;
    options.test_fraction = o->test_fraction;
    options.seed = ctx.config.seed;
    for (const std::string& spec : o->per_label) {
      const std::size_t eq = spec.find('=');
      if (eq == std::string::npos) throw InvalidArgument("--count wants LABEL=N");
      options.per_label[Label::parse(spec.substr(0, eq))] =
          std::stoul(spec.substr(eq + 1));
    }
    const LidSplit split = build_lid_dataset(corpora, options);
    Output train(o->train_out), test(o->test_out);
    write_dataset(split.train, train.stream());
    write_dataset(split.test, test.stream());
    train.commit();
    test.commit();
    if (!ctx.quiet) {
      std::cerr << "train " << split.train.size() << ", test " << split.test.size()
                << " over " << corpora.size() << " label(s)\n";
    }
  };
}

}  // namespace

void add_text_commands(CLI::App& app, Registry& registry) {
  add_ingest(app, registry);
  add_normalize(app, registry);
  add_clean(app, registry);
  add_tokenize(app, registry);
  add_translit(app, registry);
  add_detect_script(app, registry);
  add_split(app, registry);
}

}  // namespace kurdtk::cli
