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

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_io.h"
#include "commands.h"
#include "kurdtk/affix.h"
#include "kurdtk/stats.h"

namespace kurdtk::cli {
namespace {

using Json = nlohmann::ordered_json;

struct CountOpts {
  std::string input;
  bool tokenized = false;
  bool keep_flagged = false;
  bool split_zwnj = false;
  std::vector<std::string> exclude;
  double threshold = -1.0;
};

void add_count_options(CLI::App* sub, CountOpts& o) {
  sub->add_option("input", o.input, "corpus file (default stdin)");
  sub->add_flag("--tokenized", o.tokenized, "input is tokenize output");
  sub->add_flag("--keep-flagged", o.keep_flagged,
                "count code-switched sentences too");
  sub->add_flag("--split-zwnj", o.split_zwnj, "treat ZWNJ as a token boundary");
  sub->add_option("--exclude", o.exclude, "token kinds left out of types")
      ->check(CLI::IsMember({"word", "punct", "digit"}));
  sub->add_option("--threshold", o.threshold, "code-switch threshold");
}

StatsOptions stats_options(const CountOpts& o, const Context& ctx,
                           const CLI::App* sub) {
  StatsOptions options;
  options.drop_flagged = !o.keep_flagged;
  options.tokenizer.split_on_zwnj = o.split_zwnj;
  options.code_switch_threshold = sub->get_option("--threshold")->count()
                                      ? o.threshold
                                      : ctx.config.code_switch_threshold;
  if (sub->get_option("--exclude")->count()) {
    options.exclusions.clear();
    for (const std::string& k : o.exclude) {
      options.exclusions.insert(k == "word"    ? TokenKind::kWord
                                : k == "punct" ? TokenKind::kPunctuation
                                               : TokenKind::kDigit);
    }
  }
  return options;
}

CorpusCounts count(const CountOpts& o, const StatsOptions& options) {
  CorpusCounts counts;
  Input in(o.input);
  if (o.tokenized) {
    for_each_tokenized(in, [&](TokenizedDocument& d) {
      accumulate(counts, d, options);
    });
  } else {
    for_each_document(in, [&](Document& d) {
      accumulate(counts, tokenize_document(d, options.tokenizer), options);
    });
  }
  if (counts.report.articles == 0) throw EmptyCorpus("corpus has no documents");
  finish_report(counts.report, counts.types);
  return counts;
}

void add_stats(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("stats", "corpus size and vocabulary statistics");
  auto o = std::make_shared<CountOpts>();
  auto out_path = std::make_shared<std::string>();
  auto cues = std::make_shared<bool>(false);
  add_count_options(sub, *o);
  sub->add_option("-o,--out", *out_path, "output path (default stdout)");
  sub->add_flag("--cues", *cues, "add per-variety affix cue counts");
  registry[sub] = [=](const Context& ctx) {
    const StatsOptions options = stats_options(*o, ctx, sub);
    const CorpusCounts counts = count(*o, options);
    std::map<LanguageCode, std::uint64_t> cue_counts;
    if (*cues) {
      const AffixInventory inventory =
          AffixInventory::load(ctx.config.affix_inventory);
      for (const auto& [type, freq] : counts.types) {
        const Token t{type, TokenKind::kWord};
        for (const auto& [variety, n] :
             variety_cues(std::span<const Token>(&t, 1), inventory)) {
          cue_counts[variety] += n * freq;
        }
      }
    }
    Output out(*out_path);
    if (ctx.records) {
      Json j = Json::parse(report_record(counts.report));
      if (*cues) {
        Json c = Json::object();
        for (const auto& [v, n] : cue_counts) c[std::string(to_string(v))] = n;
        j["cues"] = c;
      }
      out.stream() << j.dump() << '\n';
    } else {
      write_report_text(counts.report, out.stream());
      for (const auto& [v, n] : cue_counts) {
        out.stream() << "cues." << to_string(v) << ": " << n << '\n';
      }
    }
    out.commit();
  };
}

void add_zipf(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("zipf", "rank-frequency table of corpus types");
  auto o = std::make_shared<CountOpts>();
  auto out_path = std::make_shared<std::string>();
  auto fit = std::make_shared<std::vector<std::uint64_t>>();
  add_count_options(sub, *o);
  sub->add_option("-o,--out", *out_path, "CSV output path (default stdout)");
  sub->add_option("--fit", *fit, "MIN MAX: fit a line over this rank window")
      ->expected(2);
  registry[sub] = [=](const Context& ctx) {
    const CorpusCounts counts = count(*o, stats_options(*o, ctx, sub));
    const RankFrequencyTable table = rank_frequency(counts.types);
    std::optional<ZipfFit> z;
    if (fit->size() == 2) z = zipf_fit(table, (*fit)[0], (*fit)[1]);
    Output out(*out_path);
    write_zipf_csv(table, out.stream());
    out.commit();
    if (z) {
      std::cerr << "slope: " << format_double(z->slope) << '\n'
                << "intercept: " << format_double(z->intercept) << '\n';
    }
  };
}

void add_topk(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("topk", "most frequent corpus types");
  auto o = std::make_shared<CountOpts>();
  auto k = std::make_shared<std::size_t>(20);
  auto out_path = std::make_shared<std::string>();
  add_count_options(sub, *o);
  sub->add_option("-k", *k, "number of types");
  sub->add_option("-o,--out", *out_path, "output path (default stdout)");
  registry[sub] = [=](const Context& ctx) {
    if (*k == 0) throw InvalidArgument("-k must be positive");
    const CorpusCounts counts = count(*o, stats_options(*o, ctx, sub));
    Output out(*out_path);
    for (const auto& [type, freq] : top_k(counts.types, *k)) {
      if (ctx.records) {
        Json j;
        j["type"] = type;
        j["frequency"] = freq;
        out.stream() << j.dump() << '\n';
      } else {
        out.stream() << type << '\t' << freq << '\n';
      }
    }
    out.commit();
  };
}

}  // namespace

void add_stats_commands(CLI::App& app, Registry& registry) {
  add_stats(app, registry);
  add_zipf(app, registry);
  add_topk(app, registry);
}

}  // namespace kurdtk::cli
