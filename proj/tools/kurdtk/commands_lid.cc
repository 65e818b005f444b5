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
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_io.h"
#include "commands.h"
#include "kurdtk/lid_eval.h"
#include "kurdtk/lid_model.h"
#include "kurdtk/lid_train.h"

namespace kurdtk::cli {
namespace {

using Json = nlohmann::ordered_json;

void add_train(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("lid-train", "train a language-identification model");
  struct Opts {
    std::string train, model, scheme = "language-and-script";
    std::uint32_t dim = 0, ngram_min = 0, ngram_max = 0, epochs = 0;
    double lr = 0.0;
    std::uint64_t bucket = 0;
    bool no_unigrams = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--train", o->train, "training dataset")->required()->check(CLI::ExistingFile);
  sub->add_option("--model", o->model, "model output path")->required();
  sub->add_option("--scheme", o->scheme, "label scheme")
      ->check(CLI::IsMember({"language-only", "language-and-script"}));
  sub->add_option("--dim", o->dim, "embedding dimension");
  sub->add_option("--ngram-min", o->ngram_min, "shortest character n-gram");
  sub->add_option("--ngram-max", o->ngram_max, "longest character n-gram");
  sub->add_option("--epochs", o->epochs, "training epochs");
  sub->add_option("--lr", o->lr, "initial learning rate");
  sub->add_option("--bucket", o->bucket, "n-gram hash buckets");
  sub->add_flag("--no-word-unigrams", o->no_unigrams, "drop whole-word features");
  registry[sub] = [o, sub](const Context& ctx) {
    LidHyperparams hyper = ctx.config.lid;
    auto given = [&](const char* name) { return sub->get_option(name)->count() > 0; };
    if (given("--dim")) hyper.embedding_dim = o->dim;
    if (given("--ngram-min")) hyper.ngram_min = o->ngram_min;
    if (given("--ngram-max")) hyper.ngram_max = o->ngram_max;
    if (given("--epochs")) hyper.epochs = o->epochs;
    if (given("--lr")) hyper.learning_rate = o->lr;
    if (given("--bucket")) hyper.bucket_count = o->bucket;
    if (o->no_unigrams) hyper.include_word_unigrams = false;
    hyper.validate();
    const LabelScheme scheme = parse_label_scheme(o->scheme);

    std::vector<LabeledSentence> data = read_dataset_file(o->train);
    for (LabeledSentence& s : data) s.label = aggregate_label(s.label, scheme);

    TrainOptions options;
    if (!ctx.quiet) {
      options.on_epoch = [&](std::size_t epoch, double loss) {
        std::cerr << "epoch " << epoch << "/" << hyper.epochs
                  << " loss " << format_double(loss) << '\n';
      };
    }
    const TrainResult result = train(data, hyper, scheme, options);
    Output out(o->model);
    save_model(result.model, out.stream());
    out.commit();
    if (!ctx.quiet) {
      std::cerr << "trained on " << data.size() << " sentence(s), "
                << result.model.labels.size() << " label(s)\n";
    }
  };
}

void add_predict(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("lid-predict", "identify the language of text");
  struct Opts {
    std::string model, text, input, out;
    std::size_t k = 1;
    bool dataset = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--model", o->model, "model file")->required()->check(CLI::ExistingFile);
  sub->add_option("--text", o->text, "one sentence");
  sub->add_option("input", o->input, "plain text, one sentence per line (default stdin)");
  sub->add_flag("--dataset", o->dataset, "input holds {text, label} records");
  sub->add_option("-k", o->k, "labels per sentence");
  sub->add_option("-o,--out", o->out, "output path (default stdout)");
  registry[sub] = [o, sub](const Context& ctx) {
    if (o->k == 0) throw InvalidArgument("-k must be positive");
    const LidModel model = load_model(o->model);
    Output out(o->out);
    auto emit = [&](const std::string& text) {
      const Prediction p = predict(model, text, o->k);
      if (ctx.records) {
        Json ranked = Json::array();
        for (const auto& [label, prob] : p.ranked) {
          Json r;
          r["label"] = label.to_string();
          r["probability"] = prob;
          ranked.push_back(r);
        }
        Json j;
        j["text"] = text;
        j["predictions"] = ranked;
        out.stream() << j.dump() << '\n';
      } else {
        bool first = true;
        for (const auto& [label, prob] : p.ranked) {
          if (!first) out.stream() << '\t';
          first = false;
          out.stream() << label.to_string() << '\t' << format_double(prob);
        }
        out.stream() << '\n';
      }
    };
    if (sub->get_option("--text")->count() > 0) {
      emit(o->text);
    } else {
      Input in(o->input);
      if (o->dataset) {
        for_each_sentence(in, [&](LabeledSentence& s) { emit(s.text); });
      } else {
        for_each_line(in, [&](std::string& line, std::size_t) { emit(line); });
      }
    }
    out.commit();
  };
}

void write_report(const EvalReport& report, const Context& ctx,
                  const std::string& out_path, const std::string& confusion) {
  Output out(out_path);
  if (ctx.records) {
    write_eval_records(report, out.stream());
  } else {
    write_eval_text(report, out.stream());
  }
  out.commit();
  if (!confusion.empty()) {
    Output c(confusion);
    write_confusion_csv(report, c.stream());
    c.commit();
  }
}

void add_eval(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("lid-eval", "score a model on a labelled test set");
  struct Opts {
    std::string model, test, out, confusion;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--model", o->model, "model file")->required()->check(CLI::ExistingFile);
  sub->add_option("--test", o->test, "test dataset")->required()->check(CLI::ExistingFile);
  sub->add_option("-o,--out", o->out, "report path (default stdout)");
  sub->add_option("--confusion", o->confusion, "confusion matrix CSV path");
  registry[sub] = [o](const Context& ctx) {
    const LidModel model = load_model(o->model);
    std::vector<LabeledSentence> test = read_dataset_file(o->test);
    for (LabeledSentence& s : test) s.label = aggregate_label(s.label, model.scheme);
    write_report(evaluate(model, test), ctx, o->out, o->confusion);
  };
}

void add_eval_external(CLI::App& app, Registry& registry) {
  auto* sub = app.add_subcommand("lid-eval-external",
                                 "score predictions made by another system");
  struct Opts {
    std::string input, out, confusion;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("input", o->input, "TSV of reference and predicted labels (default stdin)");
  sub->add_option("-o,--out", o->out, "report path (default stdout)");
  sub->add_option("--confusion", o->confusion, "confusion matrix CSV path");
  registry[sub] = [o](const Context& ctx) {
    Input in(o->input);
    std::vector<std::pair<std::string, std::string>> rows;
    for_each_line(in, [&](std::string& line, std::size_t n) {
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
        throw Error(in.name() + ":" + std::to_string(n) +
                    ": expected reference<TAB>predicted");
      }
      rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    });
    write_report(evaluate_external(rows), ctx, o->out, o->confusion);
  };
}

}  // namespace

void add_lid_commands(CLI::App& app, Registry& registry) {
  add_train(app, registry);
  add_predict(app, registry);
  add_eval(app, registry);
  add_eval_external(app, registry);
}

}  // namespace kurdtk::cli
