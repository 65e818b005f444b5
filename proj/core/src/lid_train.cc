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

#include "kurdtk/lid_train.h"

#include <algorithm>
#include <cmath>

#include "kurdtk/error.h"
#include "kurdtk/lid_features.h"
#include "kurdtk/lid_math.h"
#include "kurdtk/rng.h"

namespace kurdtk {

TrainResult train(std::span<const LabeledSentence> trainset,
                  const LidHyperparams& hyper, LabelScheme scheme,
                  const TrainOptions& options) {
  hyper.validate();
  std::vector<Label> labels;
  for (const LabeledSentence& s : trainset) {
    if (!matches_scheme(s.label, scheme)) {
      throw SchemeMismatch("training label " + s.label.to_string() +
                           " does not fit scheme " +
                           std::string(to_string(scheme)));
    }
    labels.push_back(s.label);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() < 2) {
    throw DegenerateLabels("training needs at least 2 distinct labels, got " +
                           std::to_string(labels.size()));
  }

  TrainResult result;
  LidModel& model = result.model;
  model.hyper = hyper;
  model.scheme = scheme;
  model.labels = labels;
  std::vector<std::string> words;
  for (const LabeledSentence& s : trainset) {
    for (std::string& w : feature_words(s.text)) words.push_back(std::move(w));
  }
  model.word_vocab = WordVocab(std::move(words));
  model.allocate();

  SplitMix64 rng(hyper.seed);
  const double scale = 1.0 / static_cast<double>(hyper.embedding_dim);
  for (float& v : model.input_embeddings) {
    v = static_cast<float>((2.0 * rng.unit() - 1.0) * scale);
  }

  std::vector<std::vector<std::uint64_t>> features;
  std::vector<std::size_t> targets;
  features.reserve(trainset.size());
  for (const LabeledSentence& s : trainset) {
    features.push_back(featurize(s.text, hyper, model.word_vocab));
    targets.push_back(static_cast<std::size_t>(model.label_index(s.label)));
  }

  const std::size_t n = trainset.size();
  const double total = static_cast<double>(n) * hyper.epochs;
  std::vector<std::size_t> order(n);
  lid_math::Gradient scratch;
  std::size_t step = 0;
  for (std::uint32_t epoch = 0; epoch < hyper.epochs; ++epoch) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(std::span<std::size_t>(order));
    double sum = 0.0;
    for (std::size_t i : order) {
      const double lr =
          hyper.learning_rate * (1.0 - static_cast<double>(step) / total);
      const double loss = lid_math::sgd_step<float>(
          model.input_embeddings, model.output_weights, model.dim(),
          labels.size(), features[i], targets[i], lr, scratch);
      if (!std::isfinite(loss)) throw NonFiniteLoss(step);
      sum += loss;
      ++step;
    }
    result.epoch_loss.push_back(sum / static_cast<double>(n));
    if (options.on_epoch) options.on_epoch(epoch + 1, result.epoch_loss.back());
  }
  for (float v : model.output_weights) {
    if (!std::isfinite(v)) throw NonFiniteLoss(step);
  }
  return result;
}

}  // namespace kurdtk
