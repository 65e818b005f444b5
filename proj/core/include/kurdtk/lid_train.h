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

#ifndef KURDTK_LID_TRAIN_H_
#define KURDTK_LID_TRAIN_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kurdtk/corpus.h"
#include "kurdtk/lid_model.h"

namespace kurdtk {

struct TrainOptions {
  // Called after every epoch with the 1-based epoch and its mean loss.
  std::function<void(std::size_t, double)> on_epoch;
};

struct TrainResult {
  LidModel model;
  std::vector<double> epoch_loss;  // mean per-example loss of each epoch
  double final_loss() const { return epoch_loss.empty() ? 0.0 : epoch_loss.back(); }
};

// Single-threaded SGD on the softmax negative log-likelihood.
//
//  1. Labels: the distinct training labels in Label order.
//  2. Vocabulary: every word token of the training set.
//  3. Init from SplitMix64(hyper.seed): input entries in row-major order
//     as (2u - 1) / dim with u = unit(); output weights zero.
//  4. Each epoch shuffles the example order with the same generator and
//     takes one step per sentence; the learning rate at global step t of T
//     is learning_rate * (1 - t / T).
//
// The result is a pure function of the arguments. Throws DegenerateLabels
// for fewer than 2 labels or an empty set, SchemeMismatch when a label does
// not fit the scheme, NonFiniteLoss with the step index on divergence.
TrainResult train(std::span<const LabeledSentence> trainset,
                  const LidHyperparams& hyper, LabelScheme scheme,
                  const TrainOptions& options = {});

}  // namespace kurdtk

#endif  // KURDTK_LID_TRAIN_H_
