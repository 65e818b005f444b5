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

#ifndef KURDTK_DATASET_H_
#define KURDTK_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kurdtk/corpus.h"
#include "kurdtk/label.h"

namespace kurdtk {

struct LidSplit {
  std::vector<LabeledSentence> train;
  std::vector<LabeledSentence> test;
};

struct DatasetOptions {
  std::size_t n_per_label = 3000;
  double test_fraction = 0.2;
  std::uint64_t seed = 1;
  // Per-label sample sizes that replace n_per_label.
  std::map<Label, std::size_t> per_label;
};

// Samples n sentences per label without replacement and splits each sample
// into test (first round(n * test_fraction) items, at least 1) and train.
//
// Sentences are deduplicated within a label (first occurrence kept) before
// sampling. Each label draws from its own SplitMix64 seeded with
// seed ^ fnv1a64(label.to_string()), so adding a label never changes the
// sample of another. Output is grouped by label in Label order.
//
// Throws InsufficientData naming the first label that has fewer than n
// distinct sentences, InvalidArgument for a ratio outside (0, 1) or n == 0.
LidSplit build_lid_dataset(
    const std::map<Label, std::vector<std::string>>& corpora,
    const DatasetOptions& options);

LidSplit build_lid_dataset(
    const std::map<Label, std::vector<std::string>>& corpora,
    std::size_t n_per_label, double test_fraction, std::uint64_t seed);

// Groups a dataset by label, keeping file order within each label.
std::map<Label, std::vector<std::string>> group_by_label(
    const std::vector<LabeledSentence>& sentences);

}  // namespace kurdtk

#endif  // KURDTK_DATASET_H_
