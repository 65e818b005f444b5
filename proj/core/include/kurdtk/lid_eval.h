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

#ifndef KURDTK_LID_EVAL_H_
#define KURDTK_LID_EVAL_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kurdtk/corpus.h"
#include "kurdtk/lid_model.h"

namespace kurdtk {

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;    // reference count
  std::uint64_t predicted = 0;  // prediction count
  bool absent = false;          // no reference example in the test set
};

struct EvalReport {
  std::vector<Label> labels;
  std::vector<ClassMetrics> per_class;  // parallel to labels
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::uint64_t total = 0;
  // confusion[reference][predicted]
  std::vector<std::vector<std::uint64_t>> confusion;
};

using LabelPair = std::pair<Label, Label>;  // (reference, predicted)

// Metrics over a fixed label set. P = tp / predicted and R = tp / support
// with 0/0 = 0; F1 = 2PR / (P + R) or 0. Macro values are unweighted means
// over all labels, absent classes included. Throws InvalidArgument when a
// pair uses a label outside `labels`, EmptyInput for no pairs.
EvalReport report_from_pairs(const std::vector<Label>& labels,
                             std::span<const LabelPair> pairs);

// Top-1 predictions of the model on the test set. Throws SchemeMismatch when
// a reference label does not fit the model scheme or is not a model label.
EvalReport evaluate(const LidModel& model,
                    std::span<const LabeledSentence> testset);

// Over externally produced predictions; the label set is the sorted union
// of all references and predictions.
EvalReport evaluate_external(std::span<const LabelPair> predictions);

// Same, from label strings. Throws UnparseableLabel with the 0-based row.
EvalReport evaluate_external(
    std::span<const std::pair<std::string, std::string>> rows);

// Aligned text table with per-class rows and the macro line.
void write_eval_text(const EvalReport& report, std::ostream& out);
// Line records: one per class, then one with the macro values.
void write_eval_records(const EvalReport& report, std::ostream& out);
// Reference labels as rows, predicted labels as columns.
void write_confusion_csv(const EvalReport& report, std::ostream& out);

}  // namespace kurdtk

#endif  // KURDTK_LID_EVAL_H_
