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

#include "kurdtk/lid_eval.h"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "kurdtk/error.h"

namespace kurdtk {

EvalReport report_from_pairs(const std::vector<Label>& labels,
                             std::span<const LabelPair> pairs) {
  if (pairs.empty()) throw EmptyInput("evaluation set is empty");
  const std::size_t n = labels.size();
  auto index = [&](const Label& l) -> std::size_t {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) {
      throw InvalidArgument("label " + l.to_string() +
                            " is outside the report label set");
    }
    return static_cast<std::size_t>(it - labels.begin());
  };
  EvalReport r;
  r.labels = labels;
  r.confusion.assign(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& [ref, pred] : pairs) ++r.confusion[index(ref)][index(pred)];
  r.total = pairs.size();
  r.per_class.resize(n);
  std::uint64_t correct = 0;
  for (std::size_t k = 0; k < n; ++k) {
    ClassMetrics& m = r.per_class[k];
    const std::uint64_t tp = r.confusion[k][k];
    correct += tp;
    for (std::size_t j = 0; j < n; ++j) {
      m.support += r.confusion[k][j];
      m.predicted += r.confusion[j][k];
    }
    m.absent = m.support == 0;
    m.precision = m.predicted == 0 ? 0.0
                                   : static_cast<double>(tp) /
                                         static_cast<double>(m.predicted);
    m.recall = m.support == 0 ? 0.0
                              : static_cast<double>(tp) /
                                    static_cast<double>(m.support);
    const double pr = m.precision + m.recall;
    m.f1 = pr == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / pr;
    r.macro_precision += m.precision;
    r.macro_recall += m.recall;
    r.macro_f1 += m.f1;
  }
  if (n > 0) {
    r.macro_precision /= static_cast<double>(n);
    r.macro_recall /= static_cast<double>(n);
    r.macro_f1 /= static_cast<double>(n);
  }
  r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);
  return r;
}

EvalReport evaluate(const LidModel& model,
                    std::span<const LabeledSentence> testset) {
  std::vector<LabelPair> pairs;
  pairs.reserve(testset.size());
  for (const LabeledSentence& s : testset) {
    if (!matches_scheme(s.label, model.scheme) ||
        model.label_index(s.label) < 0) {
      throw SchemeMismatch("test label " + s.label.to_string() +
                           " is not a label of this " +
                           std::string(to_string(model.scheme)) + " model");
    }
    pairs.emplace_back(s.label, predict(model, s.text, 1).ranked.front().first);
  }
  return report_from_pairs(model.labels, pairs);
}

EvalReport evaluate_external(std::span<const LabelPair> predictions) {
  std::vector<Label> labels;
  for (const auto& [ref, pred] : predictions) {
    labels.push_back(ref);
    labels.push_back(pred);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return report_from_pairs(labels, predictions);
}

EvalReport evaluate_external(
    std::span<const std::pair<std::string, std::string>> rows) {
  std::vector<LabelPair> pairs;
  pairs.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Label ref{LanguageCode::kmr, {}}, pred{LanguageCode::kmr, {}};
    try {
      ref = Label::parse(rows[i].first);
    } catch (const ParseError&) {
      throw UnparseableLabel(i, rows[i].first);
    }
    try {
      pred = Label::parse(rows[i].second);
    } catch (const ParseError&) {
      throw UnparseableLabel(i, rows[i].second);
    }
    pairs.emplace_back(ref, pred);
  }
  return evaluate_external(std::span<const LabelPair>(pairs));
}

void write_eval_text(const EvalReport& r, std::ostream& out) {
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %9s %9s %9s %8s\n", "label",
                "precision", "recall", "f1", "support");
  out << line;
  for (std::size_t k = 0; k < r.labels.size(); ++k) {
    const ClassMetrics& m = r.per_class[k];
    std::snprintf(line, sizeof line, "%-16s %9.4f %9.4f %9.4f %8llu%s\n",
                  r.labels[k].to_string().c_str(), m.precision, m.recall,
                  m.f1, static_cast<unsigned long long>(m.support),
                  m.absent ? "  (absent)" : "");
    out << line;
  }
  std::snprintf(line, sizeof line, "%-16s %9.4f %9.4f %9.4f %8llu\n", "macro",
                r.macro_precision, r.macro_recall, r.macro_f1,
                static_cast<unsigned long long>(r.total));
  out << line;
  std::snprintf(line, sizeof line, "accuracy %.4f\n", r.accuracy);
  out << line;
}

void write_eval_records(const EvalReport& r, std::ostream& out) {
  for (std::size_t k = 0; k < r.labels.size(); ++k) {
    const ClassMetrics& m = r.per_class[k];
    nlohmann::ordered_json j;
    j["label"] = r.labels[k].to_string();
    j["precision"] = m.precision;
    j["recall"] = m.recall;
    j["f1"] = m.f1;
    j["support"] = m.support;
    j["predicted"] = m.predicted;
    j["absent"] = m.absent;
    out << j.dump() << '\n';
  }
  nlohmann::ordered_json j;
  j["label"] = "macro";
  j["precision"] = r.macro_precision;
  j["recall"] = r.macro_recall;
  j["f1"] = r.macro_f1;
  j["accuracy"] = r.accuracy;
  j["total"] = r.total;
  out << j.dump() << '\n';
}

void write_confusion_csv(const EvalReport& r, std::ostream& out) {
  out << "reference";
  for (const Label& l : r.labels) out << ',' << l.to_string();
  out << '\n';
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    out << r.labels[i].to_string();
    for (std::uint64_t c : r.confusion[i]) out << ',' << c;
    out << '\n';
  }
}

}  // namespace kurdtk
