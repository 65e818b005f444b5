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

#include <gtest/gtest.h>

#include <sstream>

#include "kurdtk/error.h"
#include "kurdtk/lid_eval.h"

namespace kurdtk {
namespace {

const Label A = Label::parse("kmr-latn");
const Label B = Label::parse("ckb-arab");
const Label C = Label::parse("fa-arab");
const Label D = Label::parse("tr-latn");

// Hand-computed: A P=1/2 R=1/2; B P=2/3 R=1; C all zero.
TEST(LidEvalTest, HandOracle) {
  const std::vector<LabelPair> pairs = {{A, A}, {A, B}, {B, B}, {B, B}, {C, A}};
  const EvalReport r = report_from_pairs({A, B, C}, pairs);
  EXPECT_DOUBLE_EQ(r.per_class[0].precision, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[0].recall, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[0].f1, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[1].precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].recall, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].f1, 0.8);
  EXPECT_EQ(r.per_class[2].f1, 0.0);
  EXPECT_EQ(r.per_class[2].predicted, 0u);
  EXPECT_NEAR(r.macro_precision, (0.5 + 2.0 / 3.0) / 3.0, 1e-15);
  EXPECT_NEAR(r.macro_recall, 0.5, 1e-15);
  EXPECT_NEAR(r.macro_f1, 1.3 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.6);
  EXPECT_EQ(r.total, 5u);
  EXPECT_EQ(r.confusion, (std::vector<std::vector<std::uint64_t>>{
                             {1, 1, 0}, {0, 2, 0}, {1, 0, 0}}));
}

TEST(LidEvalTest, AbsentClassesCountInMacro) {
  const std::vector<LabelPair> pairs = {{A, A}, {B, B}};
  const EvalReport r = report_from_pairs({A, B, D}, pairs);
  EXPECT_TRUE(r.per_class[2].absent);
  EXPECT_NEAR(r.macro_f1, 2.0 / 3.0, 1e-15);
  EXPECT_THROW(report_from_pairs({A}, pairs), InvalidArgument);
  EXPECT_THROW(report_from_pairs({A, B}, {}), EmptyInput);
}

TEST(LidEvalTest, ExternalUsesSortedUnion) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"tr-latn", "tr-latn"}, {"ckb-arab", "kmr-latn"}};
  const EvalReport r = evaluate_external(rows);
  EXPECT_EQ(r.labels, (std::vector<Label>{A, B, D}));
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"tr-latn", "tr-latn"}, {"ckb-arab", "qq"}};
  try {
    evaluate_external(bad);
    FAIL();
  } catch (const UnparseableLabel& e) {
    EXPECT_EQ(e.row(), 1u);
  }
}

TEST(LidEvalTest, Writers) {
  const std::vector<LabelPair> pairs = {{A, A}, {A, B}, {B, B}};
  const EvalReport r = report_from_pairs({A, B}, pairs);
  std::ostringstream csv;
  write_confusion_csv(r, csv);
  EXPECT_EQ(csv.str(), "reference,kmr-latn,ckb-arab\nkmr-latn,1,1\nckb-arab,0,1\n");
  std::ostringstream rec;
  write_eval_records(r, rec);
  EXPECT_NE(rec.str().find("\"label\":\"kmr-latn\""), std::string::npos);
  std::ostringstream text;
  write_eval_text(r, text);
  EXPECT_NE(text.str().find("macro"), std::string::npos);
}

}  // namespace
}  // namespace kurdtk
