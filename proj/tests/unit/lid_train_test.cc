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
#include "kurdtk/lid_train.h"

namespace kurdtk {
namespace {

std::vector<LabeledSentence> toy_set() {
  const Label kmr = Label::parse("kmr-latn"), ckb = Label::parse("ckb-arab"),
              tr = Label::parse("tr-latn");
  return {{"ez diçim malê", kmr},        {"tu çawa yî heval", kmr},
          {"em ê sibê werin", kmr},      {"ev pirtûk baş e", kmr},
          {"من دەچمە ماڵەوە", ckb},      {"تۆ چۆنی هاوڕێ", ckb},
          {"ئێمە سبەی دێین", ckb},       {"ئەم کتێبە باشە", ckb},
          {"ben eve gidiyorum", tr},     {"sen nasılsın arkadaşım", tr},
          {"biz yarın geleceğiz", tr},   {"bu kitap çok güzel", tr}};
}

LidHyperparams small_hyper() {
  LidHyperparams h;
  h.embedding_dim = 16;
  h.bucket_count = 5000;
  h.epochs = 30;
  h.learning_rate = 0.5;
  return h;
}

TEST(LidTrainTest, LearnsAToySet) {
  const TrainResult r = train(toy_set(), small_hyper(), LabelScheme::kLanguageAndScript);
  ASSERT_EQ(r.epoch_loss.size(), 30u);
  EXPECT_LT(r.final_loss(), r.epoch_loss.front());
  EXPECT_EQ(r.model.labels,
            (std::vector<Label>{Label::parse("kmr-latn"), Label::parse("ckb-arab"),
                                Label::parse("tr-latn")}));
  const EvalReport e = evaluate(r.model, toy_set());
  EXPECT_EQ(e.accuracy, 1.0);
  EXPECT_EQ(predict(r.model, "ez diçim").ranked[0].first, Label::parse("kmr-latn"));
}

TEST(LidTrainTest, IsDeterministic) {
  std::vector<std::size_t> epochs;
  TrainOptions o;
  o.on_epoch = [&](std::size_t e, double) { epochs.push_back(e); };
  const TrainResult a = train(toy_set(), small_hyper(), LabelScheme::kLanguageAndScript, o);
  const TrainResult b = train(toy_set(), small_hyper(), LabelScheme::kLanguageAndScript);
  std::stringstream sa, sb;
  save_model(a.model, sa);
  save_model(b.model, sb);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(a.epoch_loss, b.epoch_loss);
  EXPECT_EQ(epochs.size(), 30u);
  EXPECT_EQ(epochs.back(), 30u);
  LidHyperparams other = small_hyper();
  other.seed = 2;
  std::stringstream sc;
  save_model(train(toy_set(), other, LabelScheme::kLanguageAndScript).model, sc);
  EXPECT_NE(sa.str(), sc.str());
}

TEST(LidTrainTest, Errors) {
  auto set = toy_set();
  EXPECT_THROW(train({}, small_hyper(), LabelScheme::kLanguageAndScript),
               DegenerateLabels);
  const std::vector<LabeledSentence> one(set.begin(), set.begin() + 4);
  EXPECT_THROW(train(one, small_hyper(), LabelScheme::kLanguageAndScript),
               DegenerateLabels);
  EXPECT_THROW(train(set, small_hyper(), LabelScheme::kLanguageOnly), SchemeMismatch);
  LidHyperparams bad = small_hyper();
  bad.learning_rate = 1e30;
  EXPECT_THROW(train(set, bad, LabelScheme::kLanguageAndScript), NonFiniteLoss);
  bad = small_hyper();
  bad.ngram_min = 4;
  bad.ngram_max = 3;
  EXPECT_THROW(train(set, bad, LabelScheme::kLanguageAndScript), InvalidArgument);
}

TEST(LidTrainTest, LanguageOnlyScheme) {
  auto set = toy_set();
  for (auto& s : set) s.label = aggregate_label(s.label, LabelScheme::kLanguageOnly);
  const TrainResult r = train(set, small_hyper(), LabelScheme::kLanguageOnly);
  EXPECT_EQ(r.model.scheme, LabelScheme::kLanguageOnly);
  EXPECT_EQ(r.model.labels[0], Label::parse("kmr"));
  auto scripted = toy_set();
  EXPECT_THROW(evaluate(r.model, scripted), SchemeMismatch);
}

}  // namespace
}  // namespace kurdtk
