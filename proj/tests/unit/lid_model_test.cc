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

#include <cmath>
#include <numeric>
#include <sstream>

#include "kurdtk/error.h"
#include "kurdtk/lid_features.h"
#include "kurdtk/lid_math.h"
#include "kurdtk/lid_model.h"
#include "kurdtk/rng.h"

namespace kurdtk {
namespace {

LidHyperparams tiny_hyper() {
  LidHyperparams h;
  h.embedding_dim = 4;
  h.ngram_min = 2;
  h.ngram_max = 3;
  h.bucket_count = 10;
  return h;
}

LidModel tiny_model(std::uint64_t seed) {
  LidModel m;
  m.hyper = tiny_hyper();
  m.scheme = LabelScheme::kLanguageAndScript;
  m.labels = {Label::parse("kmr-latn"), Label::parse("ckb-arab"),
              Label::parse("tr-latn")};
  m.word_vocab = WordVocab({"ez", "av", "ez"});
  m.allocate();
  SplitMix64 rng(seed);
  for (float& v : m.input_embeddings) v = static_cast<float>(rng.unit() - 0.5);
  for (float& v : m.output_weights) v = static_cast<float>(rng.unit() - 0.5);
  return m;
}

TEST(WordVocabTest, SortedAndDeduped) {
  const WordVocab v({"ez", "av", "ez", "ئاو"});
  EXPECT_EQ(v.words(), (std::vector<std::string>{"av", "ez", "ئاو"}));
  EXPECT_EQ(v.find("ez"), 1);
  EXPECT_EQ(v.find("zz"), -1);
}

TEST(FeaturesTest, RowsFollowTheDocumentedLayout) {
  const LidHyperparams h = tiny_hyper();
  const WordVocab v({"ab"});
  auto row = [&](const char* g) { return fnv1a64(g) % 10 + 1; };
  const std::vector<std::uint64_t> expected = {
      0, row("<a"), row("ab"), row("b>"), row("<ab"), row("ab>")};
  EXPECT_EQ(featurize("ab", h, v), expected);
  EXPECT_EQ(ngram_row("ab", 10, 1), row("ab"));
  // Unknown words have no unigram row; n-grams are per codepoint.
  const auto f = featurize("ێک", h, v);
  EXPECT_EQ(f.size(), 3u + 2u);
  EXPECT_EQ(f[0], ngram_row("<ێ", 10, 1));
  LidHyperparams no_words = h;
  no_words.include_word_unigrams = false;
  EXPECT_EQ(featurize("ab", no_words, v).size(), 5u);
  EXPECT_TRUE(featurize("!!! 12", h, v).empty());
  EXPECT_EQ(feature_words("Ez, tu û ew."),
            (std::vector<std::string>{"Ez", "tu", "û", "ew"}));
}

TEST(LidModelTest, SaveLoadIsBitExact) {
  const LidModel m = tiny_model(3);
  std::stringstream a;
  save_model(m, a);
  const std::string bytes = a.str();
  EXPECT_EQ(bytes.substr(0, 8), "KTLIDMDL");
  std::istringstream in(bytes);
  const LidModel back = load_model(in);
  EXPECT_EQ(back.hyper, m.hyper);
  EXPECT_EQ(back.labels, m.labels);
  EXPECT_EQ(back.word_vocab.words(), m.word_vocab.words());
  EXPECT_EQ(back.input_embeddings, m.input_embeddings);
  EXPECT_EQ(back.output_weights, m.output_weights);
  std::stringstream b;
  save_model(back, b);
  EXPECT_EQ(b.str(), bytes);
}

TEST(LidModelTest, LoadRejectsCorruption) {
  std::stringstream a;
  save_model(tiny_model(3), a);
  const std::string bytes = a.str();
  std::istringstream magic("XXXXXXXX" + bytes.substr(8));
  EXPECT_THROW(load_model(magic), InvalidModel);
  std::istringstream truncated(bytes.substr(0, bytes.size() - 1));
  EXPECT_THROW(load_model(truncated), InvalidModel);
  std::istringstream trailing(bytes + "x");
  EXPECT_THROW(load_model(trailing), InvalidModel);
  std::string version = bytes;
  version[8] = 2;
  std::istringstream v(version);
  EXPECT_THROW(load_model(v), InvalidModel);
}

TEST(LidModelTest, ValidateChecksSchemeAndShapes) {
  LidModel m = tiny_model(1);
  EXPECT_NO_THROW(m.validate());
  m.scheme = LabelScheme::kLanguageOnly;
  EXPECT_THROW(m.validate(), InvalidModel);
  m = tiny_model(1);
  m.output_weights.pop_back();
  EXPECT_THROW(m.validate(), InvalidModel);
  m = tiny_model(1);
  m.input_embeddings[0] = std::nanf("");
  EXPECT_THROW(m.validate(), InvalidModel);
}

TEST(LidModelTest, PredictRanksAndSums) {
  const LidModel m = tiny_model(5);
  const auto p = score(m, "ez av çû");
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
  const Prediction top = predict(m, "ez av çû", 3);
  ASSERT_EQ(top.ranked.size(), 3u);
  EXPECT_GE(top.ranked[0].second, top.ranked[1].second);
  EXPECT_GE(top.ranked[1].second, top.ranked[2].second);
  EXPECT_EQ(predict(m, "ez", 10).ranked.size(), 3u);
  EXPECT_THROW(predict(m, "ez", 0), InvalidArgument);
  // No features: zero hidden, uniform scores, ties in label order.
  const Prediction empty = predict(m, "...", 3);
  EXPECT_EQ(empty.ranked[0].first, m.labels[0]);
  EXPECT_NEAR(empty.ranked[0].second, 1.0 / 3.0, 1e-12);
}

TEST(LidModelTest, SchemesAndAggregation) {
  EXPECT_EQ(parse_label_scheme("language-only"), LabelScheme::kLanguageOnly);
  EXPECT_THROW(parse_label_scheme("both"), ParseError);
  EXPECT_EQ(aggregate_label(Label::parse("ckb-arab"), LabelScheme::kLanguageOnly),
            Label::parse("ckb"));
  EXPECT_THROW(aggregate_label(Label::parse("ckb"), LabelScheme::kLanguageAndScript),
               MissingScript);
  EXPECT_TRUE(matches_scheme(Label::parse("ckb"), LabelScheme::kLanguageOnly));
  EXPECT_FALSE(matches_scheme(Label::parse("ckb"), LabelScheme::kLanguageAndScript));
}

TEST(LidMathTest, SoftmaxIsStable) {
  std::vector<double> z = {1000.0, 1000.0, -1000.0};
  const double lse = lid_math::softmax(z);
  EXPECT_NEAR(z[0], 0.5, 1e-15);
  EXPECT_NEAR(z[2], 0.0, 1e-15);
  EXPECT_NEAR(lse, 1000.0 + std::log(2.0), 1e-9);
}

TEST(LidMathTest, GradientMatchesFiniteDifferencesOnOneExample) {
  const std::size_t dim = 3, labels = 2;
  std::vector<double> in = {0.1, -0.2, 0.3, 0.5, 0.4, -0.1, -0.3, 0.2, 0.1};
  std::vector<double> out = {0.2, -0.1, 0.05, -0.3, 0.25, 0.1};
  const std::vector<std::uint64_t> feats = {0, 2, 2};
  lid_math::Gradient g;
  lid_math::gradient<double>(in, out, dim, labels, feats, 1, g);
  const double h = 1e-6;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double saved = out[i];
    out[i] = saved + h;
    const double up = lid_math::loss<double>(in, out, dim, labels, feats, 1);
    out[i] = saved - h;
    const double down = lid_math::loss<double>(in, out, dim, labels, feats, 1);
    out[i] = saved;
    EXPECT_NEAR(g.grad_output[i], (up - down) / (2 * h), 1e-8);
  }
  // Row 2 appears twice of three features.
  for (std::size_t j = 0; j < dim; ++j) {
    const double saved = in[2 * dim + j];
    in[2 * dim + j] = saved + h;
    const double up = lid_math::loss<double>(in, out, dim, labels, feats, 1);
    in[2 * dim + j] = saved - h;
    const double down = lid_math::loss<double>(in, out, dim, labels, feats, 1);
    in[2 * dim + j] = saved;
    EXPECT_NEAR(g.grad_hidden[j] * 2.0 / 3.0, (up - down) / (2 * h), 1e-8);
  }
}

}  // namespace
}  // namespace kurdtk
