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

#include <set>

#include "kurdtk/dataset.h"
#include "kurdtk/error.h"

namespace kurdtk {
namespace {

std::map<Label, std::vector<std::string>> corpora(std::size_t n) {
  std::map<Label, std::vector<std::string>> out;
  for (const char* name : {"ckb-arab", "kmr-latn", "fa-arab"}) {
    for (std::size_t i = 0; i < n; ++i) {
      out[Label::parse(name)].push_back(std::string(name) + " " + std::to_string(i));
    }
  }
  return out;
}

TEST(DatasetTest, SizesAndDisjointness) {
  const LidSplit split = build_lid_dataset(corpora(40), 20, 0.25, 1);
  EXPECT_EQ(split.train.size(), 3u * 15u);
  EXPECT_EQ(split.test.size(), 3u * 5u);
  std::set<std::string> train;
  for (const auto& s : split.train) train.insert(s.text);
  for (const auto& s : split.test) EXPECT_FALSE(train.contains(s.text));
  // Grouped by label in label order.
  EXPECT_EQ(split.train.front().label, Label::parse("kmr-latn"));
  EXPECT_EQ(split.train.back().label, Label::parse("fa-arab"));
}

TEST(DatasetTest, DeterministicPerSeed) {
  const auto a = build_lid_dataset(corpora(40), 20, 0.2, 5);
  const auto b = build_lid_dataset(corpora(40), 20, 0.2, 5);
  const auto c = build_lid_dataset(corpora(40), 20, 0.2, 6);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  EXPECT_NE(a.train, c.train);
}

TEST(DatasetTest, AddingALabelKeepsOtherSamples) {
  auto base = corpora(40);
  const auto a = build_lid_dataset(base, 10, 0.2, 1);
  base[Label::parse("tr-latn")] = corpora(40).at(Label::parse("kmr-latn"));
  const auto b = build_lid_dataset(base, 10, 0.2, 1);
  auto only = [](const std::vector<LabeledSentence>& v, const char* l) {
    std::vector<LabeledSentence> out;
    for (const auto& s : v) {
      if (s.label == Label::parse(l)) out.push_back(s);
    }
    return out;
  };
  EXPECT_EQ(only(a.test, "ckb-arab"), only(b.test, "ckb-arab"));
  EXPECT_EQ(only(a.train, "fa-arab"), only(b.train, "fa-arab"));
}

TEST(DatasetTest, DedupesBeforeCounting) {
  std::map<Label, std::vector<std::string>> c;
  c[Label::parse("kmr-latn")] = {"a", "a", "b", "c"};
  c[Label::parse("ckb-arab")] = {"x", "y", "z"};
  try {
    build_lid_dataset(c, 4, 0.5, 1);
    FAIL() << "expected InsufficientData";
  } catch (const InsufficientData& e) {
    EXPECT_EQ(e.label(), "kmr-latn");
  }
  const auto split = build_lid_dataset(c, 3, 0.5, 1);
  EXPECT_EQ(split.train.size() + split.test.size(), 6u);
}

TEST(DatasetTest, PerLabelOverridesAndMinimumTest) {
  DatasetOptions o;
  o.n_per_label = 10;
  o.test_fraction = 0.01;
  o.per_label[Label::parse("fa-arab")] = 4;
  const auto split = build_lid_dataset(corpora(12), o);
  EXPECT_EQ(split.test.size(), 3u);  // at least one per label
  EXPECT_EQ(split.train.size(), 9u + 9u + 3u);
}

TEST(DatasetTest, RejectsBadArguments) {
  EXPECT_THROW(build_lid_dataset(corpora(5), 0, 0.2, 1), InvalidArgument);
  EXPECT_THROW(build_lid_dataset(corpora(5), 2, 0.0, 1), InvalidArgument);
  EXPECT_THROW(build_lid_dataset(corpora(5), 2, 1.0, 1), InvalidArgument);
}

}  // namespace
}  // namespace kurdtk
